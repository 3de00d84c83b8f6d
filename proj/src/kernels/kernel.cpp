#include "kernels/kernel.hpp"

#include <json.hpp>

#include <stdexcept>

#include "core/rational.hpp"

namespace pg {

namespace {

const std::vector<std::string> kGenVars = {"p", "q", "r"};
const std::vector<std::string> kBondVars = {"rp", "sp"};

struct GenSym {
  Polynomial p, q, r, one, opq;  // opq = 1 - p - q (open-vertex mass)
  GenSym()
      : p(Polynomial::var(kGenVars, "p")),
        q(Polynomial::var(kGenVars, "q")),
        r(Polynomial::var(kGenVars, "r")),
        one(Polynomial::constant(kGenVars, 1)),
        opq(one - p - q) {}
};

struct BondSym {
  Polynomial rp, sp, one;
  BondSym()
      : rp(Polynomial::var(kBondVars, "rp")),
        sp(Polynomial::var(kBondVars, "sp")),
        one(Polynomial::constant(kBondVars, 1)) {}
};

// Canonical input-pair key: the kernels are symmetric, so rows are defined
// for a0 <= a1 and mirrored.
std::pair<Sym, Sym> ordered(Sym a0, Sym a1) {
  if (static_cast<int>(a0) > static_cast<int>(a1)) std::swap(a0, a1);
  return {a0, a1};
}

}  // namespace

std::array<Polynomial, 3> generalized_kernel_row_sym(Sym a0, Sym a1) {
  static const GenSym s;
  const auto [i, j] = ordered(a0, a1);
  const Polynomial zero(kGenVars);
  const Polynomial r2 = s.r * s.r;
  if (i == Sym::W && j == Sym::W) return {s.p, s.one - s.p, zero};
  if (i == Sym::W && j == Sym::L)
    return {s.p + s.opq * (s.one - s.r), s.q + s.opq * s.r, zero};
  if (i == Sym::L && j == Sym::L)
    return {s.p + s.opq * (s.one - r2), s.q + s.opq * r2, zero};
  if (i == Sym::W && j == Sym::D)
    return {s.p, s.q + s.opq * s.r, s.opq * (s.one - s.r)};
  if (i == Sym::L && j == Sym::D)
    return {s.p + s.opq * (s.one - s.r), s.q + s.opq * r2,
            s.opq * s.r * (s.one - s.r)};
  // (D, D)
  return {s.p, s.q + s.opq * r2, s.opq * (s.one - r2)};
}

std::array<Polynomial, 3> bond_kernel_row_sym(Sym a0, Sym a1) {
  static const BondSym s;
  const auto [i, j] = ordered(a0, a1);
  const Polynomial zero(kBondVars);
  const Polynomial w_ww = 2 * s.sp - s.sp * s.sp;     // 2s' - s'^2
  const Polynomial open2 = s.one - s.rp - s.sp;       // 1 - r' - s'
  if (i == Sym::W && j == Sym::W)
    return {w_ww, (s.one - s.sp) * (s.one - s.sp), zero};
  if (i == Sym::W && j == Sym::L)
    return {s.one - s.rp + s.rp * s.sp, s.rp - s.rp * s.sp, zero};
  if (i == Sym::L && j == Sym::L)
    return {s.one - s.rp * s.rp, s.rp * s.rp, zero};
  if (i == Sym::W && j == Sym::D)
    return {w_ww, s.rp * (s.one - s.sp), (s.one - s.sp) * open2};
  if (i == Sym::L && j == Sym::D)
    return {s.one - s.rp + s.rp * s.sp, s.rp * s.rp, s.rp * open2};
  // (D, D)
  return {w_ww, s.rp * s.rp, open2 * (s.one + s.rp - s.sp)};
}

namespace {

std::array<std::array<Rat, 3>, 9> evaluate_rows(
    std::array<Polynomial, 3> (*row_sym)(Sym, Sym), const std::vector<Rat>& at) {
  std::array<std::array<Rat, 3>, 9> rows;
  for (Sym a0 : {Sym::W, Sym::L, Sym::D})
    for (Sym a1 : {Sym::W, Sym::L, Sym::D}) {
      const auto sym = row_sym(a0, a1);
      auto& row = rows[3 * static_cast<int>(a0) + static_cast<int>(a1)];
      for (int out = 0; out < 3; ++out) row[out] = sym[out].eval(at);
    }
  return rows;
}

}  // namespace

UpdateKernel generalized_envelope_kernel(const GenParams& gp) {
  UpdateKernel k;
  k.model_ = Model::generalized;
  k.alphabet_ = Alphabet::full;
  k.rows_ = evaluate_rows(&generalized_kernel_row_sym, {gp.p, gp.q, gp.r});
  return k;
}

UpdateKernel bond_envelope_kernel(const BondParams& bp) {
  UpdateKernel k;
  k.model_ = Model::bond;
  k.alphabet_ = Alphabet::full;
  k.rows_ = evaluate_rows(&bond_kernel_row_sym, {bp.r_prime, bp.s_prime});
  return k;
}

UpdateKernel restrict_kernel(const UpdateKernel& k) {
  UpdateKernel out;
  out.model_ = k.model_;
  out.alphabet_ = Alphabet::restricted;
  for (Sym a0 : {Sym::W, Sym::L})
    for (Sym a1 : {Sym::W, Sym::L}) {
      const auto& row = k.row(a0, a1);
      if (row[2] != 0)
        throw std::logic_error("kernel carries D-mass on a {W,L} row");
      out.rows_[3 * static_cast<int>(a0) + static_cast<int>(a1)] = row;
    }
  return out;
}

const std::array<Rat, 3>& UpdateKernel::row(Sym a0, Sym a1) const {
  if (alphabet_ == Alphabet::restricted && (a0 == Sym::D || a1 == Sym::D))
    throw std::domain_error("restricted kernel has no D rows");
  return rows_[3 * sym_code(a0) + sym_code(a1)];
}

std::array<double, 3> UpdateKernel::row_as_double(Sym a0, Sym a1) const {
  const auto& r = row(a0, a1);
  return {r[0].get_d(), r[1].get_d(), r[2].get_d()};
}

std::string UpdateKernel::dump_json() const {
  nlohmann::ordered_json out;
  const auto syms = alphabet_ == Alphabet::full
                        ? std::vector<Sym>{Sym::W, Sym::L, Sym::D}
                        : std::vector<Sym>{Sym::W, Sym::L};
  for (Sym a0 : syms)
    for (Sym a1 : syms) {
      const auto& r = row(a0, a1);
      nlohmann::ordered_json entry;
      entry["W"] = to_decimal(r[0]);
      entry["L"] = to_decimal(r[1]);
      if (alphabet_ == Alphabet::full) entry["D"] = to_decimal(r[2]);
      out[std::string{sym_char(a0), sym_char(a1)}] = entry;
    }
  return out.dump(2);
}

ThetaTriple theta_of(const UpdateKernel& k) {
  if (k.row(Sym::W, Sym::L) != k.row(Sym::L, Sym::W))
    throw std::domain_error("theta_of requires a symmetric kernel");
  return {k.prob(Sym::W, Sym::W, Sym::L), k.prob(Sym::W, Sym::L, Sym::L),
          k.prob(Sym::L, Sym::L, Sym::L)};
}

ClassicalCriteria classical_criteria(const ThetaTriple& t) {
  ClassicalCriteria c;
  const bool interior = t.ww > 0 && t.ww < 1 && t.wl > 0 && t.wl < 1 &&
                        t.ll > 0 && t.ll < 1;
  c.criterion_a = interior && t.ll > t.ww - 2 * t.wl &&
                  t.ll > t.ww - 2 * (1 - t.wl);

  auto absr = [](const Rat& x) { return x < 0 ? Rat(-x) : x; };
  const Rat d_ww_wl = absr(t.ww - t.wl);
  const Rat d_ww_ll = absr(t.ww - t.ll);
  const Rat d_wl_ll = absr(t.wl - t.ll);
  const Rat max_all = std::max({d_ww_wl, d_ww_ll, d_wl_ll});
  const Rat max_wl = std::max(d_wl_ll, d_ww_wl);
  c.criterion_b = max_all + 2 * max_wl < 2;
  return c;
}

Rat kernel_equivalence_check(const BondParams& bp) {
  const UpdateKernel lhs = generalized_envelope_kernel(bond_to_generalized(bp));
  const UpdateKernel rhs = bond_envelope_kernel(bp);
  Rat worst = 0;
  for (Sym a0 : {Sym::W, Sym::L, Sym::D})
    for (Sym a1 : {Sym::W, Sym::L, Sym::D})
      for (int out = 0; out < 3; ++out) {
        Rat d = lhs.row(a0, a1)[out] - rhs.row(a0, a1)[out];
        if (d < 0) d = -d;
        if (d > worst) worst = d;
      }
  return worst;
}

}  // namespace pg
