#include "weights/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pushforward/functional.hpp"
#include "regimes/regimes.hpp"

namespace pg {
namespace {

const std::vector<std::string> kGenVars{"p", "q", "r"};
const std::vector<std::string> kB1Vars{"p", "r"};
const std::vector<std::string> kB2Vars{"rp"};

// Stage boundaries of the second bond regime (s' = 0): the lower ends are the
// rounded roots of the stage's decisive mu(LD) coefficient, kept in the
// threshold registry; kBondB2Threshold from regimes.hpp is the lowest one.
const Rat kB2HighLo(4564, 10000);
const Rat kB2MidLo(201383, 1000000);

struct GenSym {
  Polynomial p, q, r, one;
};

GenSym gen_sym() {
  return GenSym{Polynomial::var(kGenVars, "p"), Polynomial::var(kGenVars, "q"),
                Polynomial::var(kGenVars, "r"),
                Polynomial::constant(kGenVars, Rat(1))};
}

struct B1Sym {
  Polynomial p, r, one;
};

B1Sym b1_sym() {
  return B1Sym{Polynomial::var(kB1Vars, "p"), Polynomial::var(kB1Vars, "r"),
               Polynomial::constant(kB1Vars, Rat(1))};
}

// Univariate polynomial in r' from ascending integer coefficients.
Polynomial upoly(const std::vector<long>& coeffs) {
  const Polynomial x = Polynomial::var(kB2Vars, "rp");
  Polynomial acc(kB2Vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) acc = acc + x.pow(static_cast<unsigned>(k)) * Rat(coeffs[k]);
  }
  return acc;
}

// The non-constant coefficients of the gen_cond234 weight. `grouped` is the
// product that enters the mu(LWD) coefficient: the two displayed assemblies
// of that weight differ only in how much of the constant they fold into it.
struct GenCond234Parts {
  Polynomial ld, ldw, ldl, grouped;
};

GenCond234Parts gen_cond234_parts() {
  const auto s = gen_sym();
  const Polynomial pq = s.p + s.q;
  const Polynomial ompq = s.one - s.p - s.q;
  const Polynomial omr = s.one - s.r;

  // Exactly the negated universal-regime margin: the weight only works where
  // the universal inequality makes this coefficient non-positive.
  const Polynomial ld = s.r * Rat(4) - pq * Rat(2) + pq.pow(2) -
                        s.r.pow(2) * Rat(6) -
                        s.r * (s.p + s.q * Rat(2)) * Rat(3);
  const Polynomial ldw = ompq * omr *
                         (-s.r * Rat(2) + s.r.pow(2) + s.p * s.r * Rat(3) +
                          s.q * s.r * Rat(3) + s.r.pow(3));
  const Polynomial ldl =
      ompq * omr * (-s.one + s.p + s.q + s.r.pow(2) + s.q * s.r * Rat(2));
  const Polynomial x_factor =
      Rat(3) + s.p + s.q + s.r - s.q.pow(2) * Rat(2) - s.r.pow(2) * Rat(2) -
      s.q * s.r * Rat(5) + s.p * s.q * Rat(2) + s.p * s.r +
      s.p * s.q * s.r * Rat(3) + s.q.pow(2) * s.r * Rat(4) +
      s.q * s.r.pow(2) * Rat(4) + s.p * s.r.pow(2) * Rat(5) -
      s.p.pow(2) * s.r * Rat(2) - s.p * s.q * s.r.pow(2) * Rat(5) -
      s.p.pow(2) * s.r.pow(2) * Rat(3) - s.q.pow(2) * s.r.pow(2) * Rat(2);
  return GenCond234Parts{ld, ldw, ldl, x_factor * ompq * omr};
}

InequalityReport margin_report(WeightVariant v,
                               std::vector<std::pair<std::string, Rat>> params,
                               bool in_regime, const LinearFunctional& pulled,
                               const LinearFunctional& w_at,
                               const LinearFunctional& e_at,
                               const CylinderMeasure& mu) {
  InequalityReport rep;
  rep.variant = v;
  rep.params = std::move(params);
  rep.measure_id = mu.id();
  rep.in_regime = in_regime;
  rep.lhs = pulled.evaluate(mu);
  rep.rhs = w_at.evaluate(mu) + e_at.evaluate(mu);
  rep.margin = rep.lhs - rep.rhs;
  rep.pass = rep.margin <= 0;
  return rep;
}

std::vector<std::pair<std::string, Rat>> param_pairs(const GenParams& gp) {
  return {{"p", gp.p}, {"q", gp.q}, {"r", gp.r}};
}

std::vector<std::pair<std::string, Rat>> param_pairs(const BondParams& bp) {
  return {{"rp", bp.r_prime}, {"sp", bp.s_prime}};
}

}  // namespace

const char* weight_variant_name(WeightVariant v) {
  switch (v) {
    case WeightVariant::gen_cond1: return "gen_cond1";
    case WeightVariant::gen_cond234: return "gen_cond234";
    case WeightVariant::bond_B1: return "bond_B1";
    case WeightVariant::bond_B2_high: return "bond_B2_high";
    case WeightVariant::bond_B2_mid: return "bond_B2_mid";
    case WeightVariant::bond_B2_low: return "bond_B2_low";
    case WeightVariant::bond_B3: return "bond_B3";
  }
  throw std::logic_error("unknown weight variant");
}

WeightVariant weight_variant_from_name(const std::string& name) {
  for (WeightVariant v : kAllWeightVariants) {
    if (name == weight_variant_name(v)) return v;
  }
  throw std::invalid_argument("unknown weight variant: " + name);
}

bool weight_variant_is_generalized(WeightVariant v) {
  return v == WeightVariant::gen_cond1 || v == WeightVariant::gen_cond234;
}

WeightFunction::WeightFunction(WeightVariant variant,
                               std::vector<std::string> vars)
    : variant_(variant), vars_(std::move(vars)) {}

void WeightFunction::add(const Polynomial& coef, const Word& word) {
  if (coef.vars() != vars_) {
    throw std::invalid_argument(
        "coefficient variables do not match the weight function's");
  }
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (!coef.is_zero()) terms_.emplace(word, coef);
    return;
  }
  it->second = it->second + coef;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial WeightFunction::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  if (it != terms_.end()) return it->second;
  return Polynomial(vars_);
}

std::size_t WeightFunction::max_word_len() const {
  std::size_t m = 0;
  for (const auto& [word, poly] : terms_) m = std::max(m, word.size());
  return m;
}

LinearFunctional WeightFunction::at(const std::vector<Rat>& point) const {
  LinearFunctional f;
  for (const auto& [word, poly] : terms_) f.add(poly.eval(point), word);
  return f;
}

Polynomial universal_margin_polynomial() {
  const auto s = gen_sym();
  const Polynomial pq = s.p + s.q;
  return pq * Rat(2) + s.r.pow(2) * Rat(6) +
         s.r * (s.p + s.q * Rat(2)) * Rat(3) - s.r * Rat(4) - pq.pow(2);
}

Polynomial gen_dd_coefficient_expanded() {
  const auto s = gen_sym();
  return -s.p.pow(3) * s.r.pow(3) -
         s.p.pow(2) * s.q * (s.one - s.r - s.r.pow(2) + s.r.pow(3)) -
         s.p.pow(2) * s.r * (Rat(2) - s.r - s.r.pow(2) * Rat(2) - s.p) -
         s.p * s.q.pow(2) * s.r * (s.one - s.r.pow(2)) -
         s.p * s.r.pow(3) -
         s.q.pow(2) * s.r.pow(3) * Rat(2) -
         s.q.pow(3) * s.r * (s.one + s.r - s.r.pow(2)) -
         s.q * s.r * (s.one - s.p * s.r - s.q * Rat(2) - s.r.pow(2) -
                      s.q * s.r * Rat(2)) -
         s.q.pow(2) * (s.one - s.q) -
         s.p * (s.p + s.q - s.r) -
         s.q.pow(2) -
         s.r.pow(2);
}

Polynomial bond_b1_dd_scan_polynomial() {
  const std::vector<std::string> v{"rp", "sp"};
  const Polynomial rp = Polynomial::var(v, "rp");
  const Polynomial sp = Polynomial::var(v, "sp");
  const Polynomial one = Polynomial::constant(v, Rat(1));
  return (one - rp - sp) *
         ((one - sp) * (sp * Rat(2) - sp.pow(2)) - rp).pow(2);
}

WeightFunction build_weight(WeightVariant v) {
  switch (v) {
    case WeightVariant::gen_cond1: {
      WeightFunction w(v, kGenVars);
      const Polynomial one = Polynomial::constant(kGenVars, Rat(1));
      w.add(one, "D");
      w.add(one, "WD");
      w.add(one, "LWD");
      return w;
    }
    case WeightVariant::gen_cond234: {
      WeightFunction w(v, kGenVars);
      const auto parts = gen_cond234_parts();
      const Polynomial one = Polynomial::constant(kGenVars, Rat(1));
      w.add(one, "D");
      w.add(one, "WD");
      w.add(parts.ld, "LD");
      w.add(parts.ldw, "LDW");
      w.add(parts.ldl, "LDL");
      w.add(-(Rat(2) - parts.grouped), "LWD");
      return w;
    }
    case WeightVariant::bond_B1: {
      // Transformed coordinates p = 2s'-s'^2, r = r'/(1-s'), where every
      // coefficient clears its (1-s') denominators and becomes polynomial.
      WeightFunction w(v, kB1Vars);
      const auto s = b1_sym();
      const Polynomial omp = s.one - s.p;
      const Polynomial omr = s.one - s.r;
      w.add(s.one, "D");
      w.add(s.one, "WD");
      w.add(-(omp * omr *
              (s.p * Rat(2) - s.r * Rat(4) + s.p.pow(2) +
               s.r.pow(2) * Rat(3) + s.p * s.r * Rat(2) -
               s.p.pow(2) * s.r * Rat(2) - s.p * s.r.pow(2) * Rat(6))),
            "LD");
      w.add(-(omp * omr *
              (s.r * Rat(3) + s.p.pow(2) * Rat(2) + s.r.pow(2) * Rat(2) -
               s.p * s.r - s.p.pow(2) * s.r * Rat(2) -
               s.p * s.r.pow(2) * Rat(4) - s.r.pow(3))),
            "LDW");
      w.add(-(omp.pow(2) * omr * (s.one - s.r.pow(2) + s.p * s.r.pow(2))),
            "LDL");
      w.add(s.one - omp * omr *
                        (s.p * Rat(2) + s.r + s.p.pow(2) +
                         s.r.pow(2) * Rat(2) - s.p.pow(2) * s.r -
                         s.p * s.r.pow(2) * Rat(5)),
            "LWD");
      return w;
    }
    case WeightVariant::bond_B2_high: {
      WeightFunction w(v, kB2Vars);
      w.add(upoly({1}), "D");
      w.add(upoly({1, -2}), "WD");
      w.add(upoly({1}), "LWD");
      return w;
    }
    case WeightVariant::bond_B2_mid: {
      WeightFunction w(v, kB2Vars);
      w.add(upoly({1}), "D");
      w.add(upoly({1, -2}), "WD");
      w.add(upoly({1, -3, 3, -1}), "LWD");  // (1-r')^3
      return w;
    }
    case WeightVariant::bond_B2_low: {
      WeightFunction w(v, kB2Vars);
      const Polynomial x = Polynomial::var(kB2Vars, "rp");
      const Polynomial one = Polynomial::constant(kB2Vars, Rat(1));
      w.add(one, "D");
      w.add(upoly({1, -2}), "WD");
      w.add((one - x).pow(3) - upoly({0, 3, -3, 1}) * x * (one - x).pow(2),
            "LWD");
      w.add(-(x * (one - x).pow(6)), "LLWD");
      w.add(-(x * (one - x).pow(6)), "LLDW");
      w.add(-x.pow(2), "WDD");
      w.add(-(x * (one - x).pow(4) * upoly({1, -3, 1, 1, -3, 3, -1})), "LWLD");
      return w;
    }
    case WeightVariant::bond_B3: {
      WeightFunction w(v, kB2Vars);
      w.add(upoly({1}), "D");
      w.add(upoly({1}), "WD");
      w.add(-upoly({0, 0, 2, -5, 2}), "WDW");
      w.add(-upoly({0, 3, -10, 10, -4}), "WDL");
      w.add(-upoly({0, 0, 7, -7, 2}), "DDW");
      w.add(-upoly({0, 2, -2, 5, -2}), "DDL");
      w.add(-upoly({1, -4, 6, -5, 2}), "LDL");
      w.add(-upoly({0, 0, 4, -1, 2}), "WLD");
      w.add(-upoly({0, 0, 3, 3, -2}), "LLD");
      w.add(-upoly({0, 2, 8, -9, 2}), "WWD");
      return w;
    }
  }
  throw std::logic_error("unknown weight variant");
}

WeightFunction build_inequality_correction(WeightVariant v) {
  switch (v) {
    case WeightVariant::gen_cond1:
    case WeightVariant::gen_cond234: {
      // Both generalized weights satisfy the same one-step bound; the grouped
      // k_wd term multiplies mu(WD)-mu(WWWD)-mu(DWDD)-mu(LWD), which is
      // itself nonnegative, so its sign requirement is only k_wd >= 0.
      WeightFunction e(v, kGenVars);
      const auto s = gen_sym();
      const Polynomial ompq = s.one - s.p - s.q;
      const Polynomial omr = s.one - s.r;
      const Polynomial y_factor =
          Rat(2) + s.p * Rat(2) + s.q + s.r - s.q.pow(2) - s.r.pow(2) -
          s.q * s.r * Rat(3) + s.p * s.q + s.q.pow(2) * s.r * Rat(2) +
          s.q * s.r.pow(2) * Rat(2) + s.p * s.q * s.r +
          s.p * s.r.pow(2) * Rat(2) - s.p.pow(2) * s.r -
          s.p * s.q * s.r.pow(2) * Rat(2) - s.p.pow(2) * s.r.pow(2) -
          s.q.pow(2) * s.r.pow(2);
      const Polynomial k_wd = Rat(2) - ompq * omr * y_factor;
      const Polynomial k_dd =
          Rat(1) - (Rat(1) + s.p + s.q + s.p * s.q + s.p * s.r - s.q.pow(2) -
                    s.q * s.r - s.p.pow(2) * s.r + s.q.pow(2) * s.r) *
                       ompq * omr * (s.one + s.r);
      const Polynomial k_sq = s.r.pow(2) * omr.pow(2) * ompq.pow(2);
      e.add(-k_wd, "WD");
      e.add(k_wd, "WWWD");
      e.add(k_wd, "DWDD");
      e.add(k_wd, "LWD");
      e.add(-k_dd, "DD");
      e.add(-k_sq, "WLD");
      e.add(-k_sq, "DLD");
      return e;
    }
    case WeightVariant::bond_B1: {
      WeightFunction e(v, kB1Vars);
      const auto s = b1_sym();
      e.add(-((s.one - s.p) * (s.one - s.r) * (s.p - s.r).pow(2)), "DD");
      return e;
    }
    case WeightVariant::bond_B2_high: {
      WeightFunction e(v, kB2Vars);
      const Polynomial x = Polynomial::var(kB2Vars, "rp");
      const Polynomial one = Polynomial::constant(kB2Vars, Rat(1));
      e.add(-x.pow(2), "DD");
      e.add(upoly({0, 2, -6, 4, -1}), "LD");
      e.add(-upoly({0, 3, -3, 1}), "LWD");
      e.add(-((one - x).pow(2) * upoly({1, -1, 2})), "LDL");
      e.add(-(x.pow(2) * (one - x).pow(2) * Rat(2)), "LDD");
      e.add(-(x * (one - x).pow(2) * (one + x)), "LDW");
      e.add(-(x * (one - x).pow(4)), "LLD");
      e.add(-(x * (one - x).pow(3)), "DLD");
      return e;
    }
    case WeightVariant::bond_B2_mid: {
      WeightFunction e(v, kB2Vars);
      const Polynomial x = Polynomial::var(kB2Vars, "rp");
      const Polynomial one = Polynomial::constant(kB2Vars, Rat(1));
      const Polynomial bracket = upoly({1, -1, -3, 3, -1});
      e.add(-x.pow(2), "DD");
      e.add(upoly({0, 2, -14, 23, -14, 0, 3, -1}), "LD");
      e.add(-((one - x).pow(2) * bracket), "LDL");
      e.add(-(x * (one - x).pow(2) * bracket), "LDW");
      e.add(-(x * (one - x).pow(2) * upoly({1, -5, 7, -1, -2, 1})), "LLD");
      e.add(-(x * (one - x).pow(6)), "DLD");
      e.add(-(upoly({0, 3, -3, 1}) * x * (one - x).pow(2)), "LWD");
      return e;
    }
    case WeightVariant::bond_B2_low: {
      WeightFunction e(v, kB2Vars);
      const Polynomial x = Polynomial::var(kB2Vars, "rp");
      e.add(x * upoly({2, -16, 21, 4, -39, 50, -35, 7, 13, -14, 6, -1}), "LD");
      e.add(-x.pow(2), "DDD");
      return e;
    }
    case WeightVariant::bond_B3: {
      WeightFunction e(v, kB2Vars);
      e.add(upoly({1, -10, 7, 0, 64, -292, 583, -663, 447, -168, 28}), "LWD");
      return e;
    }
  }
  throw std::logic_error("unknown weight variant");
}

WeightFunction build_weight_gen_cond234_increment_form() {
  WeightFunction w(WeightVariant::gen_cond234, kGenVars);
  const auto parts = gen_cond234_parts();
  const Polynomial one = Polynomial::constant(kGenVars, Rat(1));
  w.add(one, "D");
  w.add(one, "WD");
  w.add(one, "LWD");
  w.add(parts.ld, "LD");
  w.add(parts.ldw, "LDW");
  w.add(parts.ldl, "LDL");
  w.add(-(Rat(3) - parts.grouped), "LWD");
  return w;
}

std::vector<Rat> weight_eval_point(WeightVariant v, const GenParams& gp) {
  if (!weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "generalized parameters cannot instantiate a bond-regime weight");
  }
  return {gp.p, gp.q, gp.r};
}

std::vector<Rat> weight_eval_point(WeightVariant v, const BondParams& bp) {
  switch (v) {
    case WeightVariant::gen_cond1:
    case WeightVariant::gen_cond234:
      throw std::invalid_argument(
          "bond parameters cannot instantiate a generalized-regime weight");
    case WeightVariant::bond_B1: {
      const GenParams g = bond_to_generalized(bp);
      return {g.p, g.r};
    }
    case WeightVariant::bond_B2_high:
    case WeightVariant::bond_B2_mid:
    case WeightVariant::bond_B2_low:
    case WeightVariant::bond_B3:
      return {bp.r_prime};
  }
  throw std::logic_error("unknown weight variant");
}

std::size_t required_measure_depth(WeightVariant v) {
  const auto w = build_weight(v);
  const auto e = build_inequality_correction(v);
  std::size_t need = std::max(w.max_word_len() + 1, e.max_word_len());
  // One level of headroom where the stationarity argument later needs the
  // longest corrected words with context.
  if (v == WeightVariant::bond_B2_low) need = std::max<std::size_t>(need, 6);
  return need;
}

bool params_in_variant_regime(WeightVariant v, const GenParams& gp) {
  switch (v) {
    case WeightVariant::gen_cond1: {
      const auto verdict = check_generalized(gp);
      return verdict.member && verdict.cond == GenCond::cond1;
    }
    case WeightVariant::gen_cond234: {
      const auto verdict = check_generalized(gp);
      return verdict.member && (verdict.cond == GenCond::cond2 ||
                                verdict.cond == GenCond::cond3 ||
                                verdict.cond == GenCond::cond4);
    }
    default:
      throw std::invalid_argument(
          "generalized parameters checked against a bond-regime variant");
  }
}

bool params_in_variant_regime(WeightVariant v, const BondParams& bp) {
  switch (v) {
    case WeightVariant::gen_cond1:
    case WeightVariant::gen_cond234:
      throw std::invalid_argument(
          "bond parameters checked against a generalized-regime variant");
    case WeightVariant::bond_B1:
      return check_bond(bp).b1;
    case WeightVariant::bond_B2_high:
      return check_bond(bp).b2 && bp.r_prime >= kB2HighLo;
    case WeightVariant::bond_B2_mid:
      return check_bond(bp).b2 && bp.r_prime > kB2MidLo &&
             bp.r_prime < kB2HighLo;
    case WeightVariant::bond_B2_low:
      return check_bond(bp).b2 && bp.r_prime <= kB2MidLo;
    case WeightVariant::bond_B3:
      return check_bond(bp).b3;
  }
  throw std::logic_error("unknown weight variant");
}

namespace {

void require_depth(WeightVariant v, const CylinderMeasure& mu) {
  const std::size_t need = required_measure_depth(v);
  if (mu.max_len() < need) {
    throw std::invalid_argument(
        "measure too shallow for an exact margin: depth " +
        std::to_string(mu.max_len()) + " given, " + std::to_string(need) +
        " needed for " + weight_variant_name(v));
  }
}

}  // namespace

InequalityReport verify_final_inequality(WeightVariant v, const GenParams& gp,
                                         const CylinderMeasure& mu) {
  if (!weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "bond-regime weight verified against generalized parameters");
  }
  require_depth(v, mu);
  const auto point = weight_eval_point(v, gp);
  const LinearFunctional w_at = build_weight(v).at(point);
  const LinearFunctional e_at = build_inequality_correction(v).at(point);
  const LinearFunctional pulled =
      pullback(generalized_envelope_kernel(gp), w_at);
  return margin_report(v, param_pairs(gp), params_in_variant_regime(v, gp),
                       pulled, w_at, e_at, mu);
}

InequalityReport verify_final_inequality(WeightVariant v, const BondParams& bp,
                                         const CylinderMeasure& mu) {
  if (weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "generalized-regime weight verified against bond parameters");
  }
  require_depth(v, mu);
  const auto point = weight_eval_point(v, bp);
  const LinearFunctional w_at = build_weight(v).at(point);
  const LinearFunctional e_at = build_inequality_correction(v).at(point);
  const LinearFunctional pulled = pullback(bond_envelope_kernel(bp), w_at);
  return margin_report(v, param_pairs(bp), params_in_variant_regime(v, bp),
                       pulled, w_at, e_at, mu);
}

std::vector<GenParams> sample_regime_points_gen(WeightVariant v,
                                                std::size_t count,
                                                std::uint64_t seed) {
  if (!weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "bond-regime variant passed to the generalized sampler");
  }
  std::vector<GenParams> out;
  out.reserve(count);
  std::uint64_t index = 0;
  const std::uint64_t max_attempts =
      2000000 + 400 * static_cast<std::uint64_t>(count);
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::runtime_error(
          "regime sampling stalled; the target region is thinner than "
          "expected");
    }
    const Rat p = random_rational(seed, index++) * kDefaultSmallness;
    const Rat q = random_rational(seed, index++) * kDefaultSmallness;
    const Rat r = random_rational(seed, index++) * kDefaultSmallness;
    const GenParams gp = make_gen_params(p, q, r);
    if (!params_in_variant_regime(v, gp)) continue;
    out.push_back(gp);
  }
  return out;
}

std::vector<BondParams> sample_regime_points_bond(WeightVariant v,
                                                  std::size_t count,
                                                  std::uint64_t seed) {
  if (weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "generalized-regime variant passed to the bond sampler");
  }
  std::vector<BondParams> out;
  out.reserve(count);
  std::uint64_t index = 0;
  const std::uint64_t max_attempts =
      2000000 + 400 * static_cast<std::uint64_t>(count);
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::runtime_error(
          "regime sampling stalled; the target region is thinner than "
          "expected");
    }
    Rat rp, sp;
    switch (v) {
      case WeightVariant::bond_B1:
        rp = random_rational(seed, index++) * kDefaultSmallness;
        sp = random_rational(seed, index++) * kDefaultSmallness;
        break;
      case WeightVariant::bond_B2_high:
        rp = kB2HighLo + random_rational(seed, index++) * (Rat(1) - kB2HighLo);
        sp = 0;
        break;
      case WeightVariant::bond_B2_mid:
        rp = kB2MidLo + random_rational(seed, index++) * (kB2HighLo - kB2MidLo);
        sp = 0;
        break;
      case WeightVariant::bond_B2_low:
        rp = kBondB2Threshold +
             random_rational(seed, index++) * (kB2MidLo - kBondB2Threshold);
        sp = 0;
        break;
      case WeightVariant::bond_B3:
        rp = kBondB3Threshold +
             random_rational(seed, index++) * (Rat(1, 2) - kBondB3Threshold);
        sp = rp;
        break;
      default:
        throw std::logic_error("unknown weight variant");
    }
    const BondParams bp = make_bond_params(rp, sp);
    if (!params_in_variant_regime(v, bp)) continue;
    out.push_back(bp);
  }
  return out;
}

WeightVerificationRun run_weight_verification(WeightVariant v,
                                              std::size_t param_samples,
                                              std::size_t measure_samples,
                                              std::uint64_t seed) {
  WeightVerificationRun run;
  run.variant = v;
  run.all_pass = true;
  const auto suite =
      make_measure_suite(measure_samples, required_measure_depth(v), seed + 1);
  const WeightFunction w = build_weight(v);
  const WeightFunction e = build_inequality_correction(v);

  auto sweep = [&](const auto& params_list, auto kernel_of) {
    for (const auto& params : params_list) {
      const auto point = weight_eval_point(v, params);
      const LinearFunctional w_at = w.at(point);
      const LinearFunctional e_at = e.at(point);
      const LinearFunctional pulled = pullback(kernel_of(params), w_at);
      const bool in_regime = params_in_variant_regime(v, params);
      for (const auto& mu : suite) {
        run.reports.push_back(margin_report(v, param_pairs(params), in_regime,
                                            pulled, w_at, e_at, mu));
        run.all_pass = run.all_pass && run.reports.back().pass;
      }
    }
  };

  if (weight_variant_is_generalized(v)) {
    sweep(sample_regime_points_gen(v, param_samples, seed),
          [](const GenParams& gp) { return generalized_envelope_kernel(gp); });
  } else {
    sweep(sample_regime_points_bond(v, param_samples, seed),
          [](const BondParams& bp) { return bond_envelope_kernel(bp); });
  }
  return run;
}

std::vector<CoefficientAudit> coefficient_sign_audit(WeightVariant v,
                                                     unsigned resolution) {
  // Clears the rounded decimal boundary constants off the exact roots.
  const Rat eps(1, 100000);
  std::vector<CoefficientAudit> out;
  switch (v) {
    case WeightVariant::gen_cond1:
    case WeightVariant::gen_cond234: {
      const Polynomial dd = build_inequality_correction(v).coefficient("DD");
      const std::vector<std::pair<Rat, Rat>> box{
          {Rat(0), kDefaultSmallness},
          {Rat(0), kDefaultSmallness},
          {Rat(0), kDefaultSmallness}};
      const auto filter = [](const std::vector<Rat>& pt) {
        const GenParams gp = make_gen_params(pt[0], pt[1], pt[2]);
        if (!gp.in_theta) return false;  // excludes only the origin
        return check_generalized(gp).universal;
      };
      const SignReport rep = grid_sign_scan(dd, box, resolution, filter);
      out.push_back({v, "DD", rep, rep.all_strictly_negative()});
      break;
    }
    case WeightVariant::bond_B1: {
      // The mu(DD) coefficient scaled by (1-s') > 0, which clears its
      // denominator; strict positivity is equivalent.
      const Polynomial scan = bond_b1_dd_scan_polynomial();
      const std::vector<std::pair<Rat, Rat>> box{
          {Rat(0), kDefaultSmallness}, {Rat(0), kDefaultSmallness}};
      const auto filter = [](const std::vector<Rat>& pt) {
        const BondParams bp = make_bond_params(pt[0], pt[1]);
        if (!bp.in_theta_prime) return false;
        return check_bond(bp).b1_inequality;
      };
      const SignReport rep = grid_sign_scan(scan, box, resolution, filter);
      out.push_back(
          {v, "DD_scaled_by_one_minus_sp", rep, rep.all_strictly_positive()});
      break;
    }
    case WeightVariant::bond_B2_high:
    case WeightVariant::bond_B2_mid:
    case WeightVariant::bond_B2_low: {
      const Polynomial ld = build_inequality_correction(v).coefficient("LD");
      Rat lo, hi;
      if (v == WeightVariant::bond_B2_high) {
        lo = kB2HighLo;
        hi = Rat(1);
      } else if (v == WeightVariant::bond_B2_mid) {
        lo = kB2MidLo;
        hi = kB2HighLo;
      } else {
        lo = kBondB2Threshold;
        hi = kB2MidLo;
      }
      const std::vector<std::pair<Rat, Rat>> box{{lo + eps, hi}};
      const SignReport rep = grid_sign_scan(ld, box, resolution);
      out.push_back({v, "LD", rep, rep.all_strictly_negative()});
      break;
    }
    case WeightVariant::bond_B3: {
      const Polynomial lwd =
          build_inequality_correction(v).coefficient("LWD");
      const std::vector<std::pair<Rat, Rat>> box{
          {kBondB3Threshold + eps, Rat(1, 2)}};
      const SignReport rep = grid_sign_scan(lwd, box, resolution);
      out.push_back({v, "LWD", rep, rep.all_strictly_negative()});
      break;
    }
  }
  return out;
}

std::map<Word, Rat> bond_b1_restated_coefficients(const BondParams& bp) {
  if (bp.s_prime == 1) {
    throw std::domain_error("s' = 1 leaves the transform's domain");
  }
  const Rat rp = bp.r_prime;
  const Rat sp = bp.s_prime;
  const Rat w = Rat(2) * sp - sp * sp;  // transformed vertex-trap rate
  const Rat oms = Rat(1) - sp;
  const Rat chi = Rat(1) - rp - sp;

  std::map<Word, Rat> c;
  c["D"] = Rat(1);
  c["WD"] = Rat(1);
  c["LWD"] = Rat(1) - chi * (Rat(2) * w * oms + rp + w * w * oms +
                             Rat(2) * rp * rp / oms - w * w * rp -
                             Rat(5) * w * rp * rp / oms);
  c["LD"] = -chi * (Rat(2) * w * oms - Rat(4) * rp + w * w * oms +
                    Rat(3) * rp * rp / oms + Rat(2) * w * rp -
                    Rat(2) * w * w * rp - Rat(6) * w * rp * rp / oms);
  c["LDW"] = -chi * (Rat(3) * rp + Rat(2) * w * w * oms +
                     Rat(2) * rp * rp / oms - w * rp - Rat(2) * w * w * rp -
                     Rat(4) * w * rp * rp / oms - rp * rp * rp / (oms * oms));
  c["LDL"] = -oms * chi * (oms * oms - rp * rp + w * rp * rp);
  return c;
}

}  // namespace pg
