#include "pushforward/lemmas.hpp"

#include <array>
#include <stdexcept>

namespace pg {

namespace {

void require_invariant(const CylinderMeasure& mu, std::size_t min_depth) {
  if (!mu.translation_invariant() || !mu.reflection_invariant())
    throw std::invalid_argument(
        "lemma verification needs a translation- and reflection-invariant "
        "measure");
  if (mu.max_len() < min_depth)
    throw std::invalid_argument("measure depth too small for lemma check");
}

// One case sum: all input words over the given per-position symbol sets.
using CaseProduct = std::array<const char*, 4>;

Rat case_sum(const UpdateKernel& kernel, const CylinderMeasure& mu,
             const std::vector<CaseProduct>& products) {
  Rat total = 0;
  for (const auto& sets : products) {
    std::array<std::size_t, 4> idx{0, 0, 0, 0};
    for (;;) {
      Word in;
      for (int j = 0; j < 4; ++j) in.push_back(sets[j][idx[j]]);
      total += conditional_prob(kernel, "LWD", in) * mu.prob(in);
      int j = 3;
      for (; j >= 0; --j) {
        if (sets[j][++idx[j]] != '\0') break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
  }
  return total;
}

}  // namespace

Rat pushforward_prob(const UpdateKernel& kernel, const Word& word,
                     const CylinderMeasure& mu) {
  LinearFunctional f{{Rat(1), word}};
  return pullback(kernel, f).evaluate(mu);
}

LinearFunctional pushforward_D_closed_form(const GenParams& gp) {
  const Rat opq = gp.one_minus_pq();
  const Rat omr = Rat(1) - gp.r;
  LinearFunctional f;
  f.add(2 * opq * omr, "WD");
  f.add(2 * opq * gp.r * omr, "LD");
  f.add(opq * (1 - gp.r * gp.r), "DD");
  return f;
}

LinearFunctional pushforward_WD_closed_form(const GenParams& gp) {
  const Rat p = gp.p, q = gp.q, r = gp.r;
  const Rat opq = gp.one_minus_pq();
  const Rat omr = Rat(1) - r;
  const Rat sq = opq * opq * omr * omr;  // (1-p-q)^2 (1-r)^2
  LinearFunctional f;
  f.add(2 * p * opq * omr, "WD");
  f.add(p * opq * omr * (1 + r), "DD");
  f.add((opq + r + p * r - q * r - r * r + p * r * r + q * r * r -
         r * r * r + p * r * r * r + q * r * r * r) *
            opq * omr,
        "LD");
  f.add(-r * sq, "LDW");
  f.add(-sq, "LDL");
  f.add(sq, "LWD");
  f.add(-r * r * sq, "WLD");
  f.add(-r * r * sq, "DLD");
  return f;
}

Rat identity_residual(const UpdateKernel& kernel, const Word& out_word,
                      const LinearFunctional& closed_form,
                      const CylinderMeasure& mu) {
  return pushforward_prob(kernel, out_word, mu) - closed_form.evaluate(mu);
}

std::vector<LemmaCheck> verify_identity_lemmas(const GenParams& gp,
                                               const CylinderMeasure& mu) {
  require_invariant(mu, 4);
  const UpdateKernel kernel = generalized_envelope_kernel(gp);
  std::vector<LemmaCheck> out;
  const Rat res_d =
      identity_residual(kernel, "D", pushforward_D_closed_form(gp), mu);
  out.push_back({"pushforward_D", mu.id(), res_d, true, res_d == 0});
  const Rat res_wd =
      identity_residual(kernel, "WD", pushforward_WD_closed_form(gp), mu);
  out.push_back({"pushforward_WD", mu.id(), res_wd, true, res_wd == 0});
  return out;
}

std::vector<LemmaCheck> verify_bound_lemmas(const GenParams& gp,
                                            const CylinderMeasure& mu,
                                            bool allow_outside_smallness) {
  require_invariant(mu, 5);
  if (!gp.small && !allow_outside_smallness)
    throw std::domain_error(
        "bound lemmas are only claimed inside the smallness box");

  const UpdateKernel kernel = generalized_envelope_kernel(gp);
  const Rat p = gp.p, q = gp.q, r = gp.r;
  const Rat opq = gp.one_minus_pq();
  const Rat omr = Rat(1) - r;
  const Rat target_l = q + opq * r;        // phi(W,L -> L)
  const Rat target_ll = q + opq * r * r;   // phi(L,L -> L)
  const Rat win_wl = p + opq * omr;        // phi(W,L -> W)
  // (q+r-pr-qr) and its complement, written exactly as in the stated bounds
  // (they coincide with phi(W,L -> L) and 1 - phi(W,L -> L)).
  const Rat a8_f1 = q + r - p * r - q * r;
  const Rat a8_f2 = 1 - q - r + p * r + q * r;

  struct BoundCase {
    const char* id;
    std::vector<CaseProduct> sets;
    LinearFunctional bound;
  };
  std::vector<BoundCase> cases;
  auto fn = [](std::initializer_list<std::pair<Rat, Word>> terms) {
    return LinearFunctional(terms);
  };

  cases.push_back({"A1",
                   {{"WLD", "WLD", "L", "D"}},
                   fn({{(1 - p) * win_wl * opq * r * omr, "LD"}})});
  cases.push_back({"A2",
                   {{"WLD", "D", "D", "WLD"}},
                   fn({{target_l * p * opq * omr * (1 + r), "DD"}})});
  cases.push_back(
      {"A3",
       {{"WLD", "L", "W", "D"}, {"L", "W", "D", "WLD"}},
       fn({{target_l * opq * omr *
                (1 + p - q - r + 2 * p * r + q * r),
            "LWD"}})});
  cases.push_back({"A4",
                   {{"WLD", "L", "D", "L"}},
                   fn({{target_l * win_wl * opq * r * omr, "LDL"}})});
  cases.push_back({"A5",
                   {{"WD", "W", "D", "L"}},
                   fn({{(1 - p) * p * opq * r * omr, "WDL"}})});
  cases.push_back(
      {"A6",
       {{"WLD", "L", "D", "W"}, {"WD", "W", "D", "W"}},
       fn({{target_l * win_wl * opq * omr, "DW"},
           {(p * (1 - p) - a8_f1 * a8_f2) * opq * omr, "WWDW"}})});
  cases.push_back({"A7",
                   {{"WLD", "WD", "W", "D"}},
                   fn({{p * opq * opq * omr * omr, "WWWD"},
                       {target_l * p * opq * omr, "WD"}})});
  cases.push_back({"A8",
                   {{"WLD", "L", "D", "D"}},
                   fn({{a8_f1 * a8_f2 * opq * omr * (1 + r), "LDD"}})});
  cases.push_back(
      {"A9",
       {{"WD", "W", "D", "D"}},
       fn({{q * a8_f2 * opq * omr * (1 + r), "WDD"},
           {(p * (1 - p) - q * a8_f2) * opq * omr * (1 + r), "WWDD"},
           {(p * r + q * r - q) * opq * opq * omr * (1 + r), "DWDD"}})});

  std::vector<LemmaCheck> out;
  Rat partition_total = 0;
  for (const auto& c : cases) {
    const Rat value = case_sum(kernel, mu, c.sets);
    partition_total += value;
    const Rat margin = value - c.bound.evaluate(mu);
    out.push_back({c.id, mu.id(), margin, false, margin <= 0});
  }
  const Rat total_residual =
      partition_total - pushforward_prob(kernel, "LWD", mu);
  out.push_back({"LWD_partition_total", mu.id(), total_residual, true,
                 total_residual == 0});

  // Lower-bound inequalities: stated lower bound minus the exact pushforward.
  struct LowerCase {
    const char* id;
    Word target;
    LinearFunctional lower;
  };
  const std::vector<LowerCase> lowers = {
      {"lower_LD", "LD", fn({{(1 - p) * opq * omr, "WWD"}})},
      {"lower_LDW", "LDW",
       fn({{(1 - p) * opq * omr * p, "WWDW"},
           {(1 - p) * opq * omr * p, "WWDD"}})},
      {"lower_LDL", "LDL",
       fn({{(1 - p) * opq * omr * target_l, "WWDW"},
           {(1 - p) * opq * omr * target_ll, "WWDD"}})},
      {"lower_LWD", "LWD",
       fn({{(1 - p) * p * opq * omr, "WWDW"},
           {(1 - p) * p * opq * omr * (1 + r), "WWDD"},
           {(1 - p) * p * opq * omr, "WWWD"}})},
  };
  for (const auto& c : lowers) {
    const Rat margin =
        c.lower.evaluate(mu) - pushforward_prob(kernel, c.target, mu);
    out.push_back({c.id, mu.id(), margin, false, margin <= 0});
  }
  return out;
}

}  // namespace pg
