#include "weights/conclude.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "kernels/kernel.hpp"
#include "pushforward/functional.hpp"

namespace pg {
namespace {

bool push_step(DerivationTrace& t, std::string claim, std::string just,
               const Rat& value, bool strict, bool want_negative) {
  TraceStep s;
  s.claim = std::move(claim);
  s.justification = std::move(just);
  s.value = value;
  s.strict = strict;
  if (want_negative) {
    s.sign_ok = strict ? value < 0 : value <= 0;
  } else {
    s.sign_ok = strict ? value > 0 : value >= 0;
  }
  t.steps.push_back(std::move(s));
  return t.steps.back().sign_ok;
}

bool step_pos(DerivationTrace& t, std::string claim, std::string just,
              const Rat& value, bool strict) {
  return push_step(t, std::move(claim), std::move(just), value, strict, false);
}

bool step_neg(DerivationTrace& t, std::string claim, std::string just,
              const Rat& value, bool strict) {
  return push_step(t, std::move(claim), std::move(just), value, strict, true);
}

// A bookkeeping step with no sign requirement (containments, decompositions).
void note(DerivationTrace& t, std::string claim, std::string just) {
  TraceStep s;
  s.claim = std::move(claim);
  s.justification = std::move(just);
  s.value = Rat(1);
  s.strict = false;
  s.sign_ok = true;
  t.steps.push_back(std::move(s));
}

void abort_trace(DerivationTrace& t, std::string why) {
  t.outcome = TraceOutcome::aborted;
  t.detail = std::move(why);
}

void conclude_trace(DerivationTrace& t) {
  t.outcome = TraceOutcome::concluded;
  t.detail = "every stationary measure gives the draw symbol zero mass here";
}

// From mu(DD) = 0 to mu(D) = 0 via one kernel step into DD: stationarity
// gives mu(DD) >= P[DD | C] mu(C) for each three-letter cylinder C, so every
// C with a positive one-step probability into DD is forced to zero as well.
void dd_to_d_chain(DerivationTrace& t, const UpdateKernel& kernel) {
  struct Row {
    const char* in;
    const char* claim;
  };
  const Row rows[] = {
      {"WDW", "mu(WDW) = 0"},
      {"WDL", "mu(WDL) = mu(LDW) = 0"},
      {"LDL", "mu(LDL) = 0"},
  };
  for (const auto& row : rows) {
    if (!step_pos(t, row.claim,
                  std::string("P[DD | ") + row.in +
                      "] > 0 and stationarity pins mu(DD) = 0",
                  conditional_prob(kernel, "DD", row.in), true)) {
      abort_trace(t, std::string("the one-step probability into DD from ") +
                         row.in + " vanishes; the chain cannot proceed");
      return;
    }
  }
  note(t, "mu(WDD) = mu(LDD) = mu(DDD) = 0",
       "each refines the DD cylinder (directly or after reflection), whose "
       "mass is zero");
  note(t, "mu(D) = 0",
       "mu(D) = mu(WDW) + 2 mu(WDL) + mu(LDL) + 2 mu(WDD) + 2 mu(LDD) + "
       "mu(DDD), and every term is zero");
  conclude_trace(t);
}

}  // namespace

const char* trace_outcome_name(TraceOutcome o) {
  switch (o) {
    case TraceOutcome::concluded: return "concluded";
    case TraceOutcome::delegated: return "delegated";
    case TraceOutcome::aborted: return "aborted";
  }
  throw std::logic_error("unknown trace outcome");
}

DerivationTrace conclude_mu_D_zero(WeightVariant v, const GenParams& gp) {
  if (!weight_variant_is_generalized(v)) {
    throw std::invalid_argument(
        "generalized parameters with a bond-regime variant");
  }
  DerivationTrace t;
  t.variant = v;
  t.params = {{"p", gp.p}, {"q", gp.q}, {"r", gp.r}};
  if (!params_in_variant_regime(v, gp)) {
    abort_trace(t,
                "outside the regime this weight serves; the final inequality "
                "is unavailable");
    return t;
  }
  if (gp.r == 0) {
    t.outcome = TraceOutcome::delegated;
    t.detail =
        "r = 0 removes the edge traps; the classical two-parameter criteria "
        "already settle this slice";
    return t;
  }

  const auto point = weight_eval_point(v, gp);
  const auto corr = build_inequality_correction(v);
  const Rat k_wd = -corr.coefficient("WD").eval(point);
  const Rat k_dd = -corr.coefficient("DD").eval(point);
  const Rat k_sq = -corr.coefficient("WLD").eval(point);

  bool ok = step_pos(t,
                     "the grouped term mu(WD) - mu(WWWD) - mu(DWDD) - mu(LWD) "
                     "is harmless",
                     "its subtracted multiplier (the group itself is "
                     "nonnegative for invariant measures)",
                     k_wd, false);
  ok = step_pos(t, "the mu(WLD) and mu(DLD) terms are harmless",
                "their shared subtracted square multiplier", k_sq, false) &&
       ok;
  if (!ok) {
    abort_trace(t,
                "a correction coefficient has the wrong sign; the "
                "stationarity bound does not close");
    return t;
  }
  if (!step_pos(t, "mu(DD) = 0",
                "stationarity forces E(mu) >= 0 while every term of E is "
                "non-positive; the subtracted mu(DD) multiplier is strictly "
                "positive",
                k_dd, true)) {
    abort_trace(t, "the mu(DD) multiplier is not strictly positive here");
    return t;
  }
  dd_to_d_chain(t, generalized_envelope_kernel(gp));
  return t;
}

DerivationTrace conclude_mu_D_zero(WeightVariant v, const BondParams& bp) {
  if (weight_variant_is_generalized(v)) {
    throw std::invalid_argument("bond parameters with a generalized variant");
  }
  DerivationTrace t;
  t.variant = v;
  t.params = {{"rp", bp.r_prime}, {"sp", bp.s_prime}};
  if (!params_in_variant_regime(v, bp)) {
    abort_trace(t,
                "outside the regime this weight serves; the final inequality "
                "is unavailable");
    return t;
  }
  if (bp.r_prime == 0) {
    t.outcome = TraceOutcome::delegated;
    t.detail =
        "r' = 0 removes the edge traps; the classical result for "
        "target-only edge games settles this slice";
    return t;
  }

  const auto point = weight_eval_point(v, bp);
  const auto corr = build_inequality_correction(v);
  const UpdateKernel kernel = bond_envelope_kernel(bp);

  switch (v) {
    case WeightVariant::bond_B1: {
      if (!step_pos(t, "mu(DD) = 0",
                    "stationarity forces E(mu) >= 0; the single correction "
                    "term subtracts mu(DD) with multiplier "
                    "(1-p)(1-r)(p-r)^2 > 0 in transformed coordinates",
                    -corr.coefficient("DD").eval(point), true)) {
        abort_trace(t, "the mu(DD) multiplier is not strictly positive here");
        return t;
      }
      dd_to_d_chain(t, kernel);
      return t;
    }

    case WeightVariant::bond_B2_high:
    case WeightVariant::bond_B2_mid:
    case WeightVariant::bond_B2_low: {
      const LinearFunctional e_at = corr.at(point);
      for (const auto& [word, coef] : e_at.terms()) {
        if (word == "LD") continue;
        if (!step_neg(t, "the mu(" + word + ") correction term is harmless",
                      "it is subtracted with a nonnegative multiplier", coef,
                      false)) {
          abort_trace(t, "the mu(" + word +
                             ") correction coefficient has the wrong sign");
          return t;
        }
      }
      if (!step_neg(t, "mu(LD) = 0 (and mu(DL) = 0 by reflection)",
                    "stationarity forces E(mu) >= 0 while every term is "
                    "non-positive; the mu(LD) coefficient is strictly "
                    "negative",
                    e_at.coefficient("LD"), true)) {
        abort_trace(t, "the mu(LD) coefficient is not strictly negative here");
        return t;
      }
      for (char a : {'W', 'L', 'D'}) {
        for (char b : {'W', 'L', 'D'}) {
          const Word in = std::string(1, a) + "D" + std::string(1, b);
          if (!step_pos(t, "mu(" + in + ") = 0",
                        "P[LD | " + in +
                            "] > 0 and stationarity pins mu(LD) = 0",
                        conditional_prob(kernel, "LD", in), true)) {
            abort_trace(t, "the one-step probability into LD from " + in +
                               " vanishes; the chain cannot proceed");
            return t;
          }
        }
      }
      note(t, "mu(D) = 0",
           "mu(D) is the sum of mu(aDb) over a, b in {W, L, D}, and every "
           "term is zero");
      conclude_trace(t);
      return t;
    }

    case WeightVariant::bond_B3: {
      if (!step_neg(t, "mu(LWD) = 0 (and mu(DWL) = 0 by reflection)",
                    "stationarity forces E(mu) >= 0; the single correction "
                    "term carries a strictly negative mu(LWD) coefficient",
                    corr.coefficient("LWD").eval(point), true)) {
        abort_trace(t,
                    "the mu(LWD) coefficient is not strictly negative here");
        return t;
      }
      for (const Word& abc : all_words(3)) {
        const Word in = abc + "D";
        if (!step_pos(t, "mu(" + in + ") = 0",
                      "P[LWD | " + in +
                          "] > 0 and stationarity pins mu(LWD) = 0",
                      conditional_prob(kernel, "LWD", in), true)) {
          abort_trace(t, "the one-step probability into LWD from " + in +
                             " vanishes; the chain cannot proceed");
          return t;
        }
      }
      note(t, "mu(D) = 0",
           "mu(D) is the sum of mu(xD) over the 27 three-letter prefixes x, "
           "and every term is zero");
      conclude_trace(t);
      return t;
    }

    default:
      throw std::logic_error("unknown weight variant");
  }
}

}  // namespace pg
