// The endgame of the stationarity argument: given a stationary (translation-
// and reflection-invariant) measure mu and a parameter point inside a
// regime, the final weight inequality pins w(mu) = w(F mu) <= w(mu) + E(mu),
// so E(mu) >= 0; since every term of E is non-positive there, every word
// carrying a strictly negative coefficient must have mu-mass zero. A short
// chain of one-step conditional probabilities then drags mu(D) itself to
// zero. This module replays that chain at a concrete parameter point, step
// by step, with every coefficient evaluated exactly and its sign checked.
#pragma once

#include <string>
#include <vector>

#include "core/params.hpp"
#include "core/rational.hpp"
#include "core/words.hpp"
#include "weights/weights.hpp"

namespace pg {

enum class TraceOutcome {
  concluded,  // mu(D) = 0 follows; every sign check passed
  delegated,  // a degenerate slice handled by the classical two-parameter result
  aborted,    // a sign or regime check failed; see the diagnosis
};

const char* trace_outcome_name(TraceOutcome o);

// One implication in the chain. `value` is the exact coefficient or
// conditional probability the implication leans on and `sign_ok` records
// whether it has the sign the implication needs.
struct TraceStep {
  std::string claim;          // e.g. "mu(DD) = 0"
  std::string justification;  // which coefficient/probability forces it
  Rat value;
  bool strict = false;  // needs > 0 (resp. < 0); otherwise >= 0 (resp. <= 0)
  bool sign_ok = false;
};

struct DerivationTrace {
  WeightVariant variant;
  std::vector<std::pair<std::string, Rat>> params;
  TraceOutcome outcome = TraceOutcome::aborted;
  std::string detail;  // delegation note or abort diagnosis
  std::vector<TraceStep> steps;
};

// Replay the chain for a generalized-regime variant (gen_cond1/gen_cond234)
// or a bond-regime variant at the given parameter point. The degenerate
// slices r = 0 (generalized) and r' = 0 (bond) delegate instead of tracing.
DerivationTrace conclude_mu_D_zero(WeightVariant v, const GenParams& gp);
DerivationTrace conclude_mu_D_zero(WeightVariant v, const BondParams& bp);

}  // namespace pg
