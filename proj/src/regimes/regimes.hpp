// Exact membership predicates for the draw-probability-zero regimes: the
// four-condition regime of the generalized game, its two simplified
// sub-regimes, and the three bond-game regimes. Every inequality is evaluated
// in exact rational arithmetic; no floats, no algebraic shortcuts.
#pragma once

#include "core/params.hpp"

namespace pg {

enum class GenCond { none = 0, cond1 = 1, cond2 = 2, cond3 = 3, cond4 = 4 };

struct GenRegimeVerdict {
  bool universal = false;           // the shared quadratic inequality
  bool universal_boundary = false;  // equality case, reported separately
  GenCond cond = GenCond::none;     // first (and provably only) match
  int conditions_matched = 0;       // diagnostic; must be <= 1 when small
  bool small = false;
  bool in_theta = false;
  bool member = false;  // in_theta && small && universal && cond != none
};

// Evaluates the universal inequality and conditions 1-4. The conditions are
// mutually exclusive inside the smallness box; a multiple match there would
// mean a transcription bug, so it throws std::logic_error loudly.
GenRegimeVerdict check_generalized(const GenParams& gp);

// Simplified sub-regimes: s1 (p <= q/2 and p+q >= 2r) implies membership via
// condition 1, s4 (q+r <= p and 5q >= 4r) implies membership via condition 4.
struct SimplifiedVerdict {
  bool s1 = false;
  bool s4 = false;
};

SimplifiedVerdict check_simplified(const GenParams& gp);

// Exact decimal thresholds quoted in the bond-game theorem; their defining
// polynomials live in the threshold registry.
inline const Rat kBondB2Threshold(6287, 40000);  // 0.157175
inline const Rat kBondB3Threshold(10883, 100000);

struct BondRegimeVerdict {
  bool b1 = false;  // small-parameter inequality regime (needs smallness)
  bool b1_inequality = false;  // the inequality alone (false when s'=1)
  bool b2 = false;             // s' = 0 and r' > 0.157175
  bool b3 = false;             // r' = s' >= 0.10883
  bool member = false;
};

BondRegimeVerdict check_bond(const BondParams& bp);

}  // namespace pg
