// Registry of the univariate threshold polynomials appearing in the bond-game
// weight-function derivations, each with its published root constant and a
// verified search bracket. The registry is the single source of truth for
// numeric thresholds quoted anywhere in the project.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomials/polynomial.hpp"
#include "polynomials/roots.hpp"

namespace pg {

struct ThresholdEntry {
  std::string id;          // stable identifier, e.g. "alpha1", "b2_high_ld"
  Polynomial poly;         // univariate in x
  Rat stated_constant;     // the published decimal threshold
  Rat search_lo, search_hi;  // bracket handed to isolate_root
  std::string note;        // sign behaviour this root certifies
  // Allowed |root - stated_constant| gap: 1e-5 for constants published at
  // the root itself; the one constant published rounded up to a safe bound
  // (b2_high_ld) carries its print-rounding width instead.
  Rat print_tolerance = Rat(1, 100000);
};

struct RootCheckRow {
  std::string id;
  Rat stated_constant;
  RootBracket bracket;
  bool pass;  // |bracket midpoint - stated| <= the entry's print tolerance
};

// Build a univariate polynomial in "x" from coefficients c0 + c1 x + c2 x^2...
Polynomial poly_x(const std::vector<Rat>& coeffs);

const std::vector<ThresholdEntry>& threshold_registry();
const ThresholdEntry& threshold_entry(const std::string& id);

// Isolate every registry root (tolerance 1e-7) and compare midpoints against
// the stated constants at each entry's print tolerance.
std::vector<RootCheckRow> check_all_thresholds();

}  // namespace pg
