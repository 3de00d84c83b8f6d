// Product-grid sampling of the regime predicates, rendered as CSV for the
// region plots. Grid coordinates are exact rationals so every row is
// reproducible bit for bit.
#pragma once

#include <array>
#include <string>

#include "regimes/regimes.hpp"

namespace pg {

struct GridAxis {
  Rat lo, hi;
  unsigned count = 1;  // number of sample points; 1 pins the axis at lo
};

// Sample points of one axis: lo + (hi-lo)*k/(count-1), k = 0..count-1.
std::vector<Rat> grid_points(const GridAxis& axis);

// CSV with header `p,q,r,universal,cond,member`, one row per grid point of
// the (p,q,r) product grid in row-major order (r fastest). Coordinates use
// 12 significant digits; predicate fields are 0/1 except cond (0..4).
// Structurally invalid points (p+q>1) get all-zero predicate fields.
std::string sample_region_generalized(const std::array<GridAxis, 3>& axes);

// CSV with header `rp,sp,b1,b2,b3,member`, same conventions.
std::string sample_region_bond(const std::array<GridAxis, 2>& axes);

}  // namespace pg
