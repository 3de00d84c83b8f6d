// Univariate root isolation by exact-sign bisection.
#pragma once

#include "polynomials/polynomial.hpp"

namespace pg {

struct RootBracket {
  Rat lo, hi;        // sign(poly(lo)) != sign(poly(hi)), both nonzero
  Rat midpoint() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

// Bisect `poly` (univariate) on [lo, hi] down to width <= tol. Signs are
// evaluated exactly; throws std::domain_error when the endpoint signs do not
// differ (no bracketed sign change) or the polynomial is not univariate.
RootBracket isolate_root(const Polynomial& poly, const Rat& lo, const Rat& hi,
                         const Rat& tol);

}  // namespace pg
