#include "polynomials/roots.hpp"

#include <stdexcept>

namespace pg {

RootBracket isolate_root(const Polynomial& poly, const Rat& lo, const Rat& hi,
                         const Rat& tol) {
  if (poly.vars().size() != 1)
    throw std::domain_error("isolate_root requires a univariate polynomial");
  if (lo >= hi) throw std::domain_error("empty bracket");
  if (tol <= 0) throw std::domain_error("tolerance must be positive");

  auto sign_at = [&poly](const Rat& x) {
    const Rat v = poly.eval({x});
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };

  Rat a = lo, b = hi;
  int sign_a = sign_at(a), sign_b = sign_at(b);
  if (sign_a == 0 || sign_b == 0)
    throw std::domain_error("bracket endpoint is an exact root; shrink the interval");
  if (sign_a == sign_b)
    throw std::domain_error("no sign change on bracket [" + to_fraction(lo) + ", " +
                            to_fraction(hi) + "]");

  while (b - a > tol) {
    Rat mid = (a + b) / 2;
    int sign_mid = sign_at(mid);
    if (sign_mid == 0) {
      // exact rational root: return a tight bracket straddling it
      Rat eps = tol / 4;
      a = mid - eps;
      b = mid + eps;
      if (sign_at(a) == sign_at(b))
        throw std::domain_error("degenerate bracket around exact root");
      return {a, b};
    }
    if (sign_mid == sign_a)
      a = mid;
    else
      b = mid;
  }
  return {a, b};
}

}  // namespace pg
