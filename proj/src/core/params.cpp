#include "core/params.hpp"

#include <stdexcept>

namespace pg {

namespace {
void require_unit(const Rat& x, const char* name) {
  if (x < 0 || x > 1)
    throw std::domain_error(std::string(name) + " outside [0,1]: " + to_fraction(x));
}
}  // namespace

GenParams make_gen_params(const Rat& p, const Rat& q, const Rat& r, const Rat& smallness) {
  require_unit(p, "p");
  require_unit(q, "q");
  require_unit(r, "r");
  if (p + q > 1) throw std::domain_error("p+q > 1");
  GenParams out;
  out.p = p;
  out.q = q;
  out.r = r;
  out.in_theta = p + q + r > 0;
  out.small = p <= smallness && q <= smallness && r <= smallness;
  return out;
}

BondParams make_bond_params(const Rat& r_prime, const Rat& s_prime, const Rat& smallness) {
  require_unit(r_prime, "r'");
  require_unit(s_prime, "s'");
  if (r_prime + s_prime > 1) throw std::domain_error("r'+s' > 1");
  BondParams out;
  out.r_prime = r_prime;
  out.s_prime = s_prime;
  out.in_theta_prime = r_prime + s_prime > 0;
  out.small = r_prime <= smallness && s_prime <= smallness;
  return out;
}

GenParams bond_to_generalized(const BondParams& b) {
  if (b.s_prime == 1) throw std::domain_error("transform undefined at s' = 1");
  const Rat one_minus_s = Rat(1) - b.s_prime;
  Rat p = Rat(2) * b.s_prime - b.s_prime * b.s_prime;
  Rat r = b.r_prime / one_minus_s;
  return make_gen_params(p, Rat(0), r);
}

}  // namespace pg
