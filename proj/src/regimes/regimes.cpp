#include "regimes/regimes.hpp"

#include <stdexcept>

namespace pg {

GenRegimeVerdict check_generalized(const GenParams& gp) {
  const Rat p = gp.p, q = gp.q, r = gp.r;
  GenRegimeVerdict v;
  v.small = gp.small;
  v.in_theta = gp.in_theta;

  const Rat uni_lhs = 2 * (p + q) + 6 * r * r + 3 * r * (p + 2 * q);
  const Rat uni_rhs = 4 * r + (p + q) * (p + q);
  v.universal = uni_lhs >= uni_rhs;
  v.universal_boundary = uni_lhs == uni_rhs;

  const Rat pp = p * (1 - p);
  const Rat x = q + r * (1 - p - q);   // phi(W,L -> L)
  const Rat t1 = q * (1 - x);
  const Rat t2 = x * (1 - x);
  const bool chain_mid = t1 < pp && pp <= t2;
  const Rat branch_poly =
      p - 2 * q + p * q + q * r - 3 * p * r - 2 * p * p + 3 * q * q;

  const bool cond1 = pp <= t1;
  const bool cond2 = chain_mid && branch_poly <= 0;
  const bool cond3 = chain_mid && branch_poly > 0 &&
                     p + 4 * q + 9 * p * r + 5 * q * r + 6 * r * r >=
                         4 * r + p * p + 4 * q * q + 5 * p * q;
  const bool cond4 = x < p && 6 * q + 10 * p * r + 4 * q * r + p * p +
                                      6 * r * r >=
                                  4 * r + 6 * p * q + 7 * q * q;

  const bool matches[4] = {cond1, cond2, cond3, cond4};
  for (int i = 0; i < 4; ++i)
    if (matches[i]) {
      ++v.conditions_matched;
      if (v.cond == GenCond::none) v.cond = static_cast<GenCond>(i + 1);
    }
  if (v.small && v.conditions_matched > 1)
    throw std::logic_error("regime conditions overlap inside smallness box");

  v.member = v.in_theta && v.small && v.universal && v.cond != GenCond::none;
  return v;
}

SimplifiedVerdict check_simplified(const GenParams& gp) {
  SimplifiedVerdict v;
  v.s1 = 2 * gp.p <= gp.q && gp.p + gp.q >= 2 * gp.r;
  v.s4 = gp.q + gp.r <= gp.p && 5 * gp.q >= 4 * gp.r;
  return v;
}

BondRegimeVerdict check_bond(const BondParams& bp) {
  const Rat rp = bp.r_prime, sp = bp.s_prime;
  BondRegimeVerdict v;

  if (sp < 1) {
    // Direct exact evaluation of the stated inequality, fractions and all.
    const Rat w = 2 * sp - sp * sp;
    const Rat oms = 1 - sp;
    const Rat lhs = 3 * w * w / 2 + 8 * w * rp / oms +
                    11 * rp * rp / (2 * oms * oms);
    const Rat rhs = 2 * rp / oms + 9 * w * w * w / 2 +
                    16 * w * w * rp / oms +
                    43 * w * rp * rp / (2 * oms * oms) +
                    5 * rp * rp * rp / (oms * oms * oms);
    v.b1_inequality = lhs >= rhs;
  }
  v.b1 = bp.in_theta_prime && bp.small && v.b1_inequality;
  v.b2 = sp == 0 && rp > kBondB2Threshold;
  v.b3 = rp == sp && rp >= kBondB3Threshold;
  v.member = v.b1 || v.b2 || v.b3;
  return v;
}

}  // namespace pg
