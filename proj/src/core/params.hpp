// Parameter spaces for the two game models.
//
// Generalized game: vertex trap probability p, vertex target probability q,
// edge trap probability r, with Theta = {0<=p,q,r<=1, p+q<=1, p+q+r>0}.
// Bond game: edge trap probability r', edge target probability s', with
// Theta' = {0<=r',s'<=1, 0<r'+s'<=1}.
#pragma once

#include "core/rational.hpp"

namespace pg {

// Default smallness radius: the theorems only need the parameters "sufficiently
// small", and 1/50 is certified to be enough.
inline const Rat kDefaultSmallness(1, 50);

struct GenParams {
  Rat p, q, r;
  bool in_theta = false;    // p+q+r > 0 (all other constraints are hard errors)
  bool small = false;       // max(p,q,r) <= smallness threshold

  Rat one_minus_pq() const { return Rat(1) - p - q; }
};

struct BondParams {
  Rat r_prime, s_prime;
  bool in_theta_prime = false;  // r'+s' > 0
  bool small = false;

  bool on_diagonal() const { return r_prime == s_prime; }
};

// Validate and construct. Values outside [0,1] or with p+q>1 (resp. r'+s'>1)
// throw std::domain_error; the all-zero corner is accepted but flagged as
// outside Theta (draw is then the only possible outcome).
GenParams make_gen_params(const Rat& p, const Rat& q, const Rat& r,
                          const Rat& smallness = kDefaultSmallness);
BondParams make_bond_params(const Rat& r_prime, const Rat& s_prime,
                            const Rat& smallness = kDefaultSmallness);

// The bond game embeds into the generalized family via
// (p, q, r) = (2s'-s'^2, 0, r'/(1-s')); requires s' < 1.
GenParams bond_to_generalized(const BondParams& b);

}  // namespace pg
