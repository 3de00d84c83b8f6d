// Linear functionals on cylinder measures, exact pushforward of a measure
// under an envelope kernel, and the adjoint pullback of a functional. The
// pullback is what makes the verification loops cheap: a weight functional is
// pulled back once per parameter point and then evaluated against many
// measures by plain table lookups.
#pragma once

#include <map>
#include <string>

#include "core/measure.hpp"
#include "kernels/kernel.hpp"

namespace pg {

// sum_w coef(w) * mu(w) over finitely many words; zero coefficients are
// dropped eagerly so terms() enumerates the support only.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  LinearFunctional(std::initializer_list<std::pair<Rat, Word>> terms);

  void add(const Rat& coef, const Word& word);
  void add_scaled(const Rat& scale, const LinearFunctional& other);

  const std::map<Word, Rat>& terms() const { return terms_; }
  Rat coefficient(const Word& word) const;  // 0 when absent
  std::size_t max_word_len() const;

  Rat evaluate(const CylinderMeasure& mu) const;

 private:
  std::map<Word, Rat> terms_;
};

// P[C | D] under one synchronous kernel step: the product over positions j of
// phi(D_j, D_{j+1} -> C_j). Requires |D| = |C| + 1.
Rat conditional_prob(const UpdateKernel& kernel, const Word& out_word,
                     const Word& in_word);

// One synchronous step of the PCA on a cylinder measure of depth L, yielding
// the depth L-1 measure (F mu)(C) = sum_{|D|=|C|+1} P[C|D] mu(D).
// Translation/reflection invariance flags carry over (the kernels are
// translation-invariant and symmetric). Requires L >= 2.
CylinderMeasure pushforward(const UpdateKernel& kernel,
                            const CylinderMeasure& mu);

// Adjoint pullback: the functional g with g(mu) = f(F mu) for every measure
// mu, namely g = sum_C coef(C) sum_{|D|=|C|+1} P[C|D] mu(D).
LinearFunctional pullback(const UpdateKernel& kernel,
                          const LinearFunctional& f);

}  // namespace pg
