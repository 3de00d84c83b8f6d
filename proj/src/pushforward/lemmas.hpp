// Mechanical verification of the pushforward lemmas for the generalized
// envelope PCA: the exact closed forms for G mu(D) and G mu(WD), the
// nine-part case decomposition of G mu(LWD) with its termwise upper bounds,
// and the four pushforward lower-bound inequalities. All checks are exact
// rational comparisons between an enumeration oracle and the stated forms.
#pragma once

#include <string>
#include <vector>

#include "pushforward/functional.hpp"

namespace pg {

struct LemmaCheck {
  std::string lemma_id;
  std::string measure_id;
  Rat value;                // residual (identity rows) or margin (bound rows)
  bool residual_form;       // true: pass <=> value == 0; false: value <= 0
  bool pass;
};

// Exact mass of the output cylinder `word` under one kernel step from mu.
Rat pushforward_prob(const UpdateKernel& kernel, const Word& word,
                     const CylinderMeasure& mu);

// Closed forms of G mu(D) and G mu(WD) as functionals of mu; valid for
// translation- and reflection-invariant mu.
LinearFunctional pushforward_D_closed_form(const GenParams& gp);
LinearFunctional pushforward_WD_closed_form(const GenParams& gp);

// Enumeration value of the output cylinder minus the closed form on mu;
// exposed so tests can run sign-flip negative controls on modified forms.
Rat identity_residual(const UpdateKernel& kernel, const Word& out_word,
                      const LinearFunctional& closed_form,
                      const CylinderMeasure& mu);

// Residuals of the two identities; mu must be invariant with depth >= 4.
std::vector<LemmaCheck> verify_identity_lemmas(const GenParams& gp,
                                               const CylinderMeasure& mu);

// The nine case sums A_1..A_9 of G mu(LWD) against their stated bounds, the
// four lower-bound inequalities, and the partition identity sum A_i =
// G mu(LWD). The bounds are only claimed for small parameters, so points
// outside the smallness box are rejected unless explicitly allowed (rows are
// then still computed and reported, just not guaranteed).
// mu must be invariant with depth >= 5.
std::vector<LemmaCheck> verify_bound_lemmas(const GenParams& gp,
                                            const CylinderMeasure& mu,
                                            bool allow_outside_smallness = false);

}  // namespace pg
