// Weight functions for the stationarity argument. Each regime of each game
// model carries a weight functional w (a linear functional on cylinder
// measures with polynomial coefficients in the model parameters) together
// with a correction functional E such that the one-step inequality
//
//   w(F mu) <= w(mu) + E(mu)
//
// holds for every translation- and reflection-invariant measure mu whenever
// the parameters lie in the regime the variant serves. On the regime, every
// term of E is non-positive and the key term is strictly negative, which is
// what forces the draw mass of a stationary measure to vanish. All margins
// here are exact rationals; pass/fail is never a float comparison.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/measure.hpp"
#include "core/params.hpp"
#include "core/rational.hpp"
#include "core/words.hpp"
#include "kernels/kernel.hpp"
#include "polynomials/polynomial.hpp"
#include "pushforward/functional.hpp"

namespace pg {

// One variant per regime with a distinct weight function: the two generalized
// regimes (condition 1 vs. conditions 2-4) and the bond regimes, where the
// second bond regime is split into three stages by the value of r'.
enum class WeightVariant {
  gen_cond1,
  gen_cond234,
  bond_B1,
  bond_B2_high,  // s' = 0, r' in [0.4564, 1]
  bond_B2_mid,   // s' = 0, r' in (0.201383, 0.4564)
  bond_B2_low,   // s' = 0, r' in (0.157175, 0.201383]
  bond_B3,       // r' = s' >= 0.10883
};

inline constexpr WeightVariant kAllWeightVariants[] = {
    WeightVariant::gen_cond1,    WeightVariant::gen_cond234,
    WeightVariant::bond_B1,      WeightVariant::bond_B2_high,
    WeightVariant::bond_B2_mid,  WeightVariant::bond_B2_low,
    WeightVariant::bond_B3,
};

const char* weight_variant_name(WeightVariant v);
WeightVariant weight_variant_from_name(const std::string& name);  // throws

bool weight_variant_is_generalized(WeightVariant v);

// Linear functional whose coefficients are exact polynomials in the model
// parameters. Instantiating it at a parameter point yields a plain
// LinearFunctional. Terms on the same word merge; zero coefficients drop.
class WeightFunction {
 public:
  WeightFunction(WeightVariant variant, std::vector<std::string> vars);

  void add(const Polynomial& coef, const Word& word);

  WeightVariant variant() const { return variant_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Word, Polynomial>& terms() const { return terms_; }
  Polynomial coefficient(const Word& word) const;  // zero polynomial if absent
  std::size_t max_word_len() const;

  LinearFunctional at(const std::vector<Rat>& point) const;

  bool operator==(const WeightFunction& o) const { return terms_ == o.terms_; }

 private:
  WeightVariant variant_;
  std::vector<std::string> vars_;
  std::map<Word, Polynomial> terms_;
};

// The weight functional of a variant, transcribed term by term from its
// closed form. Generalized variants use variables (p, q, r); bond_B1 is kept
// in the transformed coordinates (p, r) = (2s'-s'^2, r'/(1-s')), where its
// coefficients are polynomial; the remaining bond variants are univariate in
// r' (variable "rp").
WeightFunction build_weight(WeightVariant v);

// The correction functional E of the final inequality w(F mu) <= w(mu)+E(mu).
WeightFunction build_inequality_correction(WeightVariant v);

// The gen_cond234 weight assembled the other way it is displayed: as the
// cond1 weight plus increments, with the LWD increment carrying the grouped
// constant. Merging must reproduce build_weight(gen_cond234) exactly; kept
// separate so a test can certify that identity.
WeightFunction build_weight_gen_cond234_increment_form();

// Evaluation point in the variant's coefficient variables.
std::vector<Rat> weight_eval_point(WeightVariant v, const GenParams& gp);
std::vector<Rat> weight_eval_point(WeightVariant v, const BondParams& bp);

// Minimum cylinder depth a measure needs for an exact margin evaluation
// (pulled-back weight words are one letter longer than the weight's own).
// bond_B2_low keeps one level of headroom deliberately.
std::size_t required_measure_depth(WeightVariant v);

// Does the parameter point lie in the (sub-)regime this variant serves?
bool params_in_variant_regime(WeightVariant v, const GenParams& gp);
bool params_in_variant_regime(WeightVariant v, const BondParams& bp);

struct InequalityReport {
  WeightVariant variant;
  std::vector<std::pair<std::string, Rat>> params;  // model coordinates
  std::string measure_id;
  bool in_regime = false;  // reported, never asserted
  Rat lhs;                 // w(F mu)
  Rat rhs;                 // w(mu) + E(mu)
  Rat margin;              // lhs - rhs
  bool pass = false;       // margin <= 0, exact
};

// Exact margin of the final inequality at one parameter point against one
// measure. Throws std::invalid_argument when the measure is too shallow.
InequalityReport verify_final_inequality(WeightVariant v, const GenParams& gp,
                                         const CylinderMeasure& mu);
InequalityReport verify_final_inequality(WeightVariant v, const BondParams& bp,
                                         const CylinderMeasure& mu);

// Deterministic rejection samples from the sub-regime a variant serves.
std::vector<GenParams> sample_regime_points_gen(WeightVariant v,
                                                std::size_t count,
                                                std::uint64_t seed);
std::vector<BondParams> sample_regime_points_bond(WeightVariant v,
                                                  std::size_t count,
                                                  std::uint64_t seed);

// Margin sweep: `param_samples` regime points x (measure suite of size
// `measure_samples`). Reports are point-major.
struct WeightVerificationRun {
  WeightVariant variant;
  std::vector<InequalityReport> reports;
  bool all_pass = false;
};

WeightVerificationRun run_weight_verification(WeightVariant v,
                                              std::size_t param_samples,
                                              std::size_t measure_samples,
                                              std::uint64_t seed);

// Sign audit of the decisive correction coefficient of a variant, scanned on
// an exact grid over the regime box:
//   - generalized variants: the mu(DD) coefficient, strictly negative on
//     [0, 1/50]^3 intersected with the universal inequality, origin excluded;
//   - bond_B1: (1-r'-s'){(1-s')(2s'-s'^2)-r'}^2, the mu(DD) coefficient
//     scaled by (1-s') > 0, strictly positive where the regime inequality
//     holds and r'+s' > 0;
//   - bond_B2 stages: the mu(LD) coefficient, strictly negative a hair above
//     the stage's lower boundary (the boundary constants are rounded roots);
//   - bond_B3: the mu(LWD) coefficient, strictly negative on
//     [0.10883 + 1e-5, 1/2].
struct CoefficientAudit {
  WeightVariant variant;
  std::string coefficient_id;
  SignReport report;
  bool pass = false;
};

std::vector<CoefficientAudit> coefficient_sign_audit(WeightVariant v,
                                                     unsigned resolution);

// Named polynomials shared with the audits and cross-checked by tests.
Polynomial universal_margin_polynomial();        // vars (p,q,r); >= 0 is the universal inequality
Polynomial gen_dd_coefficient_expanded();        // vars (p,q,r); fully expanded mu(DD) coefficient
Polynomial bond_b1_dd_scan_polynomial();         // vars (rp,sp); (1-s')-scaled mu(DD) coefficient

// The bond_B1 weight restated directly in (r', s') coordinates (exact
// rational evaluation, denominators (1-s') cleared per term). Must agree
// with build_weight(bond_B1) evaluated at the transformed point; a test
// certifies the agreement on random points.
std::map<Word, Rat> bond_b1_restated_coefficients(const BondParams& bp);

}  // namespace pg
