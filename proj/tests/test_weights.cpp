#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "core/measure.hpp"
#include "core/params.hpp"
#include "kernels/kernel.hpp"
#include "polynomials/registry.hpp"
#include "pushforward/functional.hpp"
#include "weights/conclude.hpp"
#include "weights/weights.hpp"

using namespace pg;

namespace {

GenParams gp_cond1() {
  return make_gen_params(Rat(1, 100), Rat(1, 50), Rat(1, 100));
}

CylinderMeasure skew_chain(std::size_t depth) {
  std::array<std::array<Rat, 3>, 3> s;
  for (auto& row : s) row.fill(Rat(1));
  s[0][0] = Rat(2);
  return CylinderMeasure::reversible_chain(s, depth);
}

}  // namespace

TEST_CASE("variant names round-trip and classify the model") {
  for (WeightVariant v : kAllWeightVariants) {
    CHECK(weight_variant_from_name(weight_variant_name(v)) == v);
  }
  CHECK(weight_variant_is_generalized(WeightVariant::gen_cond1));
  CHECK(weight_variant_is_generalized(WeightVariant::gen_cond234));
  CHECK_FALSE(weight_variant_is_generalized(WeightVariant::bond_B2_low));
  CHECK_THROWS_AS(weight_variant_from_name("gen_cond5"), std::invalid_argument);
}

TEST_CASE("the condition-1 weight is the plain three-word functional") {
  const auto w = build_weight(WeightVariant::gen_cond1);
  REQUIRE(w.terms().size() == 3);
  const auto one = Polynomial::constant(w.vars(), Rat(1));
  CHECK(w.coefficient("D") == one);
  CHECK(w.coefficient("WD") == one);
  CHECK(w.coefficient("LWD") == one);
  CHECK(w.coefficient("LD").is_zero());
  CHECK(w.max_word_len() == 3);

  const auto pt = weight_eval_point(WeightVariant::gen_cond1, gp_cond1());
  const auto uniform = CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), 4);
  CHECK(w.at(pt).evaluate(uniform) == Rat(13, 27));
  const auto draw_free = CylinderMeasure::iid(Rat(1, 2), Rat(1, 2), Rat(0), 4);
  CHECK(w.at(pt).evaluate(draw_free) == Rat(0));
}

TEST_CASE("both displayed groupings of the conditions-2-4 weight agree") {
  const auto w = build_weight(WeightVariant::gen_cond234);
  CHECK(build_weight_gen_cond234_increment_form() == w);
  CHECK(w.terms().size() == 6);
  // The mu(LD) coefficient is the negated universal margin: stationarity can
  // only spend what the universal inequality guarantees.
  CHECK(w.coefficient("LD") == -universal_margin_polynomial());
  CHECK(universal_margin_polynomial().eval(
            {Rat(1, 100), Rat(1, 50), Rat(1, 100)}) == Rat(53, 2500));

  const auto p = Polynomial::var({"p", "q", "r"}, "p");
  const auto q = Polynomial::var({"p", "q", "r"}, "q");
  const auto r = Polynomial::var({"p", "q", "r"}, "r");
  CHECK(universal_margin_polynomial() ==
        Rat(2) * (p + q) + Rat(6) * r * r + Rat(3) * r * (p + Rat(2) * q) -
            Rat(4) * r - (p + q) * (p + q));
}

TEST_CASE("grouped and expanded draw-pair coefficients match") {
  const auto expanded = gen_dd_coefficient_expanded();
  CHECK(build_inequality_correction(WeightVariant::gen_cond1).coefficient("DD") ==
        expanded);
  CHECK(build_inequality_correction(WeightVariant::gen_cond234).coefficient("DD") ==
        expanded);
  // Strictly negative at a regime point, as the deduction requires.
  CHECK(expanded.eval({Rat(1, 100), Rat(1, 50), Rat(1, 100)}) < 0);
}

TEST_CASE("bond-stage coefficients reduce to their registry polynomials") {
  const auto rp = Polynomial::var({"rp"}, "rp");
  CHECK(build_weight(WeightVariant::bond_B2_high).coefficient("WD") ==
        Rat(1) - Rat(2) * rp);
  CHECK(build_inequality_correction(WeightVariant::bond_B2_low).coefficient("LD") ==
        rp * threshold_entry("b2_low_ld").poly.compose({{"x", rp}}));
  CHECK(build_inequality_correction(WeightVariant::bond_B3).coefficient("LWD") ==
        threshold_entry("b3_lwd").poly.compose({{"x", rp}}));
}

TEST_CASE("the diagonal weight keeps ten terms and degenerates cleanly at zero") {
  const auto w = build_weight(WeightVariant::bond_B3);
  CHECK(w.terms().size() == 10);
  const auto at0 = w.at({Rat(0)});
  CHECK(at0.coefficient("D") == Rat(1));
  CHECK(at0.coefficient("WD") == Rat(1));
  CHECK(at0.coefficient("LDL") == Rat(-1));
  std::size_t negatives = 0;
  for (const auto& [word, c] : at0.terms())
    if (c < 0) ++negatives;
  CHECK(negatives == 1);  // only mu(LDL) survives with a negative coefficient
}

TEST_CASE("the restated two-parameter weight matches the transformed one") {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 25; ++i) {
    const Rat rp = random_rational(61, 2 * i);
    const Rat sp = random_rational(61, 2 * i + 1);
    if (rp + sp > 1 || sp == 1) continue;
    ++checked;
    const BondParams bp = make_bond_params(rp, sp);
    const auto direct = bond_b1_restated_coefficients(bp);
    const auto transformed =
        build_weight(WeightVariant::bond_B1)
            .at(weight_eval_point(WeightVariant::bond_B1, bp));
    CHECK(direct.size() == transformed.terms().size());
    for (const auto& [word, c] : direct) CHECK(transformed.coefficient(word) == c);
  }
}

TEST_CASE("final inequalities hold at the documented spot checks") {
  const auto gen = verify_final_inequality(WeightVariant::gen_cond1, gp_cond1(),
                                           skew_chain(4));
  CHECK(gen.in_regime);
  CHECK(gen.pass);
  CHECK(gen.margin <= 0);
  CHECK(gen.margin == gen.lhs - gen.rhs);

  const auto diag = verify_final_inequality(
      WeightVariant::bond_B3, make_bond_params(Rat(3, 25), Rat(3, 25)),
      CylinderMeasure::iid(Rat(2, 5), Rat(2, 5), Rat(1, 5), 4));
  CHECK(diag.in_regime);
  CHECK(diag.pass);

  for (const auto& mu : make_measure_suite(3, 4, 5)) {
    const auto high = verify_final_inequality(
        WeightVariant::bond_B2_high, make_bond_params(Rat(1, 2), Rat(0)), mu);
    CHECK(high.in_regime);
    CHECK(high.pass);
  }
}

TEST_CASE("the margin report matches a by-hand pushforward evaluation") {
  const GenParams gp = gp_cond1();
  const auto mu = skew_chain(4);
  const auto report = verify_final_inequality(WeightVariant::gen_cond1, gp, mu);

  const auto kernel = generalized_envelope_kernel(gp);
  const auto pt = weight_eval_point(WeightVariant::gen_cond1, gp);
  const auto w = build_weight(WeightVariant::gen_cond1).at(pt);
  const auto e = build_inequality_correction(WeightVariant::gen_cond1).at(pt);
  const Rat lhs = w.evaluate(pushforward(kernel, mu));
  const Rat rhs = w.evaluate(mu) + e.evaluate(mu);
  CHECK(report.lhs == lhs);
  CHECK(report.rhs == rhs);
  CHECK(report.margin == lhs - rhs);
}

TEST_CASE("a corrupted correction coefficient flips the verdict") {
  const GenParams gp = gp_cond1();
  const auto mu = CylinderMeasure::iid(Rat(0), Rat(0), Rat(1), 4);  // all draws
  const auto kernel = generalized_envelope_kernel(gp);
  const auto pt = weight_eval_point(WeightVariant::gen_cond1, gp);
  const auto w = build_weight(WeightVariant::gen_cond1).at(pt);
  auto e = build_inequality_correction(WeightVariant::gen_cond1).at(pt);

  const Rat lhs = w.evaluate(pushforward(kernel, mu));
  const Rat margin = lhs - w.evaluate(mu) - e.evaluate(mu);
  CHECK(margin <= 0);

  const Rat bump = (margin < 0 ? Rat(-margin) : margin) + 1;
  e.add(-bump, "D");  // steal more than the inequality has to give
  const Rat corrupted = lhs - w.evaluate(mu) - e.evaluate(mu);
  CHECK(corrupted == margin + bump);  // mu(D) = 1 converts the bump directly
  CHECK(corrupted > 0);
}

TEST_CASE("shallow measures are rejected instead of silently truncated") {
  CHECK(required_measure_depth(WeightVariant::gen_cond1) == 4);
  CHECK(required_measure_depth(WeightVariant::bond_B2_low) == 6);
  const auto mu3 = CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), 3);
  CHECK_THROWS_AS(verify_final_inequality(WeightVariant::gen_cond1, gp_cond1(), mu3),
                  std::invalid_argument);
  const auto mu5 = CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), 5);
  CHECK_THROWS_AS(verify_final_inequality(WeightVariant::bond_B2_low,
                                          make_bond_params(Rat(4, 25), Rat(0)), mu5),
                  std::invalid_argument);
}

TEST_CASE("out-of-regime points are reported, not asserted") {
  // 0.3 sits in the mid stage, so the high-stage variant does not claim it.
  const auto report = verify_final_inequality(
      WeightVariant::bond_B2_high, make_bond_params(Rat(3, 10), Rat(0)),
      CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), 4));
  CHECK_FALSE(report.in_regime);

  CHECK(params_in_variant_regime(WeightVariant::bond_B2_mid,
                                 make_bond_params(Rat(3, 10), Rat(0))));
  CHECK(params_in_variant_regime(WeightVariant::bond_B2_low,
                                 make_bond_params(Rat(9, 50), Rat(0))));
  CHECK(params_in_variant_regime(WeightVariant::gen_cond1, gp_cond1()));
  CHECK_FALSE(params_in_variant_regime(WeightVariant::gen_cond234, gp_cond1()));
  CHECK(params_in_variant_regime(WeightVariant::bond_B1,
                                 make_bond_params(Rat(1, 2000), Rat(1, 50))));
  CHECK_FALSE(params_in_variant_regime(WeightVariant::bond_B1,
                                       make_bond_params(Rat(1, 100), Rat(1, 100))));
}

TEST_CASE("regime samplers stay inside their regimes and are reproducible") {
  for (WeightVariant v : {WeightVariant::gen_cond1, WeightVariant::gen_cond234}) {
    const auto pts = sample_regime_points_gen(v, 30, 7);
    REQUIRE(pts.size() == 30);
    for (const auto& gp : pts) CHECK(params_in_variant_regime(v, gp));
    const auto again = sample_regime_points_gen(v, 30, 7);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].p == again[i].p);
  }
  for (WeightVariant v :
       {WeightVariant::bond_B1, WeightVariant::bond_B2_high,
        WeightVariant::bond_B2_mid, WeightVariant::bond_B2_low,
        WeightVariant::bond_B3}) {
    const auto pts = sample_regime_points_bond(v, 30, 7);
    REQUIRE(pts.size() == 30);
    for (const auto& bp : pts) CHECK(params_in_variant_regime(v, bp));
  }
}

TEST_CASE("margin sweeps pass for every variant") {
  for (WeightVariant v : kAllWeightVariants) {
    CAPTURE(weight_variant_name(v));
    const auto run = run_weight_verification(v, 10, 5, 3);
    CHECK(run.variant == v);
    CHECK(run.all_pass);
    REQUIRE(run.reports.size() == 50);
    for (const auto& rep : run.reports) {
      CHECK(rep.pass);
      CHECK(rep.margin <= 0);
      CHECK(rep.in_regime);
    }
    // point-major: the first measure-suite block shares one parameter point
    CHECK(run.reports[0].params == run.reports[4].params);
    CHECK(run.reports[0].measure_id != run.reports[1].measure_id);
  }
}

TEST_CASE("decisive coefficients keep their claimed signs on the regime grid") {
  for (WeightVariant v : kAllWeightVariants) {
    CAPTURE(weight_variant_name(v));
    const auto audits = coefficient_sign_audit(v, 10);
    CHECK(!audits.empty());
    for (const auto& audit : audits) {
      CAPTURE(audit.coefficient_id);
      CHECK(audit.pass);
      CHECK(audit.report.points_scanned > 0);
    }
  }
}

TEST_CASE("the zero-propagation chain concludes at interior regime points") {
  const auto gen = conclude_mu_D_zero(WeightVariant::gen_cond1, gp_cond1());
  CHECK(gen.outcome == TraceOutcome::concluded);
  CHECK(!gen.steps.empty());
  for (const auto& step : gen.steps) {
    CAPTURE(step.claim);
    CHECK(step.sign_ok);
  }

  const auto stage = conclude_mu_D_zero(WeightVariant::bond_B2_low,
                                        make_bond_params(Rat(1, 5), Rat(0)));
  CHECK(stage.outcome == TraceOutcome::concluded);

  const auto diag = conclude_mu_D_zero(WeightVariant::bond_B3,
                                       make_bond_params(Rat(3, 25), Rat(3, 25)));
  CHECK(diag.outcome == TraceOutcome::concluded);
}

TEST_CASE("degenerate slices delegate and bad points abort with a diagnosis") {
  const auto flat = conclude_mu_D_zero(
      WeightVariant::gen_cond1,
      make_gen_params(Rat(1, 100), Rat(1, 50), Rat(0)));
  CHECK(flat.outcome == TraceOutcome::delegated);
  CHECK(!flat.detail.empty());

  const auto no_trap = conclude_mu_D_zero(WeightVariant::bond_B1,
                                          make_bond_params(Rat(0), Rat(1, 100)));
  CHECK(no_trap.outcome == TraceOutcome::delegated);

  const auto corner = conclude_mu_D_zero(WeightVariant::bond_B3,
                                         make_bond_params(Rat(1, 2), Rat(1, 2)));
  CHECK(corner.outcome == TraceOutcome::aborted);
  CHECK(!corner.detail.empty());

  const auto outside = conclude_mu_D_zero(
      WeightVariant::gen_cond1,
      make_gen_params(Rat(1, 10), Rat(1, 10), Rat(1, 10)));
  CHECK(outside.outcome == TraceOutcome::aborted);

  CHECK(std::string(trace_outcome_name(TraceOutcome::concluded)) == "concluded");
  CHECK(std::string(trace_outcome_name(TraceOutcome::delegated)) == "delegated");
  CHECK(std::string(trace_outcome_name(TraceOutcome::aborted)) == "aborted");
}
