#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "core/measure.hpp"
#include "core/params.hpp"
#include "kernels/kernel.hpp"
#include "pushforward/functional.hpp"
#include "pushforward/lemmas.hpp"

using namespace pg;

namespace {

UpdateKernel gen_kernel(const Rat& p, const Rat& q, const Rat& r) {
  return generalized_envelope_kernel(make_gen_params(p, q, r));
}

CylinderMeasure uniform(std::size_t depth) {
  return CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), depth);
}

}  // namespace

TEST_CASE("linear functionals evaluate term by term") {
  LinearFunctional f{{Rat(2), "WD"}, {Rat(-1), "L"}};
  f.add(Rat(1, 2), "WD");
  CHECK(f.coefficient("WD") == Rat(5, 2));
  CHECK(f.coefficient("D") == Rat(0));
  CHECK(f.max_word_len() == 2);
  const auto mu = uniform(2);
  CHECK(f.evaluate(mu) == Rat(5, 2) * Rat(1, 9) - Rat(1, 3));

  LinearFunctional g;
  g.add_scaled(Rat(-2), f);
  CHECK(g.coefficient("WD") == Rat(-5));
  f.add(Rat(-5, 2), "WD");
  CHECK(f.coefficient("WD") == Rat(0));
  CHECK(f.terms().count("WD") == 0);  // zero coefficients are dropped
}

TEST_CASE("one-step conditional probabilities factor over positions") {
  const auto k = gen_kernel(Rat(1, 10), Rat(1, 5), Rat(3, 10));
  // P[D | WD] = (1-p-q)(1-r)
  CHECK(conditional_prob(k, "D", "WD") == Rat(7, 10) * Rat(7, 10));

  const auto zero = gen_kernel(Rat(0), Rat(0), Rat(0));
  CHECK(conditional_prob(zero, "W", "WW") == Rat(0));
  CHECK(conditional_prob(zero, "L", "WW") == Rat(1));

  const auto k2 = gen_kernel(Rat(1, 10), Rat(0), Rat(1, 10));
  CHECK(conditional_prob(k2, "LD", "WWD") == Rat(729, 1000));

  CHECK_THROWS_AS(conditional_prob(k, "WW", "WWW WRONG"), std::invalid_argument);
  CHECK_THROWS_AS(conditional_prob(k, "WW", "WW"), std::invalid_argument);
  CHECK_THROWS_AS(conditional_prob(k, "W", "WWW"), std::invalid_argument);
}

TEST_CASE("pushforward of the uniform measure under the zero kernel") {
  const auto next = pushforward(gen_kernel(Rat(0), Rat(0), Rat(0)), uniform(3));
  CHECK(next.max_len() == 2);
  CHECK(next.prob("D") == Rat(1, 3));
  CHECK(next.prob("W") + next.prob("L") + next.prob("D") == Rat(1));
  CHECK(next.check().ok());
}

TEST_CASE("fully trapped bond edges make every site losing") {
  const auto k = bond_envelope_kernel(make_bond_params(Rat(1), Rat(0)));
  const auto next = pushforward(k, uniform(3));
  CHECK(next.prob("L") == Rat(1));
  CHECK(next.prob("W") == Rat(0));
  CHECK(next.prob("D") == Rat(0));
}

TEST_CASE("pushforward preserves invariance and total mass") {
  const auto k = gen_kernel(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  std::array<std::array<Rat, 3>, 3> s;
  for (auto& row : s) row.fill(Rat(1));
  s[0][1] = s[1][0] = Rat(3);
  const auto mu = CylinderMeasure::reversible_chain(s, 4);
  const auto next = pushforward(k, mu);
  CHECK(next.max_len() == 3);
  CHECK(next.translation_invariant());
  CHECK(next.reflection_invariant());
  CHECK(next.check().ok());

  CHECK_THROWS_AS(pushforward(k, uniform(1)), std::invalid_argument);
}

TEST_CASE("draw mass cannot appear from draw-free input") {
  const auto k = gen_kernel(Rat(1, 10), Rat(1, 5), Rat(3, 10));
  const auto mu = CylinderMeasure::iid(Rat(1, 2), Rat(1, 2), Rat(0), 3);
  const auto next = pushforward(k, mu);
  CHECK(next.prob("D") == Rat(0));
  CHECK(next.prob("DD") == Rat(0));
}

TEST_CASE("pushforward_prob agrees with the pushforward measure") {
  const auto k = gen_kernel(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  const auto mu = uniform(4);
  const auto next = pushforward(k, mu);
  for (const auto& w : all_words(2)) CHECK(pushforward_prob(k, w, mu) == next.prob(w));
  for (const auto& w : all_words(3)) CHECK(pushforward_prob(k, w, mu) == next.prob(w));
}

TEST_CASE("the adjoint pullback commutes with evaluation") {
  const auto k = gen_kernel(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  LinearFunctional f{{Rat(1), "LWD"}, {Rat(-3), "D"}, {Rat(1, 2), "WW"}};
  const auto g = pullback(k, f);
  CHECK(g.max_word_len() == 4);
  for (const auto& mu : make_measure_suite(6, 4, 99))
    CHECK(g.evaluate(mu) == f.evaluate(pushforward(k, mu)));
}

TEST_CASE("closed forms for one-step draw masses hold exactly") {
  const GenParams gp = make_gen_params(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  std::array<std::array<Rat, 3>, 3> s;
  for (auto& row : s) row.fill(Rat(1));
  s[2][2] = Rat(5);
  const auto chain = CylinderMeasure::reversible_chain(s, 4, "chain-d-heavy");
  for (const auto& check : verify_identity_lemmas(gp, chain)) {
    CAPTURE(check.lemma_id);
    CHECK(check.residual_form);
    CHECK(check.value == Rat(0));
    CHECK(check.pass);
  }
  const GenParams zero = make_gen_params(Rat(0), Rat(0), Rat(0));
  for (const auto& check : verify_identity_lemmas(zero, uniform(4))) {
    CHECK(check.value == Rat(0));
    CHECK(check.pass);
  }
  CHECK(verify_identity_lemmas(gp, uniform(4)).size() == 2);
  CHECK_THROWS_AS(verify_identity_lemmas(gp, uniform(3)), std::invalid_argument);
}

TEST_CASE("a corrupted closed form leaves a nonzero residual") {
  const GenParams gp = make_gen_params(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  const auto k = generalized_envelope_kernel(gp);
  const auto mu = uniform(4);
  auto form = pushforward_D_closed_form(gp);
  CHECK(identity_residual(k, "D", form, mu) == Rat(0));
  form.add(Rat(1, 1000), "WW");  // sabotage one coefficient
  CHECK(identity_residual(k, "D", form, mu) != Rat(0));

  auto wd = pushforward_WD_closed_form(gp);
  CHECK(identity_residual(k, "WD", wd, mu) == Rat(0));
  wd.add(Rat(-1, 1000), "D");
  CHECK(identity_residual(k, "WD", wd, mu) != Rat(0));
}

TEST_CASE("case bounds for the three-letter pushforward hold on small points") {
  const auto mu = CylinderMeasure::iid(Rat(2, 5), Rat(2, 5), Rat(1, 5), 5);
  std::array<std::array<Rat, 3>, 3> s;
  for (auto& row : s) row.fill(Rat(1));
  s[0][0] = Rat(2);
  const auto chain = CylinderMeasure::reversible_chain(s, 5);

  const struct {
    GenParams gp;
    const CylinderMeasure* mu;
  } cases[] = {
      {make_gen_params(Rat(1, 100), Rat(1, 100), Rat(1, 100)), &mu},
      {make_gen_params(Rat(1, 50), Rat(1, 50), Rat(1, 50)), &chain},
      {make_gen_params(Rat(1, 100), Rat(0), Rat(1, 100)), &mu},
  };
  for (const auto& c : cases) {
    const auto rows = verify_bound_lemmas(c.gp, *c.mu);
    CHECK(rows.size() == 14);
    std::size_t identities = 0;
    for (const auto& row : rows) {
      CAPTURE(row.lemma_id);
      CHECK(row.pass);
      if (row.residual_form) {
        ++identities;
        CHECK(row.value == Rat(0));
      } else {
        CHECK(row.value <= Rat(0));
      }
    }
    CHECK(identities == 1);  // the case partition must resum exactly
  }
}

TEST_CASE("bound checks reject points outside the smallness box by default") {
  const GenParams big = make_gen_params(Rat(1, 10), Rat(1, 10), Rat(1, 10));
  const auto mu = uniform(5);
  CHECK_THROWS_AS(verify_bound_lemmas(big, mu), std::domain_error);
  const auto rows = verify_bound_lemmas(big, mu, true);
  CHECK(rows.size() == 14);

  CHECK_THROWS_AS(verify_bound_lemmas(
                      make_gen_params(Rat(1, 100), Rat(1, 100), Rat(1, 100)),
                      uniform(4)),
                  std::invalid_argument);  // depth 5 required
}
