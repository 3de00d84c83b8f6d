#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "core/measure.hpp"
#include "core/params.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"
#include "core/words.hpp"

using namespace pg;

TEST_CASE("parse_rational accepts fractions, decimals, and exponents") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("0.25") == Rat(1, 4));
  CHECK(parse_rational("1e-3") == Rat(1, 1000));
  CHECK(parse_rational("2.5e-2") == Rat(1, 40));
  CHECK(parse_rational("+0.5") == Rat(1, 2));
  CHECK(parse_rational("10/4") == Rat(5, 2));  // canonicalized
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("to_decimal rounds half away from zero at the requested precision") {
  CHECK(to_decimal(Rat(1, 4), 12) == "0.250000000000");
  CHECK(to_decimal(Rat(1, 3), 3) == "0.333");
  CHECK(to_decimal(Rat(2, 3), 3) == "0.667");
  CHECK(to_decimal(Rat(3, 20), 1) == "0.2");   // tie goes away from zero
  CHECK(to_decimal(Rat(-3, 20), 1) == "-0.2");
  CHECK(to_decimal(Rat(0), 4) == "0.000");
  CHECK(to_decimal(Rat(9999, 10000), 3) == "1.00");  // carry across the point
  CHECK(to_decimal(Rat(53, 2500), 4) == "0.02120");
  CHECK_THROWS_AS(to_decimal(Rat(1), 0), std::invalid_argument);
}

TEST_CASE("to_fraction prints canonical integer or num/den form") {
  CHECK(to_fraction(Rat(5, 2)) == "5/2");
  CHECK(to_fraction(parse_rational("4/2")) == "2");
  CHECK(to_fraction(Rat(-1, 3)) == "-1/3");
  CHECK(to_fraction(Rat(0)) == "0");
}

TEST_CASE("rat_pow is exact iterated multiplication") {
  CHECK(rat_pow(Rat(2, 3), 0) == Rat(1));
  CHECK(rat_pow(Rat(2, 3), 1) == Rat(2, 3));
  CHECK(rat_pow(Rat(2, 3), 5) == Rat(32, 243));
  CHECK(rat_pow(Rat(0), 0) == Rat(1));
  CHECK(rat_pow(Rat(-1, 2), 3) == Rat(-1, 8));
}

TEST_CASE("random_rational is deterministic and lands in [0,1]") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Rat x = random_rational(42, i);
    CHECK(x >= 0);
    CHECK(x <= 1);
    CHECK(x == random_rational(42, i));
  }
  CHECK(random_rational(1, 0) != random_rational(2, 0));
}

TEST_CASE("words round-trip through their base-3 index") {
  CHECK(sym_char(Sym::W) == 'W');
  CHECK(sym_from_char('D') == Sym::D);
  CHECK_THROWS_AS(sym_from_char('X'), std::invalid_argument);

  CHECK(is_valid_word("WLD"));
  CHECK_FALSE(is_valid_word(""));
  CHECK_FALSE(is_valid_word("WXD"));

  const auto words = all_words(3);
  REQUIRE(words.size() == 27);
  CHECK(words.front() == "WWW");
  CHECK(words.back() == "DDD");
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(word_index(words[i]) == i);
    CHECK(word_from_index(i, 3) == words[i]);
  }
}

TEST_CASE("reflection reverses words and is an involution") {
  CHECK(reflect("LWD") == "DWL");
  CHECK(reflect("D") == "D");
  CHECK(reflect("WDL") == "LDW");
  for (const auto& w : all_words(4)) CHECK(reflect(reflect(w)) == w);
}

TEST_CASE("generalized parameters validate the simplex and smallness box") {
  const GenParams gp = make_gen_params(Rat(1, 100), Rat(1, 50), Rat(1, 100));
  CHECK(gp.in_theta);
  CHECK(gp.small);
  CHECK(gp.one_minus_pq() == Rat(97, 100));

  const GenParams all_zero = make_gen_params(Rat(0), Rat(0), Rat(0));
  CHECK_FALSE(all_zero.in_theta);  // p + q + r = 0 is excluded from Theta
  CHECK(all_zero.small);

  const GenParams big = make_gen_params(Rat(1, 2), Rat(1, 4), Rat(1, 4));
  CHECK(big.in_theta);
  CHECK_FALSE(big.small);

  CHECK_THROWS_AS(make_gen_params(Rat(3, 5), Rat(3, 5), Rat(1, 10)),
                  std::domain_error);  // p + q > 1
  CHECK_THROWS_AS(make_gen_params(Rat(-1, 10), Rat(0), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(make_gen_params(Rat(0), Rat(0), Rat(2)), std::domain_error);
}

TEST_CASE("bond parameters validate the unit square minus the origin") {
  const BondParams bp = make_bond_params(Rat(1, 5), Rat(0));
  CHECK(bp.in_theta_prime);
  CHECK_FALSE(bp.on_diagonal());

  const BondParams zero = make_bond_params(Rat(0), Rat(0));
  CHECK_FALSE(zero.in_theta_prime);

  const BondParams diag = make_bond_params(Rat(11, 100), Rat(11, 100));
  CHECK(diag.on_diagonal());
  CHECK(diag.in_theta_prime);

  CHECK_THROWS_AS(make_bond_params(Rat(6, 5), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(make_bond_params(Rat(0), Rat(-1, 2)), std::domain_error);
}

TEST_CASE("bond parameters map into the generalized simplex") {
  // (r', s') -> (2s' - s'^2, 0, r' / (1 - s'))
  const GenParams g = bond_to_generalized(make_bond_params(Rat(1, 10), Rat(1, 10)));
  CHECK(g.p == Rat(19, 100));
  CHECK(g.q == Rat(0));
  CHECK(g.r == Rat(1, 9));
  CHECK(g.in_theta);

  const GenParams no_target = bond_to_generalized(make_bond_params(Rat(3, 10), Rat(0)));
  CHECK(no_target.p == Rat(0));
  CHECK(no_target.q == Rat(0));
  CHECK(no_target.r == Rat(3, 10));

  const GenParams no_trap = bond_to_generalized(make_bond_params(Rat(0), Rat(1, 5)));
  CHECK(no_trap.p == Rat(9, 25));
  CHECK(no_trap.r == Rat(0));

  CHECK_THROWS_AS(bond_to_generalized(make_bond_params(Rat(0), Rat(1))),
                  std::domain_error);  // s' = 1 has no generalized image
}

TEST_CASE("iid measures assign product probabilities to cylinders") {
  const auto uniform = CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), 2);
  for (const auto& w : all_words(2)) CHECK(uniform.prob(w) == Rat(1, 9));
  CHECK(uniform.check().ok());

  const auto all_w = CylinderMeasure::iid(Rat(1), Rat(0), Rat(0), 3);
  CHECK(all_w.prob("WWW") == Rat(1));
  CHECK(all_w.prob("WLW") == Rat(0));

  const auto skew = CylinderMeasure::iid(Rat(1, 2), Rat(3, 10), Rat(1, 5), 2);
  CHECK(skew.prob("WD") == Rat(1, 10));
  CHECK(skew.check().ok());

  CHECK_THROWS_AS(CylinderMeasure::iid(Rat(1, 2), Rat(1, 2), Rat(1, 2), 2),
                  std::domain_error);  // weights must sum to one
}

TEST_CASE("reversible chains are translation and reflection invariant") {
  // All-ones symmetric scores give the uniform iid measure.
  std::array<std::array<Rat, 3>, 3> ones;
  for (auto& row : ones) row.fill(Rat(1));
  const auto flat = CylinderMeasure::reversible_chain(ones, 2);
  CHECK(flat.prob("LD") == Rat(1, 9));
  CHECK(flat.check().ok());

  auto scores = ones;
  scores[0][0] = Rat(2);  // boost W->W
  const auto chain = CylinderMeasure::reversible_chain(scores, 3);
  CHECK(chain.check().ok());
  CHECK(chain.prob("WD") == chain.prob("DW"));
  CHECK(chain.prob("WWL") == chain.prob("LWW"));

  const auto refl = chain.reflected();
  for (const auto& w : all_words(3)) CHECK(refl.prob(w) == chain.prob(w));
}

TEST_CASE("consistency checks flag corrupted measures") {
  auto mu = CylinderMeasure::iid(Rat(1, 2), Rat(1, 4), Rat(1, 4), 2);
  REQUIRE(mu.check().ok());
  mu.set_prob("WW", Rat(1, 3));
  const auto report = mu.check();
  CHECK_FALSE(report.ok());
  CHECK(report.right_residual != Rat(0));
}

TEST_CASE("the measure suite is seeded, consistent, and fully supported") {
  const auto suite = make_measure_suite(6, 5, 2024);
  REQUIRE(suite.size() == 6);
  for (const auto& w : all_words(2)) CHECK(suite[0].prob(w) == Rat(1, 9));
  std::set<std::string> ids;
  for (const auto& mu : suite) {
    CHECK(mu.max_len() == 5);
    CHECK(mu.check().ok());
    for (Sym s : {Sym::W, Sym::L, Sym::D}) CHECK(mu.prob(Word(1, sym_char(s))) > 0);
    ids.insert(mu.id());
  }
  CHECK(ids.size() == 6);  // distinct labels for reporting

  const auto again = make_measure_suite(6, 5, 2024);
  for (std::size_t i = 0; i < suite.size(); ++i)
    for (const auto& w : all_words(3)) CHECK(again[i].prob(w) == suite[i].prob(w));
}

TEST_CASE("counter randomness is a pure function of its coordinates") {
  const SeedSpec seed{7, 3};
  CHECK(counter_hash(seed, LabelKind::vertex, 10, 20) ==
        counter_hash(seed, LabelKind::vertex, 10, 20));
  CHECK(counter_hash(seed, LabelKind::vertex, 10, 20) !=
        counter_hash(seed, LabelKind::edge_right, 10, 20));
  CHECK(counter_hash(seed, LabelKind::vertex, 10, 20) !=
        counter_hash(SeedSpec{7, 4}, LabelKind::vertex, 10, 20));
  for (std::uint64_t x = 0; x < 50; ++x) {
    const double u = counter_u01(seed, LabelKind::pca_cell, x, 0);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
