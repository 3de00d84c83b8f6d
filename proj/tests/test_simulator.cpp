#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "core/params.hpp"
#include "core/rng.hpp"
#include "kernels/kernel.hpp"
#include "simulator/board.hpp"
#include "simulator/mc.hpp"
#include "simulator/pca.hpp"

using namespace pg;

namespace {

const std::vector<Sym> kSyms{Sym::W, Sym::L, Sym::D};

GenParams gen_small() {
  return make_gen_params(Rat(1, 100), Rat(1, 50), Rat(1, 100));
}

// |empirical - expected| <= sigmas * sqrt(p(1-p)n) for a binomial count.
bool within_binomial(std::uint64_t count, std::size_t n, double p, double sigmas) {
  const double mean = p * static_cast<double>(n);
  const double sd = std::sqrt(p * (1 - p) * static_cast<double>(n));
  return std::abs(static_cast<double>(count) - mean) <= sigmas * sd + 1e-9;
}

}  // namespace

TEST_CASE("move outcomes follow the per-edge case tables") {
  CHECK(move_outcome_generalized(EdgeLabel::trap, Sym::W) == MoveOutcome::lose);
  CHECK(move_outcome_generalized(EdgeLabel::open, Sym::L) == MoveOutcome::win);
  CHECK(move_outcome_generalized(EdgeLabel::open, Sym::D) == MoveOutcome::draw);
  CHECK(move_outcome_generalized(EdgeLabel::open, Sym::W) == MoveOutcome::lose);

  CHECK(move_outcome_bond(EdgeLabel::target, Sym::W) == MoveOutcome::win);
  CHECK(move_outcome_bond(EdgeLabel::trap, Sym::L) == MoveOutcome::lose);
  CHECK(move_outcome_bond(EdgeLabel::open, Sym::D) == MoveOutcome::draw);

  CHECK(best_of_two(MoveOutcome::lose, MoveOutcome::win) == Sym::W);
  CHECK(best_of_two(MoveOutcome::draw, MoveOutcome::lose) == Sym::D);
  CHECK(best_of_two(MoveOutcome::lose, MoveOutcome::lose) == Sym::L);
  CHECK(best_of_two(MoveOutcome::win, MoveOutcome::draw) == Sym::W);
}

TEST_CASE("single-cell updates decide traps, targets, and forced moves") {
  // Open vertex, both edges open, both neighbors winning: every move hands
  // the opponent a win.
  CHECK(update_cell_generalized(VertexLabel::open, EdgeLabel::open,
                                EdgeLabel::open, Sym::W, Sym::W) == Sym::L);
  // A trap ends the game against the opponent who pushed the token there; a
  // target ends it in the opponent's favor. Neighbor states are irrelevant.
  CHECK(update_cell_generalized(VertexLabel::trap, EdgeLabel::open,
                                EdgeLabel::open, Sym::L, Sym::L) == Sym::W);
  CHECK(update_cell_generalized(VertexLabel::target, EdgeLabel::trap,
                                EdgeLabel::trap, Sym::W, Sym::W) == Sym::L);
  CHECK(update_cell_generalized(VertexLabel::open, EdgeLabel::trap,
                                EdgeLabel::trap, Sym::L, Sym::D) == Sym::L);
  CHECK(update_cell_generalized(VertexLabel::open, EdgeLabel::open,
                                EdgeLabel::trap, Sym::D, Sym::W) == Sym::D);

  CHECK(update_cell_bond(EdgeLabel::target, EdgeLabel::trap, Sym::W, Sym::W) ==
        Sym::W);
  CHECK(update_cell_bond(EdgeLabel::trap, EdgeLabel::trap, Sym::L, Sym::D) ==
        Sym::L);
  CHECK(update_cell_bond(EdgeLabel::open, EdgeLabel::open, Sym::D, Sym::W) ==
        Sym::D);
  CHECK(update_cell_bond(EdgeLabel::open, EdgeLabel::trap, Sym::L, Sym::W) ==
        Sym::W);
}

TEST_CASE("exact label enumeration reproduces every kernel row") {
  const GenParams gp = make_gen_params(Rat(1, 10), Rat(1, 5), Rat(3, 10));
  const auto gk = generalized_envelope_kernel(gp);
  for (Sym a0 : kSyms)
    for (Sym a1 : kSyms)
      CHECK(label_update_exact_row(gp, a0, a1) == gk.row(a0, a1));

  const BondParams bp = make_bond_params(Rat(1, 10), Rat(1, 10));
  const auto bk = bond_envelope_kernel(bp);
  for (Sym a0 : kSyms)
    for (Sym a1 : kSyms)
      CHECK(label_update_exact_row(bp, a0, a1) == bk.row(a0, a1));

  const GenParams zero = make_gen_params(Rat(0), Rat(0), Rat(0));
  const auto zk = generalized_envelope_kernel(zero);
  for (Sym a0 : kSyms)
    for (Sym a1 : kSyms)
      CHECK(label_update_exact_row(zero, a0, a1) == zk.row(a0, a1));
}

TEST_CASE("degenerate parameters pin every board label") {
  const Board traps = generate_board(make_gen_params(Rat(1), Rat(0), Rat(0)),
                                     triangle_geometry(8), SeedSpec{5, 0});
  for (std::uint64_t x = 0; x < 20; ++x)
    for (std::uint64_t y = 0; y < 20; ++y)
      CHECK(traps.vertex_label(x, y) == VertexLabel::trap);

  const Board targets = generate_board(make_bond_params(Rat(0), Rat(1)),
                                       triangle_geometry(8), SeedSpec{5, 0});
  for (std::uint64_t x = 0; x < 20; ++x)
    for (std::uint64_t y = 0; y < 20; ++y) {
      CHECK(targets.edge_label_right(x, y) == EdgeLabel::target);
      CHECK(targets.edge_label_up(x, y) == EdgeLabel::target);
    }

  CHECK_THROWS_AS(traps.bond_params(), std::logic_error);
  CHECK_THROWS_AS(targets.gen_params(), std::logic_error);
  CHECK_THROWS_AS(targets.vertex_label(0, 0), std::logic_error);
}

TEST_CASE("board labels are deterministic with the advertised frequencies") {
  const Board b = generate_board(gen_small(), triangle_geometry(100), SeedSpec{42, 3});
  std::uint64_t traps = 0, targets = 0;
  const std::size_t n = 100 * 100;
  for (std::uint64_t x = 0; x < 100; ++x)
    for (std::uint64_t y = 0; y < 100; ++y) {
      const auto label = b.vertex_label(x, y);
      traps += label == VertexLabel::trap;
      targets += label == VertexLabel::target;
      CHECK(b.vertex_label(x, y) == label);  // pure function of the site
    }
  CHECK(within_binomial(traps, n, 0.01, 4.0));
  CHECK(within_binomial(targets, n, 0.02, 4.0));
}

TEST_CASE("geometries validate their sizes") {
  CHECK_THROWS_AS(triangle_geometry(0), std::invalid_argument);
  CHECK_THROWS_AS(ring_geometry(1, 10), std::invalid_argument);
  CHECK(ring_geometry(2, 10).size == 2);
  CHECK(triangle_geometry(4).size == 4);
}

TEST_CASE("backward induction fills all diagonals and matches the apex path") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Board b = generate_board(gen_small(), triangle_geometry(12),
                                   SeedSpec{seed, 0});
    const auto full = solve_board(b);
    CHECK(full.horizon == 12);
    REQUIRE(full.diagonals.size() == 13);
    for (std::size_t k = 0; k < full.diagonals.size(); ++k)
      CHECK(full.diagonals[k].size() == k + 1);
    for (Sym s : full.diagonals.back()) CHECK(s == Sym::D);  // envelope boundary
    CHECK(solve_apex(b) == full.apex());
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Board b = generate_board(make_bond_params(Rat(1, 10), Rat(1, 10)),
                                   triangle_geometry(12), SeedSpec{seed, 1});
    CHECK(solve_apex(b) == solve_board(b).apex());
  }
  const Board ring = generate_board(gen_small(), ring_geometry(8, 3),
                                    SeedSpec{1, 0});
  CHECK_THROWS_AS(solve_board(ring), std::invalid_argument);
  CHECK_THROWS_AS(solve_apex(ring), std::invalid_argument);
}

TEST_CASE("solver and label-driven evolution agree on the shared label stream") {
  CHECK(duality_check(gen_small(), 64, 7));
  CHECK(duality_check(make_bond_params(Rat(1, 10), Rat(1, 10)), 64, 7));
  CHECK(duality_check(make_gen_params(Rat(1), Rat(0), Rat(0)), 16, 1));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(duality_check(gen_small(), 24, seed));
}

TEST_CASE("empirical label updates track the kernel rows") {
  const std::size_t samples = 100000;
  const GenParams gp = make_gen_params(Rat(1, 10), Rat(1, 5), Rat(3, 10));
  const Board gproto = generate_board(gp, triangle_geometry(4), SeedSpec{11, 0});
  const auto gk = generalized_envelope_kernel(gp);
  for (Sym a0 : kSyms)
    for (Sym a1 : kSyms) {
      const auto counts = label_update_counts(gproto, a0, a1, samples);
      const auto row = gk.row_as_double(a0, a1);
      for (int b = 0; b < 3; ++b) {
        CAPTURE(static_cast<int>(a0));
        CAPTURE(static_cast<int>(a1));
        CHECK(within_binomial(counts[b], samples, row[b], 5.0));
      }
    }
  const BondParams bp = make_bond_params(Rat(1, 10), Rat(1, 10));
  const Board bproto = generate_board(bp, triangle_geometry(4), SeedSpec{12, 0});
  const auto bk = bond_envelope_kernel(bp);
  for (Sym a0 : kSyms)
    for (Sym a1 : kSyms) {
      const auto counts = label_update_counts(bproto, a0, a1, samples);
      const auto row = bk.row_as_double(a0, a1);
      for (int b = 0; b < 3; ++b)
        CHECK(within_binomial(counts[b], samples, row[b], 5.0));
    }
}

TEST_CASE("degenerate games have exact draw probabilities") {
  const auto all_draw = estimate_draw_probability(make_bond_params(Rat(0), Rat(0)),
                                                  16, 200, 1);
  CHECK(all_draw.point_estimate == 1.0);
  CHECK(all_draw.draw_count == 200);
  CHECK(all_draw.wilson_hi == 1.0);
  CHECK(all_draw.wilson_lo <= 1.0);

  const auto no_draw = estimate_draw_probability(make_bond_params(Rat(1), Rat(0)),
                                                 16, 200, 1);
  CHECK(no_draw.point_estimate == 0.0);
  CHECK(no_draw.wilson_lo == 0.0);

  const auto trapped = estimate_draw_probability(make_gen_params(Rat(1), Rat(0), Rat(0)),
                                                 16, 200, 1);
  CHECK(trapped.point_estimate == 0.0);

  CHECK_THROWS_AS(estimate_draw_probability(gen_small(), 0, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_draw_probability(gen_small(), 4, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("wilson intervals bracket the point estimate") {
  const auto mid = wilson_interval(50, 100);
  CHECK(mid.first == doctest::Approx(0.4038).epsilon(0.001));
  CHECK(mid.second == doctest::Approx(0.5962).epsilon(0.001));

  const auto zero = wilson_interval(0, 100);
  CHECK(zero.first == 0.0);
  CHECK(zero.second > 0.0);
  const auto full = wilson_interval(100, 100);
  CHECK(full.second == 1.0);
  CHECK(full.first < 1.0);

  for (std::uint64_t k : {std::uint64_t(1), std::uint64_t(17), std::uint64_t(99)}) {
    const auto [lo, hi] = wilson_interval(k, 100);
    const double phat = static_cast<double>(k) / 100.0;
    CHECK(lo <= phat);
    CHECK(phat <= hi);
    CHECK(lo >= 0.0);
    CHECK(hi <= 1.0);
  }
  CHECK_THROWS_AS(wilson_interval(0, 0), std::invalid_argument);
}

TEST_CASE("draw estimates are identical for every thread count") {
  const BondParams bp = make_bond_params(Rat(1, 20), Rat(1, 20));
  const auto one = estimate_draw_probability(bp, 32, 500, 9, 1);
  const auto two = estimate_draw_probability(bp, 32, 500, 9, 2);
  const auto seven = estimate_draw_probability(bp, 32, 500, 9, 7);
  CHECK(one.draw_count == two.draw_count);
  CHECK(one.draw_count == seven.draw_count);
  CHECK(one.point_estimate == seven.point_estimate);
  CHECK(one.wilson_lo == seven.wilson_lo);

  const auto reseeded = estimate_draw_probability(bp, 32, 500, 10, 2);
  CHECK(reseeded.draw_count != one.draw_count);  // seed actually matters
}

TEST_CASE("the transform comparison stays within its pooled noise bound") {
  const auto cmp = transform_equivalence_mc(make_bond_params(Rat(1, 20), Rat(1, 20)),
                                            32, 400, 3);
  CHECK(cmp.within);
  CHECK(cmp.abs_difference <= cmp.pooled_3sigma);
  CHECK(cmp.bond_estimate.replicas == 400);
  CHECK(cmp.generalized_estimate.replicas == 400);
}

TEST_CASE("kernel-driven evolution matches the deterministic envelope cases") {
  const auto zero_kernel = generalized_envelope_kernel(
      make_gen_params(Rat(0), Rat(0), Rat(0)));
  const auto frozen = run_envelope_pca(zero_kernel, ring_geometry(64, 10),
                                       PcaInit::all_D, SeedSpec{4, 0});
  REQUIRE(frozen.densities.size() == 11);
  for (const auto& pt : frozen.densities) {
    CHECK(pt.dens_d == 1.0);
    CHECK(pt.dens_w == 0.0);
  }
  for (Sym s : frozen.final_config) CHECK(s == Sym::D);

  // No draw inputs, no draw outputs: an all-W start stays draw-free.
  const auto bond = bond_envelope_kernel(make_bond_params(Rat(3, 10), Rat(0)));
  const auto dry = run_envelope_pca(bond, ring_geometry(64, 10), PcaInit::all_W,
                                    SeedSpec{4, 1});
  for (const auto& pt : dry.densities) {
    CHECK(pt.dens_d == 0.0);
    CHECK(pt.dens_w + pt.dens_l + pt.dens_d == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(dry.final_config.size() == 64);
}

TEST_CASE("both PCA drivers are reproducible under their seeds") {
  const auto kernel = generalized_envelope_kernel(gen_small());
  const auto a = run_envelope_pca(kernel, ring_geometry(32, 20), PcaInit::all_D,
                                  SeedSpec{21, 0});
  const auto b = run_envelope_pca(kernel, ring_geometry(32, 20), PcaInit::all_D,
                                  SeedSpec{21, 0});
  CHECK(a.final_config == b.final_config);
  const auto c = run_envelope_pca(kernel, ring_geometry(32, 20), PcaInit::all_D,
                                  SeedSpec{22, 0});
  CHECK(a.final_config != c.final_config);

  const Board ring = generate_board(gen_small(), ring_geometry(32, 20),
                                    SeedSpec{21, 0});
  const auto la = run_envelope_pca_labels(ring, PcaInit::all_D);
  const auto lb = run_envelope_pca_labels(ring, PcaInit::all_D);
  CHECK(la.final_config == lb.final_config);
  REQUIRE(la.densities.size() == 21);

  CHECK_THROWS_AS(run_envelope_pca(kernel, triangle_geometry(8), PcaInit::all_D,
                                   SeedSpec{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("initial configuration names round-trip") {
  CHECK(pca_init_from_name("allD") == PcaInit::all_D);
  CHECK(pca_init_from_name("allW") == PcaInit::all_W);
  CHECK(pca_init_from_name("allL") == PcaInit::all_L);
  for (PcaInit init : {PcaInit::all_D, PcaInit::all_W, PcaInit::all_L})
    CHECK(pca_init_from_name(pca_init_name(init)) == init);
  CHECK_THROWS_AS(pca_init_from_name("allX"), std::invalid_argument);
}
