#include "simulator/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "simulator/board.hpp"

namespace pg {
namespace {

unsigned resolve_threads(unsigned requested, std::size_t replicas) {
  unsigned t = requested;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::size_t>(t, std::max<std::size_t>(replicas, 1)));
}

// Counts draws over a replica range; `make_board` builds the replica's board
// from its stream id.
template <typename MakeBoard>
std::uint64_t count_draws(std::size_t begin, std::size_t end,
                          const MakeBoard& make_board) {
  std::uint64_t draws = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (solve_apex(make_board(i)) == Sym::D) ++draws;
  }
  return draws;
}

template <typename MakeBoard>
DrawEstimate estimate_impl(std::size_t horizon, std::size_t replicas,
                           unsigned threads, const MakeBoard& make_board) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
  const unsigned pool = resolve_threads(threads, replicas);

  std::uint64_t total = 0;
  if (pool <= 1) {
    total = count_draws(0, replicas, make_board);
  } else {
    std::vector<std::uint64_t> partial(pool, 0);
    std::vector<std::thread> workers;
    workers.reserve(pool);
    const std::size_t chunk = (replicas + pool - 1) / pool;
    for (unsigned w = 0; w < pool; ++w) {
      const std::size_t begin = std::min<std::size_t>(w * chunk, replicas);
      const std::size_t end =
          std::min<std::size_t>(begin + chunk, replicas);
      workers.emplace_back([&partial, w, begin, end, &make_board] {
        partial[w] = count_draws(begin, end, make_board);
      });
    }
    for (auto& w : workers) w.join();
    for (std::uint64_t p : partial) total += p;
  }

  DrawEstimate est;
  est.draw_count = total;
  est.replicas = replicas;
  est.horizon = horizon;
  est.point_estimate =
      static_cast<double>(total) / static_cast<double>(replicas);
  const auto interval = wilson_interval(total, replicas);
  est.wilson_lo = interval.first;
  est.wilson_hi = interval.second;
  return est;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes,
                                          std::size_t n, double z) {
  if (n == 0) throw std::invalid_argument("empty sample");
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  const double lo = std::max(0.0, center - half);
  const double hi = std::min(1.0, center + half);
  // The score interval always contains the point estimate.
  return {std::min(lo, phat), std::max(hi, phat)};
}

DrawEstimate estimate_draw_probability(const GenParams& gp,
                                       std::size_t horizon,
                                       std::size_t replicas,
                                       std::uint64_t master_seed,
                                       unsigned threads) {
  const Geometry geo = triangle_geometry(horizon);
  return estimate_impl(horizon, replicas, threads, [&](std::size_t i) {
    return generate_board(gp, geo, SeedSpec{master_seed, i});
  });
}

DrawEstimate estimate_draw_probability(const BondParams& bp,
                                       std::size_t horizon,
                                       std::size_t replicas,
                                       std::uint64_t master_seed,
                                       unsigned threads) {
  const Geometry geo = triangle_geometry(horizon);
  return estimate_impl(horizon, replicas, threads, [&](std::size_t i) {
    return generate_board(bp, geo, SeedSpec{master_seed, i});
  });
}

TransformComparison transform_equivalence_mc(const BondParams& bp,
                                             std::size_t horizon,
                                             std::size_t replicas,
                                             std::uint64_t master_seed,
                                             unsigned threads) {
  const GenParams image = bond_to_generalized(bp);  // throws when s' = 1
  TransformComparison cmp;
  cmp.bond_estimate =
      estimate_draw_probability(bp, horizon, replicas, master_seed, threads);
  // Disjoint randomness: the image runs on the successor master seed.
  cmp.generalized_estimate = estimate_draw_probability(
      image, horizon, replicas, master_seed + 1, threads);

  const double pb = cmp.bond_estimate.point_estimate;
  const double pg_ = cmp.generalized_estimate.point_estimate;
  const double n = static_cast<double>(replicas);
  cmp.abs_difference = std::abs(pb - pg_);
  cmp.pooled_3sigma =
      3.0 * std::sqrt(pb * (1.0 - pb) / n + pg_ * (1.0 - pg_) / n);
  cmp.within = cmp.abs_difference <= cmp.pooled_3sigma;
  return cmp;
}

}  // namespace pg
