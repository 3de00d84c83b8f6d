// Monte Carlo draw-probability estimation: independent replicas of the
// finite-horizon triangle game, each on its own counter stream, reduced by an
// order-independent count. Wilson intervals instead of Wald, since the
// estimates of interest sit near 0 and 1.
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "core/params.hpp"

namespace pg {

struct DrawEstimate {
  double point_estimate = 0;
  std::uint64_t draw_count = 0;
  std::size_t replicas = 0;
  std::size_t horizon = 0;
  double wilson_lo = 0, wilson_hi = 0;  // 95% score interval
};

// Wilson score interval for `successes` out of `n` at confidence z (default
// 95%). Guarantees lo <= successes/n <= hi.
std::pair<double, double> wilson_interval(std::uint64_t successes,
                                          std::size_t n, double z = 1.96);

// Fraction of replicas whose apex is classified D on triangle(horizon) with
// the all-D envelope boundary. Replica i runs on stream_id i of
// `master_seed`; `threads` = 0 picks a hardware-sized pool. The result is
// identical for every thread count.
DrawEstimate estimate_draw_probability(const GenParams& gp,
                                       std::size_t horizon,
                                       std::size_t replicas,
                                       std::uint64_t master_seed,
                                       unsigned threads = 0);
DrawEstimate estimate_draw_probability(const BondParams& bp,
                                       std::size_t horizon,
                                       std::size_t replicas,
                                       std::uint64_t master_seed,
                                       unsigned threads = 0);

// Draw estimates for a bond game and its generalized image under the
// parameter transform, run on disjoint seeds, with the absolute difference
// judged against a pooled 3-sigma binomial bound.
struct TransformComparison {
  DrawEstimate bond_estimate;
  DrawEstimate generalized_estimate;
  double abs_difference = 0;
  double pooled_3sigma = 0;
  bool within = false;
};

TransformComparison transform_equivalence_mc(const BondParams& bp,
                                             std::size_t horizon,
                                             std::size_t replicas,
                                             std::uint64_t master_seed,
                                             unsigned threads = 0);

}  // namespace pg
