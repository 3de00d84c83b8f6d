// Envelope-PCA evolution on a ring, with two interchangeable drivers:
// kernel-driven (sample the output symbol straight from the kernel row) and
// label-driven (sample the board labels and apply the game's case table).
// The drivers are distributionally identical; the label driver on a shrinking
// triangle, coupled to the solver through the identical label stream, is the
// exact solver/PCA duality.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/rng.hpp"
#include "core/words.hpp"
#include "kernels/kernel.hpp"
#include "simulator/board.hpp"

namespace pg {

enum class PcaInit { all_D, all_W, all_L };
enum class PcaDriver { kernel, labels };

const char* pca_init_name(PcaInit init);
PcaInit pca_init_from_name(const std::string& name);  // allD / allW / allL

struct DensityPoint {
  std::size_t step = 0;
  double dens_w = 0, dens_l = 0, dens_d = 0;
};

struct PcaTrajectory {
  std::vector<DensityPoint> densities;  // step 0 (initial state) included
  std::vector<Sym> final_config;
};

// Kernel-driven evolution: cell i at step t+1 is sampled from the kernel row
// (config[i], config[i+1 mod n]) with one counter draw per (cell, step).
PcaTrajectory run_envelope_pca(const UpdateKernel& kernel, const Geometry& ring,
                               PcaInit init, const SeedSpec& seed);

// Label-driven evolution on a ring board: sample the labels of (i, t) and
// apply the game rule. Same trajectory type; same counter determinism.
PcaTrajectory run_envelope_pca_labels(const Board& ring_board, PcaInit init);

// Empirical output counts (W, L, D) of the label-driven one-cell update with
// neighbor states (a0, a1), over `samples` independent label draws. Used to
// check the label driver against the kernel row with binomial bounds.
std::array<std::uint64_t, 3> label_update_counts(const Board& proto, Sym a0,
                                                 Sym a1, std::size_t samples);

// Exact solver/PCA duality on a triangle: backward induction and the
// label-driven shrinking-segment evolution consume the identical label
// stream and must agree site-for-site on every diagonal.
bool duality_check(const Board& triangle_board);
bool duality_check(const GenParams& gp, std::size_t horizon,
                   std::uint64_t master_seed);
bool duality_check(const BondParams& bp, std::size_t horizon,
                   std::uint64_t master_seed);

}  // namespace pg
