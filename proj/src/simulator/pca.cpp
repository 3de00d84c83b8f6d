#include "simulator/pca.hpp"

#include <stdexcept>
#include <string>

namespace pg {
namespace {

std::vector<Sym> initial_config(PcaInit init, std::size_t size) {
  Sym s = Sym::D;
  if (init == PcaInit::all_W) s = Sym::W;
  if (init == PcaInit::all_L) s = Sym::L;
  return std::vector<Sym>(size, s);
}

DensityPoint densities_of(std::size_t step, const std::vector<Sym>& config) {
  DensityPoint d;
  d.step = step;
  std::size_t counts[3] = {0, 0, 0};
  for (Sym s : config) ++counts[static_cast<int>(s)];
  const double n = static_cast<double>(config.size());
  d.dens_w = static_cast<double>(counts[0]) / n;
  d.dens_l = static_cast<double>(counts[1]) / n;
  d.dens_d = static_cast<double>(counts[2]) / n;
  return d;
}

void require_ring(const Geometry& g) {
  if (g.kind != Geometry::Kind::ring) {
    throw std::invalid_argument("PCA evolution needs ring geometry");
  }
}

// One label-driven cell update at lattice key (x, y) of `board`, with
// outgoing neighbor states (right, up).
Sym label_update_at(const Board& board, std::uint64_t x, std::uint64_t y,
                    Sym right, Sym up) {
  if (board.model() == Model::generalized) {
    return update_cell_generalized(board.vertex_label(x, y),
                                   board.edge_label_right(x, y),
                                   board.edge_label_up(x, y), right, up);
  }
  return update_cell_bond(board.edge_label_right(x, y),
                          board.edge_label_up(x, y), right, up);
}

}  // namespace

const char* pca_init_name(PcaInit init) {
  switch (init) {
    case PcaInit::all_D: return "allD";
    case PcaInit::all_W: return "allW";
    case PcaInit::all_L: return "allL";
  }
  throw std::logic_error("unknown initial configuration");
}

PcaInit pca_init_from_name(const std::string& name) {
  if (name == "allD") return PcaInit::all_D;
  if (name == "allW") return PcaInit::all_W;
  if (name == "allL") return PcaInit::all_L;
  throw std::invalid_argument("unknown initial configuration: " + name);
}

PcaTrajectory run_envelope_pca(const UpdateKernel& kernel, const Geometry& ring,
                               PcaInit init, const SeedSpec& seed) {
  require_ring(ring);
  const std::size_t n = ring.size;
  std::vector<Sym> config = initial_config(init, n);
  std::vector<Sym> next(n);
  PcaTrajectory traj;
  traj.densities.reserve(ring.steps + 1);
  traj.densities.push_back(densities_of(0, config));
  for (std::size_t t = 1; t <= ring.steps; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = kernel.row_as_double(config[i], config[(i + 1) % n]);
      const double u = counter_u01(seed, LabelKind::pca_cell, i, t);
      if (u < row[0]) {
        next[i] = Sym::W;
      } else if (u < row[0] + row[1]) {
        next[i] = Sym::L;
      } else {
        next[i] = Sym::D;
      }
    }
    config.swap(next);
    traj.densities.push_back(densities_of(t, config));
  }
  traj.final_config = std::move(config);
  return traj;
}

PcaTrajectory run_envelope_pca_labels(const Board& ring_board, PcaInit init) {
  require_ring(ring_board.geometry());
  const std::size_t n = ring_board.geometry().size;
  std::vector<Sym> config = initial_config(init, n);
  std::vector<Sym> next(n);
  PcaTrajectory traj;
  traj.densities.reserve(ring_board.geometry().steps + 1);
  traj.densities.push_back(densities_of(0, config));
  for (std::size_t t = 1; t <= ring_board.geometry().steps; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      next[i] =
          label_update_at(ring_board, i, t, config[(i + 1) % n], config[i]);
    }
    config.swap(next);
    traj.densities.push_back(densities_of(t, config));
  }
  traj.final_config = std::move(config);
  return traj;
}

std::array<std::uint64_t, 3> label_update_counts(const Board& proto, Sym a0,
                                                 Sym a1, std::size_t samples) {
  std::array<std::uint64_t, 3> counts{0, 0, 0};
  // Key the draws by (sample, row) so distinct rows never share labels.
  const std::uint64_t row_key =
      3 * static_cast<std::uint64_t>(a0) + static_cast<std::uint64_t>(a1);
  for (std::size_t s = 0; s < samples; ++s) {
    const Sym out = label_update_at(proto, s, row_key, a0, a1);
    ++counts[static_cast<int>(out)];
  }
  return counts;
}

bool duality_check(const Board& triangle_board) {
  const Classification solved = solve_board(triangle_board);
  const std::size_t n = triangle_board.geometry().size;
  // Shrinking-segment label-driven evolution from the all-D boundary.
  std::vector<Sym> segment(n + 1, Sym::D);
  if (solved.diagonals[n] != segment) return false;
  std::vector<Sym> next;
  for (std::size_t k = n; k-- > 0;) {
    next.resize(k + 1);
    for (std::size_t x = 0; x <= k; ++x) {
      next[x] = label_update_at(triangle_board, x, k - x, segment[x + 1],
                                segment[x]);
    }
    segment.swap(next);
    if (solved.diagonals[k] != segment) return false;
  }
  return true;
}

bool duality_check(const GenParams& gp, std::size_t horizon,
                   std::uint64_t master_seed) {
  return duality_check(
      generate_board(gp, triangle_geometry(horizon), SeedSpec{master_seed, 0}));
}

bool duality_check(const BondParams& bp, std::size_t horizon,
                   std::uint64_t master_seed) {
  return duality_check(
      generate_board(bp, triangle_geometry(horizon), SeedSpec{master_seed, 0}));
}

}  // namespace pg
