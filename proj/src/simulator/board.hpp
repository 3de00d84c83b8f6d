// Random boards on the oriented square lattice and the backward-induction
// solver. A board never materializes its labels: every label is a pure
// function of (seed, kind, site) through the counter RNG, so storage is O(1)
// and replicas are reproducible under any thread schedule.
//
// The per-cell game rule (trap/target/open case analysis plus best-of-two
// move selection) lives here in one place and is shared by the solver, the
// label-driven PCA driver and the exact enumeration oracle that ties the
// rule to the envelope kernel rows.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/params.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"
#include "core/words.hpp"
#include "kernels/kernel.hpp"

namespace pg {

enum class VertexLabel { open = 0, trap = 1, target = 2 };
enum class EdgeLabel { open = 0, trap = 1, target = 2 };

struct Geometry {
  enum class Kind { triangle, ring };
  Kind kind = Kind::triangle;
  std::size_t size = 0;   // triangle horizon N, or ring circumference
  std::size_t steps = 0;  // ring only: update steps to run
};

Geometry triangle_geometry(std::size_t horizon);
Geometry ring_geometry(std::size_t size, std::size_t steps);

class Board {
 public:
  Model model() const { return model_; }
  const Geometry& geometry() const { return geometry_; }
  const SeedSpec& seed() const { return seed_; }
  const GenParams& gen_params() const;    // throws unless generalized
  const BondParams& bond_params() const;  // throws unless bond

  // Label of the vertex at (x, y); generalized model only.
  VertexLabel vertex_label(std::uint64_t x, std::uint64_t y) const;
  // Labels of the two outgoing edges of (x, y): to (x+1, y) resp. (x, y+1).
  EdgeLabel edge_label_right(std::uint64_t x, std::uint64_t y) const;
  EdgeLabel edge_label_up(std::uint64_t x, std::uint64_t y) const;

 private:
  friend Board generate_board(const GenParams&, const Geometry&,
                              const SeedSpec&);
  friend Board generate_board(const BondParams&, const Geometry&,
                              const SeedSpec&);
  Board() = default;

  Model model_ = Model::generalized;
  Geometry geometry_;
  SeedSpec seed_;
  GenParams gen_;
  BondParams bond_;
  // Cumulative label thresholds rendered to double once, at construction.
  double vertex_trap_ = 0, vertex_trap_or_target_ = 0;
  double edge_trap_ = 0, edge_trap_or_target_ = 0;
};

Board generate_board(const GenParams& gp, const Geometry& geometry,
                     const SeedSpec& seed);
Board generate_board(const BondParams& bp, const Geometry& geometry,
                     const SeedSpec& seed);

// Outcome of a single move, from the mover's perspective.
enum class MoveOutcome { win, draw, lose };

// Generalized game: a trap edge loses; an open edge wins/draws/loses as the
// neighbor is L/D/W (the opponent inherits the neighbor's fate).
MoveOutcome move_outcome_generalized(EdgeLabel e, Sym neighbor);
// Bond game: a target edge wins, a trap edge loses, an open edge defers to
// the neighbor as above.
MoveOutcome move_outcome_bond(EdgeLabel e, Sym neighbor);

// Best of the two available moves under win > draw > lose.
Sym best_of_two(MoveOutcome first, MoveOutcome second);

// One-cell update: the state of (x, y) from its labels and the states of its
// two outgoing neighbors (right = (x+1, y), up = (x, y+1)).
Sym update_cell_generalized(VertexLabel v, EdgeLabel e_right, EdgeLabel e_up,
                            Sym right, Sym up);
Sym update_cell_bond(EdgeLabel e_right, EdgeLabel e_up, Sym right, Sym up);

// States of every diagonal of a solved triangle board. diagonals[k] holds the
// states on {x + y = k} indexed by x; the last diagonal is the all-D envelope
// boundary (the unknown future).
struct Classification {
  std::size_t horizon = 0;
  std::vector<std::vector<Sym>> diagonals;

  Sym apex() const { return diagonals.front().front(); }
};

// Backward induction over the triangle. Throws for ring geometry.
Classification solve_board(const Board& board);

// Apex state only, with O(N) rolling storage (the Monte Carlo hot path).
Sym solve_apex(const Board& board);

// Exact output distribution (P[W], P[L], P[D]) of one cell update with
// outgoing neighbor states (a0, a1), by enumerating the label space with its
// exact probabilities. Coincides with the envelope kernel row (a0, a1); a
// test certifies that identity for all nine rows.
std::array<Rat, 3> label_update_exact_row(const GenParams& gp, Sym a0, Sym a1);
std::array<Rat, 3> label_update_exact_row(const BondParams& bp, Sym a0,
                                          Sym a1);

}  // namespace pg
