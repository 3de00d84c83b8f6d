#include "simulator/board.hpp"

#include <stdexcept>
#include <utility>

namespace pg {
namespace {

void validate_geometry(const Geometry& g) {
  if (g.kind == Geometry::Kind::triangle) {
    if (g.size == 0) {
      throw std::invalid_argument("triangle geometry needs horizon >= 1");
    }
  } else {
    if (g.size < 2) {
      throw std::invalid_argument("ring geometry needs size >= 2");
    }
  }
}

}  // namespace

Geometry triangle_geometry(std::size_t horizon) {
  Geometry g;
  g.kind = Geometry::Kind::triangle;
  g.size = horizon;
  g.steps = 0;
  validate_geometry(g);
  return g;
}

Geometry ring_geometry(std::size_t size, std::size_t steps) {
  Geometry g;
  g.kind = Geometry::Kind::ring;
  g.size = size;
  g.steps = steps;
  validate_geometry(g);
  return g;
}

const GenParams& Board::gen_params() const {
  if (model_ != Model::generalized) {
    throw std::logic_error("bond board queried for generalized parameters");
  }
  return gen_;
}

const BondParams& Board::bond_params() const {
  if (model_ != Model::bond) {
    throw std::logic_error("generalized board queried for bond parameters");
  }
  return bond_;
}

VertexLabel Board::vertex_label(std::uint64_t x, std::uint64_t y) const {
  if (model_ != Model::generalized) {
    throw std::logic_error("bond boards carry no vertex labels");
  }
  const double u = counter_u01(seed_, LabelKind::vertex, x, y);
  if (u < vertex_trap_) return VertexLabel::trap;
  if (u < vertex_trap_or_target_) return VertexLabel::target;
  return VertexLabel::open;
}

EdgeLabel Board::edge_label_right(std::uint64_t x, std::uint64_t y) const {
  const double u = counter_u01(seed_, LabelKind::edge_right, x, y);
  if (u < edge_trap_) return EdgeLabel::trap;
  if (u < edge_trap_or_target_) return EdgeLabel::target;
  return EdgeLabel::open;
}

EdgeLabel Board::edge_label_up(std::uint64_t x, std::uint64_t y) const {
  const double u = counter_u01(seed_, LabelKind::edge_up, x, y);
  if (u < edge_trap_) return EdgeLabel::trap;
  if (u < edge_trap_or_target_) return EdgeLabel::target;
  return EdgeLabel::open;
}

Board generate_board(const GenParams& gp, const Geometry& geometry,
                     const SeedSpec& seed) {
  validate_geometry(geometry);
  Board b;
  b.model_ = Model::generalized;
  b.geometry_ = geometry;
  b.seed_ = seed;
  b.gen_ = gp;
  b.vertex_trap_ = gp.p.get_d();
  b.vertex_trap_or_target_ = Rat(gp.p + gp.q).get_d();
  b.edge_trap_ = gp.r.get_d();
  b.edge_trap_or_target_ = b.edge_trap_;  // generalized edges have no targets
  return b;
}

Board generate_board(const BondParams& bp, const Geometry& geometry,
                     const SeedSpec& seed) {
  validate_geometry(geometry);
  Board b;
  b.model_ = Model::bond;
  b.geometry_ = geometry;
  b.seed_ = seed;
  b.bond_ = bp;
  b.edge_trap_ = bp.r_prime.get_d();
  b.edge_trap_or_target_ = Rat(bp.r_prime + bp.s_prime).get_d();
  return b;
}

MoveOutcome move_outcome_generalized(EdgeLabel e, Sym neighbor) {
  if (e == EdgeLabel::target) {
    throw std::logic_error("generalized edges carry no target labels");
  }
  if (e == EdgeLabel::trap) return MoveOutcome::lose;
  switch (neighbor) {
    case Sym::L: return MoveOutcome::win;
    case Sym::D: return MoveOutcome::draw;
    case Sym::W: return MoveOutcome::lose;
  }
  throw std::logic_error("unknown symbol");
}

MoveOutcome move_outcome_bond(EdgeLabel e, Sym neighbor) {
  if (e == EdgeLabel::target) return MoveOutcome::win;
  if (e == EdgeLabel::trap) return MoveOutcome::lose;
  switch (neighbor) {
    case Sym::L: return MoveOutcome::win;
    case Sym::D: return MoveOutcome::draw;
    case Sym::W: return MoveOutcome::lose;
  }
  throw std::logic_error("unknown symbol");
}

Sym best_of_two(MoveOutcome first, MoveOutcome second) {
  if (first == MoveOutcome::win || second == MoveOutcome::win) return Sym::W;
  if (first == MoveOutcome::draw || second == MoveOutcome::draw) return Sym::D;
  return Sym::L;
}

Sym update_cell_generalized(VertexLabel v, EdgeLabel e_right, EdgeLabel e_up,
                            Sym right, Sym up) {
  if (v == VertexLabel::trap) return Sym::W;
  if (v == VertexLabel::target) return Sym::L;
  return best_of_two(move_outcome_generalized(e_right, right),
                     move_outcome_generalized(e_up, up));
}

Sym update_cell_bond(EdgeLabel e_right, EdgeLabel e_up, Sym right, Sym up) {
  return best_of_two(move_outcome_bond(e_right, right),
                     move_outcome_bond(e_up, up));
}

namespace {

// Fill `cur` (indexed by x, size k+1) from `next` (the states on the
// diagonal x + y = k + 1, indexed by x, size k+2).
void step_diagonal(const Board& board, std::size_t k,
                   const std::vector<Sym>& next, std::vector<Sym>& cur) {
  cur.resize(k + 1);
  const bool generalized = board.model() == Model::generalized;
  for (std::size_t x = 0; x <= k; ++x) {
    const std::uint64_t y = k - x;
    const Sym right = next[x + 1];
    const Sym up = next[x];
    if (generalized) {
      cur[x] = update_cell_generalized(board.vertex_label(x, y),
                                       board.edge_label_right(x, y),
                                       board.edge_label_up(x, y), right, up);
    } else {
      cur[x] = update_cell_bond(board.edge_label_right(x, y),
                                board.edge_label_up(x, y), right, up);
    }
  }
}

}  // namespace

Classification solve_board(const Board& board) {
  if (board.geometry().kind != Geometry::Kind::triangle) {
    throw std::invalid_argument("solve_board needs triangle geometry");
  }
  const std::size_t n = board.geometry().size;
  Classification cls;
  cls.horizon = n;
  cls.diagonals.assign(n + 1, {});
  cls.diagonals[n].assign(n + 1, Sym::D);  // envelope boundary: unknown future
  for (std::size_t k = n; k-- > 0;) {
    step_diagonal(board, k, cls.diagonals[k + 1], cls.diagonals[k]);
  }
  return cls;
}

Sym solve_apex(const Board& board) {
  if (board.geometry().kind != Geometry::Kind::triangle) {
    throw std::invalid_argument("solve_apex needs triangle geometry");
  }
  const std::size_t n = board.geometry().size;
  std::vector<Sym> next(n + 1, Sym::D);
  std::vector<Sym> cur;
  cur.reserve(n + 1);
  for (std::size_t k = n; k-- > 0;) {
    step_diagonal(board, k, next, cur);
    next.swap(cur);
  }
  return next.front();
}

namespace {

int sym_index(Sym s) { return static_cast<int>(s); }

}  // namespace

std::array<Rat, 3> label_update_exact_row(const GenParams& gp, Sym a0,
                                          Sym a1) {
  std::array<Rat, 3> out{Rat(0), Rat(0), Rat(0)};
  const std::pair<VertexLabel, Rat> vertices[] = {
      {VertexLabel::trap, gp.p},
      {VertexLabel::target, gp.q},
      {VertexLabel::open, Rat(1) - gp.p - gp.q},
  };
  const std::pair<EdgeLabel, Rat> edges[] = {
      {EdgeLabel::trap, gp.r},
      {EdgeLabel::open, Rat(1) - gp.r},
  };
  for (const auto& v : vertices) {
    for (const auto& er : edges) {
      for (const auto& eu : edges) {
        const Sym s =
            update_cell_generalized(v.first, er.first, eu.first, a0, a1);
        out[sym_index(s)] += v.second * er.second * eu.second;
      }
    }
  }
  return out;
}

std::array<Rat, 3> label_update_exact_row(const BondParams& bp, Sym a0,
                                          Sym a1) {
  std::array<Rat, 3> out{Rat(0), Rat(0), Rat(0)};
  const std::pair<EdgeLabel, Rat> edges[] = {
      {EdgeLabel::trap, bp.r_prime},
      {EdgeLabel::target, bp.s_prime},
      {EdgeLabel::open, Rat(1) - bp.r_prime - bp.s_prime},
  };
  for (const auto& er : edges) {
    for (const auto& eu : edges) {
      const Sym s = update_cell_bond(er.first, eu.first, a0, a1);
      out[sym_index(s)] += er.second * eu.second;
    }
  }
  return out;
}

}  // namespace pg
