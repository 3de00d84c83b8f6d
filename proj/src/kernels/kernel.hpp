// Stochastic update kernels of the envelope PCAs for the generalized
// (vertex-trap/vertex-target/edge-trap) and bond (edge-trap/edge-target)
// percolation games, their restriction to the two-symbol alphabet, and the
// classical ergodicity criteria for symmetric elementary PCAs.
#pragma once

#include <array>
#include <string>

#include "core/params.hpp"
#include "core/words.hpp"
#include "polynomials/polynomial.hpp"

namespace pg {

enum class Model { generalized, bond };
enum class Alphabet { full, restricted };

// Symmetric kernel phi(a0, a1) -> distribution over {W, L, D}, materialized
// as a 9-row rational table (one row per ordered input pair). Immutable after
// construction and safe to share across threads.
class UpdateKernel {
 public:
  Model model() const { return model_; }
  Alphabet alphabet() const { return alphabet_; }

  // Probabilities P[W], P[L], P[D] for inputs (a0, a1). Throws
  // std::domain_error when a restricted kernel is queried with a D input.
  const std::array<Rat, 3>& row(Sym a0, Sym a1) const;
  Rat prob(Sym a0, Sym a1, Sym out) const { return row(a0, a1)[sym_code(out)]; }

  // One-time float rendering for the simulation hot path; the rational table
  // stays canonical.
  std::array<double, 3> row_as_double(Sym a0, Sym a1) const;

  // JSON object keyed "a0a1" -> {"W": ..., "L": ..., "D": ...} with decimal
  // strings (12 significant digits), rows in enumeration order WW, WL, ...
  std::string dump_json() const;

 private:
  static int sym_code(Sym s) { return static_cast<int>(s); }

  friend UpdateKernel generalized_envelope_kernel(const GenParams& gp);
  friend UpdateKernel bond_envelope_kernel(const BondParams& bp);
  friend UpdateKernel restrict_kernel(const UpdateKernel& k);

  UpdateKernel() = default;

  Model model_ = Model::generalized;
  Alphabet alphabet_ = Alphabet::full;
  std::array<std::array<Rat, 3>, 9> rows_;  // index 3*a0 + a1
};

UpdateKernel generalized_envelope_kernel(const GenParams& gp);
UpdateKernel bond_envelope_kernel(const BondParams& bp);

// Drop the D rows, keeping the {W,L}x{W,L} entries verbatim (they carry no
// D-mass). Idempotent.
UpdateKernel restrict_kernel(const UpdateKernel& k);

// Kernel rows as exact polynomials in {"p","q","r"} (generalized) or
// {"rp","sp"} (bond); the numeric kernels above are these rows evaluated at
// the parameter point, so row-sum and transform identities certified on the
// symbolic rows carry over to every numeric kernel.
std::array<Polynomial, 3> generalized_kernel_row_sym(Sym a0, Sym a1);
std::array<Polynomial, 3> bond_kernel_row_sym(Sym a0, Sym a1);

// Parameters (theta_WW, theta_WL, theta_LL) of a symmetric elementary PCA:
// the L-emission probabilities of the restricted kernel.
struct ThetaTriple {
  Rat ww, wl, ll;
};

ThetaTriple theta_of(const UpdateKernel& k);

// Classical ergodicity criteria for symmetric elementary PCAs:
//   (a) 0 < theta_WW, theta_WL, theta_LL < 1, theta_LL > theta_WW - 2 theta_WL
//       and theta_LL > theta_WW - 2(1 - theta_WL);
//   (b) max |theta_ij - theta_kl| + 2 max{|theta_LL - theta_WL|,
//       |theta_WW - theta_WL|} < 2.
struct ClassicalCriteria {
  bool criterion_a = false;
  bool criterion_b = false;
};

ClassicalCriteria classical_criteria(const ThetaTriple& t);

// Max over all rows and outputs of |generalized(transform(b)) - bond(b)|;
// exactly zero for every valid b with s' < 1.
Rat kernel_equivalence_check(const BondParams& bp);

}  // namespace pg
