// Cylinder measures: probabilities of all words up to a fixed length, with
// translation/reflection invariance tracked by construction.
//
// Two invariant families are provided as test measures: iid products, and
// stationary reversible 3-state Markov chains (reversibility is the simplest
// sufficient condition for reflection invariance of all cylinder probabilities).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/words.hpp"

namespace pg {

struct ConsistencyReport {
  Rat range_violation;        // max distance of any entry outside [0,1]
  Rat normalization_residual; // max_k |sum over length-k words - 1|
  Rat left_residual;          // max_w |mu(w) - sum_a mu(aw)|
  Rat right_residual;         // max_w |mu(w) - sum_a mu(wa)|
  Rat reflection_residual;    // max_w |mu(w) - mu(reflect(w))| (0 if not claimed)

  bool ok() const {
    return range_violation == 0 && normalization_residual == 0 &&
           left_residual == 0 && right_residual == 0 && reflection_residual == 0;
  }
};

class CylinderMeasure {
 public:
  // Product measure with symbol weights (wW, wL, wD); weights must be
  // nonnegative and sum to exactly 1.
  static CylinderMeasure iid(const Rat& w_w, const Rat& w_l, const Rat& w_d,
                             std::size_t max_len, std::string id = "iid");

  // Stationary reversible chain from a symmetric nonnegative 3x3 weight
  // matrix S with positive row sums: pi ~ row sums, T(i,j) = S(i,j)/rowsum(i).
  static CylinderMeasure reversible_chain(const std::array<std::array<Rat, 3>, 3>& s,
                                          std::size_t max_len,
                                          std::string id = "chain");

  // Assemble from explicit per-length tables (used by pushforward).
  static CylinderMeasure from_tables(std::vector<std::vector<Rat>> tables,
                                     bool translation_invariant,
                                     bool reflection_invariant, std::string id);

  std::size_t max_len() const { return tables_.size(); }
  bool translation_invariant() const { return translation_invariant_; }
  bool reflection_invariant() const { return reflection_invariant_; }
  const std::string& id() const { return id_; }

  // Probability of a word of length <= max_len.
  const Rat& prob(const Word& w) const;

  // Overwrite one entry (deliberate corruption in tests).
  void set_prob(const Word& w, const Rat& value);

  ConsistencyReport check() const;

  CylinderMeasure reflected() const;

 private:
  CylinderMeasure() = default;
  std::vector<std::vector<Rat>> tables_;  // tables_[k] = probs of words of length k+1
  bool translation_invariant_ = false;
  bool reflection_invariant_ = false;
  std::string id_;
};

// Deterministic suite of invariant test measures: index 0 is iid uniform, the
// rest alternate seeded iid products and seeded reversible chains. All entries
// have full support.
std::vector<CylinderMeasure> make_measure_suite(std::size_t count, std::size_t max_len,
                                                std::uint64_t seed);

}  // namespace pg
