#include "pushforward/functional.hpp"

#include <stdexcept>

namespace pg {

LinearFunctional::LinearFunctional(
    std::initializer_list<std::pair<Rat, Word>> terms) {
  for (const auto& [coef, word] : terms) add(coef, word);
}

void LinearFunctional::add(const Rat& coef, const Word& word) {
  if (!is_valid_word(word)) throw std::invalid_argument("invalid word: " + word);
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (coef != 0) terms_.emplace(word, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) terms_.erase(it);
}

void LinearFunctional::add_scaled(const Rat& scale,
                                  const LinearFunctional& other) {
  for (const auto& [word, coef] : other.terms_) add(scale * coef, word);
}

Rat LinearFunctional::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::size_t LinearFunctional::max_word_len() const {
  std::size_t len = 0;
  for (const auto& [word, coef] : terms_) len = std::max(len, word.size());
  return len;
}

Rat LinearFunctional::evaluate(const CylinderMeasure& mu) const {
  Rat total = 0;
  for (const auto& [word, coef] : terms_) total += coef * mu.prob(word);
  return total;
}

Rat conditional_prob(const UpdateKernel& kernel, const Word& out_word,
                     const Word& in_word) {
  if (in_word.size() != out_word.size() + 1)
    throw std::invalid_argument("conditional_prob: need |in| = |out| + 1");
  Rat prob = 1;
  for (std::size_t j = 0; j < out_word.size(); ++j)
    prob *= kernel.prob(sym_from_char(in_word[j]), sym_from_char(in_word[j + 1]),
                        sym_from_char(out_word[j]));
  return prob;
}

namespace {

// Contract (F mu)(C) = sum_D mu(D) prod_j phi(D_j, D_{j+1} -> C_j) for all
// outputs C of length m at once. The sweep keeps a table indexed by
// (emitted prefix C_0..C_{j-1}, remaining inputs D_j..D_m) and sums out one
// input symbol per step, so the table size stays 3^(m+1) throughout instead
// of the naive 9^m enumeration.
std::vector<Rat> pushforward_level(const UpdateKernel& kernel,
                                   const std::vector<Rat>& mu_level,
                                   std::size_t m) {
  std::vector<Rat> table = mu_level;  // j = 0: empty prefix, inputs D_0..D_m
  std::size_t suffix_size = table.size() / 3;  // 3^m
  for (std::size_t j = 0; j < m; ++j) {
    // table is indexed by prefix * 3^(m+1-j) + suffix, suffix leading with D_j.
    std::vector<Rat> next(table.size(), Rat(0));
    const std::size_t prefix_count = table.size() / (suffix_size * 3);
    const std::size_t lead = suffix_size / 3;  // position value of D_{j+1}
    for (std::size_t prefix = 0; prefix < prefix_count; ++prefix)
      for (std::size_t suffix = 0; suffix < suffix_size; ++suffix) {
        const Sym d_next = static_cast<Sym>(suffix / lead);
        const std::size_t base = prefix * suffix_size * 3;
        for (int d = 0; d < 3; ++d) {
          const Rat& mass =
              table[base + static_cast<std::size_t>(d) * suffix_size + suffix];
          if (mass == 0) continue;
          const auto& row = kernel.row(static_cast<Sym>(d), d_next);
          for (int c = 0; c < 3; ++c) {
            if (row[c] == 0) continue;
            next[(prefix * 3 + static_cast<std::size_t>(c)) * suffix_size +
                 suffix] += mass * row[c];
          }
        }
      }
    table.swap(next);
    suffix_size /= 3;
  }
  // suffix is now the single unconsumed symbol D_m; sum it out.
  std::vector<Rat> out;
  out.reserve(table.size() / 3);
  for (std::size_t c = 0; c < table.size() / 3; ++c)
    out.push_back(table[3 * c] + table[3 * c + 1] + table[3 * c + 2]);
  return out;
}

}  // namespace

CylinderMeasure pushforward(const UpdateKernel& kernel,
                            const CylinderMeasure& mu) {
  if (mu.max_len() < 2)
    throw std::invalid_argument("pushforward needs measure depth >= 2");
  std::vector<std::vector<Rat>> tables;
  for (std::size_t m = 1; m + 1 <= mu.max_len(); ++m) {
    std::vector<Rat> mu_level;
    const auto words = all_words(m + 1);
    mu_level.reserve(words.size());
    for (const auto& w : words) mu_level.push_back(mu.prob(w));
    tables.push_back(pushforward_level(kernel, mu_level, m));
  }
  return CylinderMeasure::from_tables(std::move(tables),
                                      mu.translation_invariant(),
                                      mu.reflection_invariant(),
                                      mu.id() + ".pushforward");
}

LinearFunctional pullback(const UpdateKernel& kernel,
                          const LinearFunctional& f) {
  LinearFunctional g;
  for (const auto& [out_word, coef] : f.terms()) {
    for (const Word& in_word : all_words(out_word.size() + 1)) {
      const Rat p = conditional_prob(kernel, out_word, in_word);
      if (p != 0) g.add(coef * p, in_word);
    }
  }
  return g;
}

}  // namespace pg
