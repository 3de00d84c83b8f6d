#include "core/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace pg {

Sym sym_from_char(char c) {
  switch (c) {
    case 'W': return Sym::W;
    case 'L': return Sym::L;
    case 'D': return Sym::D;
    default: throw std::invalid_argument(std::string("invalid symbol '") + c + "'");
  }
}

bool is_valid_word(const Word& w) {
  if (w.empty()) return false;
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == 'W' || c == 'L' || c == 'D'; });
}

Word reflect(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::size_t word_index(const Word& w) {
  std::size_t idx = 0;
  for (char c : w) idx = idx * 3 + static_cast<std::size_t>(sym_from_char(c));
  return idx;
}

Word word_from_index(std::size_t index, std::size_t len) {
  Word w(len, 'W');
  for (std::size_t i = len; i-- > 0;) {
    w[i] = sym_char(static_cast<Sym>(index % 3));
    index /= 3;
  }
  return w;
}

std::vector<Word> all_words(std::size_t len) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= 3;
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_from_index(i, len));
  return out;
}

}  // namespace pg
