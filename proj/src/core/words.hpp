// The alphabet {W, L, D} and finite cylinder words over it.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pg {

enum class Sym : int { W = 0, L = 1, D = 2 };

inline char sym_char(Sym s) { return "WLD"[static_cast<int>(s)]; }
Sym sym_from_char(char c);

// A word is a string over {'W','L','D'}; the empty word is not a valid
// cylinder word.
using Word = std::string;

bool is_valid_word(const Word& w);

// Reflection reverses the word (R eta(x) = eta(-x)); an involution.
Word reflect(const Word& w);

// Base-3 index of a word among all words of its length (W < L < D).
std::size_t word_index(const Word& w);
Word word_from_index(std::size_t index, std::size_t len);

// All 3^len words of a given length, in index order.
std::vector<Word> all_words(std::size_t len);

}  // namespace pg
