#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Letters are vertex indices of a fixed defining graph. Every generator is
/// an involution, so the inverse of a word is its reversal.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const Word& other) const { return letters == other.letters; }
  bool operator!=(const Word& other) const { return letters != other.letters; }
};

inline constexpr size_t kWordLengthCap = 512;

Word parse_word(const std::string& text, const SimplicialGraph& g);
std::string format_word(const Word& w, const SimplicialGraph& g);

/// Word file format: one word per line, letters separated by spaces; an empty
/// line is the empty word.
std::vector<Word> parse_wordfile(const std::string& text, const SimplicialGraph& g);
std::string format_wordfile(const std::vector<Word>& words, const SimplicialGraph& g);

Word reverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Canonical normal form: the ShortLex-least word (in the graph's vertex
/// order) reachable by deleting cancelling generator pairs and shuffling
/// commuting letters. Two words represent the same group element iff their
/// normal forms coincide.
Word reduce(const Word& w, const SimplicialGraph& g);

bool words_equal(const Word& a, const Word& b, const SimplicialGraph& g);

/// ShortLex: by length, then lexicographically by letter index.
bool shortlex_less(const Word& a, const Word& b);

/// Exact integer matrix of the standard reflection representation. The
/// representation is faithful, so the matrix is the identity iff the word
/// represents the identity element; this is the independent word-problem
/// oracle. Entries overflow-checked.
struct ReflectionMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major, n*n

  long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool is_identity() const;
  bool operator==(const ReflectionMatrix& other) const { return n == other.n && a == other.a; }
};

ReflectionMatrix reflection_generator(int s, const SimplicialGraph& g);
ReflectionMatrix tits_matrix(const Word& w, const SimplicialGraph& g);

/// All normal forms of products of at most `max_factors` generators drawn
/// from T and its inverses, sorted ShortLex. Always contains the empty word.
std::vector<Word> subgroup_ball(const std::vector<Word>& generators, const SimplicialGraph& g,
                                int max_factors);

}  // namespace racg
