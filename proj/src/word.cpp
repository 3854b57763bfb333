#include "racg/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

namespace {

void check_letters(const Word& w, const SimplicialGraph& g) {
  for (int l : w.letters)
    if (!g.has_vertex(l)) fail(ErrorCode::UnknownLetter, "letter index out of range");
}

void check_cap(const Word& w) {
  if (w.size() > kWordLengthCap)
    fail(ErrorCode::LengthCapExceeded,
         "word longer than " + std::to_string(kWordLengthCap) + " letters");
}

// Deletes generator pairs (two occurrences of s with everything in between
// commuting with s) until none remain; the result is reduced.
void delete_cancelling_pairs(std::vector<int>& w, const SimplicialGraph& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < w.size() && !changed; ++i) {
      int s = w[i];
      for (size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] == s) {
          w.erase(w.begin() + static_cast<long>(j));
          w.erase(w.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
        if (!g.has_edge(s, w[j])) break;
      }
    }
  }
}

// ShortLex-least representative of the commutation class of a reduced word:
// repeatedly emit the smallest letter that commutes with everything before it.
std::vector<int> lex_least_shuffle(std::vector<int> w, const SimplicialGraph& g) {
  std::vector<int> out;
  out.reserve(w.size());
  while (!w.empty()) {
    size_t best = w.size();
    for (size_t p = 0; p < w.size(); ++p) {
      bool movable = true;
      for (size_t q = 0; q < p; ++q)
        if (!g.has_edge(w[q], w[p])) {
          movable = false;
          break;
        }
      if (movable && (best == w.size() || w[p] < w[best])) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<long>(best));
  }
  return out;
}

Word reduce_impl(std::vector<int> letters, const SimplicialGraph& g) {
  delete_cancelling_pairs(letters, g);
  return Word(lex_least_shuffle(std::move(letters), g));
}

}  // namespace

Word parse_word(const std::string& text, const SimplicialGraph& g) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) w.letters.push_back(g.index_of(token));
  check_cap(w);
  return w;
}

std::string format_word(const Word& w, const SimplicialGraph& g) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w.letters[i]);
  }
  return out;
}

std::vector<Word> parse_wordfile(const std::string& text, const SimplicialGraph& g) {
  std::vector<Word> words;
  std::string line;
  std::istringstream in(text);
  bool last_had_newline = !text.empty() && text.back() == '\n';
  while (std::getline(in, line)) words.push_back(parse_word(line, g));
  // "a b\n" is one word; an interior blank line is the empty word.
  if (!last_had_newline && !text.empty() && words.empty()) words.push_back(Word{});
  return words;
}

std::string format_wordfile(const std::vector<Word>& words, const SimplicialGraph& g) {
  std::string out;
  for (const auto& w : words) {
    out += format_word(w, g);
    out += '\n';
  }
  return out;
}

Word reverse(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word c = a;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  return c;
}

Word reduce(const Word& w, const SimplicialGraph& g) {
  check_letters(w, g);
  check_cap(w);
  return reduce_impl(w.letters, g);
}

bool words_equal(const Word& a, const Word& b, const SimplicialGraph& g) {
  check_letters(a, g);
  check_letters(b, g);
  check_cap(a);
  check_cap(b);
  std::vector<int> cat = a.letters;
  cat.insert(cat.end(), b.letters.rbegin(), b.letters.rend());
  return reduce_impl(std::move(cat), g).empty();
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

bool ReflectionMatrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

ReflectionMatrix reflection_generator(int s, const SimplicialGraph& g) {
  int n = g.vertex_count();
  ReflectionMatrix m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, 0);
  for (int t = 0; t < n; ++t) {
    if (t == s) {
      m.a[static_cast<size_t>(s) * n + s] = -1;
    } else {
      m.a[static_cast<size_t>(t) * n + t] = 1;
      if (!g.has_edge(s, t)) m.a[static_cast<size_t>(s) * n + t] = 2;
    }
  }
  return m;
}

namespace {

ReflectionMatrix multiply(const ReflectionMatrix& x, const ReflectionMatrix& y) {
  ReflectionMatrix r;
  r.n = x.n;
  r.a.assign(static_cast<size_t>(r.n) * r.n, 0);
  for (int i = 0; i < r.n; ++i)
    for (int k = 0; k < r.n; ++k) {
      long long xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < r.n; ++j) {
        long long prod, sum;
        if (__builtin_mul_overflow(xik, y.at(k, j), &prod) ||
            __builtin_add_overflow(r.a[static_cast<size_t>(i) * r.n + j], prod, &sum))
          fail(ErrorCode::Overflow, "reflection matrix entry overflow");
        r.a[static_cast<size_t>(i) * r.n + j] = sum;
      }
    }
  return r;
}

}  // namespace

ReflectionMatrix tits_matrix(const Word& w, const SimplicialGraph& g) {
  check_letters(w, g);
  check_cap(w);
  int n = g.vertex_count();
  ReflectionMatrix r;
  r.n = n;
  r.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) r.a[static_cast<size_t>(i) * n + i] = 1;
  for (int s : w.letters) r = multiply(r, reflection_generator(s, g));
  return r;
}

std::vector<Word> subgroup_ball(const std::vector<Word>& generators, const SimplicialGraph& g,
                                int max_factors) {
  if (max_factors < 0) fail(ErrorCode::BadParameter, "factor bound must be nonnegative");
  std::vector<Word> steps;
  for (const auto& t : generators) {
    check_letters(t, g);
    check_cap(t);
    steps.push_back(t);
    steps.push_back(reverse(t));
  }
  std::set<std::vector<int>> seen;
  seen.insert(std::vector<int>{});
  std::vector<Word> frontier{Word{}};
  for (int round = 0; round < max_factors && !frontier.empty(); ++round) {
    std::vector<Word> next;
    for (const auto& u : frontier)
      for (const auto& s : steps) {
        std::vector<int> cat = u.letters;
        cat.insert(cat.end(), s.letters.begin(), s.letters.end());
        Word r = reduce_impl(std::move(cat), g);
        if (r.size() > kWordLengthCap)
          fail(ErrorCode::LengthCapExceeded, "ball element exceeds word length cap");
        if (seen.insert(r.letters).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& ls : seen) out.emplace_back(ls);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace racg
