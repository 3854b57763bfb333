#include <doctest.h>

#include <random>
#include <set>

#include "racg/errors.hpp"
#include "racg/word.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace racg;
namespace b = builders;

TEST_CASE("reduce: stock examples over the 4-cycle") {
  auto four = b::cycle(4);
  CHECK(reduce(b::word("s1 s2 s1 s2", four), four).empty());
  CHECK(reduce(b::word("s2 s1 s3 s2", four), four) == b::word("s1 s3", four));
  CHECK(reduce(b::word("s1 s3 s1", four), four) == b::word("s1 s3 s1", four));
  CHECK(reduce(Word{}, four).empty());
  CHECK_THROWS_AS(parse_word("bogus", four), Error);
}

TEST_CASE("reduce returns the ShortLex-least element of the rewriting closure") {
  // Greedy smallest-movable-letter selection; plain commuting bubble passes
  // stall here: s3 s1 s2 over the path has normal form s2 s3 s1.
  auto path = b::path3();
  CHECK(reduce(b::word("s3 s1 s2", path), path) == b::word("s2 s3 s1", path));

  std::mt19937_64 rng(1313);
  for (int trial = 0; trial < 400; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
    Word w = oracle::random_word(rng, g, 1 + static_cast<int>(rng() % 6));
    CHECK(reduce(w, g) == oracle::closure_shortlex_min(w, g));
  }
}

TEST_CASE("equal: examples and normal-form agreement") {
  auto four = b::cycle(4);
  CHECK(words_equal(b::word("s1 s2", four), b::word("s2 s1", four), four));
  CHECK_FALSE(words_equal(b::word("s1 s3", four), b::word("s3 s1", four), four));
  Word w = b::word("s1 s2 s3", four);
  CHECK(words_equal(w, w, four));

  std::mt19937_64 rng(888);
  for (int trial = 0; trial < 300; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.4);
    Word a = oracle::random_word(rng, g, static_cast<int>(rng() % 7));
    Word c = oracle::random_word(rng, g, static_cast<int>(rng() % 7));
    CHECK(words_equal(a, c, g) == (reduce(a, g) == reduce(c, g)));
    CHECK(words_equal(a, reduce(a, g), g));
  }
}

TEST_CASE("reduce invariants: idempotence, length, inverse cancellation") {
  std::mt19937_64 rng(4711);
  for (int trial = 0; trial < 500; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.4);
    Word w = oracle::random_word(rng, g, static_cast<int>(rng() % 10));
    Word r = reduce(w, g);
    CHECK(reduce(r, g) == r);
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);
    CHECK(reduce(concat(w, reverse(w)), g).empty());
  }
}

TEST_CASE("tits_matrix: examples") {
  auto pair = b::edgeless(2, "x");  // generators x1, x2 with no relation
  CHECK(tits_matrix(b::word("x1 x1", pair), pair).is_identity());
  CHECK(tits_matrix(Word{}, pair).is_identity());

  ReflectionMatrix m = tits_matrix(b::word("x1 x2", pair), pair);
  CHECK_FALSE(m.is_identity());
  CHECK(m.at(0, 0) + m.at(1, 1) == 2);  // trace
  CHECK(m.at(0, 0) == 3);
  CHECK(m.at(0, 1) == -2);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(1, 1) == -1);
}

TEST_CASE("tits_matrix invariants: involution squares, determinant, inverse product") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.4);
    Word w = oracle::random_word(rng, g, static_cast<int>(rng() % 8));
    ReflectionMatrix m = tits_matrix(w, g);
    long long det = oracle::bareiss_determinant(m);
    CHECK((det == 1 || det == -1));
    CHECK(tits_matrix(concat(w, reverse(w)), g).is_identity());
  }
}

TEST_CASE("oracle equivalence: reduce(w) empty iff matrix is the identity") {
  std::vector<SimplicialGraph> graphs{b::edgeless(2), b::single_edge(), b::triangle(), b::cycle(4),
                                      b::cycle(5)};
  for (const auto& g : graphs) {
    // Exhaustive over all words of length <= 5.
    std::vector<Word> frontier{Word{}};
    for (int length = 1; length <= 5; ++length) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (int s = 0; s < g.vertex_count(); ++s) {
          Word ext = w;
          ext.letters.push_back(s);
          CHECK(reduce(ext, g).empty() == tits_matrix(ext, g).is_identity());
          next.push_back(std::move(ext));
        }
      frontier = std::move(next);
    }
    // Random sample beyond.
    std::mt19937_64 rng(5150 + g.vertex_count());
    for (int trial = 0; trial < 2000; ++trial) {
      Word w = oracle::random_word(rng, g, 6 + static_cast<int>(rng() % 3));
      CHECK(reduce(w, g).empty() == tits_matrix(w, g).is_identity());
    }
  }
}

TEST_CASE("subgroup_ball: stock examples") {
  auto pair = b::edgeless(2, "x");
  auto rename = [&](const std::string& s) { return b::word(s, pair); };
  std::vector<Word> ball = subgroup_ball({rename("x1 x2")}, pair, 2);
  std::vector<Word> expect{Word{}, rename("x1 x2"), rename("x2 x1"), rename("x1 x2 x1 x2"),
                           rename("x2 x1 x2 x1")};
  std::sort(expect.begin(), expect.end(), shortlex_less);
  CHECK(ball == expect);

  CHECK(subgroup_ball({}, pair, 5) == std::vector<Word>{Word{}});

  auto edge = b::single_edge();
  std::vector<Word> stable = subgroup_ball({b::word("s1 s2", edge)}, edge, 3);
  CHECK(stable == std::vector<Word>{Word{}, b::word("s1 s2", edge)});
}

TEST_CASE("word files") {
  auto g = b::cycle(4);
  std::vector<Word> words = parse_wordfile("s1 s2\n\ns3 s4\n", g);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == b::word("s1 s2", g));
  CHECK(words[1].empty());
  CHECK(words[2] == b::word("s3 s4", g));
  CHECK(format_wordfile(words, g) == "s1 s2\n\ns3 s4\n");
  CHECK(parse_wordfile("", g).empty());
}

TEST_CASE("length cap") {
  auto g = b::single_edge();
  Word longword;
  for (size_t i = 0; i < kWordLengthCap + 1; ++i) longword.letters.push_back(0);
  CHECK_THROWS_AS(reduce(longword, g), Error);
}
