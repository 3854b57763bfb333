#include <doctest.h>

#include <random>
#include <set>

#include "racg/complex.hpp"
#include "racg/errors.hpp"
#include "racg/word.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace racg;
namespace b = builders;

TEST_CASE("rose construction") {
  auto four = b::cycle(4);
  CubeComplex r = CubeComplex::rose(b::words({"s1 s2 s3 s4"}, four), four);
  CHECK(r.vertex_count() == 4);
  CHECK(r.edge_count() == 4);
  CHECK(r.cube_count() == 0);
  CHECK(r.base() == 0);

  CubeComplex loop = CubeComplex::rose(b::words({"s1"}, four), four);
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.edge_count() == 1);
  CHECK(loop.edge(0).u == loop.edge(0).v);

  CubeComplex two = CubeComplex::rose(b::words({"s1 s2", "s3 s4"}, four), four);
  CHECK(two.vertex_count() == 3);
  CHECK(two.edge_count() == 4);

  CHECK_THROWS_AS(CubeComplex::rose({Word{}}, four), Error);
}

TEST_CASE("fold_saturate: duplicate generator collapses") {
  auto pair = b::edgeless(2, "x");
  CubeComplex r = CubeComplex::rose(b::words({"x1 x2", "x1 x2"}, pair), pair);
  CHECK_FALSE(r.is_folded());
  FoldStats stats = r.fold_saturate();
  CHECK(stats.folds > 0);
  CHECK(r.vertex_count() == 2);
  CHECK(r.edge_count() == 2);
  CHECK(r.is_folded());

  // Folding an already-folded complex changes nothing.
  FoldStats again = r.fold_saturate();
  CHECK(again.total() == 0);
}

TEST_CASE("fold_saturate: squaring a single generator") {
  auto four = b::cycle(4);
  CubeComplex r = CubeComplex::rose(b::words({"s1 s1"}, four), four);
  CHECK(r.vertex_count() == 2);
  CHECK(r.edge_count() == 2);
  r.fold_saturate();
  CHECK(r.vertex_count() == 2);
  CHECK(r.edge_count() == 1);
}

TEST_CASE("status flags") {
  auto pair = b::edgeless(2, "x");
  CubeComplex dup = CubeComplex::rose(b::words({"x1 x2", "x1 x2"}, pair), pair);
  CHECK_FALSE(dup.status().folded);

  CubeComplex cycle2 = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  ComplexStatus s = cycle2.status();
  CHECK(s.folded);
  CHECK(s.cube_full);  // no cliques of size 2 in an edgeless graph

  auto edge = b::single_edge();
  CubeComplex square_site = CubeComplex::rose(b::words({"s1 s2"}, edge), edge);
  ComplexStatus t = square_site.status();
  CHECK(t.folded);
  CHECK_FALSE(t.cube_full);
}

TEST_CASE("attach_round serves covered sites only once") {
  auto edge = b::single_edge();
  CubeComplex c = CubeComplex::rose(b::words({"s1 s2"}, edge), edge);
  c.fold_saturate();
  long long attached = c.attach_round();
  // Two sites at round start; the square attached at the base also covers
  // the site at the far vertex.
  CHECK(attached == 1);
  CHECK(c.cube_count() == 1);

  CubeComplex untouched = CubeComplex::rose(b::words({"x1 x2"}, b::edgeless(2, "x")),
                                            b::edgeless(2, "x"));
  untouched.fold_saturate();
  CHECK(untouched.attach_round() == 0);

  // Cube-full complexes are fixed points.
  c.fold_saturate();
  CHECK(c.attach_round() == 0);
}

TEST_CASE("operations on unfolded complexes are rejected") {
  auto pair = b::edgeless(2, "x");
  CubeComplex dup = CubeComplex::rose(b::words({"x1 x2", "x1 x2"}, pair), pair);
  CHECK_THROWS_AS(dup.attach_round(), Error);
  CHECK_THROWS_AS(dup.trace(b::word("x1", pair)), Error);
  CHECK_THROWS_AS(dup.torsion_scan(), Error);
  CHECK_THROWS_AS(dup.vertex_fullness(), Error);
}

TEST_CASE("trace walks the 2-cycle") {
  auto pair = b::edgeless(2, "x");
  CubeComplex c = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  c.fold_saturate();

  CHECK(c.trace(b::word("x1 x2", pair)).kind == TraceResult::Kind::Loop);
  TraceResult path = c.trace(b::word("x1", pair));
  CHECK(path.kind == TraceResult::Kind::PathEndsAt);
  CHECK(path.vertex != c.base());
  // Edges are two-way: the reversed label sequence also closes.
  CHECK(c.trace(b::word("x2 x1", pair)).kind == TraceResult::Kind::Loop);
  CHECK(c.trace(Word{}).kind == TraceResult::Kind::Loop);

  // Involutive edges bounce: an odd power of one letter ends off base.
  CHECK(c.trace(b::word("x1 x1 x1", pair)).kind == TraceResult::Kind::PathEndsAt);

  auto three = b::edgeless(3, "x");
  CubeComplex d = CubeComplex::rose(b::words({"x1 x2"}, three), three);
  d.fold_saturate();
  TraceResult stuck = d.trace(b::word("x1 x3", three));
  CHECK(stuck.kind == TraceResult::Kind::Stuck);
  CHECK(stuck.position == 1);
}

TEST_CASE("torsion_scan") {
  auto four = b::cycle(4);
  CubeComplex self_loop = CubeComplex::rose(b::words({"s1"}, four), four);
  self_loop.fold_saturate();
  auto witness = self_loop.torsion_scan();
  REQUIRE(witness.has_value());
  CHECK(witness->word == b::word("s1", four));

  auto pair = b::edgeless(2, "x");
  CubeComplex cycle2 = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  cycle2.fold_saturate();
  CHECK_FALSE(cycle2.torsion_scan().has_value());
}

TEST_CASE("vertex_fullness") {
  auto pair = b::edgeless(2, "x");
  CubeComplex cycle2 = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  cycle2.fold_saturate();
  CHECK(cycle2.vertex_fullness());

  auto four = b::cycle(4);
  CubeComplex rose4 = CubeComplex::rose(b::words({"s1 s2 s3 s4"}, four), four);
  rose4.fold_saturate();
  CHECK_FALSE(rose4.vertex_fullness());

  CubeComplex lonely(std::make_shared<SimplicialGraph>(four));
  lonely.set_base(lonely.add_vertex());
  CHECK_FALSE(lonely.vertex_fullness());
}

TEST_CASE("euler characteristic") {
  auto pair = b::edgeless(2, "x");
  CubeComplex cycle2 = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  CHECK(cycle2.euler_characteristic() == 0);

  // One square on 4 distinct vertices.
  auto edge = b::single_edge();
  CubeComplex sq(std::make_shared<SimplicialGraph>(edge));
  int v0 = sq.add_vertex(), v1 = sq.add_vertex(), v2 = sq.add_vertex(), v3 = sq.add_vertex();
  sq.set_base(v0);
  int bottom = sq.add_edge(v0, v1, 0);
  int top = sq.add_edge(v2, v3, 0);
  int left = sq.add_edge(v0, v2, 1);
  int right = sq.add_edge(v1, v3, 1);
  CubeCell cell;
  cell.labels = {0, 1};
  cell.corners = {v0, v1, v2, v3};
  cell.edges = {bottom, top, left, right};
  sq.add_cube(cell);
  CHECK(sq.euler_characteristic() == 1);
}

TEST_CASE("based_isomorphic") {
  auto pair = b::edgeless(2, "x");
  CubeComplex a = CubeComplex::rose(b::words({"x1 x2"}, pair), pair);
  a.fold_saturate();
  CHECK(based_isomorphic(a, a));

  // Same complex with different allocation history.
  CubeComplex fresh(std::make_shared<SimplicialGraph>(pair));
  int u1 = fresh.add_vertex();
  int u0 = fresh.add_vertex();
  fresh.set_base(u0);
  fresh.add_edge(u1, u0, 0);
  fresh.add_edge(u0, u1, 1);
  CubeComplex plain(std::make_shared<SimplicialGraph>(pair));
  int p0 = plain.add_vertex();
  int p1 = plain.add_vertex();
  plain.set_base(p0);
  plain.add_edge(p0, p1, 0);
  plain.add_edge(p0, p1, 1);
  CHECK(based_isomorphic(fresh, plain));

  // Label mismatch.
  auto three = b::edgeless(3, "x");
  CubeComplex ab = CubeComplex::rose(b::words({"x1 x2"}, three), three);
  ab.fold_saturate();
  CubeComplex ac = CubeComplex::rose(b::words({"x1 x3"}, three), three);
  ac.fold_saturate();
  CHECK_FALSE(based_isomorphic(ab, ac));
}

TEST_CASE("loop persistence and label admissibility across rounds") {
  auto four = b::cycle(4);
  CubeComplex c = CubeComplex::rose(b::words({"s1 s2 s3 s4", "s2 s3 s4 s1"}, four), four);
  c.fold_saturate();

  std::mt19937_64 rng(31337);
  std::vector<Word> loops;
  for (int trial = 0; trial < 200 && loops.size() < 12; ++trial) {
    Word w = oracle::random_word(rng, four, 2 + static_cast<int>(rng() % 10));
    if (c.trace(w).kind == TraceResult::Kind::Loop) loops.push_back(w);
  }
  CHECK(!loops.empty());

  for (int round = 0; round < 4; ++round) {
    c.attach_round();
    c.fold_saturate();
    for (const auto& w : loops) CHECK(c.trace(w).kind == TraceResult::Kind::Loop);
    for (int i = 0; i < c.cube_limit(); ++i) {
      if (!c.cube_alive(i)) continue;
      const CubeCell& cube = c.cube(i);
      for (size_t x = 0; x < cube.labels.size(); ++x)
        for (size_t y = x + 1; y < cube.labels.size(); ++y)
          CHECK(four.has_edge(cube.labels[x], cube.labels[y]));
    }
  }

  // After folding, a vertex never carries two edges of one label.
  for (int v = 0; v < c.vertex_limit(); ++v) {
    if (!c.vertex_alive(v)) continue;
    std::set<int> labels;
    for (int e : c.incident_edges(v)) {
      if (!c.edge_alive(e)) continue;
      CHECK(labels.insert(c.edge(e).label).second);
    }
  }
}
