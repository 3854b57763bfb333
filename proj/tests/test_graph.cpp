#include <doctest.h>

#include <random>

#include "racg/errors.hpp"
#include "racg/graph.hpp"
#include "racg/io.hpp"
#include "racg/partite.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace racg;
namespace b = builders;

TEST_CASE("load_graph parses and validates") {
  SimplicialGraph g = load_graph(R"({"vertices":["s1","s2"],"edges":[]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);

  SimplicialGraph four = load_graph(
      R"({"vertices":["s1","s2","s3","s4"],
          "edges":[["s1","s2"],["s2","s3"],["s3","s4"],["s4","s1"]]})");
  CHECK(four.edge_count() == 4);
  CHECK(four.has_edge(0, 1));
  CHECK(four.has_edge(3, 0));
  CHECK_FALSE(four.has_edge(0, 2));

  CHECK_THROWS_AS(load_graph(R"({"vertices":["s1"],"edges":[["s1","s1"]]})"), Error);
  CHECK_THROWS_AS(load_graph(R"({"vertices":["s1","s2"],"edges":[["s1","s2"],["s2","s1"]]})"),
                  Error);
  CHECK_THROWS_AS(load_graph(R"({"vertices":["s1"],"edges":[["s1","s9"]]})"), Error);
  CHECK_THROWS_AS(load_graph("not json"), Error);

  // Vertex order is the file order, not name order.
  SimplicialGraph reversed = load_graph(R"({"vertices":["z","a"],"edges":[["z","a"]]})");
  CHECK(reversed.name(0) == "z");
  CHECK(reversed.index_of("a") == 1);
}

TEST_CASE("small_cycle_report on the stock examples") {
  CycleReport four = small_cycle_report(b::cycle(4));
  CHECK_FALSE(four.has_triangle);
  CHECK(four.has_simple_4cycle);
  CHECK(four.has_induced_4cycle);

  CycleReport tri = small_cycle_report(b::triangle());
  CHECK(tri.has_triangle);
  CHECK_FALSE(tri.has_simple_4cycle);
  CHECK_FALSE(tri.has_induced_4cycle);

  CHECK(tri.triangle.has_value());
  auto [x, y, z] = *tri.triangle;
  CHECK(tri.has_triangle);
  CHECK(b::triangle().has_edge(x, y));
  CHECK(b::triangle().has_edge(y, z));
  CHECK(b::triangle().has_edge(x, z));
}

TEST_CASE("small_cycle_report witnesses verify on the partite build") {
  PartiteGraph delta = build_partite(b::cycle(4), 649, Connector::Cycle);
  CycleReport report = small_cycle_report(delta.graph);
  CHECK_FALSE(report.has_triangle);
  CHECK_FALSE(report.has_simple_4cycle);
  CHECK_FALSE(report.has_induced_4cycle);
}

TEST_CASE("small_cycle_report agrees with exhaustive enumeration") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);  // up to 10 vertices
    SimplicialGraph g = oracle::random_graph(rng, n, 0.35);
    oracle::BruteCycles expect = oracle::brute_small_cycles(g);
    CycleReport got = small_cycle_report(g);
    CHECK(got.has_triangle == expect.triangle);
    CHECK(got.has_simple_4cycle == expect.simple4);
    CHECK(got.has_induced_4cycle == expect.induced4);
    if (got.has_induced_4cycle) CHECK(got.has_simple_4cycle);
    if (got.simple4) {
      auto q = *got.simple4;
      CHECK(g.has_edge(q[0], q[1]));
      CHECK(g.has_edge(q[1], q[2]));
      CHECK(g.has_edge(q[2], q[3]));
      CHECK(g.has_edge(q[3], q[0]));
    }
    if (got.induced4) {
      auto q = *got.induced4;
      CHECK_FALSE(g.has_edge(q[0], q[2]));
      CHECK_FALSE(g.has_edge(q[1], q[3]));
    }
  }
}

TEST_CASE("cliques: examples and oracle agreement") {
  CliqueReport pair = cliques(b::edgeless(2));
  CHECK(pair.maximal == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(pair.max_size == 1);

  CliqueReport edge = cliques(b::single_edge());
  CHECK(edge.maximal == std::vector<std::vector<int>>{{0, 1}});
  CHECK(edge.max_size == 2);

  CliqueReport four = cliques(b::cycle(4));
  CHECK(four.maximal == std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(four.max_size == 2);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
    CHECK(cliques(g).maximal == oracle::brute_maximal_cliques(g));
  }
}

TEST_CASE("cone vertex detection") {
  auto path = b::path3();
  auto cone = cone_vertex(path);
  REQUIRE(cone.has_value());
  CHECK(*cone == 1);
  CHECK(path.degree(*cone) == path.vertex_count() - 1);

  CHECK_FALSE(cone_vertex(b::cycle(4)).has_value());
  CHECK(cone_vertex(b::graph({"s1"}, {})).has_value());
}

TEST_CASE("one_ended_certificate on the stock examples") {
  EndsVerdict two = one_ended_certificate(b::edgeless(2));
  CHECK(two.kind == EndsKind::Disconnected);
  CHECK_FALSE(two.witness.has_value());

  EndsVerdict path = one_ended_certificate(b::path3());
  CHECK(path.kind == EndsKind::CliqueSeparated);
  REQUIRE(path.witness.has_value());
  CHECK(*path.witness == std::vector<int>{1});

  CHECK(one_ended_certificate(b::cycle(4)).kind == EndsKind::OneEnded);
  CHECK(one_ended_certificate(b::triangle()).kind == EndsKind::Clique);
  CHECK(one_ended_certificate(b::graph({"s1"}, {})).kind == EndsKind::Clique);
}

namespace {

// Exhaustive check of the verdict against all clique removals.
void check_ends_verdict(const SimplicialGraph& g) {
  EndsVerdict v = one_ended_certificate(g);
  switch (v.kind) {
    case EndsKind::Disconnected:
      CHECK(component_count_after_removal(g, {}) >= 2);
      break;
    case EndsKind::Clique:
      CHECK(g.is_clique());
      break;
    case EndsKind::CliqueSeparated: {
      REQUIRE(v.witness.has_value());
      const auto& w = *v.witness;
      for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) CHECK(g.has_edge(w[i], w[j]));
      CHECK(component_count_after_removal(g, w) >= 2);
      break;
    }
    case EndsKind::OneEnded: {
      CHECK(component_count_after_removal(g, {}) == 1);
      CHECK_FALSE(g.is_clique());
      // No clique separates: enumerate all clique subsets.
      int n = g.vertex_count();
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int x = 0; x < n; ++x)
          if (mask & (1 << x)) subset.push_back(x);
        bool clique = true;
        for (size_t i = 0; i < subset.size() && clique; ++i)
          for (size_t j = i + 1; j < subset.size(); ++j)
            if (!g.has_edge(subset[i], subset[j])) {
              clique = false;
              break;
            }
        if (!clique || static_cast<int>(subset.size()) == n) continue;
        CHECK(component_count_after_removal(g, subset) <= 1);
      }
      break;
    }
  }
}

}  // namespace

TEST_CASE("one_ended_certificate verdicts verify exhaustively") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.4);
    check_ends_verdict(g);
  }
}

TEST_CASE("induced subgraphs") {
  auto four = b::cycle(4);
  SimplicialGraph edge = induced_by_names(four, {"s1", "s2"});
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.edge_count() == 1);

  SimplicialGraph diag = induced_by_names(four, {"s1", "s3"});
  CHECK(diag.edge_count() == 0);

  SimplicialGraph all = induced(four, {0, 1, 2, 3});
  CHECK(all == four);

  CHECK_THROWS_AS(induced_by_names(four, {"nope"}), Error);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.5);
    std::vector<int> subset;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) subset.push_back(v);
    SimplicialGraph sub = induced(g, subset);
    // Edges of the induced graph = edges of g inside the subset.
    int expected = 0;
    for (size_t i = 0; i < subset.size(); ++i)
      for (size_t j = i + 1; j < subset.size(); ++j)
        if (g.has_edge(subset[i], subset[j])) ++expected;
    CHECK(sub.edge_count() == expected);
    for (auto [u, v] : sub.edges())
      CHECK(g.has_edge(g.index_of(sub.name(u)), g.index_of(sub.name(v))));
  }
}
