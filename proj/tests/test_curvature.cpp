#include <doctest.h>

#include <random>

#include "racg/curvature.hpp"
#include "racg/errors.hpp"
#include "racg/partite.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace racg;
namespace b = builders;

TEST_CASE("kappa formula") {
  CHECK(kappa(b::triangle()).twice == 1);  // 1/2
  CHECK(kappa(b::cycle(4)).twice == 0);
  CHECK(kappa(b::cycle(6)).twice == -2);  // -1
  CHECK(kappa(b::triangle()).str() == "1/2");
  CHECK(kappa(b::cycle(4)).str() == "0");
  CHECK(kappa(b::cycle(6)).str() == "-1");
}

TEST_CASE("sections: the 4-cycle admits exactly one section") {
  std::vector<SectionWitness> found;
  sections(b::cycle(4), 4, [&](const SectionWitness& w) {
    found.push_back(w);
    return true;
  });
  REQUIRE(found.size() == 1);
  CHECK(found[0].vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(found[0].kappa_value.twice == 0);
}

TEST_CASE("sections: triangle and edgeless stream") {
  std::vector<SectionWitness> tri;
  sections(b::triangle(), 3, [&](const SectionWitness& w) {
    tri.push_back(w);
    return true;
  });
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].kappa_value.twice == 1);

  int count = 0;
  sections(b::edgeless(4), 4, [&](const SectionWitness&) {
    ++count;
    return true;
  });
  CHECK(count == 0);
}

TEST_CASE("sections match a direct recount and the edge-add monotonicity") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
    sections(g, g.vertex_count(), [&](const SectionWitness& w) {
      SimplicialGraph sub = induced(g, w.vertices);
      CHECK(kappa(sub).twice == w.kappa_value.twice);
      CHECK(is_connected(sub));
      for (int v = 0; v < sub.vertex_count(); ++v) CHECK(sub.degree(v) >= 2);
      return true;
    });
  }
}

TEST_CASE("check_npsc: path-connector partite graphs over the 4-cycle") {
  PartiteGraph two = build_partite(b::cycle(4), 2, Connector::Path, true);
  REQUIRE(verify_partite(two).ok);
  NpscResult r2 = check_npsc(two.graph, two.graph.vertex_count());
  CHECK(r2.nonpositive);
  CHECK(r2.bound == 8);

  NpscResult tri = check_npsc(b::triangle(), 3);
  CHECK_FALSE(tri.nonpositive);
  REQUIRE(tri.violation.has_value());
  CHECK(tri.violation->kappa_value.twice == 1);

  NpscResult edge = check_npsc(b::single_edge(), 2);
  CHECK(edge.nonpositive);
}

TEST_CASE("violations re-validate") {
  std::mt19937_64 rng(8642);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialGraph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.5);
    NpscResult r = check_npsc(g, g.vertex_count());
    if (!r.violation) continue;
    SimplicialGraph sub = induced(g, r.violation->vertices);
    CHECK(is_connected(sub));
    for (int v = 0; v < sub.vertex_count(); ++v) CHECK(sub.degree(v) >= 2);
    CHECK(kappa(sub).positive());
  }
}

TEST_CASE("sampled mode finds violations beyond the exhaustive bound") {
  // K_{3,3}: the only positive section is the whole graph (kappa = 1/2), so
  // an exhaustive bound of 4 misses it and sampling must find it.
  auto k33 = b::graph({"u1", "u2", "u3", "v1", "v2", "v3"},
                      {{"u1", "v1"},
                       {"u1", "v2"},
                       {"u1", "v3"},
                       {"u2", "v1"},
                       {"u2", "v2"},
                       {"u2", "v3"},
                       {"u3", "v1"},
                       {"u3", "v2"},
                       {"u3", "v3"}});
  NpscResult exhaustive = check_npsc(k33, k33.vertex_count());
  REQUIRE_FALSE(exhaustive.nonpositive);
  CHECK(exhaustive.violation->vertices.size() == 6);

  NpscResult below = check_npsc(k33, 4);
  CHECK(below.nonpositive);  // honest: only up to the bound

  NpscResult sampled = check_npsc_sampled(k33, 4, 7, 500, k33.vertex_count());
  CHECK_FALSE(sampled.nonpositive);
  REQUIRE(sampled.violation.has_value());
  SimplicialGraph sub = induced(k33, sampled.violation->vertices);
  CHECK(kappa(sub).positive());
}

TEST_CASE("bad bound") { CHECK_THROWS_AS(check_npsc(b::cycle(4), 1), Error); }
