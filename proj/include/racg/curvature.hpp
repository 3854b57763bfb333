#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Exact half-integer; the curvature verdict is a sign test, so no floating
/// point anywhere.
struct Half {
  long long twice = 0;

  static Half from_twice(long long t) { return Half{t}; }
  bool positive() const { return twice > 0; }
  bool operator==(const Half& other) const { return twice == other.twice; }
  std::string str() const;
};

/// kappa = 2 - |V| + |E|/2.
Half kappa(const SimplicialGraph& g);

struct SectionWitness {
  std::vector<int> vertices;  // ascending
  Half kappa_value;
};

/// Emits every vertex subset (size <= max_vertices) whose induced subgraph
/// is connected, spurless and has an edge, in canonical order (size, then
/// lexicographic); stops when the callback returns false. Among subgraphs on
/// a fixed vertex set the induced one maximizes kappa, so induced subgraphs
/// suffice for verifying nonpositivity.
void sections(const SimplicialGraph& g, int max_vertices,
              const std::function<bool(const SectionWitness&)>& emit);

struct NpscResult {
  bool nonpositive = true;
  int bound = 0;  // exhaustive region: all sections on <= bound vertices
  std::optional<SectionWitness> violation;
};

/// Exhaustive nonpositive-sectional-curvature check up to the bound; returns
/// the first positive section in canonical order if one exists.
NpscResult check_npsc(const SimplicialGraph& g, int bound);

/// Exhaustive up to `bound`, then randomized sampling of larger subsets
/// (up to sample_max_size). A sampled violation is still a violation; the
/// nonpositive verdict only ever claims the exhaustive region.
NpscResult check_npsc_sampled(const SimplicialGraph& g, int bound, std::uint64_t seed,
                              long long samples, int sample_max_size);

}  // namespace racg
