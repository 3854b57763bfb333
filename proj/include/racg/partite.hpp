#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/word.hpp"

namespace racg {

enum class Connector { Cycle, Path };

/// A graph partitioned into parts indexed by the vertices of a base graph:
/// no edges inside a part; for each base edge the connector (the subgraph
/// induced by the two parts) is connected, and edgeless otherwise.
struct PartiteGraph {
  SimplicialGraph graph;  // Delta
  SimplicialGraph base;   // Gamma
  std::vector<std::vector<int>> parts;  // per base vertex, ascending Delta indices
  Connector connector = Connector::Cycle;
  long long k = 0;  // part size used by the explicit construction

  /// Part index of a Delta vertex, or -1 if uncovered.
  int part_of(int delta_vertex) const;
};

PartiteGraph make_partite(SimplicialGraph delta, SimplicialGraph base,
                          std::vector<std::vector<std::string>> part_names, Connector connector,
                          long long k);

/// Explicit square-free construction: parts of size k (k > 8 * 3^E, k not
/// divisible by 3), with the p-th base edge, oriented low-to-high, joining
/// a^x_l to a^y_{l+3^p} and a^y_{l+2*3^p} mod k. Path connectors drop the
/// canonically first connector edge (a^x_0, a^y_{3^p}). Vertex names are
/// "a{i}_{l}" with 1-based part index i. If k is absent the smallest valid
/// value is chosen; `force` admits smaller k for experimentation.
PartiteGraph build_partite(const SimplicialGraph& g, std::optional<long long> k, Connector kind,
                           bool force = false);

long long smallest_valid_k(const SimplicialGraph& g);

struct PartiteViolation {
  std::string rule;
  std::string detail;
};

struct PartiteVerdict {
  bool ok = true;
  std::optional<PartiteViolation> violation;
};

/// Checks part disjointness and coverage, intra-part edgelessness, per-pair
/// connectivity against the base graph, and the declared connector shape.
/// Returns the first violation found.
PartiteVerdict verify_partite(const PartiteGraph& p);

/// Cycle graph with vertices p1..p{two_k} in cyclic order.
SimplicialGraph surface_cycle_graph(int two_k);

/// Generator words {p1 pi : i odd, i > 1} and {p2 pi : i even, i > 2} over
/// the cycle graph; the subgroup they generate is a closed hyperbolic
/// surface group. Requires two_k even and >= 6.
std::vector<Word> surface_generators(int two_k);

}  // namespace racg
