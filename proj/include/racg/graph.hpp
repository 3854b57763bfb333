#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace racg {

/// Finite simplicial graph: named vertices, undirected edges, no loops or
/// multi-edges. The declaration order of the vertices is the canonical
/// generator order used by every downstream ordering (ShortLex, fold sites,
/// attachment sites).
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }

  /// Throws UnknownVertex.
  int index_of(const std::string& name) const;
  std::optional<int> try_index(const std::string& name) const;

  bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  /// Edges in canonical order: (a, b) with a < b, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_clique() const;
  bool operator==(const SimplicialGraph& other) const;
  bool operator!=(const SimplicialGraph& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct CycleReport {
  bool has_triangle = false;
  std::optional<std::array<int, 3>> triangle;  // pairwise adjacent
  bool has_simple_4cycle = false;
  std::optional<std::array<int, 4>> simple4;  // cyclic order
  bool has_induced_4cycle = false;
  std::optional<std::array<int, 4>> induced4;  // cyclic order, diagonals absent
};

/// Exact triangle / simple 4-cycle / induced 4-cycle detection with verified
/// witnesses. Simple 4-cycles are found by counting common neighbors of
/// vertex pairs, so this stays fast at partite scale.
CycleReport small_cycle_report(const SimplicialGraph& g);

struct CliqueReport {
  std::vector<std::vector<int>> maximal;  // each ascending; list sorted
  int max_size = 0;
};

CliqueReport cliques(const SimplicialGraph& g);
int max_clique_size(const SimplicialGraph& g);

/// Vertex adjacent to every other vertex, if one exists.
std::optional<int> cone_vertex(const SimplicialGraph& g);

enum class EndsKind { Clique, Disconnected, CliqueSeparated, OneEnded };

struct EndsVerdict {
  EndsKind kind;
  std::optional<std::vector<int>> witness;  // the clique or the separator
};

/// OneEnded iff connected, not a clique, and no clique separates the graph.
/// Exhaustive over all cliques; intended for graphs where clique enumeration
/// is tractable (in particular anything triangle-free).
EndsVerdict one_ended_certificate(const SimplicialGraph& g);

/// Induced subgraph on the given vertices; order inherited from g.
SimplicialGraph induced(const SimplicialGraph& g, const std::vector<int>& vertices);
SimplicialGraph induced_by_names(const SimplicialGraph& g, const std::vector<std::string>& names);

bool is_connected(const SimplicialGraph& g);

/// Component id per vertex after deleting `removed` (ids -1 for removed).
int component_count_after_removal(const SimplicialGraph& g, const std::vector<int>& removed);

}  // namespace racg
