#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "racg/graph.hpp"
#include "racg/word.hpp"

namespace racg {

/// A d-cube (d >= 2) given by its corner map. Axes are sorted by label
/// index; corner `mask` assigns one bit per axis. The edge along axis `a`
/// at corner `mask` (bit a clear) joins corners `mask` and `mask | 1<<a`.
/// Edges are stored axis-major, indexed by the mask with bit `a` removed.
/// Cells are kept in a canonical orientation: the lexicographically least
/// (corners, edges) tuple over the 2^d axis reflections, which are exactly
/// the label-preserving symmetries of a cube with distinct axis labels.
struct CubeCell {
  std::vector<int> labels;   // strictly ascending, size d
  std::vector<int> corners;  // 2^d vertex ids
  std::vector<int> edges;    // d * 2^(d-1) edge ids
  bool alive = true;

  int dim() const { return static_cast<int>(labels.size()); }
  int corner(int mask) const { return corners[static_cast<size_t>(mask)]; }
  int edge(int axis, int mask) const;  // mask has bit `axis` clear
  std::vector<int> key() const;        // identity key: labels ++ corners ++ edges
};

struct EdgeRec {
  int u = -1, v = -1;  // unordered; u == v for a self-loop
  int label = -1;
  bool alive = true;
};

struct FoldStats {
  long long folds = 0;
  long long identifications = 0;
  long long total() const { return folds + identifications; }
};

struct ComplexStatus {
  bool folded = false;
  bool cube_full = false;
};

struct TraceResult {
  enum class Kind { Loop, PathEndsAt, Stuck };
  Kind kind = Kind::Loop;
  int vertex = -1;    // end vertex (PathEndsAt) or stuck vertex (Stuck)
  int position = -1;  // index of the letter with no matching edge (Stuck)
};

struct TorsionWitness {
  int vertex = -1;
  Word word;  // distinct letters spanning a clique; closed walk at `vertex`
};

/// Labeled cube complex over a fixed defining graph. Vertex, edge and cube
/// ids are allocation-ordered and never reused; folds keep the smaller id.
class CubeComplex {
 public:
  explicit CubeComplex(std::shared_ptr<const SimplicialGraph> graph);

  /// One base vertex; a cycle of fresh edges per word, labeled in order.
  static CubeComplex rose(const std::vector<Word>& words, const SimplicialGraph& graph);
  static CubeComplex rose(const std::vector<Word>& words,
                          std::shared_ptr<const SimplicialGraph> graph);

  struct EdgeSpec {
    int id, u, v, label;
  };

  /// Rebuilds a complex from serialized parts. Ids may be sparse; unlisted
  /// slots below the maximum id become dead, so allocation order matches ids.
  static CubeComplex reconstruct(std::shared_ptr<const SimplicialGraph> graph, int base,
                                 const std::vector<int>& vertex_ids,
                                 const std::vector<EdgeSpec>& edges, std::vector<CubeCell> cubes);

  const SimplicialGraph& graph() const { return *graph_; }
  const std::shared_ptr<const SimplicialGraph>& graph_ptr() const { return graph_; }

  int base() const { return base_; }
  void set_base(int v);

  int add_vertex();
  int add_edge(int u, int v, int label);
  /// Validates incidence and labels, normalizes orientation.
  int add_cube(CubeCell cube);

  long long vertex_count() const { return live_vertices_; }
  long long edge_count() const { return live_edges_; }
  long long cube_count() const;
  long long cube_count(int dim) const;

  int vertex_limit() const { return static_cast<int>(vertex_alive_.size()); }
  int edge_limit() const { return static_cast<int>(edges_.size()); }
  int cube_limit() const { return static_cast<int>(cubes_.size()); }

  bool vertex_alive(int v) const { return vertex_alive_[static_cast<size_t>(v)]; }
  bool edge_alive(int e) const { return edges_[static_cast<size_t>(e)].alive; }
  bool cube_alive(int c) const { return cubes_[static_cast<size_t>(c)].alive; }
  const EdgeRec& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const CubeCell& cube(int c) const { return cubes_[static_cast<size_t>(c)]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<size_t>(v)]; }

  int far_end(int e, int from) const;
  /// Unique matching edge on a folded complex; first match otherwise.
  std::optional<int> edge_at(int v, int label) const;

  /// Folds same-label edge pairs at shared vertices (canonical order: lowest
  /// (vertex id, label) first, lowest edge ids merged, smaller ids survive),
  /// then identifies cubes with equal boundary, until neither applies.
  /// A seed picks random fold sites instead of canonical ones.
  FoldStats fold_saturate(std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  /// Attaches one d-cube per uncovered site (vertex + incident edges with
  /// distinct labels spanning a d-clique not yet contained in a common
  /// d-cube), serving all sites present at round start; returns the number
  /// attached. Faces of attached cubes of dimension >= 3 are materialized as
  /// cells. Requires a folded complex.
  long long attach_round(std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  bool is_folded() const;
  ComplexStatus status() const;

  /// Walks the word letter by letter from the base vertex. Requires folded.
  TraceResult trace(const Word& w) const;

  /// First closed walk (vertex id, then walk length, then lexicographic label
  /// sequence) whose labels are distinct and span a clique. Requires folded.
  std::optional<TorsionWitness> torsion_scan() const;

  /// True iff every vertex meets an edge of every label. Requires folded.
  bool vertex_fullness() const;

  long long euler_characteristic() const;

 private:
  friend bool based_isomorphic(const CubeComplex& a, const CubeComplex& b);

  struct Site {
    int vertex;
    std::vector<int> edge_ids;  // ascending by label
    std::vector<int> labels;    // ascending
  };

  void require_folded(const char* op) const;
  void validate_cube(const CubeCell& cube) const;
  std::vector<std::vector<int>> build_edge_to_cubes() const;
  void index_cubes_from(int first_cube, std::vector<std::vector<int>>& edge_to_cubes) const;
  std::vector<Site> collect_uncovered_sites(const std::vector<std::vector<int>>& edge_to_cubes,
                                            bool first_only) const;
  bool site_covered(const std::vector<std::vector<int>>& edge_to_cubes, int dim,
                    const std::vector<int>& edge_ids) const;
  int attach_cube_at(const Site& site);

  std::shared_ptr<const SimplicialGraph> graph_;
  int base_ = -1;
  std::vector<char> vertex_alive_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<int>> incident_;  // live edge ids per vertex; self-loop once
  std::vector<CubeCell> cubes_;
  long long live_vertices_ = 0;
  long long live_edges_ = 0;
  std::vector<long long> live_cubes_by_dim_;
};

/// Label- and base-preserving isomorphism test for folded complexes over
/// equal graphs, by deterministic simultaneous traversal from the bases
/// followed by cube-set comparison.
bool based_isomorphic(const CubeComplex& a, const CubeComplex& b);

void normalize_cube_orientation(CubeCell& cube);

}  // namespace racg
