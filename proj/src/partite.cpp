#include "racg/partite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "racg/errors.hpp"

namespace racg {

int PartiteGraph::part_of(int delta_vertex) const {
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i])
      if (v == delta_vertex) return static_cast<int>(i);
  return -1;
}

PartiteGraph make_partite(SimplicialGraph delta, SimplicialGraph base,
                          std::vector<std::vector<std::string>> part_names, Connector connector,
                          long long k) {
  if (static_cast<int>(part_names.size()) != base.vertex_count())
    fail(ErrorCode::ValidationError, "decomposition must have one part per base vertex");
  PartiteGraph p;
  p.parts.reserve(part_names.size());
  for (const auto& names : part_names) {
    std::vector<int> part;
    part.reserve(names.size());
    for (const auto& n : names) part.push_back(delta.index_of(n));
    std::sort(part.begin(), part.end());
    p.parts.push_back(std::move(part));
  }
  p.graph = std::move(delta);
  p.base = std::move(base);
  p.connector = connector;
  p.k = k;
  return p;
}

namespace {

long long partite_k_bound(const SimplicialGraph& g) {
  long long pow = 1;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (pow > (1ll << 60) / 3) fail(ErrorCode::Overflow, "3^E overflows; graph has too many edges");
    pow *= 3;
  }
  return 8 * pow;
}

}  // namespace

long long smallest_valid_k(const SimplicialGraph& g) {
  long long k = partite_k_bound(g) + 1;
  while (k % 3 == 0) ++k;
  return k;
}

PartiteGraph build_partite(const SimplicialGraph& g, std::optional<long long> k_opt,
                           Connector kind, bool force) {
  if (g.vertex_count() == 0) fail(ErrorCode::ValidationError, "base graph must have vertices");
  long long k = k_opt.value_or(smallest_valid_k(g));
  if (k < 2) fail(ErrorCode::InvalidK, "k must be at least 2");
  if (!force) {
    long long bound = partite_k_bound(g);
    if (k <= bound) fail(ErrorCode::InvalidK, "k must exceed 8 * 3^E = " + std::to_string(bound));
    if (k % 3 == 0) fail(ErrorCode::InvalidK, "k must not be divisible by 3");
  }

  int n = g.vertex_count();
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n) * static_cast<size_t>(k));
  std::vector<std::vector<std::string>> part_names(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& part = part_names[static_cast<size_t>(i)];
    part.reserve(static_cast<size_t>(k));
    for (long long l = 0; l < k; ++l) {
      part.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(l));
      names.push_back(part.back());
    }
  }

  // Always written (x-part name, y-part name), so set membership is exact.
  std::set<std::pair<std::string, std::string>> edge_set;
  std::set<std::pair<std::string, std::string>> removed;
  long long offset = 1;
  for (size_t p = 0; p < g.edges().size(); ++p) {
    // Edge e_{p+1}, oriented from the lower to the higher vertex index.
    offset = (offset * 3) % k;
    long long off2 = (2 * offset) % k;
    auto [x, y] = g.edges()[p];
    const auto& ax = part_names[static_cast<size_t>(x)];
    const auto& ay = part_names[static_cast<size_t>(y)];
    if (kind == Connector::Path) removed.insert({ax[0], ay[static_cast<size_t>(offset)]});
    for (long long l = 0; l < k; ++l) {
      edge_set.insert({ax[static_cast<size_t>(l)], ay[static_cast<size_t>((l + offset) % k)]});
      edge_set.insert({ax[static_cast<size_t>(l)], ay[static_cast<size_t>((l + off2) % k)]});
    }
  }
  for (const auto& e : removed) edge_set.erase(e);
  std::vector<std::pair<std::string, std::string>> edges(edge_set.begin(), edge_set.end());

  SimplicialGraph delta(std::move(names), edges);
  return make_partite(std::move(delta), g, std::move(part_names), kind, k);
}

namespace {

// Connector subgraph on two parts: degree within the pair, per vertex.
struct PairView {
  std::vector<int> members;  // Delta vertices of both parts
  std::vector<std::pair<int, int>> edges;
};

PairView pair_view(const PartiteGraph& p, int i, int j) {
  PairView view;
  std::vector<char> in_pair(static_cast<size_t>(p.graph.vertex_count()), 0);
  for (int v : p.parts[static_cast<size_t>(i)]) {
    in_pair[static_cast<size_t>(v)] = 1;
    view.members.push_back(v);
  }
  for (int v : p.parts[static_cast<size_t>(j)]) {
    in_pair[static_cast<size_t>(v)] = 1;
    view.members.push_back(v);
  }
  for (auto [u, v] : p.graph.edges())
    if (in_pair[static_cast<size_t>(u)] && in_pair[static_cast<size_t>(v)])
      view.edges.emplace_back(u, v);
  return view;
}

bool pair_connected(const PairView& view) {
  if (view.members.empty()) return true;
  std::map<int, std::vector<int>> adj;
  for (int v : view.members) adj[v];
  for (auto [u, v] : view.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{view.members.front()};
  std::vector<int> stack{view.members.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == view.members.size();
}

// Cycle: connected and 2-regular. Simple path: connected, no vertex of
// degree > 2, exactly two of degree 1.
bool pair_is_cycle(const PairView& view) {
  std::map<int, int> deg;
  for (auto [u, v] : view.edges) {
    ++deg[u];
    ++deg[v];
  }
  if (deg.size() != view.members.size()) return false;
  for (auto [v, d] : deg)
    if (d != 2) return false;
  return pair_connected(view);
}

bool pair_is_path(const PairView& view) {
  std::map<int, int> deg;
  for (auto [u, v] : view.edges) {
    ++deg[u];
    ++deg[v];
  }
  if (deg.size() != view.members.size()) return false;
  int ones = 0;
  for (auto [v, d] : deg) {
    if (d > 2) return false;
    if (d == 1) ++ones;
  }
  return ones == 2 && pair_connected(view);
}

}  // namespace

PartiteVerdict verify_partite(const PartiteGraph& p) {
  auto violate = [](std::string rule, std::string detail) {
    return PartiteVerdict{false, PartiteViolation{std::move(rule), std::move(detail)}};
  };
  if (static_cast<int>(p.parts.size()) != p.base.vertex_count())
    return violate("decomposition", "part count differs from base vertex count");

  std::vector<int> owner(static_cast<size_t>(p.graph.vertex_count()), -1);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty())
      return violate("nonempty-parts", "part " + p.base.name(static_cast<int>(i)) + " is empty");
    for (int v : p.parts[i]) {
      if (v < 0 || v >= p.graph.vertex_count())
        return violate("decomposition", "part member out of range");
      if (owner[static_cast<size_t>(v)] != -1)
        return violate("disjoint-parts", "vertex " + p.graph.name(v) + " lies in two parts");
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < p.graph.vertex_count(); ++v)
    if (owner[static_cast<size_t>(v)] == -1)
      return violate("coverage", "vertex " + p.graph.name(v) + " lies in no part");

  for (auto [u, v] : p.graph.edges())
    if (owner[static_cast<size_t>(u)] == owner[static_cast<size_t>(v)])
      return violate("intra-part-edge", "edge " + p.graph.name(u) + " -- " + p.graph.name(v) +
                                            " joins two vertices of part " +
                                            p.base.name(owner[static_cast<size_t>(u)]));

  for (int i = 0; i < p.base.vertex_count(); ++i)
    for (int j = i + 1; j < p.base.vertex_count(); ++j) {
      PairView view = pair_view(p, i, j);
      std::string pair_name = p.base.name(i) + "," + p.base.name(j);
      if (p.base.has_edge(i, j)) {
        if (!pair_connected(view))
          return violate("connector-connected", "connector " + pair_name + " is disconnected");
        if (p.connector == Connector::Cycle && !pair_is_cycle(view))
          return violate("connector-shape", "connector " + pair_name + " is not a cycle");
        if (p.connector == Connector::Path && !pair_is_path(view))
          return violate("connector-shape", "connector " + pair_name + " is not a simple path");
      } else if (!view.edges.empty()) {
        return violate("connector-edgeless",
                       "parts " + pair_name + " are joined but the base vertices are not adjacent");
      }
    }
  return PartiteVerdict{};
}

SimplicialGraph surface_cycle_graph(int two_k) {
  if (two_k < 3) fail(ErrorCode::BadParameter, "cycle graph needs at least 3 vertices");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(two_k));
  for (int i = 1; i <= two_k; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < two_k; ++i)
    edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>((i + 1) % two_k)]);
  return SimplicialGraph(std::move(names), edges);
}

std::vector<Word> surface_generators(int two_k) {
  if (two_k < 6 || two_k % 2 != 0)
    fail(ErrorCode::BadParameter, "surface generators need an even parameter >= 6");
  std::vector<Word> words;
  for (int i = 3; i <= two_k; i += 2) words.push_back(Word{{0, i - 1}});      // p1 pi, i odd
  for (int i = 4; i <= two_k; i += 2) words.push_back(Word{{1, i - 1}});      // p2 pi, i even
  return words;
}

}  // namespace racg
