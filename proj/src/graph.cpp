#include "racg/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "racg/errors.hpp"

namespace racg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotFolded: return "NotFolded";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::NotAGeneralization: return "NotAGeneralization";
    case ErrorCode::LabelOutsideBase: return "LabelOutsideBase";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InfiniteComplex: return "InfiniteComplex";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Error";
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) fail(ErrorCode::ValidationError, "empty vertex name");
    auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
    if (!inserted) fail(ErrorCode::ValidationError, "duplicate vertex name: " + names_[i]);
  }
  adj_.assign(names_.size(), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end()) fail(ErrorCode::ValidationError, "edge endpoint not a vertex: " + a);
    if (ib == index_.end()) fail(ErrorCode::ValidationError, "edge endpoint not a vertex: " + b);
    int u = ia->second, v = ib->second;
    if (u == v) fail(ErrorCode::ValidationError, "self-loop at vertex: " + a);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      fail(ErrorCode::ValidationError, "duplicate edge: " + a + " -- " + b);
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int SimplicialGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorCode::UnknownVertex, "unknown vertex: " + name);
  return it->second;
}

std::optional<int> SimplicialGraph::try_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  const auto& nbrs = adj_[static_cast<size_t>(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool SimplicialGraph::is_clique() const {
  long long n = vertex_count();
  return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

bool SimplicialGraph::operator==(const SimplicialGraph& other) const {
  return names_ == other.names_ && edges_ == other.edges_;
}

CycleReport small_cycle_report(const SimplicialGraph& g) {
  CycleReport report;
  for (auto [u, v] : g.edges()) {
    if (report.has_triangle) break;
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty()) {
      report.has_triangle = true;
      report.triangle = {u, v, common.front()};
    }
  }

  // All pairs with >= 2 common neighbors, via the wedges through each middle
  // vertex: O(sum deg^2) instead of subset enumeration.
  std::map<std::pair<int, int>, std::vector<int>> middles;
  for (int w = 0; w < g.vertex_count(); ++w) {
    const auto& nbrs = g.neighbors(w);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j)
        middles[{nbrs[i], nbrs[j]}].push_back(w);
  }
  for (const auto& [pair, mids] : middles) {
    if (mids.size() < 2) continue;
    auto [u, v] = pair;
    if (!report.has_simple_4cycle) {
      report.has_simple_4cycle = true;
      report.simple4 = {u, mids[0], v, mids[1]};
    }
    if (!report.has_induced_4cycle && !g.has_edge(u, v)) {
      for (size_t i = 0; i < mids.size() && !report.has_induced_4cycle; ++i)
        for (size_t j = i + 1; j < mids.size(); ++j)
          if (!g.has_edge(mids[i], mids[j])) {
            report.has_induced_4cycle = true;
            report.induced4 = {u, mids[i], v, mids[j]};
            break;
          }
    }
    if (report.has_simple_4cycle && report.has_induced_4cycle) break;
  }
  return report;
}

namespace {

void bron_kerbosch(const SimplicialGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (int u : p) {
    const auto& nbrs = g.neighbors(u);
    std::vector<int> inter;
    std::set_intersection(p.begin(), p.end(), nbrs.begin(), nbrs.end(), std::back_inserter(inter));
    if (pivot < 0 || inter.size() > best) {
      pivot = u;
      best = inter.size();
    }
  }
  for (int u : x) {
    const auto& nbrs = g.neighbors(u);
    std::vector<int> inter;
    std::set_intersection(p.begin(), p.end(), nbrs.begin(), nbrs.end(), std::back_inserter(inter));
    if (pivot < 0 || inter.size() > best) {
      pivot = u;
      best = inter.size();
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !g.has_edge(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    const auto& nbrs = g.neighbors(v);
    std::vector<int> np, nx;
    std::set_intersection(p.begin(), p.end(), nbrs.begin(), nbrs.end(), std::back_inserter(np));
    std::set_intersection(x.begin(), x.end(), nbrs.begin(), nbrs.end(), std::back_inserter(nx));
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    auto pos = std::lower_bound(x.begin(), x.end(), v);
    x.insert(pos, v);
  }
}

}  // namespace

CliqueReport cliques(const SimplicialGraph& g) {
  CliqueReport report;
  std::vector<int> all(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
  std::vector<int> r;
  bron_kerbosch(g, r, all, {}, report.maximal);
  for (auto& clique : report.maximal) std::sort(clique.begin(), clique.end());
  std::sort(report.maximal.begin(), report.maximal.end());
  for (const auto& c : report.maximal)
    report.max_size = std::max(report.max_size, static_cast<int>(c.size()));
  return report;
}

int max_clique_size(const SimplicialGraph& g) { return cliques(g).max_size; }

std::optional<int> cone_vertex(const SimplicialGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) return v;
  return std::nullopt;
}

bool is_connected(const SimplicialGraph& g) {
  return component_count_after_removal(g, {}) <= 1;
}

int component_count_after_removal(const SimplicialGraph& g, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : removed) gone[static_cast<size_t>(v)] = 1;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (gone[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
    ++components;
    stack.push_back(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (gone[static_cast<size_t>(w)] || seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return components;
}

namespace {

// All cliques of the given size, ascending lexicographic, passed to visit
// until it returns true.
bool for_each_clique_of_size(const SimplicialGraph& g, int size,
                             const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<bool(int)> extend = [&](int from) -> bool {
    if (static_cast<int>(current.size()) == size) return visit(current);
    for (int v = from; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (int u : current)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      if (extend(v + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  return extend(0);
}

}  // namespace

EndsVerdict one_ended_certificate(const SimplicialGraph& g) {
  if (g.vertex_count() == 0) return {EndsKind::Clique, std::vector<int>{}};
  if (!is_connected(g)) return {EndsKind::Disconnected, std::nullopt};
  if (g.is_clique()) {
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    return {EndsKind::Clique, all};
  }
  int cap = max_clique_size(g);
  for (int size = 1; size <= cap; ++size) {
    std::vector<int> found;
    bool hit = for_each_clique_of_size(g, size, [&](const std::vector<int>& c) {
      if (static_cast<int>(c.size()) >= g.vertex_count()) return false;
      if (component_count_after_removal(g, c) >= 2) {
        found = c;
        return true;
      }
      return false;
    });
    if (hit) return {EndsKind::CliqueSeparated, found};
  }
  return {EndsKind::OneEnded, std::nullopt};
}

SimplicialGraph induced(const SimplicialGraph& g, const std::vector<int>& vertices) {
  std::vector<char> pick(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : vertices) {
    if (!g.has_vertex(v)) fail(ErrorCode::UnknownVertex, "vertex index out of range");
    pick[static_cast<size_t>(v)] = 1;
  }
  std::vector<std::string> names;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (pick[static_cast<size_t>(v)]) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges())
    if (pick[static_cast<size_t>(u)] && pick[static_cast<size_t>(v)])
      edges.emplace_back(g.name(u), g.name(v));
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph induced_by_names(const SimplicialGraph& g, const std::vector<std::string>& names) {
  std::vector<int> vertices;
  vertices.reserve(names.size());
  for (const auto& n : names) vertices.push_back(g.index_of(n));
  return induced(g, vertices);
}

}  // namespace racg
