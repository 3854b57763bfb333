#include "racg/curvature.hpp"

#include <algorithm>
#include <random>

#include "racg/errors.hpp"

namespace racg {

std::string Half::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Half kappa(const SimplicialGraph& g) {
  return Half{4 - 2ll * g.vertex_count() + g.edge_count()};
}

namespace {

// Connected, spurless, at least one edge; degrees within the induced
// subgraph.
bool is_section(const SimplicialGraph& g, const std::vector<int>& subset) {
  if (subset.size() < 3) return false;  // an edge alone is a spur pair
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : subset) in[static_cast<size_t>(v)] = 1;
  bool any_edge = false;
  for (int v : subset) {
    int deg = 0;
    for (int w : g.neighbors(v))
      if (in[static_cast<size_t>(w)]) ++deg;
    if (deg <= 1) return false;  // isolated vertex breaks connectivity; degree one is a spur
    any_edge = true;
  }
  if (!any_edge) return false;
  // Connectivity within the subset.
  std::vector<int> stack{subset[0]};
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(subset[0])] = 1;
  size_t visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!in[static_cast<size_t>(w)] || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      ++visited;
      stack.push_back(w);
    }
  }
  return visited == subset.size();
}

Half induced_kappa(const SimplicialGraph& g, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : subset) in[static_cast<size_t>(v)] = 1;
  long long edges = 0;
  for (int v : subset)
    for (int w : g.neighbors(v))
      if (w > v && in[static_cast<size_t>(w)]) ++edges;
  return Half{4 - 2ll * static_cast<long long>(subset.size()) + edges};
}

}  // namespace

void sections(const SimplicialGraph& g, int max_vertices,
              const std::function<bool(const SectionWitness&)>& emit) {
  if (max_vertices < 2) fail(ErrorCode::BadParameter, "section bound must be at least 2");
  int n = g.vertex_count();
  int cap = std::min(max_vertices, n);
  std::vector<int> subset;
  bool stopped = false;
  std::function<void(int, int)> extend = [&](int from, int want) {
    if (stopped) return;
    if (static_cast<int>(subset.size()) == want) {
      if (is_section(g, subset) &&
          !emit(SectionWitness{subset, induced_kappa(g, subset)}))
        stopped = true;
      return;
    }
    int remaining = want - static_cast<int>(subset.size());
    for (int v = from; v <= n - remaining && !stopped; ++v) {
      subset.push_back(v);
      extend(v + 1, want);
      subset.pop_back();
    }
  };
  for (int size = 3; size <= cap && !stopped; ++size) extend(0, size);
}

NpscResult check_npsc(const SimplicialGraph& g, int bound) {
  NpscResult result;
  result.bound = std::min(bound, g.vertex_count());
  sections(g, bound, [&](const SectionWitness& w) {
    if (w.kappa_value.positive()) {
      result.nonpositive = false;
      result.violation = w;
      return false;
    }
    return true;
  });
  return result;
}

NpscResult check_npsc_sampled(const SimplicialGraph& g, int bound, std::uint64_t seed,
                              long long samples, int sample_max_size) {
  NpscResult result = check_npsc(g, bound);
  if (!result.nonpositive || samples <= 0) return result;
  int n = g.vertex_count();
  int cap = std::min(sample_max_size, n);
  if (cap <= result.bound) return result;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_size(result.bound + 1, cap);
  std::vector<int> all(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
  for (long long i = 0; i < samples; ++i) {
    int size = pick_size(rng);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> subset(all.begin(), all.begin() + size);
    std::sort(subset.begin(), subset.end());
    if (!is_section(g, subset)) continue;
    Half k = induced_kappa(g, subset);
    if (k.positive()) {
      result.nonpositive = false;
      result.violation = SectionWitness{subset, k};
      return result;
    }
  }
  return result;
}

}  // namespace racg
