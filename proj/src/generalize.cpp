#include "racg/generalize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <unordered_map>

#include "racg/errors.hpp"

namespace racg {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Base label of each source-complex label under the decomposition, or the
// part of each partite vertex.
std::vector<int> part_owner(const PartiteGraph& p) {
  std::vector<int> owner(static_cast<size_t>(p.graph.vertex_count()), -1);
  for (size_t i = 0; i < p.parts.size(); ++i)
    for (int v : p.parts[i]) owner[static_cast<size_t>(v)] = static_cast<int>(i);
  return owner;
}

}  // namespace

Generalization generalize_complex(const CubeComplex& sigma, const PartiteGraph& p) {
  const SimplicialGraph& gamma = sigma.graph();
  // Source labels must name base vertices of the decomposition set.
  std::vector<int> to_base(static_cast<size_t>(gamma.vertex_count()), -1);
  for (int s = 0; s < gamma.vertex_count(); ++s) {
    auto idx = p.base.try_index(gamma.name(s));
    if (!idx)
      fail(ErrorCode::LabelOutsideBase, "label " + gamma.name(s) + " is not a base vertex");
    to_base[static_cast<size_t>(s)] = *idx;
  }

  Generalization out{CubeComplex(std::make_shared<SimplicialGraph>(p.graph))};
  CubeComplex& bar = out.complex;

  std::vector<int> vertex_of(static_cast<size_t>(sigma.vertex_limit()), -1);
  for (int v = 0; v < sigma.vertex_limit(); ++v) {
    if (!sigma.vertex_alive(v)) continue;
    int nv = bar.add_vertex();
    vertex_of[static_cast<size_t>(v)] = nv;
    out.corr.vertex_map.emplace_back(nv, v);
  }
  if (sigma.base() >= 0) bar.set_base(vertex_of[static_cast<size_t>(sigma.base())]);

  // Per source edge, the parallel edge for each member of its part.
  std::vector<std::vector<std::pair<int, int>>> members_of(
      static_cast<size_t>(sigma.edge_limit()));  // (partite label, new edge id)
  for (int e = 0; e < sigma.edge_limit(); ++e) {
    if (!sigma.edge_alive(e)) continue;
    const EdgeRec& rec = sigma.edge(e);
    int part = to_base[static_cast<size_t>(rec.label)];
    for (int a : p.parts[static_cast<size_t>(part)]) {
      int ne = bar.add_edge(vertex_of[static_cast<size_t>(rec.u)],
                            vertex_of[static_cast<size_t>(rec.v)], a);
      members_of[static_cast<size_t>(e)].emplace_back(a, ne);
      out.corr.edge_map.emplace_back(ne, e);
    }
  }
  auto member_edge = [&](int source_edge, int label) {
    for (auto [a, ne] : members_of[static_cast<size_t>(source_edge)])
      if (a == label) return ne;
    fail(ErrorCode::ValidationError, "generalized edge member missing");
  };

  // One cube per distinct source cube and clique-spanning label tuple.
  std::unordered_map<std::vector<int>, char, VecHash> seen_sources;
  for (int c = 0; c < sigma.cube_limit(); ++c) {
    if (!sigma.cube_alive(c)) continue;
    const CubeCell& cube = sigma.cube(c);
    if (!seen_sources.emplace(cube.key(), 1).second) continue;
    int d = cube.dim();
    int half = 1 << (d - 1);
    std::vector<const std::vector<int>*> choices;
    choices.reserve(static_cast<size_t>(d));
    for (int l : cube.labels)
      choices.push_back(&p.parts[static_cast<size_t>(to_base[static_cast<size_t>(l)])]);

    std::vector<int> tuple(static_cast<size_t>(d));
    std::function<void(int)> emit = [&](int axis) {
      if (axis == d) {
        CubeCell gen;
        gen.labels = tuple;
        // Axes must be re-sorted by the partite labels.
        std::vector<int> order(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) order[static_cast<size_t>(i)] = i;
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return tuple[static_cast<size_t>(i)] < tuple[static_cast<size_t>(j)]; });
        std::sort(gen.labels.begin(), gen.labels.end());
        gen.corners.assign(static_cast<size_t>(1) << d, -1);
        gen.edges.assign(static_cast<size_t>(d) * half, -1);
        for (int m = 0; m < (1 << d); ++m) {
          int old_m = 0;
          for (int na = 0; na < d; ++na)
            if (m & (1 << na)) old_m |= 1 << order[static_cast<size_t>(na)];
          gen.corners[static_cast<size_t>(m)] =
              vertex_of[static_cast<size_t>(cube.corner(old_m))];
        }
        for (int na = 0; na < d; ++na) {
          int oa = order[static_cast<size_t>(na)];
          for (int m = 0; m < (1 << d); ++m) {
            if (m & (1 << na)) continue;
            int old_m = 0;
            for (int nb = 0; nb < d; ++nb)
              if (m & (1 << nb)) old_m |= 1 << order[static_cast<size_t>(nb)];
            int source_edge = cube.edge(oa, old_m);
            int low = m & ((1 << na) - 1);
            int high = m >> (na + 1);
            gen.edges[static_cast<size_t>(na) * half + (low | (high << na))] =
                member_edge(source_edge, tuple[static_cast<size_t>(oa)]);
          }
        }
        bar.add_cube(std::move(gen));
        return;
      }
      for (int a : *choices[static_cast<size_t>(axis)]) {
        bool clique = true;
        for (int prev = 0; prev < axis; ++prev)
          if (!p.graph.has_edge(tuple[static_cast<size_t>(prev)], a)) {
            clique = false;
            break;
          }
        if (!clique) continue;
        tuple[static_cast<size_t>(axis)] = a;
        emit(axis + 1);
      }
    };
    emit(0);
  }
  return out;
}

CubeComplex collapse(const CubeComplex& generalized, const PartiteGraph& p) {
  if (generalized.graph() != p.graph)
    fail(ErrorCode::NotAGeneralization, "complex is not labeled by the partite graph");
  std::vector<int> owner = part_owner(p);
  for (int v = 0; v < p.graph.vertex_count(); ++v)
    if (owner[static_cast<size_t>(v)] < 0)
      fail(ErrorCode::NotAGeneralization, "decomposition does not cover the partite graph");

  CubeComplex out(std::make_shared<SimplicialGraph>(p.base));
  std::vector<int> vertex_of(static_cast<size_t>(generalized.vertex_limit()), -1);
  for (int v = 0; v < generalized.vertex_limit(); ++v)
    if (generalized.vertex_alive(v)) vertex_of[static_cast<size_t>(v)] = out.add_vertex();
  if (generalized.base() >= 0) out.set_base(vertex_of[static_cast<size_t>(generalized.base())]);

  // Group parallel edges by endpoints and part; each class must realize its
  // part exactly once.
  std::map<std::tuple<int, int, int>, std::vector<int>> classes;  // (u, v, part) -> labels
  for (int e = 0; e < generalized.edge_limit(); ++e) {
    if (!generalized.edge_alive(e)) continue;
    const EdgeRec& rec = generalized.edge(e);
    int u = std::min(rec.u, rec.v), v = std::max(rec.u, rec.v);
    classes[{u, v, owner[static_cast<size_t>(rec.label)]}].push_back(rec.label);
  }
  for (auto& [key, labels] : classes) {
    auto [u, v, part] = key;
    std::sort(labels.begin(), labels.end());
    if (labels != p.parts[static_cast<size_t>(part)])
      fail(ErrorCode::NotAGeneralization,
           "parallel class between " + generalized.graph().name(u) + " and " +
               generalized.graph().name(v) + " does not realize part " + p.base.name(part));
    out.add_edge(vertex_of[static_cast<size_t>(u)], vertex_of[static_cast<size_t>(v)], part);
  }
  return out;
}

std::vector<Word> generalize_generators(const std::vector<Word>& generators,
                                        const SimplicialGraph& g, const PartiteGraph& p) {
  CubeComplex rose = CubeComplex::rose(generators, g);
  Generalization gen = generalize_complex(rose, p);
  const CubeComplex& bar = gen.complex;

  // Breadth-first spanning tree from the base, edges in canonical id order.
  std::vector<int> parent_edge(static_cast<size_t>(bar.vertex_limit()), -1);
  std::vector<int> parent_vertex(static_cast<size_t>(bar.vertex_limit()), -1);
  std::vector<char> reached(static_cast<size_t>(bar.vertex_limit()), 0);
  std::vector<char> in_tree(static_cast<size_t>(bar.edge_limit()), 0);
  std::vector<int> queue{bar.base()};
  reached[static_cast<size_t>(bar.base())] = 1;
  size_t head = 0;
  while (head < queue.size()) {
    int v = queue[head++];
    std::vector<int> out_edges = bar.incident_edges(v);
    std::sort(out_edges.begin(), out_edges.end());
    for (int e : out_edges) {
      if (!bar.edge_alive(e)) continue;
      int w = bar.far_end(e, v);
      if (reached[static_cast<size_t>(w)]) continue;
      reached[static_cast<size_t>(w)] = 1;
      in_tree[static_cast<size_t>(e)] = 1;
      parent_edge[static_cast<size_t>(w)] = e;
      parent_vertex[static_cast<size_t>(w)] = v;
      queue.push_back(w);
    }
  }

  auto path_labels = [&](int v) {
    std::vector<int> labels;
    while (v != bar.base()) {
      labels.push_back(bar.edge(parent_edge[static_cast<size_t>(v)]).label);
      v = parent_vertex[static_cast<size_t>(v)];
    }
    std::reverse(labels.begin(), labels.end());
    return labels;
  };

  std::vector<Word> out;
  for (int e = 0; e < bar.edge_limit(); ++e) {
    if (!bar.edge_alive(e) || in_tree[static_cast<size_t>(e)]) continue;
    const EdgeRec& rec = bar.edge(e);
    std::vector<int> letters = path_labels(rec.u);
    letters.push_back(rec.label);
    std::vector<int> back = path_labels(rec.v);
    letters.insert(letters.end(), back.rbegin(), back.rend());
    out.emplace_back(std::move(letters));
  }
  return out;
}

Word project_word(const Word& w, const PartiteGraph& p) {
  std::vector<int> owner = part_owner(p);
  Word out;
  out.letters.reserve(w.size());
  for (int a : w.letters) {
    if (a < 0 || a >= p.graph.vertex_count() || owner[static_cast<size_t>(a)] < 0)
      fail(ErrorCode::UnknownLetter, "letter lies in no part of the decomposition");
    out.letters.push_back(owner[static_cast<size_t>(a)]);
  }
  return out;
}

bool commutation_check(const std::vector<Word>& generators, const SimplicialGraph& g,
                       const PartiteGraph& p, const Budget& budget) {
  CubeComplex rose = CubeComplex::rose(generators, g);

  CompletionReport base_side = complete(rose, budget);
  if (base_side.status != CompletionStatus::Finite)
    fail(ErrorCode::BudgetExceeded, "completion of the rose exceeded the budget");
  CubeComplex generalized_completion = generalize_complex(base_side.complex, p).complex;

  CompletionReport bar_side = complete(generalize_complex(rose, p).complex, budget);
  if (bar_side.status != CompletionStatus::Finite)
    fail(ErrorCode::BudgetExceeded, "completion of the generalized rose exceeded the budget");

  return based_isomorphic(bar_side.complex, generalized_completion);
}

}  // namespace racg
