#include "racg/complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "racg/errors.hpp"

namespace racg {

namespace {

inline int compress_mask(int mask, int axis) {
  int low = mask & ((1 << axis) - 1);
  int high = mask >> (axis + 1);
  return low | (high << axis);
}

inline int decompress_mask(int cmask, int axis) {
  int low = cmask & ((1 << axis) - 1);
  int high = cmask >> axis;
  return low | (high << (axis + 1));
}

std::uint64_t cell_fingerprint(const CubeCell& cube) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int x) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (int x : cube.labels) mix(x);
  for (int x : cube.corners) mix(x);
  for (int x : cube.edges) mix(x);
  return h;
}

bool same_cell(const CubeCell& a, const CubeCell& b) {
  return a.labels == b.labels && a.corners == b.corners && a.edges == b.edges;
}

}  // namespace

int CubeCell::edge(int axis, int mask) const {
  int half = 1 << (dim() - 1);
  return edges[static_cast<size_t>(axis) * half + compress_mask(mask, axis)];
}

std::vector<int> CubeCell::key() const {
  std::vector<int> k;
  k.reserve(labels.size() + corners.size() + edges.size());
  k.insert(k.end(), labels.begin(), labels.end());
  k.insert(k.end(), corners.begin(), corners.end());
  k.insert(k.end(), edges.begin(), edges.end());
  return k;
}

void normalize_cube_orientation(CubeCell& cube) {
  int d = cube.dim();
  int ncorners = 1 << d;
  int half = 1 << (d - 1);
  std::vector<int> best_corners = cube.corners;
  std::vector<int> best_edges = cube.edges;
  std::vector<int> cand_corners(static_cast<size_t>(ncorners));
  std::vector<int> cand_edges(static_cast<size_t>(d) * half);
  for (int rho = 1; rho < ncorners; ++rho) {
    for (int m = 0; m < ncorners; ++m)
      cand_corners[static_cast<size_t>(m)] = cube.corners[static_cast<size_t>(m ^ rho)];
    for (int a = 0; a < d; ++a)
      for (int cm = 0; cm < half; ++cm) {
        int m = decompress_mask(cm, a);
        int old_m = (m ^ rho) & ~(1 << a);
        cand_edges[static_cast<size_t>(a) * half + cm] =
            cube.edges[static_cast<size_t>(a) * half + compress_mask(old_m, a)];
      }
    if (cand_corners < best_corners ||
        (cand_corners == best_corners && cand_edges < best_edges)) {
      best_corners = cand_corners;
      best_edges = cand_edges;
    }
  }
  cube.corners = std::move(best_corners);
  cube.edges = std::move(best_edges);
}

CubeComplex::CubeComplex(std::shared_ptr<const SimplicialGraph> graph)
    : graph_(std::move(graph)) {
  if (!graph_) fail(ErrorCode::ValidationError, "complex requires a defining graph");
  live_cubes_by_dim_.assign(2, 0);
}

CubeComplex CubeComplex::rose(const std::vector<Word>& words, const SimplicialGraph& graph) {
  return rose(words, std::make_shared<SimplicialGraph>(graph));
}

CubeComplex CubeComplex::rose(const std::vector<Word>& words,
                              std::shared_ptr<const SimplicialGraph> graph) {
  CubeComplex c(std::move(graph));
  int base = c.add_vertex();
  c.set_base(base);
  for (const auto& w : words) {
    if (w.empty()) fail(ErrorCode::EmptyWord, "rose words must be nonempty");
    for (int l : w.letters)
      if (!c.graph().has_vertex(l)) fail(ErrorCode::UnknownLetter, "rose letter not a vertex");
    int prev = base;
    for (size_t i = 0; i < w.size(); ++i) {
      int next = (i + 1 == w.size()) ? base : c.add_vertex();
      c.add_edge(prev, next, w.letters[i]);
      prev = next;
    }
  }
  return c;
}

CubeComplex CubeComplex::reconstruct(std::shared_ptr<const SimplicialGraph> graph, int base,
                                     const std::vector<int>& vertex_ids,
                                     const std::vector<EdgeSpec>& edges,
                                     std::vector<CubeCell> cubes) {
  CubeComplex c(std::move(graph));
  int max_vertex = -1;
  for (int id : vertex_ids) {
    if (id < 0) fail(ErrorCode::ParseError, "vertex ids must be nonnegative");
    max_vertex = std::max(max_vertex, id);
  }
  c.vertex_alive_.assign(static_cast<size_t>(max_vertex + 1), 0);
  c.incident_.assign(static_cast<size_t>(max_vertex + 1), {});
  for (int id : vertex_ids) {
    if (c.vertex_alive_[static_cast<size_t>(id)]) fail(ErrorCode::ParseError, "duplicate vertex id");
    c.vertex_alive_[static_cast<size_t>(id)] = 1;
  }
  c.live_vertices_ = static_cast<long long>(vertex_ids.size());

  int max_edge = -1;
  for (const auto& spec : edges) {
    if (spec.id < 0) fail(ErrorCode::ParseError, "edge ids must be nonnegative");
    max_edge = std::max(max_edge, spec.id);
  }
  c.edges_.assign(static_cast<size_t>(max_edge + 1), EdgeRec{-1, -1, -1, false});
  for (const auto& spec : edges) {
    if (c.edges_[static_cast<size_t>(spec.id)].alive)
      fail(ErrorCode::ParseError, "duplicate edge id");
    auto live_vertex = [&](int v) {
      return v >= 0 && v <= max_vertex && c.vertex_alive_[static_cast<size_t>(v)];
    };
    if (!live_vertex(spec.u) || !live_vertex(spec.v))
      fail(ErrorCode::ValidationError, "edge endpoint is not a listed vertex");
    if (!c.graph_->has_vertex(spec.label))
      fail(ErrorCode::ValidationError, "edge label is not a graph vertex");
    c.edges_[static_cast<size_t>(spec.id)] = EdgeRec{spec.u, spec.v, spec.label, true};
    c.incident_[static_cast<size_t>(spec.u)].push_back(spec.id);
    if (spec.v != spec.u) c.incident_[static_cast<size_t>(spec.v)].push_back(spec.id);
  }
  c.live_edges_ = static_cast<long long>(edges.size());
  for (auto& list : c.incident_) std::sort(list.begin(), list.end());

  for (CubeCell& cube : cubes) {
    c.validate_cube(cube);
    normalize_cube_orientation(cube);
    cube.alive = true;
    int d = cube.dim();
    if (static_cast<int>(c.live_cubes_by_dim_.size()) <= d) c.live_cubes_by_dim_.resize(d + 1, 0);
    ++c.live_cubes_by_dim_[static_cast<size_t>(d)];
    c.cubes_.push_back(std::move(cube));
  }
  c.set_base(base);
  return c;
}

void CubeComplex::set_base(int v) {
  if (v < 0 || v >= vertex_limit() || !vertex_alive(v))
    fail(ErrorCode::ValidationError, "base must be a live vertex");
  base_ = v;
}

int CubeComplex::add_vertex() {
  vertex_alive_.push_back(1);
  incident_.emplace_back();
  ++live_vertices_;
  return vertex_limit() - 1;
}

int CubeComplex::add_edge(int u, int v, int label) {
  if (u < 0 || u >= vertex_limit() || !vertex_alive(u) || v < 0 || v >= vertex_limit() ||
      !vertex_alive(v))
    fail(ErrorCode::ValidationError, "edge endpoint not a live vertex");
  if (!graph_->has_vertex(label)) fail(ErrorCode::UnknownLetter, "edge label not a graph vertex");
  int id = edge_limit();
  edges_.push_back(EdgeRec{u, v, label, true});
  incident_[static_cast<size_t>(u)].push_back(id);
  if (v != u) incident_[static_cast<size_t>(v)].push_back(id);
  ++live_edges_;
  return id;
}

void CubeComplex::validate_cube(const CubeCell& cube) const {
  int d = cube.dim();
  if (d < 2) fail(ErrorCode::ValidationError, "cube dimension must be at least 2");
  if (static_cast<int>(cube.corners.size()) != (1 << d) ||
      static_cast<int>(cube.edges.size()) != d * (1 << (d - 1)))
    fail(ErrorCode::ValidationError, "cube corner map has wrong shape");
  for (int a = 0; a < d; ++a) {
    if (a > 0 && cube.labels[static_cast<size_t>(a - 1)] >= cube.labels[static_cast<size_t>(a)])
      fail(ErrorCode::ValidationError, "cube labels must be strictly ascending");
    for (int b = 0; b < a; ++b)
      if (!graph_->has_edge(cube.labels[static_cast<size_t>(a)], cube.labels[static_cast<size_t>(b)]))
        fail(ErrorCode::ValidationError, "cube labels must span a clique");
  }
  for (int m = 0; m < (1 << d); ++m) {
    int v = cube.corner(m);
    if (v < 0 || v >= vertex_limit() || !vertex_alive(v))
      fail(ErrorCode::ValidationError, "cube corner not a live vertex");
  }
  for (int a = 0; a < d; ++a)
    for (int m = 0; m < (1 << d); ++m) {
      if (m & (1 << a)) continue;
      int e = cube.edge(a, m);
      if (e < 0 || e >= edge_limit() || !edge_alive(e))
        fail(ErrorCode::ValidationError, "cube edge not a live edge");
      const EdgeRec& rec = edge(e);
      if (rec.label != cube.labels[static_cast<size_t>(a)])
        fail(ErrorCode::ValidationError, "cube edge label mismatch");
      int x = cube.corner(m), y = cube.corner(m | (1 << a));
      bool matches = (rec.u == x && rec.v == y) || (rec.u == y && rec.v == x);
      if (!matches) fail(ErrorCode::ValidationError, "cube edge endpoints mismatch");
    }
}

int CubeComplex::add_cube(CubeCell cube) {
  validate_cube(cube);
  normalize_cube_orientation(cube);
  cube.alive = true;
  int id = cube_limit();
  cubes_.push_back(std::move(cube));
  int d = cubes_.back().dim();
  if (static_cast<int>(live_cubes_by_dim_.size()) <= d) live_cubes_by_dim_.resize(d + 1, 0);
  ++live_cubes_by_dim_[static_cast<size_t>(d)];
  return id;
}

long long CubeComplex::cube_count() const {
  long long total = 0;
  for (long long n : live_cubes_by_dim_) total += n;
  return total;
}

long long CubeComplex::cube_count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(live_cubes_by_dim_.size())) return 0;
  return live_cubes_by_dim_[static_cast<size_t>(dim)];
}

int CubeComplex::far_end(int e, int from) const {
  const EdgeRec& rec = edge(e);
  return rec.u == from ? rec.v : rec.u;
}

std::optional<int> CubeComplex::edge_at(int v, int label) const {
  for (int e : incident_[static_cast<size_t>(v)])
    if (edge_alive(e) && edge(e).label == label) return e;
  return std::nullopt;
}

FoldStats CubeComplex::fold_saturate(std::optional<std::uint64_t> shuffle_seed) {
  FoldStats stats;
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  std::vector<int> edge_target(static_cast<size_t>(edge_limit()));
  for (int e = 0; e < edge_limit(); ++e) edge_target[static_cast<size_t>(e)] = e;
  std::vector<int> vertex_target(static_cast<size_t>(vertex_limit()));
  for (int v = 0; v < vertex_limit(); ++v) vertex_target[static_cast<size_t>(v)] = v;
  auto efind = [&](int e) {
    while (edge_target[static_cast<size_t>(e)] != e) {
      edge_target[static_cast<size_t>(e)] =
          edge_target[static_cast<size_t>(edge_target[static_cast<size_t>(e)])];
      e = edge_target[static_cast<size_t>(e)];
    }
    return e;
  };
  auto vfind = [&](int v) {
    while (vertex_target[static_cast<size_t>(v)] != v) {
      vertex_target[static_cast<size_t>(v)] =
          vertex_target[static_cast<size_t>(vertex_target[static_cast<size_t>(v)])];
      v = vertex_target[static_cast<size_t>(v)];
    }
    return v;
  };

  std::set<std::pair<int, int>> sites;  // (vertex, label) with duplicate edges
  std::vector<int> label_stamp(static_cast<size_t>(graph_->vertex_count()), -1);
  int stamp_token = 0;
  auto collect_sites_at = [&](int v) {
    auto lo = sites.lower_bound({v, -1});
    auto hi = sites.lower_bound({v + 1, -1});
    sites.erase(lo, hi);
    if (!vertex_alive(v)) return;
    ++stamp_token;
    for (int e : incident_[static_cast<size_t>(v)]) {
      if (!edge_alive(e)) continue;
      int label = edge(e).label;
      if (label_stamp[static_cast<size_t>(label)] == stamp_token)
        sites.insert({v, label});
      else
        label_stamp[static_cast<size_t>(label)] = stamp_token;
    }
  };
  for (int v = 0; v < vertex_limit(); ++v) collect_sites_at(v);

  while (!sites.empty()) {
    std::pair<int, int> site;
    if (rng) {
      auto it = sites.begin();
      std::advance(it, std::uniform_int_distribution<size_t>(0, sites.size() - 1)(*rng));
      site = *it;
    } else {
      site = *sites.begin();
    }
    auto [v, label] = site;
    std::vector<int> matches;
    for (int e : incident_[static_cast<size_t>(v)])
      if (edge_alive(e) && edge(e).label == label) matches.push_back(e);
    std::sort(matches.begin(), matches.end());
    if (matches.size() < 2) {
      sites.erase(site);
      continue;
    }
    int e = matches[0], f = matches[1];
    if (rng && matches.size() > 2) {
      std::vector<int> pick = matches;
      std::shuffle(pick.begin(), pick.end(), *rng);
      e = std::min(pick[0], pick[1]);
      f = std::max(pick[0], pick[1]);
    }

    int a = far_end(e, v);
    int b = far_end(f, v);

    // Identify f with e.
    edges_[static_cast<size_t>(f)].alive = false;
    edge_target[static_cast<size_t>(f)] = e;
    --live_edges_;
    ++stats.folds;
    for (int endpoint : {edges_[static_cast<size_t>(f)].u, edges_[static_cast<size_t>(f)].v}) {
      auto& list = incident_[static_cast<size_t>(endpoint)];
      list.erase(std::remove(list.begin(), list.end(), f), list.end());
    }

    if (a != b) {
      int keep = std::min(a, b), gone = std::max(a, b);
      auto& keep_list = incident_[static_cast<size_t>(keep)];
      for (int g : incident_[static_cast<size_t>(gone)]) {
        if (!edge_alive(g)) continue;
        EdgeRec& rec = edges_[static_cast<size_t>(g)];
        if (rec.u == gone) rec.u = keep;
        if (rec.v == gone) rec.v = keep;
        if (std::find(keep_list.begin(), keep_list.end(), g) == keep_list.end())
          keep_list.push_back(g);
      }
      incident_[static_cast<size_t>(gone)].clear();
      vertex_alive_[static_cast<size_t>(gone)] = 0;
      vertex_target[static_cast<size_t>(gone)] = keep;
      --live_vertices_;
      if (base_ == gone) base_ = keep;
      collect_sites_at(gone);
      collect_sites_at(keep);
    }
    collect_sites_at(vfind(v));
  }

  // Remap cube references through the merges, then identify cubes with equal
  // boundary (equal canonical corner/edge maps).
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (int c = 0; c < cube_limit(); ++c) {
    CubeCell& cube = cubes_[static_cast<size_t>(c)];
    if (!cube.alive) continue;
    bool touched = false;
    for (int& corner : cube.corners) {
      int root = vfind(corner);
      touched |= root != corner;
      corner = root;
    }
    for (int& e : cube.edges) {
      int root = efind(e);
      touched |= root != e;
      e = root;
    }
    if (touched) normalize_cube_orientation(cube);
    std::vector<int>& bucket = buckets[cell_fingerprint(cube)];
    bool duplicate = false;
    for (int other : bucket)
      if (same_cell(cubes_[static_cast<size_t>(other)], cube)) {
        duplicate = true;
        break;
      }
    if (duplicate) {
      cube.alive = false;
      --live_cubes_by_dim_[static_cast<size_t>(cube.dim())];
      ++stats.identifications;
    } else {
      bucket.push_back(c);
    }
  }
  return stats;
}

bool CubeComplex::is_folded() const {
  std::vector<int> stamp(static_cast<size_t>(graph_->vertex_count()), -1);
  for (int v = 0; v < vertex_limit(); ++v) {
    if (!vertex_alive(v)) continue;
    for (int e : incident_[static_cast<size_t>(v)]) {
      if (!edge_alive(e)) continue;
      int label = edge(e).label;
      if (stamp[static_cast<size_t>(label)] == v) return false;
      stamp[static_cast<size_t>(label)] = v;
    }
  }
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (int c = 0; c < cube_limit(); ++c) {
    if (!cube_alive(c)) continue;
    std::vector<int>& bucket = buckets[cell_fingerprint(cube(c))];
    for (int other : bucket)
      if (same_cell(cube(other), cube(c))) return false;
    bucket.push_back(c);
  }
  return true;
}

void CubeComplex::require_folded(const char* op) const {
  if (!is_folded()) fail(ErrorCode::NotFolded, std::string(op) + " requires a folded complex");
}

bool CubeComplex::site_covered(const std::vector<std::vector<int>>& edge_to_cubes, int dim,
                               const std::vector<int>& edge_ids) const {
  for (int c : edge_to_cubes[static_cast<size_t>(edge_ids[0])]) {
    const CubeCell& cube = cubes_[static_cast<size_t>(c)];
    if (!cube.alive || cube.dim() != dim) continue;
    bool all = true;
    for (int e : edge_ids) {
      if (std::find(cube.edges.begin(), cube.edges.end(), e) == cube.edges.end()) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<std::vector<int>> CubeComplex::build_edge_to_cubes() const {
  std::vector<std::vector<int>> edge_to_cubes(static_cast<size_t>(edge_limit()));
  index_cubes_from(0, edge_to_cubes);
  return edge_to_cubes;
}

void CubeComplex::index_cubes_from(int first_cube,
                                   std::vector<std::vector<int>>& edge_to_cubes) const {
  edge_to_cubes.resize(static_cast<size_t>(edge_limit()));
  std::vector<int> distinct;
  for (int c = first_cube; c < cube_limit(); ++c) {
    if (!cube_alive(c)) continue;
    distinct = cube(c).edges;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int e : distinct) edge_to_cubes[static_cast<size_t>(e)].push_back(c);
  }
}

std::vector<CubeComplex::Site> CubeComplex::collect_uncovered_sites(
    const std::vector<std::vector<int>>& edge_to_cubes, bool first_only) const {
  std::vector<Site> sites;
  std::vector<std::pair<int, int>> present;  // (label, edge)
  std::vector<int> chosen_labels, chosen_edges;
  for (int v = 0; v < vertex_limit(); ++v) {
    if (!vertex_alive(v)) continue;
    present.clear();
    for (int e : incident_[static_cast<size_t>(v)])
      if (edge_alive(e)) present.emplace_back(edge(e).label, e);
    std::sort(present.begin(), present.end());
    if (present.size() < 2) continue;

    // Clique subsets of the incident labels, by ascending extension.
    std::function<bool(size_t)> extend = [&](size_t from) -> bool {
      if (chosen_labels.size() >= 2 &&
          !site_covered(edge_to_cubes, static_cast<int>(chosen_labels.size()), chosen_edges)) {
        sites.push_back(Site{v, chosen_edges, chosen_labels});
        if (first_only) return true;
      }
      for (size_t i = from; i < present.size(); ++i) {
        auto [label, e] = present[i];
        bool clique = true;
        for (int l : chosen_labels)
          if (!graph_->has_edge(l, label)) {
            clique = false;
            break;
          }
        if (!clique) continue;
        chosen_labels.push_back(label);
        chosen_edges.push_back(e);
        bool stop = extend(i + 1);
        chosen_labels.pop_back();
        chosen_edges.pop_back();
        if (stop) return true;
      }
      return false;
    };
    if (extend(0) && first_only) return sites;
  }
  return sites;
}

int CubeComplex::attach_cube_at(const Site& site) {
  int d = static_cast<int>(site.labels.size());
  int ncorners = 1 << d;
  int half = 1 << (d - 1);
  CubeCell cube;
  cube.labels = site.labels;
  cube.corners.assign(static_cast<size_t>(ncorners), -1);
  cube.edges.assign(static_cast<size_t>(d) * half, -1);
  cube.corners[0] = site.vertex;
  for (int a = 0; a < d; ++a)
    cube.corners[static_cast<size_t>(1 << a)] = far_end(site.edge_ids[static_cast<size_t>(a)], site.vertex);
  for (int m = 0; m < ncorners; ++m)
    if (cube.corners[static_cast<size_t>(m)] < 0) cube.corners[static_cast<size_t>(m)] = add_vertex();
  for (int a = 0; a < d; ++a)
    for (int cm = 0; cm < half; ++cm) {
      int m = decompress_mask(cm, a);
      int e = (m == 0) ? site.edge_ids[static_cast<size_t>(a)]
                       : add_edge(cube.corners[static_cast<size_t>(m)],
                                  cube.corners[static_cast<size_t>(m | (1 << a))],
                                  site.labels[static_cast<size_t>(a)]);
      cube.edges[static_cast<size_t>(a) * half + cm] = e;
    }

  int id = add_cube(cube);

  // Faces of dimension >= 2 are cells of the complex as well.
  if (d >= 3) {
    std::vector<int> axes(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) axes[static_cast<size_t>(a)] = a;
    for (int subset = 1; subset < (1 << d); ++subset) {
      int fd = __builtin_popcount(static_cast<unsigned>(subset));
      if (fd < 2 || fd == d) continue;
      std::vector<int> face_axes;
      for (int a = 0; a < d; ++a)
        if (subset & (1 << a)) face_axes.push_back(a);
      int fixed_axes = (~subset) & ((1 << d) - 1);
      // Iterate assignments of the fixed axes.
      std::vector<int> fixed_list;
      for (int a = 0; a < d; ++a)
        if (fixed_axes & (1 << a)) fixed_list.push_back(a);
      for (int assign = 0; assign < (1 << fixed_list.size()); ++assign) {
        int base_mask = 0;
        for (size_t i = 0; i < fixed_list.size(); ++i)
          if (assign & (1 << i)) base_mask |= 1 << fixed_list[i];
        CubeCell face;
        face.labels.reserve(static_cast<size_t>(fd));
        for (int a : face_axes) face.labels.push_back(cube.labels[static_cast<size_t>(a)]);
        int fcorners = 1 << fd;
        int fhalf = 1 << (fd - 1);
        face.corners.assign(static_cast<size_t>(fcorners), -1);
        face.edges.assign(static_cast<size_t>(fd) * fhalf, -1);
        for (int fm = 0; fm < fcorners; ++fm) {
          int m = base_mask;
          for (int i = 0; i < fd; ++i)
            if (fm & (1 << i)) m |= 1 << face_axes[static_cast<size_t>(i)];
          face.corners[static_cast<size_t>(fm)] = cube.corners[static_cast<size_t>(m)];
        }
        for (int i = 0; i < fd; ++i)
          for (int fcm = 0; fcm < fhalf; ++fcm) {
            int fm = decompress_mask(fcm, i);
            int m = base_mask;
            for (int j = 0; j < fd; ++j)
              if (fm & (1 << j)) m |= 1 << face_axes[static_cast<size_t>(j)];
            face.edges[static_cast<size_t>(i) * fhalf + fcm] =
                cube.edge(face_axes[static_cast<size_t>(i)], m);
          }
        add_cube(std::move(face));
      }
    }
  }
  return id;
}

long long CubeComplex::attach_round(std::optional<std::uint64_t> shuffle_seed) {
  require_folded("attach_round");
  std::vector<std::vector<int>> edge_to_cubes = build_edge_to_cubes();
  std::vector<Site> sites = collect_uncovered_sites(edge_to_cubes, false);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(sites.begin(), sites.end(), rng);
  }

  long long attached = 0;
  for (const Site& site : sites) {
    // A cube attached earlier this round may already cover the site.
    if (site_covered(edge_to_cubes, static_cast<int>(site.labels.size()), site.edge_ids)) continue;
    int first_new = cube_limit();
    attach_cube_at(site);
    ++attached;
    index_cubes_from(first_new, edge_to_cubes);
  }
  return attached;
}

ComplexStatus CubeComplex::status() const {
  ComplexStatus s;
  s.folded = is_folded();
  s.cube_full = collect_uncovered_sites(build_edge_to_cubes(), true).empty();
  return s;
}

TraceResult CubeComplex::trace(const Word& w) const {
  require_folded("trace");
  int at = base_;
  for (size_t i = 0; i < w.size(); ++i) {
    int l = w.letters[i];
    if (!graph_->has_vertex(l)) fail(ErrorCode::UnknownLetter, "trace letter not a graph vertex");
    auto e = edge_at(at, l);
    if (!e) return TraceResult{TraceResult::Kind::Stuck, at, static_cast<int>(i)};
    at = far_end(*e, at);
  }
  if (at == base_) return TraceResult{TraceResult::Kind::Loop, base_, -1};
  return TraceResult{TraceResult::Kind::PathEndsAt, at, -1};
}

std::optional<TorsionWitness> CubeComplex::torsion_scan() const {
  require_folded("torsion_scan");
  int cap = max_clique_size(*graph_);
  std::vector<int> labels;
  for (int v = 0; v < vertex_limit(); ++v) {
    if (!vertex_alive(v)) continue;
    for (int length = 1; length <= cap; ++length) {
      labels.clear();
      // Walks labeled by distinct letters spanning a clique, lexicographic.
      std::function<std::optional<Word>(int)> walk = [&](int at) -> std::optional<Word> {
        if (static_cast<int>(labels.size()) == length)
          return at == v ? std::optional<Word>(Word(labels)) : std::nullopt;
        for (int l = 0; l < graph_->vertex_count(); ++l) {
          bool usable = true;
          for (int prev : labels)
            if (prev == l || !graph_->has_edge(prev, l)) {
              usable = false;
              break;
            }
          if (!usable) continue;
          auto e = edge_at(at, l);
          if (!e) continue;
          labels.push_back(l);
          auto found = walk(far_end(*e, at));
          if (found) return found;
          labels.pop_back();
        }
        return std::nullopt;
      };
      auto found = walk(v);
      if (found) return TorsionWitness{v, *found};
    }
  }
  return std::nullopt;
}

bool CubeComplex::vertex_fullness() const {
  require_folded("vertex_fullness");
  int nlabels = graph_->vertex_count();
  std::vector<char> seen(static_cast<size_t>(nlabels));
  for (int v = 0; v < vertex_limit(); ++v) {
    if (!vertex_alive(v)) continue;
    std::fill(seen.begin(), seen.end(), 0);
    int count = 0;
    for (int e : incident_[static_cast<size_t>(v)]) {
      if (!edge_alive(e)) continue;
      int l = edge(e).label;
      if (!seen[static_cast<size_t>(l)]) {
        seen[static_cast<size_t>(l)] = 1;
        ++count;
      }
    }
    if (count < nlabels) return false;
  }
  return true;
}

long long CubeComplex::euler_characteristic() const {
  long long chi = live_vertices_ - live_edges_;
  for (int d = 2; d < static_cast<int>(live_cubes_by_dim_.size()); ++d) {
    long long n = live_cubes_by_dim_[static_cast<size_t>(d)];
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

bool based_isomorphic(const CubeComplex& a, const CubeComplex& b) {
  a.require_folded("based_isomorphic");
  b.require_folded("based_isomorphic");
  if (a.graph() != b.graph()) return false;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.base_ < 0 || b.base_ < 0) return a.base_ == b.base_ && a.cube_count() == b.cube_count();

  std::vector<int> vmap(static_cast<size_t>(a.vertex_limit()), -1);
  std::vector<int> vmap_back(static_cast<size_t>(b.vertex_limit()), -1);
  std::vector<int> emap(static_cast<size_t>(a.edge_limit()), -1);
  vmap[static_cast<size_t>(a.base_)] = b.base_;
  vmap_back[static_cast<size_t>(b.base_)] = a.base_;
  std::vector<int> queue{a.base_};
  size_t head = 0;
  long long mapped_vertices = 1, mapped_edges = 0;
  while (head < queue.size()) {
    int x = queue[head++];
    int y = vmap[static_cast<size_t>(x)];
    std::map<int, int> ex, ey;
    for (int e : a.incident_edges(x))
      if (a.edge_alive(e)) {
        if (ex.count(a.edge(e).label)) return false;
        ex[a.edge(e).label] = e;
      }
    for (int e : b.incident_edges(y))
      if (b.edge_alive(e)) {
        if (ey.count(b.edge(e).label)) return false;
        ey[b.edge(e).label] = e;
      }
    if (ex.size() != ey.size()) return false;
    for (auto [label, e1] : ex) {
      auto it = ey.find(label);
      if (it == ey.end()) return false;
      int e2 = it->second;
      if (emap[static_cast<size_t>(e1)] == -1) {
        emap[static_cast<size_t>(e1)] = e2;
        ++mapped_edges;
      } else if (emap[static_cast<size_t>(e1)] != e2) {
        return false;
      }
      int fx = a.far_end(e1, x);
      int fy = b.far_end(e2, y);
      if (vmap[static_cast<size_t>(fx)] == -1 && vmap_back[static_cast<size_t>(fy)] == -1) {
        vmap[static_cast<size_t>(fx)] = fy;
        vmap_back[static_cast<size_t>(fy)] = fx;
        ++mapped_vertices;
        queue.push_back(fx);
      } else if (vmap[static_cast<size_t>(fx)] != fy) {
        return false;
      }
    }
  }
  if (mapped_vertices != a.vertex_count() || mapped_edges != a.edge_count()) return false;

  if (a.cube_count() != b.cube_count()) return false;
  std::set<std::vector<int>> keys_b;
  for (int c = 0; c < b.cube_limit(); ++c)
    if (b.cube_alive(c)) keys_b.insert(b.cube(c).key());
  for (int c = 0; c < a.cube_limit(); ++c) {
    if (!a.cube_alive(c)) continue;
    CubeCell mapped = a.cube(c);
    for (int& corner : mapped.corners) corner = vmap[static_cast<size_t>(corner)];
    for (int& e : mapped.edges) e = emap[static_cast<size_t>(e)];
    normalize_cube_orientation(mapped);
    if (!keys_b.count(mapped.key())) return false;
  }
  return true;
}

}  // namespace racg
