#include "racg/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "racg/errors.hpp"

namespace racg {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ErrorCode::ParseError, std::string("malformed JSON in ") + what);
  return doc;
}

const ordered_json& field(const ordered_json& doc, const char* key, const char* what) {
  auto it = doc.find(key);
  if (it == doc.end())
    fail(ErrorCode::ParseError, std::string(what) + " is missing the \"" + key + "\" field");
  return *it;
}

int int_field(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

SimplicialGraph graph_from_json(const ordered_json& doc, const char* what) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, std::string(what) + " must be an object");
  const auto& jvertices = field(doc, "vertices", what);
  const auto& jedges = field(doc, "edges", what);
  if (!jvertices.is_array() || !jedges.is_array())
    fail(ErrorCode::ParseError, std::string(what) + " fields have the wrong shape");
  std::vector<std::string> names;
  for (const auto& v : jvertices) {
    if (!v.is_string()) fail(ErrorCode::ParseError, "vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : jedges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(ErrorCode::ParseError, "each edge must be a pair of vertex names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return SimplicialGraph(std::move(names), edges);
}

ordered_json graph_json(const SimplicialGraph& g) {
  ordered_json doc;
  doc["vertices"] = g.vertex_names();
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  doc["edges"] = std::move(edges);
  return doc;
}

ordered_json complex_json(const CubeComplex& c) {
  ordered_json doc;
  doc["graph"] = graph_json(c.graph());
  doc["base"] = c.base();
  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < c.vertex_limit(); ++v)
    if (c.vertex_alive(v)) vertices.push_back(v);
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < c.edge_limit(); ++e) {
    if (!c.edge_alive(e)) continue;
    const EdgeRec& rec = c.edge(e);
    ordered_json je;
    je["id"] = e;
    je["u"] = rec.u;
    je["v"] = rec.v;
    je["label"] = c.graph().name(rec.label);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  ordered_json squares = ordered_json::array();
  ordered_json higher = ordered_json::array();
  for (int i = 0; i < c.cube_limit(); ++i) {
    if (!c.cube_alive(i)) continue;
    const CubeCell& cube = c.cube(i);
    if (cube.dim() == 2) {
      // Boundary walk: bottom (axis 0), right (axis 1), top, left.
      squares.push_back({cube.edge(0, 0), cube.edge(1, 1), cube.edge(0, 2), cube.edge(1, 0)});
    } else {
      ordered_json jc;
      ordered_json labels = ordered_json::array();
      for (int l : cube.labels) labels.push_back(c.graph().name(l));
      jc["labels"] = std::move(labels);
      jc["corners"] = cube.corners;
      jc["edges"] = cube.edges;
      higher.push_back(std::move(jc));
    }
  }
  doc["squares"] = std::move(squares);
  doc["cubes"] = std::move(higher);
  return doc;
}

CubeComplex complex_from_json(const ordered_json& doc, const char* what) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, std::string(what) + " must be an object");
  auto graph =
      std::make_shared<SimplicialGraph>(graph_from_json(field(doc, "graph", what), "graph"));

  std::vector<int> vertex_ids;
  for (const auto& jv : field(doc, "vertices", what)) vertex_ids.push_back(int_field(jv, "vertex id"));

  std::vector<CubeComplex::EdgeSpec> edge_specs;
  std::vector<EdgeRec> by_id;
  for (const auto& je : field(doc, "edges", what)) {
    if (!je.is_object()) fail(ErrorCode::ParseError, "each edge must be an object");
    const auto& jlabel = field(je, "label", "edge");
    if (!jlabel.is_string()) fail(ErrorCode::ParseError, "edge labels must be strings");
    CubeComplex::EdgeSpec spec{int_field(field(je, "id", "edge"), "edge id"),
                               int_field(field(je, "u", "edge"), "edge endpoint"),
                               int_field(field(je, "v", "edge"), "edge endpoint"),
                               graph->index_of(jlabel.get<std::string>())};
    edge_specs.push_back(spec);
    if (spec.id >= static_cast<int>(by_id.size()))
      by_id.resize(static_cast<size_t>(spec.id) + 1, EdgeRec{-1, -1, -1, false});
    by_id[static_cast<size_t>(spec.id)] = EdgeRec{spec.u, spec.v, spec.label, true};
  }
  auto edge_ok = [&](int e) {
    return e >= 0 && e < static_cast<int>(by_id.size()) && by_id[static_cast<size_t>(e)].alive;
  };
  auto other_end = [&](int e, int from) {
    const EdgeRec& rec = by_id[static_cast<size_t>(e)];
    return rec.u == from ? rec.v : rec.u;
  };

  std::vector<CubeCell> cubes;
  for (const auto& js : field(doc, "squares", what)) {
    if (!js.is_array() || js.size() != 4)
      fail(ErrorCode::ParseError, "each square must list 4 edge ids in cyclic order");
    std::array<int, 4> cyc{};
    for (size_t i = 0; i < 4; ++i) cyc[i] = int_field(js[i], "square edge id");
    for (int e : cyc)
      if (!edge_ok(e)) fail(ErrorCode::ValidationError, "square references a missing edge");
    // Normalize the rotation so the first edge carries the smaller label.
    if (by_id[static_cast<size_t>(cyc[0])].label > by_id[static_cast<size_t>(cyc[1])].label)
      cyc = {cyc[1], cyc[2], cyc[3], cyc[0]};
    int la = by_id[static_cast<size_t>(cyc[0])].label;
    int lb = by_id[static_cast<size_t>(cyc[1])].label;
    if (la == lb || by_id[static_cast<size_t>(cyc[2])].label != la ||
        by_id[static_cast<size_t>(cyc[3])].label != lb)
      fail(ErrorCode::ValidationError, "square labels must alternate between two letters");
    // Walk corners[0] -e0- corners[1] -e1- corners[3] -e2- corners[2] -e3- corners[0].
    const EdgeRec& e0 = by_id[static_cast<size_t>(cyc[0])];
    const EdgeRec& e3 = by_id[static_cast<size_t>(cyc[3])];
    std::vector<int> candidates;
    for (int v : {e0.u, e0.v})
      if (v == e3.u || v == e3.v) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    bool built = false;
    for (int v0 : candidates) {
      int v1 = other_end(cyc[0], v0);
      int v3 = other_end(cyc[1], v1);
      int v2 = other_end(cyc[2], v3);
      const EdgeRec& last = by_id[static_cast<size_t>(cyc[3])];
      bool closes = (last.u == v2 && last.v == v0) || (last.u == v0 && last.v == v2);
      if (!closes) continue;
      CubeCell cube;
      cube.labels = {la, lb};
      cube.corners = {v0, v1, v2, v3};
      cube.edges = {cyc[0], cyc[2], cyc[3], cyc[1]};
      cubes.push_back(std::move(cube));
      built = true;
      break;
    }
    if (!built) fail(ErrorCode::ValidationError, "square edge cycle does not close");
  }

  for (const auto& jc : field(doc, "cubes", what)) {
    if (!jc.is_object()) fail(ErrorCode::ParseError, "each cube must be an object");
    CubeCell cube;
    for (const auto& jl : field(jc, "labels", "cube")) {
      if (!jl.is_string()) fail(ErrorCode::ParseError, "cube labels must be strings");
      cube.labels.push_back(graph->index_of(jl.get<std::string>()));
    }
    for (const auto& jv : field(jc, "corners", "cube")) cube.corners.push_back(int_field(jv, "cube corner"));
    for (const auto& je : field(jc, "edges", "cube")) cube.edges.push_back(int_field(je, "cube edge"));
    cubes.push_back(std::move(cube));
  }

  int base = int_field(field(doc, "base", what), "base");
  return CubeComplex::reconstruct(std::move(graph), base, vertex_ids, edge_specs,
                                  std::move(cubes));
}

ordered_json report_json(const CompletionReport& r) {
  ordered_json doc;
  doc["status"] = r.status == CompletionStatus::Finite ? "Finite" : "BudgetExhausted";
  ordered_json profile = ordered_json::array();
  for (const auto& p : r.profile) profile.push_back({p.vertices, p.edges, p.cubes});
  doc["profile"] = std::move(profile);
  doc["complex"] = complex_json(r.complex);
  return doc;
}

ordered_json partite_json(const PartiteGraph& p) {
  ordered_json doc = graph_json(p.graph);
  doc["base"] = graph_json(p.base);
  ordered_json decomposition;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    ordered_json members = ordered_json::array();
    for (int v : p.parts[i]) members.push_back(p.graph.name(v));
    decomposition[p.base.name(static_cast<int>(i))] = std::move(members);
  }
  doc["decomposition"] = std::move(decomposition);
  doc["connector"] = p.connector == Connector::Cycle ? "cycle" : "path";
  doc["k"] = p.k;
  return doc;
}

}  // namespace

SimplicialGraph load_graph(const std::string& text) {
  return graph_from_json(parse_json(text, "graph file"), "graph file");
}

std::string graph_to_json(const SimplicialGraph& g) { return graph_json(g).dump(2) + "\n"; }

CubeComplex load_complex(const std::string& text) {
  return complex_from_json(parse_json(text, "complex file"), "complex file");
}

std::string complex_to_json(const CubeComplex& c) { return complex_json(c).dump(2) + "\n"; }

CompletionReport load_report(const std::string& text) try {
  ordered_json doc = parse_json(text, "report file");
  if (!doc.is_object()) fail(ErrorCode::ParseError, "report file must be an object");
  const auto& jstatus = field(doc, "status", "report file");
  if (!jstatus.is_string()) fail(ErrorCode::ParseError, "report status must be a string");
  std::string status = jstatus.get<std::string>();
  CompletionReport r(complex_from_json(field(doc, "complex", "report file"), "complex"));
  if (status == "Finite")
    r.status = CompletionStatus::Finite;
  else if (status == "BudgetExhausted")
    r.status = CompletionStatus::BudgetExhausted;
  else
    fail(ErrorCode::ParseError, "unknown report status: " + status);
  for (const auto& jp : field(doc, "profile", "report file")) {
    if (!jp.is_array() || jp.size() != 3)
      fail(ErrorCode::ParseError, "profile rows must be [vertices, edges, cubes]");
    RoundProfile p;
    p.vertices = jp[0].get<long long>();
    p.edges = jp[1].get<long long>();
    p.cubes = jp[2].get<long long>();
    r.profile.push_back(p);
  }
  if (r.profile.empty()) fail(ErrorCode::ParseError, "report profile must be nonempty");
  r.rounds_run = static_cast<long long>(r.profile.size()) - 1;
  return r;
} catch (const ordered_json::exception& e) {
  fail(ErrorCode::ParseError, std::string("report file: ") + e.what());
}

std::string report_to_json(const CompletionReport& r) { return report_json(r).dump(2) + "\n"; }

PartiteGraph load_partite(const std::string& text) try {
  ordered_json doc = parse_json(text, "partite file");
  SimplicialGraph delta = graph_from_json(doc, "partite file");
  SimplicialGraph base = graph_from_json(field(doc, "base", "partite file"), "base graph");
  const auto& jdec = field(doc, "decomposition", "partite file");
  if (!jdec.is_object()) fail(ErrorCode::ParseError, "decomposition must be an object");
  std::vector<std::vector<std::string>> part_names(static_cast<size_t>(base.vertex_count()));
  for (const auto& [name, members] : jdec.items()) {
    int i = base.index_of(name);
    if (!members.is_array()) fail(ErrorCode::ParseError, "decomposition parts must be arrays");
    for (const auto& m : members) {
      if (!m.is_string()) fail(ErrorCode::ParseError, "part members must be vertex names");
      part_names[static_cast<size_t>(i)].push_back(m.get<std::string>());
    }
  }
  const auto& jconn = field(doc, "connector", "partite file");
  if (!jconn.is_string()) fail(ErrorCode::ParseError, "connector must be \"cycle\" or \"path\"");
  std::string conn = jconn.get<std::string>();
  Connector kind;
  if (conn == "cycle")
    kind = Connector::Cycle;
  else if (conn == "path")
    kind = Connector::Path;
  else
    fail(ErrorCode::ParseError, "connector must be \"cycle\" or \"path\"");
  long long k = field(doc, "k", "partite file").get<long long>();
  return make_partite(std::move(delta), std::move(base), std::move(part_names), kind, k);
} catch (const ordered_json::exception& e) {
  fail(ErrorCode::ParseError, std::string("partite file: ") + e.what());
}

std::string partite_to_json(const PartiteGraph& p) { return partite_json(p).dump(2) + "\n"; }

std::string correspondence_to_json(const Correspondence& c) {
  ordered_json doc;
  ordered_json vm, em;
  for (auto [bar, source] : c.vertex_map) vm[std::to_string(bar)] = source;
  for (auto [bar, source] : c.edge_map) em[std::to_string(bar)] = source;
  doc["vertex_map"] = std::move(vm);
  doc["edge_map"] = std::move(em);
  return doc.dump(2) + "\n";
}

std::string section_witness_to_json(const SectionWitness& w, const SimplicialGraph& g) {
  ordered_json doc;
  ordered_json names = ordered_json::array();
  for (int v : w.vertices) names.push_back(g.name(v));
  doc["vertices"] = std::move(names);
  doc["kappa"] = w.kappa_value.str();
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write file: " + path);
  out << contents;
}

}  // namespace racg
