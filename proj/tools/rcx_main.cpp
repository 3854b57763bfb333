// Command-line front end for the RACG completion engine. Exit codes: 0 for
// success or a positive verdict, 1 when the mathematics answers "no"
// (violation found, non-member, infinite index, non-quasiconvexity evidence),
// 2 for usage or tool errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

[[noreturn]] void die(const std::string& message) { throw CliError{message}; }

void check(rcx_status status) {
  if (status != RCX_OK) die(rcx_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rcx_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write file: " + path);
  out << contents;
}

using GraphPtr = std::unique_ptr<rcx_graph, decltype(&rcx_graph_free)>;
using PartitePtr = std::unique_ptr<rcx_partite, decltype(&rcx_partite_free)>;
using ReportPtr = std::unique_ptr<rcx_report, decltype(&rcx_report_free)>;

GraphPtr load_graph(const std::string& path) {
  rcx_graph* g = nullptr;
  check(rcx_graph_parse(slurp(path).c_str(), &g));
  return GraphPtr(g, rcx_graph_free);
}

PartitePtr load_partite(const std::string& path) {
  rcx_partite* p = nullptr;
  check(rcx_partite_parse(slurp(path).c_str(), &p));
  return PartitePtr(p, rcx_partite_free);
}

ReportPtr load_report(const std::string& path) {
  rcx_report* r = nullptr;
  check(rcx_report_parse(slurp(path).c_str(), &r));
  return ReportPtr(r, rcx_report_free);
}

ReportPtr run_complete(const rcx_graph* g, const std::string& wordfile, long long max_vertices,
                       long long max_rounds, long long seed) {
  rcx_report* r = nullptr;
  check(rcx_complete(g, wordfile.c_str(), max_vertices, max_rounds, seed, &r));
  return ReportPtr(r, rcx_report_free);
}

std::string report_summary(const rcx_report* r) {
  int finite = 0;
  long long v = 0, e = 0, c = 0, rounds = 0;
  check(rcx_report_is_finite(r, &finite));
  check(rcx_report_counts(r, &v, &e, &c, &rounds));
  std::ostringstream out;
  out << "status: " << (finite ? "Finite" : "BudgetExhausted") << "\n";
  out << "rounds: " << rounds << "\n";
  out << "vertices: " << v << " edges: " << e << " cubes: " << c << "\n";
  if (finite) {
    long long euler = 0;
    check(rcx_report_euler(r, &euler));
    out << "euler: " << euler << "\n";
  }
  int has_torsion = 0;
  char* witness = nullptr;
  check(rcx_report_torsion(r, &has_torsion, &witness));
  std::string w = take(witness);
  if (has_torsion)
    out << "torsion: " << w << "\n";
  else
    out << "torsion: none" << (finite ? "" : " (complex truncated; not conclusive)") << "\n";
  return out.str();
}

const char* qc_name(rcx_qc_verdict v) {
  switch (v) {
    case RCX_QUASICONVEX: return "Quasiconvex";
    case RCX_EVIDENCE_NON_QUASICONVEX: return "EvidenceNonQuasiconvex";
    case RCX_QC_INCONCLUSIVE: return "Inconclusive";
  }
  return "?";
}

const char* index_name(rcx_index_verdict v) {
  switch (v) {
    case RCX_FINITE_INDEX: return "FiniteIndex";
    case RCX_INFINITE_INDEX: return "InfiniteIndex";
    case RCX_INDEX_NOT_APPLICABLE: return "NotApplicable";
    case RCX_INDEX_UNKNOWN: return "Unknown";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RACG subgroup completions, partite graphs and curvature certificates"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // graph check
  auto* graph_cmd = app.add_subcommand("graph", "defining-graph analysis");
  graph_cmd->require_subcommand(1);
  auto* graph_check = graph_cmd->add_subcommand("check", "validate and analyze a graph");
  std::string gc_path;
  bool gc_cycles = false, gc_ends = false, gc_cone = false;
  std::string gc_format;
  graph_check->add_option("graph", gc_path, "graph file")->required();
  graph_check->add_flag("--cycles", gc_cycles, "triangle / 4-cycle report");
  graph_check->add_flag("--ends", gc_ends, "one-endedness certificate");
  graph_check->add_flag("--cone", gc_cone, "cone vertex test");
  graph_check->add_option("--format", gc_format, "machine output format (json)");
  graph_check->callback([&] {
    if (!gc_format.empty() && gc_format != "json") die("json is the only machine format");
    auto g = load_graph(gc_path);
    char* out = nullptr;
    check(rcx_graph_check(g.get(), gc_cycles, gc_ends, gc_cone, &out));
    std::string doc = take(out);
    if (gc_format == "json") {
      std::cout << doc;
      return;
    }
    auto j = nlohmann::json::parse(doc);
    std::cout << "vertices: " << j["vertices"] << " edges: " << j["edges"] << "\n";
    if (j.contains("cycles")) {
      const auto& c = j["cycles"];
      std::cout << "triangle: " << (c["triangle"].get<bool>() ? "yes" : "no")
                << "  simple-4-cycle: " << (c["simple_4cycle"].get<bool>() ? "yes" : "no")
                << "  induced-4-cycle: " << (c["induced_4cycle"].get<bool>() ? "yes" : "no")
                << "\n";
    }
    if (j.contains("ends")) std::cout << "ends: " << j["ends"].dump() << "\n";
    if (j.contains("cone")) std::cout << "cone: " << j["cone"].dump() << "\n";
  });

  // word reduce / word equal
  auto* word_cmd = app.add_subcommand("word", "word-problem operations");
  word_cmd->require_subcommand(1);
  auto* word_reduce = word_cmd->add_subcommand("reduce", "normal forms of a word file");
  std::string wr_graph, wr_words;
  word_reduce->add_option("graph", wr_graph, "graph file")->required();
  word_reduce->add_option("wordfile", wr_words, "word file (one word per line)")->required();
  word_reduce->callback([&] {
    auto g = load_graph(wr_graph);
    std::istringstream in(slurp(wr_words));
    std::string line;
    while (std::getline(in, line)) {
      char* out = nullptr;
      check(rcx_word_reduce(g.get(), line.c_str(), &out));
      std::cout << take(out) << "\n";
    }
  });
  auto* word_equal = word_cmd->add_subcommand("equal", "test two words for equality");
  std::string we_graph, we_w1, we_w2;
  word_equal->add_option("graph", we_graph, "graph file")->required();
  word_equal->add_option("w1", we_w1, "first word")->required();
  word_equal->add_option("w2", we_w2, "second word")->required();
  word_equal->callback([&] {
    auto g = load_graph(we_graph);
    int equal = 0;
    check(rcx_word_equal(g.get(), we_w1.c_str(), we_w2.c_str(), &equal));
    std::cout << (equal ? "equal" : "not equal") << "\n";
    if (!equal) exit_code = kExitNegative;
  });

  // partite build / verify
  auto* partite_cmd = app.add_subcommand("partite", "partite graph construction");
  partite_cmd->require_subcommand(1);
  auto* partite_build = partite_cmd->add_subcommand("build", "explicit square-free construction");
  std::string pb_graph, pb_out, pb_connectors = "cycle";
  long long pb_k = 0;
  bool pb_force = false;
  partite_build->add_option("graph", pb_graph, "base graph file")->required();
  partite_build->add_option("--k", pb_k, "part size (default: smallest valid)");
  partite_build->add_option("--connectors", pb_connectors, "cycle|path")->required();
  partite_build->add_flag("--force", pb_force, "admit k below the square-free bound");
  partite_build->add_option("-o,--out", pb_out, "output partite file");
  partite_build->callback([&] {
    auto g = load_graph(pb_graph);
    rcx_partite* p = nullptr;
    check(rcx_partite_build(g.get(), pb_k, pb_connectors.c_str(), pb_force, &p));
    PartitePtr partite(p, rcx_partite_free);
    char* json = nullptr;
    check(rcx_partite_to_json(partite.get(), &json));
    std::string doc = take(json);
    rcx_graph* delta = nullptr;
    check(rcx_partite_graph(partite.get(), &delta));
    GraphPtr delta_ptr(delta, rcx_graph_free);
    char* check_json = nullptr;
    check(rcx_graph_check(delta_ptr.get(), 0, 0, 0, &check_json));
    auto j = nlohmann::json::parse(take(check_json));
    std::cout << "partite graph: " << j["vertices"] << " vertices, " << j["edges"] << " edges\n";
    if (!pb_out.empty()) {
      spill(pb_out, doc);
      std::cout << "written: " << pb_out << "\n";
    }
  });
  auto* partite_verify = partite_cmd->add_subcommand("verify", "check the partite conditions");
  std::string pv_path;
  partite_verify->add_option("partite", pv_path, "partite file")->required();
  partite_verify->callback([&] {
    auto p = load_partite(pv_path);
    int ok = 0;
    char* message = nullptr;
    check(rcx_partite_verify(p.get(), &ok, &message));
    std::string m = take(message);
    if (ok) {
      std::cout << "OK\n";
    } else {
      std::cout << "violation: " << m << "\n";
      exit_code = kExitNegative;
    }
  });

  // surface-gens
  auto* surface = app.add_subcommand("surface-gens", "surface-subgroup generators over a cycle");
  long long sg_two_k = 0;
  std::string sg_out, sg_graph_out;
  surface->add_option("--two-k", sg_two_k, "cycle length (even, >= 6)")->required();
  surface->add_option("-o,--out", sg_out, "output word file");
  surface->add_option("--graph-out", sg_graph_out, "output cycle graph file");
  surface->callback([&] {
    char* words = nullptr;
    char* graph_json = nullptr;
    check(rcx_surface_generators(sg_two_k, &words, &graph_json));
    std::string w = take(words), gj = take(graph_json);
    std::cout << w;
    if (!sg_out.empty()) spill(sg_out, w);
    if (!sg_graph_out.empty()) spill(sg_graph_out, gj);
  });

  // complete
  auto* complete_cmd = app.add_subcommand("complete", "budgeted completion of a subgroup rose");
  std::string co_graph, co_words, co_out;
  long long co_max_vertices = 10000, co_max_rounds = 64, co_seed = -1;
  complete_cmd->add_option("graph", co_graph, "graph file")->required();
  complete_cmd->add_option("wordfile", co_words, "generating words, one per line")->required();
  complete_cmd->add_option("--max-vertices", co_max_vertices, "vertex budget");
  complete_cmd->add_option("--max-rounds", co_max_rounds, "round budget");
  complete_cmd->add_option("--seed", co_seed, "randomize the operation order");
  complete_cmd->add_option("-o,--out", co_out, "output report file");
  complete_cmd->callback([&] {
    auto g = load_graph(co_graph);
    auto r = run_complete(g.get(), slurp(co_words), co_max_vertices, co_max_rounds, co_seed);
    std::cout << report_summary(r.get());
    if (!co_out.empty()) {
      char* json = nullptr;
      check(rcx_report_to_json(r.get(), &json));
      spill(co_out, take(json));
      std::cout << "report written: " << co_out << "\n";
    }
  });

  // member
  auto* member_cmd = app.add_subcommand("member", "membership of a word in the subgroup");
  std::string me_report, me_word;
  member_cmd->add_option("report", me_report, "completion report file")->required();
  member_cmd->add_option("word", me_word, "word to test")->required();
  member_cmd->callback([&] {
    auto r = load_report(me_report);
    rcx_membership m = RCX_MEMBERSHIP_UNKNOWN;
    check(rcx_report_membership(r.get(), me_word.c_str(), &m));
    switch (m) {
      case RCX_MEMBER: std::cout << "Member\n"; break;
      case RCX_NON_MEMBER:
        std::cout << "NonMember\n";
        exit_code = kExitNegative;
        break;
      case RCX_MEMBERSHIP_UNKNOWN: std::cout << "Unknown\n"; break;
    }
  });

  // qc-verdict
  auto* qc_cmd = app.add_subcommand("qc-verdict", "quasiconvexity verdict of a report");
  std::string qc_report;
  qc_cmd->add_option("report", qc_report, "completion report file")->required();
  qc_cmd->callback([&] {
    auto r = load_report(qc_report);
    rcx_qc_verdict v = RCX_QC_INCONCLUSIVE;
    check(rcx_report_qc_verdict(r.get(), &v));
    std::cout << "verdict: " << qc_name(v) << "\n";
    if (v == RCX_EVIDENCE_NON_QUASICONVEX) exit_code = kExitNegative;
  });

  // index-verdict
  auto* index_cmd = app.add_subcommand("index-verdict", "finite-index verdict of a report");
  std::string ix_report, ix_graph;
  index_cmd->add_option("report", ix_report, "completion report file")->required();
  index_cmd->add_option("graph", ix_graph, "defining graph file")->required();
  index_cmd->callback([&] {
    auto r = load_report(ix_report);
    auto g = load_graph(ix_graph);
    rcx_index_verdict v = RCX_INDEX_UNKNOWN;
    check(rcx_report_index_verdict(r.get(), g.get(), &v));
    std::cout << "verdict: " << index_name(v) << "\n";
    if (v == RCX_INFINITE_INDEX) exit_code = kExitNegative;
  });

  // generalize
  auto* gen_cmd = app.add_subcommand("generalize", "generalized generators over a partite graph");
  std::string ge_graph, ge_words, ge_partite, ge_out;
  bool ge_generators_only = false;
  gen_cmd->add_option("graph", ge_graph, "base graph file")->required();
  gen_cmd->add_option("wordfile", ge_words, "generating words")->required();
  gen_cmd->add_option("partite", ge_partite, "partite file")->required();
  gen_cmd->add_flag("--generators-only", ge_generators_only, "omit complex and correspondence");
  gen_cmd->add_option("-o,--out", ge_out, "output JSON file");
  gen_cmd->callback([&] {
    auto g = load_graph(ge_graph);
    auto p = load_partite(ge_partite);
    char* gens = nullptr;
    char* complex_json = nullptr;
    char* corr_json = nullptr;
    check(rcx_generalize(g.get(), slurp(ge_words).c_str(), p.get(), &gens,
                         ge_generators_only ? nullptr : &complex_json,
                         ge_generators_only ? nullptr : &corr_json));
    std::string words = take(gens);
    std::cout << words;
    if (!ge_out.empty()) {
      nlohmann::ordered_json doc;
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      std::istringstream in(words);
      std::string line;
      while (std::getline(in, line)) list.push_back(line);
      doc["generators"] = std::move(list);
      if (!ge_generators_only) {
        doc["complex"] = nlohmann::ordered_json::parse(take(complex_json));
        doc["correspondence"] = nlohmann::ordered_json::parse(take(corr_json));
        complex_json = corr_json = nullptr;
      }
      spill(ge_out, doc.dump(2) + "\n");
      std::cout << "written: " << ge_out << "\n";
    } else if (!ge_generators_only) {
      take(complex_json);
      take(corr_json);
    }
  });

  // commute-check
  auto* commute_cmd =
      app.add_subcommand("commute-check", "completion commutes with generalization");
  std::string cc_graph, cc_words, cc_partite;
  long long cc_max_vertices = 10000, cc_max_rounds = 64;
  commute_cmd->add_option("graph", cc_graph, "base graph file")->required();
  commute_cmd->add_option("wordfile", cc_words, "generating words")->required();
  commute_cmd->add_option("partite", cc_partite, "partite file")->required();
  commute_cmd->add_option("--max-vertices", cc_max_vertices, "vertex budget");
  commute_cmd->add_option("--max-rounds", cc_max_rounds, "round budget");
  commute_cmd->callback([&] {
    auto g = load_graph(cc_graph);
    auto p = load_partite(cc_partite);
    int equal = 0;
    check(rcx_commutation_check(g.get(), slurp(cc_words).c_str(), p.get(), cc_max_vertices,
                                cc_max_rounds, &equal));
    std::cout << (equal ? "commutes: based-isomorphic completions\n"
                        : "MISMATCH: completions are not based-isomorphic\n");
    if (!equal) exit_code = kExitNegative;
  });

  // curvature check
  auto* curvature_cmd = app.add_subcommand("curvature", "sectional curvature certificates");
  curvature_cmd->require_subcommand(1);
  auto* curvature_check = curvature_cmd->add_subcommand("check", "nonpositivity verifier");
  std::string cu_graph;
  long long cu_bound = 0, cu_seed = -1, cu_samples = 1000, cu_sample_max = 0;
  curvature_check->add_option("graph", cu_graph, "graph file")->required();
  curvature_check->add_option("--bound", cu_bound, "exhaustive section size bound (default |V|)");
  curvature_check->add_option("--seed", cu_seed, "sample larger sections with this seed");
  curvature_check->add_option("--samples", cu_samples, "sample count (with --seed)");
  curvature_check->add_option("--sample-max", cu_sample_max, "largest sampled size (default |V|)");
  curvature_check->callback([&] {
    auto g = load_graph(cu_graph);
    char* graph_info = nullptr;
    check(rcx_graph_check(g.get(), 0, 0, 0, &graph_info));
    auto j = nlohmann::json::parse(take(graph_info));
    long long nvertices = j["vertices"].get<long long>();
    long long bound = cu_bound > 0 ? cu_bound : nvertices;
    long long sample_max = cu_sample_max > 0 ? cu_sample_max : nvertices;
    int violation = 0;
    char* witness = nullptr;
    check(rcx_curvature_check(g.get(), bound, cu_seed, cu_samples, sample_max, &violation,
                              &witness));
    std::string w = take(witness);
    if (violation) {
      std::cout << "Violation\n" << w;
      exit_code = kExitNegative;
    } else {
      std::cout << "NonpositiveUpTo(" << std::min(bound, nvertices) << ")\n";
    }
  });

  // pipeline nonqc
  auto* pipeline_cmd = app.add_subcommand("pipeline", "end-to-end workflows");
  pipeline_cmd->require_subcommand(1);
  auto* nonqc = pipeline_cmd->add_subcommand(
      "nonqc", "transfer non-quasiconvexity evidence to a square-free partite group");
  std::string nq_graph, nq_words, nq_out, nq_connectors = "cycle";
  long long nq_k = 0, nq_max_vertices = 10000, nq_max_rounds = 64;
  bool nq_force = false;
  nonqc->add_option("graph", nq_graph, "base graph file")->required();
  nonqc->add_option("wordfile", nq_words, "generating words")->required();
  nonqc->add_option("--k", nq_k, "part size")->required();
  nonqc->add_option("--connectors", nq_connectors, "cycle|path");
  nonqc->add_flag("--force", nq_force, "admit k below the square-free bound");
  nonqc->add_option("--max-vertices", nq_max_vertices, "vertex budget");
  nonqc->add_option("--max-rounds", nq_max_rounds, "round budget");
  nonqc->add_option("-o,--out", nq_out, "output directory")->required();
  nonqc->callback([&] {
    auto g = load_graph(nq_graph);
    std::string wordfile = slurp(nq_words);
    std::filesystem::create_directories(nq_out);

    rcx_partite* p = nullptr;
    check(rcx_partite_build(g.get(), nq_k, nq_connectors.c_str(), nq_force, &p));
    PartitePtr partite(p, rcx_partite_free);
    char* partite_json = nullptr;
    check(rcx_partite_to_json(partite.get(), &partite_json));
    spill(nq_out + "/delta.partite.json", take(partite_json));

    auto base_report = run_complete(g.get(), wordfile, nq_max_vertices, nq_max_rounds, -1);
    char* base_json = nullptr;
    check(rcx_report_to_json(base_report.get(), &base_json));
    spill(nq_out + "/base.report.json", take(base_json));
    rcx_qc_verdict base_verdict = RCX_QC_INCONCLUSIVE;
    check(rcx_report_qc_verdict(base_report.get(), &base_verdict));

    char* gens = nullptr;
    check(rcx_generalize(g.get(), wordfile.c_str(), partite.get(), &gens, nullptr, nullptr));
    std::string generalized_words = take(gens);
    spill(nq_out + "/generalized.words.txt", generalized_words);

    rcx_graph* delta = nullptr;
    check(rcx_partite_graph(partite.get(), &delta));
    GraphPtr delta_ptr(delta, rcx_graph_free);
    auto gen_report =
        run_complete(delta_ptr.get(), generalized_words, nq_max_vertices, nq_max_rounds, -1);
    char* gen_json = nullptr;
    check(rcx_report_to_json(gen_report.get(), &gen_json));
    spill(nq_out + "/generalized.report.json", take(gen_json));
    rcx_qc_verdict gen_verdict = RCX_QC_INCONCLUSIVE;
    check(rcx_report_qc_verdict(gen_report.get(), &gen_verdict));

    nlohmann::ordered_json summary;
    summary["base_verdict"] = qc_name(base_verdict);
    summary["generalized_verdict"] = qc_name(gen_verdict);
    spill(nq_out + "/summary.json", summary.dump(2) + "\n");

    std::cout << "base verdict: " << qc_name(base_verdict) << "\n";
    std::cout << "generalized verdict: " << qc_name(gen_verdict) << "\n";
    std::cout << "outputs written to " << nq_out << "\n";
    if (base_verdict == RCX_EVIDENCE_NON_QUASICONVEX ||
        gen_verdict == RCX_EVIDENCE_NON_QUASICONVEX)
      exit_code = kExitNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}
