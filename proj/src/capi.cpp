#include "rcx.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "racg/completion.hpp"
#include "racg/complex.hpp"
#include "racg/curvature.hpp"
#include "racg/errors.hpp"
#include "racg/generalize.hpp"
#include "racg/graph.hpp"
#include "racg/io.hpp"
#include "racg/partite.hpp"
#include "racg/word.hpp"

using nlohmann::ordered_json;

struct rcx_graph {
  racg::SimplicialGraph g;
};

struct rcx_partite {
  racg::PartiteGraph p;
};

struct rcx_report {
  racg::CompletionReport r;
};

namespace {

thread_local std::string g_last_error;

rcx_status status_of(racg::ErrorCode code) {
  using racg::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return RCX_PARSE_ERROR;
    case ErrorCode::ValidationError: return RCX_VALIDATION_ERROR;
    case ErrorCode::UnknownVertex: return RCX_UNKNOWN_VERTEX;
    case ErrorCode::UnknownLetter: return RCX_UNKNOWN_LETTER;
    case ErrorCode::EmptyWord: return RCX_EMPTY_WORD;
    case ErrorCode::NotFolded: return RCX_NOT_FOLDED;
    case ErrorCode::InvalidK: return RCX_INVALID_K;
    case ErrorCode::BadParameter: return RCX_BAD_PARAMETER;
    case ErrorCode::LengthCapExceeded: return RCX_LENGTH_CAP_EXCEEDED;
    case ErrorCode::NotAGeneralization: return RCX_NOT_A_GENERALIZATION;
    case ErrorCode::LabelOutsideBase: return RCX_LABEL_OUTSIDE_BASE;
    case ErrorCode::BudgetExceeded: return RCX_BUDGET_EXCEEDED;
    case ErrorCode::InfiniteComplex: return RCX_INFINITE_COMPLEX;
    case ErrorCode::Overflow: return RCX_OVERFLOW;
  }
  return RCX_ERROR;
}

template <typename Fn>
rcx_status guarded(Fn&& fn) {
  try {
    fn();
    return RCX_OK;
  } catch (const racg::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RCX_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

racg::Budget make_budget(long long max_vertices, long long max_rounds) {
  racg::Budget b;
  if (max_vertices > 0) b.max_vertices = max_vertices;
  if (max_rounds > 0) b.max_rounds = max_rounds;
  return b;
}

racg::Connector parse_connector(const char* connectors) {
  std::string c = connectors ? connectors : "";
  if (c == "cycle") return racg::Connector::Cycle;
  if (c == "path") return racg::Connector::Path;
  racg::fail(racg::ErrorCode::BadParameter, "connectors must be \"cycle\" or \"path\"");
}

}  // namespace

extern "C" {

const char* rcx_last_error(void) { return g_last_error.c_str(); }

void rcx_string_free(char* s) { std::free(s); }

rcx_status rcx_graph_parse(const char* json, rcx_graph** out) {
  return guarded([&] { *out = new rcx_graph{racg::load_graph(json ? json : "")}; });
}

void rcx_graph_free(rcx_graph* g) { delete g; }

rcx_status rcx_graph_to_json(const rcx_graph* g, char** out) {
  return guarded([&] { set_out(out, racg::graph_to_json(g->g)); });
}

rcx_status rcx_graph_check(const rcx_graph* g, int with_cycles, int with_ends, int with_cone,
                           char** json_out) {
  return guarded([&] {
    ordered_json doc;
    doc["vertices"] = g->g.vertex_count();
    doc["edges"] = g->g.edge_count();
    auto name_list = [&](const std::vector<int>& vs) {
      ordered_json arr = ordered_json::array();
      for (int v : vs) arr.push_back(g->g.name(v));
      return arr;
    };
    if (with_cycles) {
      racg::CycleReport cr = racg::small_cycle_report(g->g);
      ordered_json jc;
      jc["triangle"] = cr.has_triangle;
      if (cr.triangle)
        jc["triangle_witness"] = name_list({(*cr.triangle)[0], (*cr.triangle)[1], (*cr.triangle)[2]});
      jc["simple_4cycle"] = cr.has_simple_4cycle;
      if (cr.simple4)
        jc["simple_4cycle_witness"] =
            name_list({(*cr.simple4)[0], (*cr.simple4)[1], (*cr.simple4)[2], (*cr.simple4)[3]});
      jc["induced_4cycle"] = cr.has_induced_4cycle;
      if (cr.induced4)
        jc["induced_4cycle_witness"] =
            name_list({(*cr.induced4)[0], (*cr.induced4)[1], (*cr.induced4)[2], (*cr.induced4)[3]});
      doc["cycles"] = std::move(jc);
    }
    if (with_ends) {
      racg::EndsVerdict ev = racg::one_ended_certificate(g->g);
      ordered_json je;
      switch (ev.kind) {
        case racg::EndsKind::Clique: je["kind"] = "Clique"; break;
        case racg::EndsKind::Disconnected: je["kind"] = "Disconnected"; break;
        case racg::EndsKind::CliqueSeparated: je["kind"] = "CliqueSeparated"; break;
        case racg::EndsKind::OneEnded: je["kind"] = "OneEnded"; break;
      }
      if (ev.witness) je["witness"] = name_list(*ev.witness);
      doc["ends"] = std::move(je);
    }
    if (with_cone) {
      auto cone = racg::cone_vertex(g->g);
      ordered_json jc;
      jc["is_cone"] = cone.has_value();
      if (cone) jc["vertex"] = g->g.name(*cone);
      doc["cone"] = std::move(jc);
    }
    set_out(json_out, doc.dump(2) + "\n");
  });
}

rcx_status rcx_word_reduce(const rcx_graph* g, const char* word, char** out) {
  return guarded([&] {
    racg::Word w = racg::parse_word(word ? word : "", g->g);
    set_out(out, racg::format_word(racg::reduce(w, g->g), g->g));
  });
}

rcx_status rcx_word_equal(const rcx_graph* g, const char* w1, const char* w2, int* out_equal) {
  return guarded([&] {
    racg::Word a = racg::parse_word(w1 ? w1 : "", g->g);
    racg::Word b = racg::parse_word(w2 ? w2 : "", g->g);
    *out_equal = racg::words_equal(a, b, g->g) ? 1 : 0;
  });
}

rcx_status rcx_partite_build(const rcx_graph* g, long long k, const char* connectors, int force,
                             rcx_partite** out) {
  return guarded([&] {
    std::optional<long long> kk;
    if (k > 0) kk = k;
    *out = new rcx_partite{racg::build_partite(g->g, kk, parse_connector(connectors), force != 0)};
  });
}

rcx_status rcx_partite_parse(const char* json, rcx_partite** out) {
  return guarded([&] { *out = new rcx_partite{racg::load_partite(json ? json : "")}; });
}

void rcx_partite_free(rcx_partite* p) { delete p; }

rcx_status rcx_partite_to_json(const rcx_partite* p, char** out) {
  return guarded([&] { set_out(out, racg::partite_to_json(p->p)); });
}

rcx_status rcx_partite_verify(const rcx_partite* p, int* ok, char** message_out) {
  return guarded([&] {
    racg::PartiteVerdict v = racg::verify_partite(p->p);
    *ok = v.ok ? 1 : 0;
    std::string message;
    if (v.violation) message = v.violation->rule + ": " + v.violation->detail;
    set_out(message_out, message);
  });
}

rcx_status rcx_partite_graph(const rcx_partite* p, rcx_graph** out) {
  return guarded([&] { *out = new rcx_graph{p->p.graph}; });
}

rcx_status rcx_partite_base(const rcx_partite* p, rcx_graph** out) {
  return guarded([&] { *out = new rcx_graph{p->p.base}; });
}

rcx_status rcx_project_word(const rcx_partite* p, const char* word, char** out) {
  return guarded([&] {
    racg::Word w = racg::parse_word(word ? word : "", p->p.graph);
    set_out(out, racg::format_word(racg::project_word(w, p->p), p->p.base));
  });
}

rcx_status rcx_surface_generators(long long two_k, char** words_out, char** graph_json_out) {
  return guarded([&] {
    racg::SimplicialGraph cycle = racg::surface_cycle_graph(static_cast<int>(two_k));
    std::vector<racg::Word> words = racg::surface_generators(static_cast<int>(two_k));
    set_out(words_out, racg::format_wordfile(words, cycle));
    set_out(graph_json_out, racg::graph_to_json(cycle));
  });
}

rcx_status rcx_complete(const rcx_graph* g, const char* wordfile, long long max_vertices,
                        long long max_rounds, long long shuffle_seed, rcx_report** out) {
  return guarded([&] {
    std::vector<racg::Word> words = racg::parse_wordfile(wordfile ? wordfile : "", g->g);
    racg::CubeComplex rose = racg::CubeComplex::rose(words, g->g);
    std::optional<std::uint64_t> seed;
    if (shuffle_seed >= 0) seed = static_cast<std::uint64_t>(shuffle_seed);
    *out = new rcx_report{racg::complete(std::move(rose), make_budget(max_vertices, max_rounds),
                                         seed)};
  });
}

rcx_status rcx_report_parse(const char* json, rcx_report** out) {
  return guarded([&] { *out = new rcx_report{racg::load_report(json ? json : "")}; });
}

void rcx_report_free(rcx_report* r) { delete r; }

rcx_status rcx_report_to_json(const rcx_report* r, char** out) {
  return guarded([&] { set_out(out, racg::report_to_json(r->r)); });
}

rcx_status rcx_report_is_finite(const rcx_report* r, int* out_finite) {
  return guarded(
      [&] { *out_finite = r->r.status == racg::CompletionStatus::Finite ? 1 : 0; });
}

rcx_status rcx_report_counts(const rcx_report* r, long long* vertices, long long* edges,
                             long long* cubes, long long* rounds) {
  return guarded([&] {
    if (vertices) *vertices = r->r.complex.vertex_count();
    if (edges) *edges = r->r.complex.edge_count();
    if (cubes) *cubes = r->r.complex.cube_count();
    if (rounds) *rounds = r->r.rounds_run;
  });
}

rcx_status rcx_report_euler(const rcx_report* r, long long* out) {
  return guarded([&] { *out = racg::report_euler(r->r); });
}

rcx_status rcx_report_torsion(const rcx_report* r, int* has_witness, char** witness_out) {
  return guarded([&] {
    auto witness = r->r.complex.torsion_scan();
    *has_witness = witness ? 1 : 0;
    std::string text;
    if (witness)
      text = "vertex " + std::to_string(witness->vertex) + ": " +
             racg::format_word(witness->word, r->r.complex.graph());
    set_out(witness_out, text);
  });
}

rcx_status rcx_report_membership(const rcx_report* r, const char* word, rcx_membership* out) {
  return guarded([&] {
    racg::Word w = racg::parse_word(word ? word : "", r->r.complex.graph());
    switch (racg::membership(r->r, w)) {
      case racg::Membership::Member: *out = RCX_MEMBER; break;
      case racg::Membership::NonMember: *out = RCX_NON_MEMBER; break;
      case racg::Membership::Unknown: *out = RCX_MEMBERSHIP_UNKNOWN; break;
    }
  });
}

rcx_status rcx_report_qc_verdict(const rcx_report* r, rcx_qc_verdict* out) {
  return guarded([&] {
    switch (racg::quasiconvexity_verdict(r->r).kind) {
      case racg::QCKind::Quasiconvex: *out = RCX_QUASICONVEX; break;
      case racg::QCKind::EvidenceNonQuasiconvex: *out = RCX_EVIDENCE_NON_QUASICONVEX; break;
      case racg::QCKind::Inconclusive: *out = RCX_QC_INCONCLUSIVE; break;
    }
  });
}

rcx_status rcx_report_index_verdict(const rcx_report* r, const rcx_graph* g,
                                    rcx_index_verdict* out) {
  return guarded([&] {
    switch (racg::finite_index_verdict(r->r, g->g)) {
      case racg::IndexVerdict::FiniteIndex: *out = RCX_FINITE_INDEX; break;
      case racg::IndexVerdict::InfiniteIndex: *out = RCX_INFINITE_INDEX; break;
      case racg::IndexVerdict::NotApplicable: *out = RCX_INDEX_NOT_APPLICABLE; break;
      case racg::IndexVerdict::Unknown: *out = RCX_INDEX_UNKNOWN; break;
    }
  });
}

rcx_status rcx_generalize(const rcx_graph* g, const char* wordfile, const rcx_partite* p,
                          char** generators_out, char** complex_json_out,
                          char** correspondence_json_out) {
  return guarded([&] {
    std::vector<racg::Word> words = racg::parse_wordfile(wordfile ? wordfile : "", g->g);
    std::vector<racg::Word> gens = racg::generalize_generators(words, g->g, p->p);
    set_out(generators_out, racg::format_wordfile(gens, p->p.graph));
    if (complex_json_out || correspondence_json_out) {
      racg::Generalization gen =
          racg::generalize_complex(racg::CubeComplex::rose(words, g->g), p->p);
      set_out(complex_json_out, racg::complex_to_json(gen.complex));
      set_out(correspondence_json_out, racg::correspondence_to_json(gen.corr));
    }
  });
}

rcx_status rcx_commutation_check(const rcx_graph* g, const char* wordfile, const rcx_partite* p,
                                 long long max_vertices, long long max_rounds, int* out_equal) {
  return guarded([&] {
    std::vector<racg::Word> words = racg::parse_wordfile(wordfile ? wordfile : "", g->g);
    *out_equal = racg::commutation_check(words, g->g, p->p,
                                         make_budget(max_vertices, max_rounds))
                     ? 1
                     : 0;
  });
}

rcx_status rcx_curvature_check(const rcx_graph* g, long long bound, long long seed,
                               long long samples, long long sample_max_size, int* violation,
                               char** witness_json_out) {
  return guarded([&] {
    int b = bound > 0 ? static_cast<int>(std::min<long long>(bound, g->g.vertex_count()))
                      : g->g.vertex_count();
    b = std::max(b, 2);
    racg::NpscResult result =
        seed >= 0 ? racg::check_npsc_sampled(g->g, b, static_cast<std::uint64_t>(seed), samples,
                                             static_cast<int>(sample_max_size))
                  : racg::check_npsc(g->g, b);
    *violation = result.nonpositive ? 0 : 1;
    std::string witness;
    if (result.violation) witness = racg::section_witness_to_json(*result.violation, g->g);
    set_out(witness_json_out, witness);
  });
}

}  // extern "C"
