#include <doctest.h>

#include <string>

#include "rcx.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rcx_string_free(s);
  return out;
}

constexpr const char* kFourCycle =
    R"({"vertices":["s1","s2","s3","s4"],
        "edges":[["s1","s2"],["s2","s3"],["s3","s4"],["s4","s1"]]})";

constexpr const char* kEdgelessPair = R"({"vertices":["a","b"],"edges":[]})";

}  // namespace

TEST_CASE("graph parse, check and errors across the C boundary") {
  rcx_graph* g = nullptr;
  REQUIRE(rcx_graph_parse(kFourCycle, &g) == RCX_OK);
  char* json = nullptr;
  REQUIRE(rcx_graph_check(g, 1, 1, 1, &json) == RCX_OK);
  std::string doc = take(json);
  CHECK(doc.find("\"triangle\": false") != std::string::npos);
  CHECK(doc.find("\"simple_4cycle\": true") != std::string::npos);
  CHECK(doc.find("OneEnded") != std::string::npos);
  rcx_graph_free(g);

  rcx_graph* bad = nullptr;
  CHECK(rcx_graph_parse(R"({"vertices":["x","x"],"edges":[]})", &bad) == RCX_VALIDATION_ERROR);
  CHECK(std::string(rcx_last_error()).find("duplicate") != std::string::npos);
  CHECK(rcx_graph_parse("nope", &bad) == RCX_PARSE_ERROR);
}

TEST_CASE("word operations") {
  rcx_graph* g = nullptr;
  REQUIRE(rcx_graph_parse(kFourCycle, &g) == RCX_OK);
  char* reduced = nullptr;
  REQUIRE(rcx_word_reduce(g, "s2 s1 s3 s2", &reduced) == RCX_OK);
  CHECK(take(reduced) == "s1 s3");

  int equal = -1;
  REQUIRE(rcx_word_equal(g, "s1 s2", "s2 s1", &equal) == RCX_OK);
  CHECK(equal == 1);
  REQUIRE(rcx_word_equal(g, "s1 s3", "s3 s1", &equal) == RCX_OK);
  CHECK(equal == 0);
  CHECK(rcx_word_reduce(g, "zz", &reduced) == RCX_UNKNOWN_VERTEX);
  rcx_graph_free(g);
}

TEST_CASE("completion lifecycle through the C API") {
  rcx_graph* g = nullptr;
  REQUIRE(rcx_graph_parse(kEdgelessPair, &g) == RCX_OK);
  rcx_report* r = nullptr;
  REQUIRE(rcx_complete(g, "a b\n", 0, 0, -1, &r) == RCX_OK);

  int finite = 0;
  REQUIRE(rcx_report_is_finite(r, &finite) == RCX_OK);
  CHECK(finite == 1);

  long long v = 0, e = 0, c = 0, rounds = 0;
  REQUIRE(rcx_report_counts(r, &v, &e, &c, &rounds) == RCX_OK);
  CHECK(v == 2);
  CHECK(e == 2);
  CHECK(c == 0);

  rcx_membership m;
  REQUIRE(rcx_report_membership(r, "a b a b", &m) == RCX_OK);
  CHECK(m == RCX_MEMBER);
  REQUIRE(rcx_report_membership(r, "a", &m) == RCX_OK);
  CHECK(m == RCX_NON_MEMBER);

  rcx_qc_verdict qc;
  REQUIRE(rcx_report_qc_verdict(r, &qc) == RCX_OK);
  CHECK(qc == RCX_QUASICONVEX);

  rcx_index_verdict ix;
  REQUIRE(rcx_report_index_verdict(r, g, &ix) == RCX_OK);
  CHECK(ix == RCX_FINITE_INDEX);

  long long euler = 99;
  REQUIRE(rcx_report_euler(r, &euler) == RCX_OK);
  CHECK(euler == 0);

  int has_torsion = -1;
  char* witness = nullptr;
  REQUIRE(rcx_report_torsion(r, &has_torsion, &witness) == RCX_OK);
  CHECK(has_torsion == 0);
  take(witness);

  // Round trip through JSON.
  char* json = nullptr;
  REQUIRE(rcx_report_to_json(r, &json) == RCX_OK);
  std::string doc = take(json);
  rcx_report* back = nullptr;
  REQUIRE(rcx_report_parse(doc.c_str(), &back) == RCX_OK);
  REQUIRE(rcx_report_is_finite(back, &finite) == RCX_OK);
  CHECK(finite == 1);
  rcx_report_free(back);
  rcx_report_free(r);
  rcx_graph_free(g);
}

TEST_CASE("budget exhaustion surfaces as a verdict, not an error") {
  rcx_graph* g = nullptr;
  REQUIRE(rcx_graph_parse(kFourCycle, &g) == RCX_OK);
  rcx_report* r = nullptr;
  REQUIRE(rcx_complete(g, "s1 s2 s3 s4\n", 300, 100, -1, &r) == RCX_OK);
  int finite = 1;
  REQUIRE(rcx_report_is_finite(r, &finite) == RCX_OK);
  CHECK(finite == 0);
  rcx_qc_verdict qc;
  REQUIRE(rcx_report_qc_verdict(r, &qc) == RCX_OK);
  CHECK(qc == RCX_EVIDENCE_NON_QUASICONVEX);
  long long euler;
  CHECK(rcx_report_euler(r, &euler) == RCX_INFINITE_COMPLEX);
  rcx_report_free(r);
  rcx_graph_free(g);
}

TEST_CASE("partite build, verify, project and generalize") {
  rcx_graph* g = nullptr;
  REQUIRE(rcx_graph_parse(kFourCycle, &g) == RCX_OK);

  rcx_partite* p = nullptr;
  CHECK(rcx_partite_build(g, 648, "cycle", 0, &p) == RCX_INVALID_K);
  REQUIRE(rcx_partite_build(g, 2, "cycle", 1, &p) == RCX_OK);

  int ok = 0;
  char* message = nullptr;
  REQUIRE(rcx_partite_verify(p, &ok, &message) == RCX_OK);
  CHECK(ok == 1);
  CHECK(take(message).empty());

  char* projected = nullptr;
  REQUIRE(rcx_project_word(p, "a1_0 a2_1 a1_1", &projected) == RCX_OK);
  CHECK(take(projected) == "s1 s2 s1");

  char* gens = nullptr;
  REQUIRE(rcx_generalize(g, "s1 s2 s3 s4\n", p, &gens, nullptr, nullptr) == RCX_OK);
  std::string words = take(gens);
  CHECK(std::count(words.begin(), words.end(), '\n') == 5);  // rank 8 - 4 + 1

  // Round trip the partite file.
  char* pjson = nullptr;
  REQUIRE(rcx_partite_to_json(p, &pjson) == RCX_OK);
  std::string pdoc = take(pjson);
  rcx_partite* back = nullptr;
  REQUIRE(rcx_partite_parse(pdoc.c_str(), &back) == RCX_OK);
  rcx_partite_free(back);
  rcx_partite_free(p);
  rcx_graph_free(g);
}

TEST_CASE("surface generators and the commutation check") {
  char* words = nullptr;
  char* graph_json = nullptr;
  REQUIRE(rcx_surface_generators(6, &words, &graph_json) == RCX_OK);
  CHECK(take(words) == "p1 p3\np1 p5\np2 p4\np2 p6\n");
  std::string cg = take(graph_json);
  CHECK(cg.find("p6") != std::string::npos);
  CHECK(rcx_surface_generators(4, &words, &graph_json) == RCX_BAD_PARAMETER);

  rcx_graph* gamma = nullptr;
  REQUIRE(rcx_graph_parse(R"({"vertices":["t1","t2"],"edges":[["t1","t2"]]})", &gamma) == RCX_OK);
  rcx_partite* p = nullptr;
  std::string partite_doc = R"({
    "vertices":["p1","p2","p3","p4","p5","p6"],
    "edges":[["p1","p2"],["p2","p3"],["p3","p4"],["p4","p5"],["p5","p6"],["p6","p1"]],
    "base":{"vertices":["t1","t2"],"edges":[["t1","t2"]]},
    "decomposition":{"t1":["p1","p3","p5"],"t2":["p2","p4","p6"]},
    "connector":"cycle","k":3})";
  REQUIRE(rcx_partite_parse(partite_doc.c_str(), &p) == RCX_OK);

  int equal = 0;
  REQUIRE(rcx_commutation_check(gamma, "t1 t1\nt2 t2\n", p, 0, 0, &equal) == RCX_OK);
  CHECK(equal == 1);

  rcx_partite_free(p);
  rcx_graph_free(gamma);
}

TEST_CASE("curvature check across the C boundary") {
  rcx_graph* tri = nullptr;
  REQUIRE(rcx_graph_parse(R"({"vertices":["s1","s2","s3"],
                              "edges":[["s1","s2"],["s2","s3"],["s1","s3"]]})",
                          &tri) == RCX_OK);
  int violation = 0;
  char* witness = nullptr;
  REQUIRE(rcx_curvature_check(tri, 3, -1, 0, 0, &violation, &witness) == RCX_OK);
  CHECK(violation == 1);
  CHECK(take(witness).find("1/2") != std::string::npos);
  rcx_graph_free(tri);
}
