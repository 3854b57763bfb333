/* C interface to the RACG subgroup-completion engine.
 *
 * All functions return RCX_OK on success; on failure they return the error
 * category and leave a message in rcx_last_error() (thread-local). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with rcx_string_free(). Handles are opaque and freed with their
 * matching *_free function. Passing NULL for an optional out-parameter skips
 * that output.
 */
#ifndef RCX_H
#define RCX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcx_status {
  RCX_OK = 0,
  RCX_ERROR = 1,
  RCX_PARSE_ERROR = 2,
  RCX_VALIDATION_ERROR = 3,
  RCX_UNKNOWN_VERTEX = 4,
  RCX_UNKNOWN_LETTER = 5,
  RCX_EMPTY_WORD = 6,
  RCX_NOT_FOLDED = 7,
  RCX_INVALID_K = 8,
  RCX_BAD_PARAMETER = 9,
  RCX_LENGTH_CAP_EXCEEDED = 10,
  RCX_NOT_A_GENERALIZATION = 11,
  RCX_LABEL_OUTSIDE_BASE = 12,
  RCX_BUDGET_EXCEEDED = 13,
  RCX_INFINITE_COMPLEX = 14,
  RCX_OVERFLOW = 15
} rcx_status;

typedef struct rcx_graph rcx_graph;
typedef struct rcx_partite rcx_partite;
typedef struct rcx_report rcx_report;

const char* rcx_last_error(void);
void rcx_string_free(char* s);

/* ---- graphs ---- */

rcx_status rcx_graph_parse(const char* json, rcx_graph** out);
void rcx_graph_free(rcx_graph* g);
rcx_status rcx_graph_to_json(const rcx_graph* g, char** out);

/* JSON report with any of: cycle flags and witnesses, one-endedness verdict,
 * cone vertex. Flags select the sections. */
rcx_status rcx_graph_check(const rcx_graph* g, int with_cycles, int with_ends, int with_cone,
                           char** json_out);

/* ---- words ---- */

/* Words are space-separated vertex names. */
rcx_status rcx_word_reduce(const rcx_graph* g, const char* word, char** out);
rcx_status rcx_word_equal(const rcx_graph* g, const char* w1, const char* w2, int* out_equal);

/* ---- partite graphs ---- */

/* k == 0 chooses the smallest valid k. connectors: "cycle" or "path". */
rcx_status rcx_partite_build(const rcx_graph* g, long long k, const char* connectors, int force,
                             rcx_partite** out);
rcx_status rcx_partite_parse(const char* json, rcx_partite** out);
void rcx_partite_free(rcx_partite* p);
rcx_status rcx_partite_to_json(const rcx_partite* p, char** out);
/* ok=1 and empty message when the decomposition checks out; otherwise ok=0
 * and a one-line violation description. */
rcx_status rcx_partite_verify(const rcx_partite* p, int* ok, char** message_out);
rcx_status rcx_partite_graph(const rcx_partite* p, rcx_graph** out);
rcx_status rcx_partite_base(const rcx_partite* p, rcx_graph** out);
rcx_status rcx_project_word(const rcx_partite* p, const char* word, char** out);

/* Surface-subgroup generators over the cycle graph p1..p{two_k}; words in
 * word-file format (one per line), graph as a graph file. */
rcx_status rcx_surface_generators(long long two_k, char** words_out, char** graph_json_out);

/* ---- completions ---- */

/* wordfile: one word per line; an empty line is the empty word (rejected —
 * rose words must be nonempty). shuffle_seed < 0 keeps the canonical
 * operation order. */
rcx_status rcx_complete(const rcx_graph* g, const char* wordfile, long long max_vertices,
                        long long max_rounds, long long shuffle_seed, rcx_report** out);
rcx_status rcx_report_parse(const char* json, rcx_report** out);
void rcx_report_free(rcx_report* r);
rcx_status rcx_report_to_json(const rcx_report* r, char** out);
rcx_status rcx_report_is_finite(const rcx_report* r, int* out_finite);
rcx_status rcx_report_counts(const rcx_report* r, long long* vertices, long long* edges,
                             long long* cubes, long long* rounds);
rcx_status rcx_report_euler(const rcx_report* r, long long* out);
/* has_witness=1 with "vertex <id>: <word>" in witness_out when a torsion
 * witness exists. */
rcx_status rcx_report_torsion(const rcx_report* r, int* has_witness, char** witness_out);

typedef enum rcx_membership {
  RCX_MEMBER = 0,
  RCX_NON_MEMBER = 1,
  RCX_MEMBERSHIP_UNKNOWN = 2
} rcx_membership;
rcx_status rcx_report_membership(const rcx_report* r, const char* word, rcx_membership* out);

typedef enum rcx_qc_verdict {
  RCX_QUASICONVEX = 0,
  RCX_EVIDENCE_NON_QUASICONVEX = 1,
  RCX_QC_INCONCLUSIVE = 2
} rcx_qc_verdict;
rcx_status rcx_report_qc_verdict(const rcx_report* r, rcx_qc_verdict* out);

typedef enum rcx_index_verdict {
  RCX_FINITE_INDEX = 0,
  RCX_INFINITE_INDEX = 1,
  RCX_INDEX_NOT_APPLICABLE = 2,
  RCX_INDEX_UNKNOWN = 3
} rcx_index_verdict;
rcx_status rcx_report_index_verdict(const rcx_report* r, const rcx_graph* g,
                                    rcx_index_verdict* out);

/* ---- generalization ---- */

/* Generalized generating set (word-file format over the partite graph),
 * plus optionally the generalized rose complex and the correspondence maps
 * as JSON. */
rcx_status rcx_generalize(const rcx_graph* g, const char* wordfile, const rcx_partite* p,
                          char** generators_out, char** complex_json_out,
                          char** correspondence_json_out);
rcx_status rcx_commutation_check(const rcx_graph* g, const char* wordfile, const rcx_partite* p,
                                 long long max_vertices, long long max_rounds, int* out_equal);

/* ---- sectional curvature ---- */

/* Exhaustive up to `bound` vertices per section; seed >= 0 additionally
 * samples `samples` larger subsets (up to sample_max_size). violation=1 with
 * a witness JSON when a positive section is found. */
rcx_status rcx_curvature_check(const rcx_graph* g, long long bound, long long seed,
                               long long samples, long long sample_max_size, int* violation,
                               char** witness_json_out);

#ifdef __cplusplus
}
#endif

#endif /* RCX_H */
