/* cistkit: exact panchromatic/bipanchromatic hypergraph coloring and
 * completely independent spanning trees in split graphs.
 *
 * All functions return CK_OK on success. On failure the return value
 * classifies the error and ck_last_error() carries a message (thread-local).
 * Strings returned through out-parameters are heap-allocated; release them
 * with ck_string_free().
 *
 * Text formats:
 *   hypergraph  "p hg <n> <m>" header, then m hyperedge lines
 *   split graph "p sg <d> <i>" header, then i D-neighborhood lines
 *   coloring    "s col <k>" header, then "<vertex> <color>" lines
 *   trees       JSON {"k": int, "trees": [[[u,v], ...], ...]}
 */
#ifndef CISTKIT_H
#define CISTKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_PARSE_ERROR,
  CK_INVALID_HYPERGRAPH,
  CK_INVALID_SPLITGRAPH,
  CK_INVALID_COLORING,
  CK_ISOLATED_VERTEX,
  CK_NOT_SPLIT,
  CK_TOO_FEW_VERTICES,
  CK_INFEASIBLE,
  CK_INVALID_CERTIFICATE,
  CK_INVALID_CLASSES,
  CK_NOT_BIPANCHROMATIC,
  CK_NOT_PANCHROMATIC,
  CK_PRECONDITION_VIOLATED,
  CK_TOO_LARGE,
  CK_NOT_CONNECTED,
  CK_WITNESS_INVALID,
  CK_INTERNAL_VERIFICATION
} ck_status;

typedef struct ck_hypergraph ck_hypergraph;
typedef struct ck_splitgraph ck_splitgraph;

const char* ck_status_name(ck_status status);
const char* ck_last_error(void);
void ck_string_free(char* s);

/* --- parsing and conversion --- */
ck_status ck_hypergraph_parse(const char* text, ck_hypergraph** out);
ck_status ck_splitgraph_parse(const char* text, ck_splitgraph** out);
void ck_hypergraph_free(ck_hypergraph* h);
void ck_splitgraph_free(ck_splitgraph* g);
ck_status ck_hypergraph_write(const ck_hypergraph* h, char** out_text);
ck_status ck_splitgraph_write(const ck_splitgraph* g, char** out_text);
ck_status ck_split_of_hypergraph(const ck_hypergraph* h, ck_splitgraph** out);
ck_status ck_hypergraph_of_split(const ck_splitgraph* g, ck_hypergraph** out);

/* --- exact coloring solvers --- */
ck_status ck_chi_p(const ck_hypergraph* h, int* value, char** witness_col);
ck_status ck_chi_p2(const ck_hypergraph* h, int* value, char** witness_col);
ck_status ck_alpha(const ck_hypergraph* h, int k, int* value,
                   char** witness_col);

/* --- completely independent spanning trees --- */
/* ok is 1/0; on failure *reason names the violated CIST condition. */
ck_status ck_cist_verify(const ck_splitgraph* g, const char* trees_json,
                         int* ok, char** reason);
/* Constructed lower-bound certificate plus a JSON report with the
 * chi_p^2-based bounds and, on small instances, the exact maximum. */
ck_status ck_cist_construct(const ck_splitgraph* g, char** trees_json,
                            char** report_json);
/* Exact maximum number of CIST; k_cap <= 0 means no explicit cap. */
ck_status ck_cist_exact(const ck_splitgraph* g, int k_cap, int* value);

/* --- hardness-reduction gadgets --- */
ck_status ck_reduce_bicp(const ck_hypergraph* h, char** out_hg_text);
ck_status ck_reduce_cist(const ck_hypergraph* h, char** out_sg_text);
ck_status ck_map_witness_bicp_fwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_col);
ck_status ck_map_witness_bicp_bwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_col);
ck_status ck_map_witness_cist_fwd(const ck_hypergraph* h, const char* col_text,
                                  char** out_trees_json);
ck_status ck_map_witness_cist_bwd(const ck_hypergraph* h,
                                  const char* trees_json, char** out_col);

/* --- integer-program export; kind is "pan", "bipan" or "alpha" --- */
ck_status ck_lp_export(const ck_hypergraph* h, const char* kind,
                       char** out_lp_text);

/* --- experiment harness --- */
ck_status ck_random_hypergraph(int n, int m, uint64_t seed, char** out_hg_text);
ck_status ck_eq3_check(const ck_hypergraph* h, uint64_t seed_label,
                       char** record_json);
/* Runs the conjecture grid and writes report.{csv|json}, summary.json and
 * any counterexample certificates into out_dir. */
ck_status ck_experiment_conjecture(int n_lo, int n_hi, int m_off_lo,
                                   int m_off_hi, int samples, uint64_t seed,
                                   const char* out_dir, const char* format,
                                   char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* CISTKIT_H */
