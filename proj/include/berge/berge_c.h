#ifndef BERGE_C_H
#define BERGE_C_H

/* C interface to the berge library. Every call returning berge_status sets a
 * thread-local message readable with berge_last_error() on failure. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with berge_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(BERGE_BUILDING_LIBRARY)
#define BERGE_API __attribute__((visibility("default")))
#else
#define BERGE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct berge_hypergraph berge_hypergraph;
typedef struct berge_graph berge_graph;

typedef enum berge_status {
  BERGE_OK = 0,
  BERGE_NOT_FOUND = 1, /* the requested object does not exist */
  BERGE_ERR_PARSE = 2,
  BERGE_ERR_INVALID_ARGUMENT = 3,
  BERGE_ERR_INVALID_VERTEX = 4,
  BERGE_ERR_PRECONDITION = 5,
  BERGE_ERR_GUARDRAIL = 6,
  BERGE_ERR_THEOREM_VIOLATION = 7,
  BERGE_ERR_INTERNAL = 8
} berge_status;

typedef enum berge_oracle_kind {
  BERGE_ORACLE_CYCLE = 0,
  BERGE_ORACLE_PATH = 1,
  BERGE_ORACLE_BEST_PATH = 2,
  BERGE_ORACLE_HAMILTONIAN = 3
} berge_oracle_kind;

BERGE_API const char* berge_version(void);
BERGE_API const char* berge_last_error(void);
BERGE_API const char* berge_status_name(berge_status status);
BERGE_API void berge_string_free(char* s);

/* Hypergraphs (.bhg text). */
BERGE_API berge_status berge_hypergraph_parse(const char* text, berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_serialize(const berge_hypergraph* h, char** out);
BERGE_API void berge_hypergraph_free(berge_hypergraph* h);
BERGE_API int berge_hypergraph_vertex_count(const berge_hypergraph* h);
BERGE_API size_t berge_hypergraph_edge_count(const berge_hypergraph* h);
BERGE_API berge_status berge_hypergraph_degree(const berge_hypergraph* h, int v, size_t* out);
BERGE_API size_t berge_hypergraph_min_degree(const berge_hypergraph* h);
BERGE_API berge_status berge_shadow(const berge_hypergraph* h, berge_graph** out);

/* Graphs (.bhg text with every edge of size 2). */
BERGE_API berge_status berge_graph_parse(const char* text, berge_graph** out);
BERGE_API berge_status berge_graph_serialize(const berge_graph* g, char** out);
BERGE_API void berge_graph_free(berge_graph* g);
BERGE_API int berge_graph_vertex_count(const berge_graph* g);
BERGE_API size_t berge_graph_edge_count(const berge_graph* g);
/* Hamiltonian cycle as a JSON vertex list; BERGE_NOT_FOUND if none. */
BERGE_API berge_status berge_graph_hamiltonian(const berge_graph* g, char** cycle_json);

/* Exact Berge oracles; certificate JSON, or BERGE_NOT_FOUND. */
BERGE_API berge_status berge_oracle(const berge_hypergraph* h, berge_oracle_kind kind,
                                    int allow_large, char** certificate_json);
/* Writes {"accepted":bool,"fault":str,"position":int}. Accepts a bare
 * certificate or an object holding one under "certificate". */
BERGE_API berge_status berge_check_certificate(const berge_hypergraph* h, const char* certificate_json,
                                               char** result_json);

/* Generators. family: dirac-sharp, path-sharp, cycle-sharp, eg-sharp. The
 * sidecar lists the claimed invariants and the obstruction certificate. */
BERGE_API berge_status berge_generate(const char* family, int n, int k, int variant,
                                      berge_hypergraph** out, char** sidecar_json);
/* shape: "path" or "star". */
BERGE_API berge_status berge_generate_fnk(int n, int k, const char* shape, berge_graph** out,
                                          char** sidecar_json);

/* options_json: {"allow_small":bool,"choice_seed":int} or NULL. */
BERGE_API berge_status berge_pipeline(const berge_hypergraph* h, const char* options_json,
                                      char** trace_json);
/* {"certificate":{...}} or {"long_cycle":{...}}. */
BERGE_API berge_status berge_degree_certificate(const berge_hypergraph* h, int k, char** result_json);

/* k <= 0 selects floor((n-1)/2). */
BERGE_API berge_status berge_classify(const berge_graph* g, int k, int report_all, int g3_second_side,
                                      char** result_json);
BERGE_API berge_status berge_apply_swap(const berge_graph* g, const char* witness_json,
                                        const char* plan_json, berge_graph** out,
                                        char** result_json);

/* theorem: thm4 thm5 thm6 lemma5G erdosBound egGraph luoCliques dirac.
 * params_json: {"n","k","d","r","mode","trials","seed","p","jobs","allow_large"}. */
BERGE_API berge_status berge_verify(const char* theorem, const char* params_json, char** report_json);

/* params_json: {"n","d","k","r"}; every present group is evaluated. */
BERGE_API berge_status berge_bounds(const char* params_json, char** result_json);

#ifdef __cplusplus
}
#endif

#endif
