/* C interface to the causal-persuasion library.
 *
 * Graphs travel as opaque handles; richer results travel as JSON strings
 * allocated by the library and released with cp_string_free. Every call
 * returns a status code; on failure cp_last_error() describes the problem
 * for the calling thread.
 */
#ifndef CAUSALPERSUADE_H
#define CAUSALPERSUADE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cp_graph cp_graph;

typedef enum cp_status {
    CP_OK = 0,
    CP_ERR_INPUT = 2,      /* malformed input or precondition violation */
    CP_ERR_INFEASIBLE = 3, /* reserved for callers mapping plan verdicts */
    CP_ERR_BUDGET = 4,     /* search or enumeration budget exceeded */
    CP_ERR_INTERNAL = 5
} cp_status;

const char* cp_version(void);
const char* cp_last_error(void);
void cp_string_free(char* s);

/* Graph JSON: {"variables":["a",...],"edges":[["a","b"],...]} with
 * ["a","b"] meaning a -> b. Unknown keys and duplicate edges are rejected. */
cp_status cp_graph_parse(const char* json, cp_graph** out);
cp_status cp_graph_fixture(const char* id, int n, cp_graph** out);
cp_status cp_graph_to_json(const cp_graph* g, char** out_json);
void cp_graph_free(cp_graph* g);

/* d-separation of a and b given the comma-separated list `given` (may be
 * empty or NULL). Writes 1 or 0 to *out. */
cp_status cp_dsep(const cp_graph* g, const char* a, const char* b, const char* given,
                  int* out);

/* IC pattern over the comma-separated scope (NULL or empty means full scope):
 * {"directed":[...],"undirected":[...],"conflict":bool}. */
cp_status cp_cpdag(const cp_graph* g, const char* scope, int budget, char** out_json);

/* {"models":[{graph},...]} - every DAG on the scope consistent with the
 * graph's data. */
cp_status cp_enumerate(const cp_graph* g, const char* scope, int budget, char** out_json);

/* World profile, plus cause catalog when x and y are both non-NULL. */
cp_status cp_analyze(const cp_graph* g, const char* x, const char* y, int budget,
                     char** out_json);

/* Planners. Plans serialize as {"disclosure":[...],"proposal":{graph}|null,
 * "verdict":"accepted|rejected|infeasible","new_variables":n,"trace":[...]}.
 * A plan that is merely infeasible still returns CP_OK; budget and input
 * problems use the error codes. */
cp_status cp_persuade(const cp_graph* truth, const cp_graph* prior /* nullable */,
                      const char* x, const char* y, int sophisticated, int truthful_only,
                      int budget, char** out_json);
cp_status cp_debunk(const cp_graph* truth, const cp_graph* prior, const char* link_from,
                    const char* link_to, int budget, char** out_json);
cp_status cp_dissuade(const cp_graph* truth, const cp_graph* prior, const char* x,
                      const char* y, int sophisticated, int budget, char** out_json);

/* Newline-separated fixture ids. */
cp_status cp_fixture_list(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAUSALPERSUADE_H */
