/* C interface to the P_n-line-graph library.
 *
 * Functions return an hline_status; on failure hline_last_error() describes
 * the problem for the calling thread. Strings handed out through `char**`
 * parameters are owned by the caller and released with hline_string_free.
 * JSON outputs are UTF-8 and deterministic for fixed inputs and budgets. */
#ifndef HLINE_HLINE_H
#define HLINE_HLINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HLINE_API __declspec(dllexport)
#else
#define HLINE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hline_status {
  HLINE_OK = 0,
  HLINE_INVALID_ARGUMENT = 1,
  HLINE_PARSE = 2,
  HLINE_RESOURCE = 3,
  HLINE_IO = 4,
  HLINE_INTERNAL = 5
} hline_status;

typedef enum hline_outcome {
  HLINE_CONVERGED = 0,
  HLINE_TERMINATED = 1,
  HLINE_DIVERGED_BY_ORDER = 2,
  HLINE_UNKNOWN = 3
} hline_outcome;

typedef struct hline_budget {
  size_t max_iter;
  size_t max_order;
  uint64_t search_nodes; /* per certificate check, per iterate */
} hline_budget;

typedef struct hline_graph hline_graph;

HLINE_API const char* hline_version(void);

/* Message of the last failure on this thread, "" after a success. */
HLINE_API const char* hline_last_error(void);
/* Position of the last parse error (1-based); 0 when not a parse error. */
HLINE_API void hline_last_error_position(size_t* line, size_t* column);

HLINE_API void hline_string_free(char* s);

HLINE_API void hline_budget_default(hline_budget* out);

/* Edge list ("4; 0-1, 1-2"), family spec ("C6", "G(r=1,m=3)") or graph6. */
HLINE_API hline_status hline_graph_parse(const char* text, hline_graph** out);
/* Family spec only. */
HLINE_API hline_status hline_graph_family(const char* spec, hline_graph** out);
/* `pairs` holds 2 * edge_count vertex ids. */
HLINE_API hline_status hline_graph_from_edges(size_t order, const uint32_t* pairs, size_t edge_count,
                                              hline_graph** out);
HLINE_API void hline_graph_free(hline_graph* g);

HLINE_API size_t hline_graph_order(const hline_graph* g);
HLINE_API size_t hline_graph_size(const hline_graph* g);
HLINE_API hline_status hline_graph_edge_list(const hline_graph* g, char** out);
HLINE_API hline_status hline_graph_graph6(const hline_graph* g, char** out);
/* Hex canonical code; equal for isomorphic graphs only. */
HLINE_API hline_status hline_graph_canonical_code(const hline_graph* g, char** out);
HLINE_API hline_status hline_graph_is_isomorphic(const hline_graph* a, const hline_graph* b, int* out);

/* HL^1..HL^steps (fewer if an iterate is empty) with provenance. */
HLINE_API hline_status hline_hl_json(const hline_graph* g, size_t n, size_t steps, char** out);

/* Classification report. `cache_dir` NULL disables the cache; "" selects
 * the default location. `outcome` and `cache_hit` may be NULL. */
HLINE_API hline_status hline_classify_json(const hline_graph* g, size_t n, const hline_budget* budget,
                                           const char* cache_dir, hline_outcome* outcome, int* cache_hit,
                                           char** out);

HLINE_API hline_status hline_property_suite_json(const hline_graph* g, size_t n, const hline_budget* budget,
                                                 char** out);

/* Re-checks a certificate object as found under "certificate" in a
 * classification report. `reason` (may be NULL) receives the first
 * violated condition, or "" when the certificate holds. */
HLINE_API hline_status hline_verify_certificate_json(const char* json, int* ok, char** reason);

/* `unknown` (may be NULL) receives the number of undecided candidates. */
HLINE_API hline_status hline_search_min_json(size_t n, size_t v_max, int unions, int all_records,
                                             const hline_budget* budget, size_t* unknown, char** out);

/* `input` may be NULL to sweep all graphs on at most v_max vertices.
 * `unknown` (may be NULL) receives the number of Unknown classifications. */
HLINE_API hline_status hline_conjecture_json(const char* id, size_t n, size_t v_max, const hline_graph* input,
                                             const hline_budget* budget, size_t* unknown, char** out);

/* Runs the acceptance criteria for path orders n_lo..n_hi. `progress`
 * (may be NULL) receives each criterion's JSON object as it finishes. */
typedef void (*hline_progress_fn)(const char* criterion_json, void* user);
HLINE_API hline_status hline_verify_paper_json(size_t n_lo, size_t n_hi, const hline_budget* budget,
                                               hline_progress_fn progress, void* user, int* all_passed,
                                               char** out);

/* `dir` NULL or "" selects the default location (HLINE_CACHE_DIR, ...). */
HLINE_API hline_status hline_cache_dir(const char* dir, char** out);
HLINE_API hline_status hline_cache_stats_json(const char* dir, char** out);
HLINE_API hline_status hline_cache_clear(const char* dir, size_t* removed);

#ifdef __cplusplus
}
#endif

#endif
