/* C API of the pirebal container-rebalancing solver.
 *
 * All objects are opaque handles created and released through this
 * interface. Functions return PRB_OK on success; on failure the returned
 * status identifies the error class and prb_last_error() carries a
 * thread-local detail message. Strings returned through char** parameters
 * are owned by the caller and must be released with prb_string_free().
 */

#ifndef PIREBAL_H
#define PIREBAL_H

#include <stdint.h>

#if defined(_WIN32)
#define PRB_API __declspec(dllexport)
#else
#define PRB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct prb_instance prb_instance;
typedef struct prb_plan prb_plan;

typedef enum prb_status {
  PRB_OK = 0,
  PRB_E_IO = 1,
  PRB_E_PARSE = 2,
  PRB_E_BAD_PARAMETERS = 3,
  PRB_E_DUPLICATE_VERTEX = 4,
  PRB_E_UNKNOWN_ENDPOINT = 5,
  PRB_E_NEGATIVE_LENGTH = 6,
  PRB_E_DISCONNECTED_GRAPH = 7,
  PRB_E_ASYMMETRIC_INPUT = 8,
  PRB_E_NEGATIVE_ENTRY = 9,
  PRB_E_INVALID_MATRIX = 10,
  PRB_E_UNKNOWN_VERTEX = 11,
  PRB_E_INVALID_INSTANCE = 12,
  PRB_E_EMPTY_MEMBER_SET = 13,
  PRB_E_UNBALANCED_CLASSIFICATION = 14,
  PRB_E_INCONSISTENT_FLOW = 15,
  PRB_E_RESOURCE_LIMIT = 16,
  PRB_E_INVALID_GRAIN = 17,
  PRB_E_INTERNAL = 18
} prb_status;

PRB_API const char* prb_status_name(prb_status status);

/* Detail message of the most recent failure on this thread; empty string
 * when the last call succeeded. The pointer stays valid until the next
 * API call on the same thread. */
PRB_API const char* prb_last_error(void);

PRB_API void prb_string_free(char* text);

/* ---- instances ---- */

PRB_API prb_status prb_instance_read(const char* path, prb_instance** out);
PRB_API prb_status prb_instance_from_json(const char* text, prb_instance** out);
PRB_API prb_status prb_instance_write(const prb_instance* instance, const char* path);
PRB_API prb_status prb_instance_to_json(const prb_instance* instance, char** out_text);

/* Deterministic seeded instance generator; see the file format doc for the
 * units_of_k regime. */
PRB_API prb_status prb_instance_generate(int32_t n, int64_t capacity, uint64_t seed,
                                         int units_of_k, int64_t max_units, prb_instance** out);

/* Report JSON: {"ok": bool, "violations": [string...]}. Never fails on
 * invariant violations; those are data in the report. */
PRB_API prb_status prb_instance_validate(const prb_instance* instance, char** out_report_json);

/* Summary JSON: vertex count, capacity, start, totals. */
PRB_API prb_status prb_instance_summary(const prb_instance* instance, char** out_json);

PRB_API void prb_instance_free(prb_instance* instance);

/* ---- solving ---- */

PRB_API prb_status prb_solve_heuristic(const prb_instance* instance, prb_plan** out_plan);

/* Same as prb_solve_heuristic but also returns the intermediate artifacts
 * (classification, matching, tours, segments) as JSON. */
PRB_API prb_status prb_solve_heuristic_details(const prb_instance* instance, prb_plan** out_plan,
                                               char** out_details_json);

/* Exact minimum-distance plan. grain 0 selects the default quantum;
 * max_states 0 keeps the built-in limit. Fails with
 * PRB_E_RESOURCE_LIMIT when the state budget is exhausted. */
PRB_API prb_status prb_solve_exact(const prb_instance* instance, int64_t max_states, int64_t grain,
                                   prb_plan** out_plan);

PRB_API prb_status prb_compare(const prb_instance* instance, int64_t max_states, int64_t grain,
                               double* out_heuristic_cost, double* out_optimal_cost,
                               double* out_ratio);

/* ---- plans ---- */

PRB_API prb_status prb_plan_read(const char* path, prb_plan** out);
PRB_API prb_status prb_plan_write(const prb_plan* plan, const char* path);
PRB_API prb_status prb_plan_to_json(const prb_plan* plan, char** out_text);
PRB_API int64_t prb_plan_step_count(const prb_plan* plan);
PRB_API prb_status prb_plan_cost(const prb_instance* instance, const prb_plan* plan,
                                 double* out_cost);

/* Feasibility check with the full report (violations, load trace, final
 * state) as JSON. out_feasible is 1/0. */
PRB_API prb_status prb_verify(const prb_instance* instance, const prb_plan* plan,
                              int* out_feasible, char** out_report_json);

PRB_API void prb_plan_free(prb_plan* plan);

/* ---- matrices and export ---- */

/* Metric closure of a distance matrix in CSV form (header row of labels,
 * one value row per vertex). out_changes_json lists every changed entry as
 * {"row","col","before","after"}, each symmetric pair reported once. */
PRB_API prb_status prb_closure_csv(const char* csv_text, char** out_closed_csv,
                                   char** out_changes_json);

/* Graphviz description of the instance: vertices labeled "id x/y", edges
 * labeled with their length. */
PRB_API prb_status prb_export_dot(const prb_instance* instance, char** out_dot);

#ifdef __cplusplus
}
#endif

#endif /* PIREBAL_H */
