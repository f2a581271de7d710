/* C API for the mapfcc solver library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return MAPFCC_OK on success; on failure, mapfcc_last_error()
 * describes the problem (the message is thread-local and valid until the
 * next failing call on the same thread).
 */
#ifndef MAPFCC_H
#define MAPFCC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mapfcc_instance mapfcc_instance;
typedef struct mapfcc_schedule mapfcc_schedule;
typedef struct mapfcc_validation mapfcc_validation;
typedef struct mapfcc_mcc mapfcc_mcc;

typedef enum {
  MAPFCC_OK = 0,
  MAPFCC_ERROR_PARSE = 1,            /* malformed input text */
  MAPFCC_ERROR_INVALID_ARGUMENT = 2, /* contract violation (bad handle, ids, ...) */
  MAPFCC_ERROR_UNKNOWN = 3,
} mapfcc_status;

typedef enum {
  MAPFCC_FEASIBLE = 0,
  MAPFCC_INFEASIBLE = 1,
  MAPFCC_BUDGET_EXCEEDED = 2,
} mapfcc_outcome;

typedef enum {
  MAPFCC_STRATEGY_AUTO = 0,
  MAPFCC_STRATEGY_BFS = 1,
  MAPFCC_STRATEGY_TREE = 2,
  MAPFCC_STRATEGY_EXPANDED = 3,
  MAPFCC_STRATEGY_LOCAL = 4,
  MAPFCC_STRATEGY_ORACLE = 5,
} mapfcc_strategy;

typedef struct {
  int64_t expanded_nodes;
  int64_t generated_nodes;
  int64_t max_frontier;
  int64_t connected_set_estimate; /* -1 when not computed */
  int strategy_used;              /* mapfcc_strategy actually run */
} mapfcc_solve_stats;

const char* mapfcc_version(void);
const char* mapfcc_status_string(mapfcc_status status);
const char* mapfcc_strategy_name(int strategy);
/* Message of the most recent failure on this thread ("" if none). */
const char* mapfcc_last_error(void);
void mapfcc_string_free(char* text);

/* ---- instances ---- */

mapfcc_status mapfcc_instance_parse(const char* text, mapfcc_instance** out);
/* Canonical text; free with mapfcc_string_free. */
mapfcc_status mapfcc_instance_print(const mapfcc_instance* inst, char** out_text);
void mapfcc_instance_free(mapfcc_instance* inst);

int mapfcc_instance_vertex_count(const mapfcc_instance* inst);
int mapfcc_instance_edge_count(const mapfcc_instance* inst);
int mapfcc_instance_agent_count(const mapfcc_instance* inst);
int mapfcc_instance_range(const mapfcc_instance* inst);           /* d */
int mapfcc_instance_makespan_budget(const mapfcc_instance* inst); /* ell */
int mapfcc_instance_is_tree(const mapfcc_instance* inst);
mapfcc_status mapfcc_instance_agent(const mapfcc_instance* inst, int agent,
                                    int* start, int* target);
/* Caller provides arrays of length edge_count; edges come sorted, u < v. */
mapfcc_status mapfcc_instance_edges(const mapfcc_instance* inst, int* us, int* vs);

/* ---- solving ---- */

/* node_budget 0 = unlimited. On MAPFCC_FEASIBLE, *schedule is set (free with
 * mapfcc_schedule_free); otherwise it is NULL. stats may be NULL. */
mapfcc_status mapfcc_solve(const mapfcc_instance* inst, int strategy,
                           int64_t node_budget, int estimate_connected_sets,
                           int* outcome, mapfcc_schedule** schedule,
                           mapfcc_solve_stats* stats);
/* Diagnostic for the most recent non-feasible outcome on this thread. */
const char* mapfcc_last_diagnostic(void);

/* ---- schedules ---- */

mapfcc_status mapfcc_schedule_parse(const char* text, mapfcc_schedule** out);
mapfcc_status mapfcc_schedule_print(const mapfcc_schedule* sched, char** out_text);
void mapfcc_schedule_free(mapfcc_schedule* sched);
int mapfcc_schedule_agent_count(const mapfcc_schedule* sched);
int mapfcc_schedule_makespan(const mapfcc_schedule* sched);
/* Fills positions[0..k) with the arrangement after `turn` turns. */
mapfcc_status mapfcc_schedule_positions(const mapfcc_schedule* sched, int turn,
                                        int* positions);

/* ---- validation ---- */

mapfcc_status mapfcc_validate(const mapfcc_instance* inst,
                              const mapfcc_schedule* sched,
                              mapfcc_validation** out);
void mapfcc_validation_free(mapfcc_validation* report);
int mapfcc_validation_ok(const mapfcc_validation* report);
int mapfcc_validation_within_budget(const mapfcc_validation* report);
int mapfcc_validation_start_connected(const mapfcc_validation* report);
int mapfcc_validation_violation_count(const mapfcc_validation* report);
/* kind receives a static string (WrongStart, NonMove, Collision, Swap,
 * Disconnected, WrongTarget); agents are -1 when not applicable. */
mapfcc_status mapfcc_validation_violation(const mapfcc_validation* report, int index,
                                          int* turn, const char** kind,
                                          int* agent_a, int* agent_b, char** detail);

/* ---- reductions ---- */

mapfcc_status mapfcc_mcc_parse(const char* text, mapfcc_mcc** out);
void mapfcc_mcc_free(mapfcc_mcc* mcc);
mapfcc_status mapfcc_reduce_mcc(const mapfcc_mcc* mcc, mapfcc_instance** out);

/* ---- diagnostics ---- */

/* Logical-structure text ("msogi 1") for external model checkers. */
mapfcc_status mapfcc_emit_mso(const mapfcc_instance* inst, char** out_text);
/* Exact count of connected vertex sets of `size` containing `vertex`. */
mapfcc_status mapfcc_count_connected_sets(const mapfcc_instance* inst, int vertex,
                                          int size, uint64_t* out_count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MAPFCC_H */
