/* C interface to the gridgather library: min-max node analysis and gathering
 * simulation for robot configurations on the integer grid.
 *
 * All objects are opaque handles owned by the library; every *_free is safe
 * on NULL. Functions returning gg_status use GG_OK (0) for success; the
 * nonzero codes double as CLI exit codes. Strings returned through
 * `const char*` getters stay valid until the owning handle is freed.
 */
#ifndef GRIDGATHER_H
#define GRIDGATHER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
    GG_OK = 0,
    GG_ERR_PARSE = 2,
    GG_ERR_UNGATHERABLE = 3,
    GG_ERR_CUTOFF = 4,
    GG_ERR_BOUND = 5,
    GG_ERR_INVALID = 6,
} gg_status;

typedef enum gg_sched_kind {
    GG_SCHED_FSYNC = 0,
    GG_SCHED_SSYNC = 1,
    GG_SCHED_ASYNC = 2,
} gg_sched_kind;

typedef enum gg_gather_class {
    GG_CLASS_UNGATHERABLE = 0,
    GG_CLASS_I1 = 1,
    GG_CLASS_I2 = 2,
    GG_CLASS_I3 = 3,
    GG_CLASS_I4 = 4,
} gg_gather_class;

typedef enum gg_shape {
    GG_SHAPE_SINGLE_NODE = 0,
    GG_SHAPE_STEP_GRAPH = 1,
    GG_SHAPE_DISCONNECTED_STEP_GRAPH = 2,
    GG_SHAPE_FOUR_CYCLE = 3,
} gg_shape;

typedef struct gg_config gg_config;
typedef struct gg_analysis gg_analysis;
typedef struct gg_run gg_run;

typedef struct gg_sched_spec {
    int kind;                       /* gg_sched_kind */
    uint64_t seed;
    int64_t fairness_window;        /* 0: default 4n */
    int64_t max_look_to_move_delay; /* ASYNC only */
    int nasty;                      /* ASYNC: maximize snapshot staleness */
} gg_sched_spec;

unsigned gg_version(void);
const char* gg_status_message(gg_status s);
void gg_string_free(char* s);

/* ---- configurations ---- */

/* Parse the JSON configuration-file format. On failure returns GG_ERR_PARSE
 * and, when err_msg is non-NULL, stores a message to free with
 * gg_string_free. */
gg_status gg_config_parse(const char* json_text, gg_config** out, char** err_msg);
gg_status gg_config_from_points(const int64_t* xy_pairs, size_t n, gg_config** out);
void gg_config_free(gg_config* c);
int64_t gg_config_robot_count(const gg_config* c);
/* Scheduler spec / activation limit embedded in the file, if any. Returns 1
 * when present. */
int gg_config_scheduler(const gg_config* c, gg_sched_spec* out);
int gg_config_max_activations(const gg_config* c, int64_t* out);

/* ---- analysis ---- */

gg_status gg_analyze(const gg_config* c, gg_analysis** out);
/* Brute-force oracle analysis; GG_ERR_BOUND if the scan window exceeds
 * max_scan_nodes (0: default bound). */
gg_status gg_oracle(const gg_config* c, size_t max_scan_nodes, gg_analysis** out);
void gg_analysis_free(gg_analysis* a);

int64_t gg_analysis_radius(const gg_analysis* a);
size_t gg_analysis_minmax_count(const gg_analysis* a);
void gg_analysis_minmax_node(const gg_analysis* a, size_t i, int64_t* x, int64_t* y);
int gg_analysis_shape(const gg_analysis* a);        /* gg_shape */
int gg_analysis_gather_class(const gg_analysis* a); /* gg_gather_class */
const char* gg_analysis_class_reason(const gg_analysis* a);
const char* gg_analysis_report_text(const gg_analysis* a);
const char* gg_analysis_report_json(const gg_analysis* a);

/* ---- simulation ---- */

/* Runs the gathering algorithm. GG_ERR_UNGATHERABLE for refused initial
 * configurations (including n < 9), GG_ERR_CUTOFF when max_activations (0:
 * default 200*n*(k+1)) ran out before termination; the run handle is still
 * produced in the cutoff case. */
gg_status gg_simulate(const gg_config* c, const gg_sched_spec* sched, int64_t max_activations,
                      gg_run** out);
void gg_run_free(gg_run* r);

int gg_run_terminated(const gg_run* r);
int gg_run_gathering_node(const gg_run* r, int64_t* x, int64_t* y);
int64_t gg_run_activations(const gg_run* r);
int64_t gg_run_excess_travel(const gg_run* r);
const char* gg_run_trace(const gg_run* r);
const char* gg_run_summary(const gg_run* r);
/* Character sketch of the final configuration. */
const char* gg_run_final_ascii(const gg_run* r);
/* Post-hoc verification of the run against the initial configuration.
 * Returns 1 when every check passed; the report text goes to *report (free
 * with gg_string_free) when report is non-NULL. */
int gg_run_verify(const gg_config* c, const gg_run* r, char** report);

/* ---- batch verification ---- */

/* Seeded random campaign: oracle equivalence, shape characterization and
 * end-to-end gathering over `count` configurations with n in
 * [n_min, n_max] and coordinates in [-box, box]. Returns GG_OK when every
 * trial passed. */
gg_status gg_verify_campaign(int64_t count, int64_t n_min, int64_t n_max, int64_t box,
                             uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* GRIDGATHER_H */
