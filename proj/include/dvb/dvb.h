/* C interface to the dvb library: decomposed double vector bundles over
 * exact rational polynomials, their duals, and the geometric checks built
 * on them.
 *
 * All functions return a dvb_status. On failure, dvb_last_error() gives a
 * message for the calling thread. Strings returned through char** are owned
 * by the caller and released with dvb_string_free.
 */
#ifndef DVB_DVB_H
#define DVB_DVB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DVB_BUILDING_LIBRARY)
#    define DVB_API __declspec(dllexport)
#  else
#    define DVB_API __declspec(dllimport)
#  endif
#else
#  define DVB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dvb_status {
  DVB_OK = 0,
  DVB_ERR_INVALID_ARGUMENT,
  DVB_ERR_PARSE,
  DVB_ERR_INCONSISTENT,
  DVB_ERR_ARITY,
  DVB_ERR_UNKNOWN_VARIABLE,
  DVB_ERR_VARIABLE_MISMATCH,
  DVB_ERR_SHAPE_MISMATCH,
  DVB_ERR_SINGULAR,
  DVB_ERR_SINGULAR_METRIC,
  DVB_ERR_BASE_MISMATCH,
  DVB_ERR_FIBER_MISMATCH,
  DVB_ERR_NOT_IN_KERNEL,
  DVB_ERR_PROJECTION_MISMATCH,
  DVB_ERR_UNSUPPORTED,
  DVB_ERR_INTERNAL
} dvb_status;

typedef enum dvb_property_status { DVB_PROPERTY_PASS = 0, DVB_PROPERTY_FAIL = 1, DVB_PROPERTY_SKIP = 2 } dvb_property_status;

typedef struct dvb_scenario dvb_scenario;
typedef struct dvb_report dvb_report;
typedef struct dvb_bundle dvb_bundle;

DVB_API const char* dvb_last_error(void);
DVB_API const char* dvb_status_name(dvb_status status);
DVB_API const char* dvb_version(void);
DVB_API void dvb_string_free(char* s);

/* Scenarios */

typedef struct dvb_generate_options {
  size_t max_n;
  size_t max_rank;
  int max_degree;
  int symmetric_connection;
} dvb_generate_options;

DVB_API void dvb_generate_options_init(dvb_generate_options* opts);

DVB_API dvb_status dvb_scenario_load_file(const char* path, dvb_scenario** out);
DVB_API dvb_status dvb_scenario_load_json(const char* json, dvb_scenario** out);
/* opts may be NULL for the defaults. */
DVB_API dvb_status dvb_scenario_generate(uint64_t seed, const dvb_generate_options* opts, dvb_scenario** out);
DVB_API dvb_status dvb_scenario_to_json(const dvb_scenario* s, char** out);
DVB_API dvb_status dvb_scenario_seed(const dvb_scenario* s, uint64_t* seed);
DVB_API dvb_status dvb_scenario_bundle(const dvb_scenario* s, dvb_bundle** out);
DVB_API void dvb_scenario_free(dvb_scenario* s);

/* Suites */

typedef struct dvb_run_options {
  int samples;                 /* 0 keeps the scenario's sample count */
  int naive_identification;    /* third-dual: use the naive identification */
  const char* only_property;   /* NULL or a property id */
  const char* scenario_path;   /* NULL for generated scenarios; used in replay hints */
  const char* replay_args;     /* NULL or extra generator flags for replay hints */
} dvb_run_options;

DVB_API void dvb_run_options_init(dvb_run_options* opts);

/* suite: axioms, duality, third-dual, geometry, all. opts may be NULL. */
DVB_API dvb_status dvb_run_suite(const dvb_scenario* s, const char* suite, const dvb_run_options* opts,
                                 dvb_report** out);
/* which: metric, symmetric, lagrangian. */
DVB_API dvb_status dvb_connection_check(const dvb_scenario* s, const char* which, const dvb_run_options* opts,
                                        dvb_report** out);

DVB_API int dvb_report_passed(const dvb_report* r);
DVB_API size_t dvb_report_count(const dvb_report* r);
/* Pointers stay valid until the report is freed. Any output may be NULL. */
DVB_API dvb_status dvb_report_entry(const dvb_report* r, size_t index, const char** id, dvb_property_status* status,
                                    const char** detail, uint64_t* seed);
DVB_API dvb_status dvb_report_text(const dvb_report* r, int with_timing, char** out);
DVB_API dvb_status dvb_report_json(const dvb_report* r, char** out);
DVB_API void dvb_report_free(dvb_report* r);

/* Operations */

/* side: "right" or "left". point: NULL, or "x=1,2/3" for the dual blocks of
 * the scenario morphism at that base point. */
DVB_API dvb_status dvb_dualize(const dvb_scenario* s, const char* side, const char* point, char** out);
/* kind "vertical": lifts of the core section at point, with optional fiber
 * values "1,2" for the right (e) and left (f) lifts.
 * kind "complete": tangent and cotangent lifts of the base field. */
DVB_API dvb_status dvb_lift(const dvb_scenario* s, const char* kind, const char* point, const char* right_fiber,
                            const char* left_fiber, char** out);

/* Bundles */

DVB_API dvb_status dvb_bundle_create(size_t n, size_t n_f, size_t n_c, size_t n_e, dvb_bundle** out);
DVB_API dvb_status dvb_bundle_ranks(const dvb_bundle* b, size_t* n, size_t* n_f, size_t* n_c, size_t* n_e);
DVB_API dvb_status dvb_bundle_right_dual(const dvb_bundle* b, dvb_bundle** out);
DVB_API dvb_status dvb_bundle_left_dual(const dvb_bundle* b, dvb_bundle** out);
DVB_API dvb_status dvb_bundle_flip(const dvb_bundle* b, dvb_bundle** out);
DVB_API dvb_status dvb_bundle_describe(const dvb_bundle* b, char** out);
DVB_API void dvb_bundle_free(dvb_bundle* b);

#ifdef __cplusplus
}
#endif

#endif
