/* C interface to the cremona library. All handles are opaque; every
 * function returning cremona_status leaves a message retrievable with
 * cremona_last_error() on failure (thread-local). Strings returned through
 * char** out-parameters are owned by the caller and released with
 * cremona_string_free(); const char* results are owned by the library. */
#ifndef CREMONA_H
#define CREMONA_H

#include <stddef.h>
#include <stdint.h>

#if defined(CREMONA_BUILDING_LIBRARY)
#define CREMONA_API __attribute__((visibility("default")))
#else
#define CREMONA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cremona_status {
  CREMONA_OK = 0,
  CREMONA_E_LATTICE_MISMATCH = 1,
  CREMONA_E_DIMENSION = 2,
  CREMONA_E_ADJUNCTION_PARITY = 3,
  CREMONA_E_CONFIGURATION = 4,
  CREMONA_E_MODEL = 5,
  CREMONA_E_NOT_PLANAR = 6,
  CREMONA_E_CONTRADICTION = 7,
  CREMONA_E_RANK = 8,
  CREMONA_E_PREDICATE = 9,
  CREMONA_E_OUT_OF_RANGE = 10,
  CREMONA_E_PARSE = 11,
  CREMONA_E_OVERFLOW = 12,
  CREMONA_E_IO = 13,
  CREMONA_E_INVALID_ARGUMENT = 64,
  CREMONA_E_INTERNAL = 65
} cremona_status;

typedef struct cremona_lattice cremona_lattice;
typedef struct cremona_scenario cremona_scenario;
typedef struct cremona_report cremona_report;

CREMONA_API const char* cremona_version(void);
CREMONA_API const char* cremona_status_name(cremona_status status);
CREMONA_API const char* cremona_last_error(void);
CREMONA_API void cremona_string_free(char* s);

/* Scenarios */
CREMONA_API size_t cremona_builtin_scenario_count(void);
/* NULL when index is out of range. */
CREMONA_API const char* cremona_builtin_scenario_name(size_t index);
CREMONA_API cremona_status cremona_scenario_load_builtin(const char* name, cremona_scenario** out);
CREMONA_API cremona_status cremona_scenario_load_file(const char* path, cremona_scenario** out);
CREMONA_API cremona_status cremona_scenario_load_json(const char* json, cremona_scenario** out);
CREMONA_API const char* cremona_scenario_name(const cremona_scenario* scenario);
CREMONA_API void cremona_scenario_free(cremona_scenario* scenario);

/* Runs every stage; module errors become failed keys in the report. */
CREMONA_API cremona_status cremona_scenario_run(const cremona_scenario* scenario, int64_t bound,
                                                cremona_report** out);
CREMONA_API int cremona_report_passed(const cremona_report* report);
CREMONA_API const char* cremona_report_json(const cremona_report* report);
CREMONA_API const char* cremona_report_markdown(const cremona_report* report);
CREMONA_API void cremona_report_free(cremona_report* report);

/* Lattices. Coefficient arrays have length cremona_lattice_rank() and must
 * fit in int64; results that do not fit give CREMONA_E_OVERFLOW. */
CREMONA_API cremona_status cremona_lattice_from_json(const char* json, cremona_lattice** out);
CREMONA_API cremona_status cremona_lattice_to_json(const cremona_lattice* lattice, char** out);
CREMONA_API size_t cremona_lattice_rank(const cremona_lattice* lattice);
CREMONA_API cremona_status cremona_lattice_pair(const cremona_lattice* lattice, const int64_t* a,
                                                const int64_t* b, size_t n, int64_t* out);
CREMONA_API cremona_status cremona_lattice_genus(const cremona_lattice* lattice, const int64_t* curve,
                                                 size_t n, int64_t* out);
CREMONA_API cremona_status cremona_lattice_is_effective(const cremona_lattice* lattice, const int64_t* d,
                                                        size_t n, int* out);
CREMONA_API cremona_status cremona_lattice_blow_up_point(const cremona_lattice* lattice,
                                                         cremona_lattice** out);
CREMONA_API void cremona_lattice_free(cremona_lattice* lattice);

/* Nonnegative integer feasibility of a system given as
 * {"unknowns": [...], "equations": [{"coeffs": [...], "constant": c}]}.
 * The certificate JSON carries status, witness or derivation, transcript. */
CREMONA_API cremona_status cremona_solve_nonneg_json(const char* system_json, int64_t bound, char** out);

#ifdef __cplusplus
}
#endif

#endif
