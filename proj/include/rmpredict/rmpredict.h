/*
 * C interface to the rmpredict library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rmp_status; on failure a message for the
 * calling thread is available from rmp_last_error(). Strings returned through
 * `char** out` parameters are owned by the caller and released with
 * rmp_string_free().
 */
#ifndef RMPREDICT_H
#define RMPREDICT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RMPREDICT_BUILDING)
#    define RMP_API __declspec(dllexport)
#  else
#    define RMP_API __declspec(dllimport)
#  endif
#else
#  define RMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmp_status {
  RMP_OK = 0,
  RMP_E_IO = 1,
  RMP_E_PARSE = 2,
  RMP_E_STRUCTURE = 3,
  RMP_E_SCHEMA = 4,
  RMP_E_LOOKUP = 5,
  RMP_E_USAGE = 6,
  RMP_E_DOMAIN = 7,
  RMP_E_INTERNAL = 8
} rmp_status;

typedef enum rmp_mode { RMP_MODE_EXACT = 0, RMP_MODE_AT_LEAST = 1 } rmp_mode;
typedef enum rmp_tie { RMP_TIE_LOWEST = 0, RMP_TIE_RANDOM = 1 } rmp_tie;
typedef enum rmp_format { RMP_FORMAT_JSON = 0, RMP_FORMAT_CSV = 1 } rmp_format;

typedef struct rmp_system rmp_system;
typedef struct rmp_omega rmp_omega;

typedef struct rmp_config {
  int64_t epsilon_num;
  int64_t epsilon_den;
  uint32_t delta;
  rmp_mode mode;
  rmp_tie tie;
  uint64_t seed;
  double eta;
  double radius_tolerance;
} rmp_config;

RMP_API const char* rmp_version(void);
RMP_API const char* rmp_last_error(void);
RMP_API const char* rmp_status_name(rmp_status status);
RMP_API void rmp_string_free(char* s);

/* Defaults: epsilon 1/1, delta 1, exact mode, lowest-id ties, seed 0,
 * eta 0.5, tolerance 1e-6. */
RMP_API void rmp_config_init(rmp_config* config);
/* Parses "p/q" or an integer into epsilon_num/epsilon_den. */
RMP_API rmp_status rmp_config_set_epsilon(rmp_config* config, const char* rational);

/* decision_column may be NULL or "" to select the last column. */
RMP_API rmp_status rmp_system_load_file(const char* path, const char* decision_column,
                                        char delimiter, rmp_system** out);
RMP_API rmp_status rmp_system_load_text(const char* text, const char* decision_column,
                                        char delimiter, rmp_system** out);
RMP_API void rmp_system_free(rmp_system* system);
RMP_API size_t rmp_system_object_count(const rmp_system* system);
RMP_API size_t rmp_system_feature_count(const rmp_system* system);
/* *consistent is set to 1 or 0; on 0 the witness ids are written when the
 * pointers are non-NULL. */
RMP_API rmp_status rmp_system_is_consistent(const rmp_system* system, int* consistent,
                                            size_t* witness_a, size_t* witness_b);

/* Inline "f1=1,f2=2". */
RMP_API rmp_status rmp_omega_from_spec(const char* spec, rmp_omega** out);
/* Header row plus exactly one value row. */
RMP_API rmp_status rmp_omega_from_file(const char* path, char delimiter, rmp_omega** out);
RMP_API void rmp_omega_free(rmp_omega* omega);

/* expert may be NULL: the report then omits rewards, winner and regret. */
RMP_API rmp_status rmp_predict(const rmp_system* system, const rmp_omega* omega,
                               const double* expert, const rmp_config* config,
                               rmp_format format, char** out);
RMP_API rmp_status rmp_evaluate_loo(const rmp_system* system, const rmp_config* config,
                                    rmp_format format, char** out);
/* Trial followed by the radius-shrinking localization; JSON only. */
RMP_API rmp_status rmp_localize(const rmp_system* system, const rmp_omega* omega, double expert,
                                const rmp_config* config, char** out);

/* CSV of all 256 moods: figure,premiss1,premiss2,conclusion,valid,name */
RMP_API rmp_status rmp_moods_list(char** out);
/* *valid is 1 or 0; *out receives a one-line verdict with the normalized
 * mood and, when invalid, a countermodel. */
RMP_API rmp_status rmp_moods_check(const char* expression, int* valid, char** out);

/* Exhaustive law suite on a uniform universe of `atoms` atoms plus
 * `random_universes` random weighted universes. */
RMP_API rmp_status rmp_algebra_selftest(size_t atoms, size_t random_universes, uint64_t seed,
                                        int* all_passed, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* RMPREDICT_H */
