/* saito_forge: free divisor families in P^2, their Saito matrices, and linear-algebra checks.
 *
 * Every function returns an sf_status. On failure, sf_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Strings returned through
 * char** parameters are owned by the caller and released with sf_string_free.
 */
#ifndef SAITO_FORGE_H
#define SAITO_FORGE_H

#include <stdint.h>

#if defined(_WIN32)
#  define SF_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define SF_API __attribute__((visibility("default")))
#else
#  define SF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
    SF_OK = 0,
    SF_ERR_ARGUMENT = 1,      /* null pointer or out-of-range option */
    SF_ERR_PARSE = 2,         /* polynomial or JSON syntax */
    SF_ERR_PARAMS = 3,        /* family hypotheses violated */
    SF_ERR_FIELD = 4,         /* bad field spec or field mismatch */
    SF_ERR_CONSTRUCTION = 5,  /* no Saito matrix could be assembled */
    SF_ERR_INTERNAL = 6
} sf_status;

typedef enum sf_route { SF_ROUTE_AUTO = 0, SF_ROUTE_EXPLICIT = 1, SF_ROUTE_ORACLE = 2 } sf_route;

typedef enum sf_cas { SF_CAS_MACAULAY2 = 0, SF_CAS_COCOA = 1 } sf_cas;

typedef struct sf_instance sf_instance;

typedef struct sf_verify_options {
    sf_route route;
    int degree_bound; /* resolution bound; 0 selects 3v + 3 */
    int timings;      /* nonzero adds wall-clock timings to the report */
} sf_verify_options;

typedef struct sf_sweep_config {
    int d_min, d_max;
    int alpha_min, alpha_max; /* alpha_max < 0: no restriction */
    int beta_min, beta_max;   /* beta_max < 0: no restriction */
    int trials;
    uint64_t seed;
    const char* field; /* "q" or "fp:P"; NULL means "q" */
    sf_route route;
    int drop_squarefree;
    int degree_bound; /* 0: default */
    int threads;      /* 0: SAITO_FORGE_THREADS or hardware concurrency */
    int timings;
} sf_sweep_config;

SF_API const char* sf_version(void);
SF_API const char* sf_status_name(sf_status status);
SF_API const char* sf_last_error(void);
SF_API void sf_string_free(char* s);

/* Instance from explicit F1, F2 (forms in x, y). validation_json (optional) receives the
 * per-condition report whether or not the parameters are valid. */
SF_API sf_status sf_instance_create(int d, int alpha, int beta, const char* f1, const char* f2, const char* field,
                                    sf_instance** out, char** validation_json);
/* Seeded random member of the family. */
SF_API sf_status sf_instance_random(int d, int alpha, int beta, uint64_t seed, const char* field,
                                    int drop_squarefree, sf_instance** out);
/* drop_squarefree relaxes the square-freeness hypothesis on F1 during validation. An "F" entry
 * that differs from the family formula is kept; checks then run against that F. */
SF_API sf_status sf_instance_from_json(const char* json, int drop_squarefree, sf_instance** out);
SF_API sf_status sf_instance_to_json(const sf_instance* inst, char** json);
/* Canonical text of F. */
SF_API sf_status sf_instance_polynomial(const sf_instance* inst, char** f);
SF_API void sf_instance_free(sf_instance* inst);

SF_API void sf_verify_options_default(sf_verify_options* opt);
/* Full verification report; *all_pass is 1 iff every check passed. */
SF_API sf_status sf_verify(const sf_instance* inst, const sf_verify_options* opt, char** report_json, int* all_pass);
/* Fresh syzygies and Saito assembly search up to degree_bound (0: 3v + 3). */
SF_API sf_status sf_syzygies(const sf_instance* inst, int degree_bound, char** report_json, int* found);
/* Hilbert function of S/J(F) against the predicted series, as JSON or CSV. */
SF_API sf_status sf_hilbert(const sf_instance* inst, int t_max, int csv, char** out, int* matches);
SF_API sf_status sf_export(const sf_instance* inst, sf_cas cas, sf_route route, char** script);

SF_API void sf_sweep_config_default(sf_sweep_config* cfg);
/* *any_fail is 1 iff some instance failed (never in drop-squarefree mode). */
SF_API sf_status sf_sweep(const sf_sweep_config* cfg, char** report_json, int* any_fail);

#ifdef __cplusplus
}
#endif

#endif
