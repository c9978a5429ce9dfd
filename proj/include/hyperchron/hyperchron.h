#ifndef HYPERCHRON_H
#define HYPERCHRON_H

/* C interface to libhyperchron.
 *
 * Every fallible call returns an hc_status; on failure hc_last_error() holds
 * a message for the calling thread until its next failing call. Objects are
 * opaque handles released with the matching *_free. Strings returned through
 * char** are owned by the caller and released with hc_string_free.
 *
 * Matrices cross the boundary as separate row-major real and imaginary
 * arrays of r*r doubles. A null imaginary pointer means all zeros. */

#include <stddef.h>
#include <stdint.h>

#if defined(HYPERCHRON_BUILDING)
#define HC_API __attribute__((visibility("default")))
#else
#define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_NON_HERMITIAN,
  HC_ERR_WRONG_ARITY,
  HC_ERR_WRONG_DIMENSION,
  HC_ERR_DIMENSION_MISMATCH,
  HC_ERR_NOT_TIMELIKE,
  HC_ERR_NOT_TIMELIKE_TANGENT,
  HC_ERR_SINGULAR_SAMPLE,
  HC_ERR_NOT_UNIMODULAR,
  HC_ERR_NON_TRACELESS_GENERATOR,
  HC_ERR_TACHYONIC_MOMENTUM,
  HC_ERR_MASSLESS_SYSTEM,
  HC_ERR_SINGULAR_CORRELATION,
  HC_ERR_ZERO_INPUT,
  HC_ERR_INVALID_DENSITY_MATRIX,
  HC_ERR_INVALID_CANDIDATE,
  HC_ERR_INVALID_ARGUMENT,
  HC_ERR_PARSE,
  HC_ERR_NULL_POINTER,
  HC_ERR_OUT_OF_MEMORY,
  HC_ERR_INTERNAL
} hc_status;

typedef struct hc_event hc_event;
typedef struct hc_density hc_density;

/* Eigenvalue threshold abs_eps + rel_eps * max|eigenvalue|. */
typedef struct hc_tolerance {
  double abs_eps;
  double rel_eps;
} hc_tolerance;

typedef struct hc_causal_class {
  int rank;
  int p;
  int q;
  const char* label; /* static string, e.g. "FutureTimelike" */
} hc_causal_class;

HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_last_error(void);
HC_API hc_tolerance hc_default_tolerance(void);
HC_API void hc_string_free(char* s);

/* Events. tol may be null for the default tolerance. */
HC_API hc_status hc_event_create(int r, const double* re, const double* im,
                                 const hc_tolerance* tol, hc_event** out);
HC_API hc_status hc_event_from_minkowski(double t, double x, double y, double z,
                                         hc_event** out);
HC_API void hc_event_free(hc_event* e);
HC_API int hc_event_dim(const hc_event* e);
HC_API hc_status hc_event_entries(const hc_event* e, double* re, double* im);
HC_API hc_status hc_event_to_minkowski(const hc_event* e, double out[4]);

HC_API hc_status hc_chronometric_form(const hc_event* v, double* out);
HC_API hc_status hc_classify(const hc_event* v, const hc_tolerance* tol,
                             hc_causal_class* out);
/* Proper time between x and y, or of the interval x when y is null. */
HC_API hc_status hc_proper_time(const hc_event* x, const hc_event* y,
                                const hc_tolerance* tol, double* out);

/* Mass of momentum p; spin of the system (p, l) with l given as r*r arrays. */
HC_API hc_status hc_mass(const hc_event* p, double* out);
HC_API hc_status hc_spin(const hc_event* p, const double* l_re,
                         const double* l_im, double* out);

/* Symmetry breaking r = 2n and density-matrix projection. */
HC_API hc_status hc_embed(const hc_event* x, int n, hc_event** out);
HC_API hc_status hc_density_create(int n, const double* re, const double* im,
                                   hc_density** out);
HC_API void hc_density_free(hc_density* rho);
HC_API int hc_density_dim(const hc_density* rho);
HC_API hc_status hc_density_min_eigenvalue(const hc_density* rho, double* out);
/* Requires a positive semi-definite rho unless allow_non_psd is nonzero. */
HC_API hc_status hc_project(const hc_density* rho, const hc_event* x,
                            int allow_non_psd, hc_event** out);

/* Command-level entry points: JSON text in, JSON or CSV text out. */
HC_API hc_status hc_cmd_classify(const char* event_json,
                                 const hc_tolerance* tol, char** out_json);
HC_API hc_status hc_cmd_propertime(const char* x_json, const char* y_json,
                                   const hc_tolerance* tol, char** out_json);
HC_API hc_status hc_cmd_geodesic(const char* from_json, const char* to_json,
                                 int samples, const hc_tolerance* tol,
                                 char** out_csv);
HC_API hc_status hc_cmd_project(const char* rho_json, const char* event_json,
                                const hc_tolerance* tol, char** out_json);
HC_API hc_status hc_cmd_sample_cone(int r, long trials, uint64_t seed,
                                    int threads, const hc_tolerance* tol,
                                    char** out_csv, char** out_summary_json);

typedef struct hc_verify_options {
  const char* suite;
  int r;
  int n;
  long trials;
  uint64_t seed;
  int threads;
  const char* rho_json; /* projection suite candidate, or null */
  int timing;           /* nonzero adds wall_time to the report */
} hc_verify_options;

/* Runs a suite. HC_OK means it ran; *pass tells whether it passed.
 * *out_counterexample_json is set (or null) when non-null is passed. */
HC_API hc_status hc_cmd_verify(const hc_verify_options* opts, int* pass,
                               char** out_json,
                               char** out_counterexample_json);

#ifdef __cplusplus
}
#endif

#endif
