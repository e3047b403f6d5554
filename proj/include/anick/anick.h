/* C interface to the anick cohomology library. All handles are opaque; every
 * fallible call returns an anick_status and leaves a message retrievable with
 * anick_last_error() on the calling thread. */
#ifndef ANICK_ANICK_H
#define ANICK_ANICK_H

#include <stddef.h>

#if defined(_WIN32)
#define ANICK_API __declspec(dllexport)
#else
#define ANICK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum anick_status {
  ANICK_OK = 0,
  ANICK_INVALID_ARGUMENT = 1,
  ANICK_CONSISTENCY = 2, /* cross-check or structural assertion failed */
  ANICK_IO = 3,
  ANICK_INTERNAL = 4
} anick_status;

typedef enum anick_method {
  ANICK_METHOD_CLOSED = 0,
  ANICK_METHOD_PATHS = 1,
  ANICK_METHOD_BOTH = 2
} anick_method;

typedef enum anick_format {
  ANICK_FORMAT_TABLE = 0,
  ANICK_FORMAT_JSON = 1,
  ANICK_FORMAT_CSV = 2
} anick_format;

typedef struct anick_family anick_family;
typedef struct anick_algebra anick_algebra;
typedef struct anick_report anick_report;

typedef struct anick_cell {
  unsigned n;
  unsigned d;
  size_t dim_space;
  size_t dim_kernel;
  size_t dim_ker_delta;
  size_t dim_im_delta;
  size_t cohomology;
} anick_cell;

ANICK_API const char* anick_version(void);
ANICK_API const char* anick_last_error(void);

/* name is "U2" or "U3" (case-insensitive). */
ANICK_API anick_status anick_family_create(const char* name, anick_family** out);
ANICK_API void anick_family_destroy(anick_family* family);

ANICK_API anick_status anick_cohomology_compute(const anick_family* family, unsigned n_max,
                                                unsigned deg_max, anick_method method,
                                                int prune_zero_components, anick_report** out);

/* source is builtin:mat:k, builtin:truncpoly:N or a path to a JSON table. */
ANICK_API anick_status anick_algebra_load(const char* source, anick_algebra** out);
ANICK_API void anick_algebra_destroy(anick_algebra* algebra);
ANICK_API size_t anick_algebra_dim(const anick_algebra* algebra);

ANICK_API anick_status anick_current_compute(const anick_algebra* algebra, unsigned n_max,
                                             unsigned deg_max, anick_report** out);

ANICK_API size_t anick_report_entry_count(const anick_report* report);
ANICK_API anick_status anick_report_entry(const anick_report* report, size_t index,
                                          anick_cell* out);
ANICK_API anick_status anick_report_total(const anick_report* report, unsigned n, size_t* out);
/* The string is owned by the caller; release it with anick_string_free. */
ANICK_API anick_status anick_report_render(const anick_report* report, anick_format format,
                                           char** out);
ANICK_API void anick_report_destroy(anick_report* report);

/* Runs a named invariant suite (all, rewrite, morse, derivation, kernels,
 * current). passed is set to 1 if every check passed. */
ANICK_API anick_status anick_selftest_run(const char* suite, char** text, int* passed);

ANICK_API void anick_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
