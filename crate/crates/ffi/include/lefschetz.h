#ifndef LEFSCHETZ_H
#define LEFSCHETZ_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Oracle selection for [`lf_wlp_check`].
 */
typedef enum LfMethod {
  LF_METHOD_HESSIAN = 0,
  LF_METHOD_MULTMAP = 1,
  LF_METHOD_BOTH = 2,
} LfMethod;

/**
 * Result code of every fallible call.
 */
typedef enum LfStatus {
  LF_STATUS_OK = 0,
  LF_STATUS_NULL_POINTER = 1,
  LF_STATUS_INVALID_PARAMS = 2,
  LF_STATUS_INVALID_INPUT = 3,
  LF_STATUS_INVALID_UTF8 = 4,
  LF_STATUS_COMPUTATION_FAILED = 5,
  LF_STATUS_PANIC = 6,
} LfStatus;

/**
 * The Gorenstein algebra of a dual generator, with its per-degree bases.
 */
typedef struct LfAlgebra LfAlgebra;

/**
 * A validated parameter tuple `(a, b, c, alpha, beta, gamma)`.
 */
typedef struct LfParams LfParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into the library on this thread.
 */
const char *lf_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *lf_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lf_string_free(char *s);

/**
 * Validates a parameter tuple. On `LF_STATUS_INVALID_PARAMS` the error
 * message names the violated constraint.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LfStatus lf_params_new(uint32_t a,
                            uint32_t b,
                            uint32_t c,
                            uint32_t alpha,
                            uint32_t beta,
                            uint32_t gamma,
                            struct LfParams **out);

/**
 * # Safety
 * `p` must come from [`lf_params_new`] and not have been freed.
 */
void lf_params_free(struct LfParams *p);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LfStatus lf_params_socle_degree(const struct LfParams *p, uint32_t *out);

/**
 * Generators, dual generator, Hilbert function and resolution shifts as
 * JSON.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LfStatus lf_params_info_json(const struct LfParams *p, char **out);

/**
 * The algebra whose dual generator is the family's `F`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LfStatus lf_algebra_from_params(const struct LfParams *p, struct LfAlgebra **out);

/**
 * The algebra of a homogeneous dual generator written in `nvars`
 * variables, e.g. `"x^2*z + x*y^2"` or `"x0*x3^2 + x1*x3*x4"`.
 *
 * # Safety
 * `poly` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LfStatus lf_algebra_from_dual(const char *poly, size_t nvars, struct LfAlgebra **out);

/**
 * # Safety
 * `a` must come from this library and not have been freed.
 */
void lf_algebra_free(struct LfAlgebra *a);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LfStatus lf_algebra_socle_degree(const struct LfAlgebra *a, uint32_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LfStatus lf_algebra_nvars(const struct LfAlgebra *a, size_t *out);

/**
 * Writes up to `len` Hilbert values `h_0, ..., h_D` into `buf` and the
 * full length `D + 1` into `needed`. Pass `len = 0` to query the length.
 *
 * # Safety
 * `buf` must hold `len` values; `needed` must be valid.
 */
enum LfStatus lf_algebra_hilbert(const struct LfAlgebra *a,
                                 uint64_t *buf,
                                 size_t len,
                                 size_t *needed);

/**
 * Decides the weak Lefschetz property and returns the report as JSON.
 * `linear_form` is NULL or one integer coefficient per variable, tested
 * in addition to the oracles' own choices.
 *
 * # Safety
 * Pointers must be valid; `linear_form` must hold `nvars` values if not
 * NULL.
 */
enum LfStatus lf_wlp_check(const struct LfAlgebra *a,
                           enum LfMethod method,
                           const int64_t *linear_form,
                           uint64_t seed,
                           char **out);

/**
 * Apery set, orders and M-pure symmetry of `<g[0], g[1], g[2], g[3]>` as
 * JSON.
 *
 * # Safety
 * `generators` must hold four values; `out` must be valid.
 */
enum LfStatus lf_apery_json(const uint64_t *generators, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LEFSCHETZ_H */
