#ifndef SUPERINV_H
#define SUPERINV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every function.
 */
typedef enum SuperinvStatus {
  SUPERINV_STATUS_OK = 0,
  SUPERINV_STATUS_NULL_POINTER = 1,
  SUPERINV_STATUS_INVALID_UTF8 = 2,
  SUPERINV_STATUS_INVALID_ARGUMENT = 3,
  SUPERINV_STATUS_UNSUPPORTED = 4,
  SUPERINV_STATUS_BOUND_EXCEEDED = 5,
  SUPERINV_STATUS_NOT_INVARIANT = 6,
  SUPERINV_STATUS_PROPERTY_FAILED = 7,
  SUPERINV_STATUS_INTERNAL = 8,
  SUPERINV_STATUS_PANIC = 9,
} SuperinvStatus;

/**
 * Opaque handle to a built Lie superalgebra.
 */
typedef struct SuperinvAlgebra SuperinvAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds `gl(m|n)`, `osp(m|2n)`, `q(n)` or `p(n)` from the family name `"gl"`, `"osp"`,
 * `"q"` or `"p"`. For `q` and `p`, `m` must equal `n`.
 *
 * # Safety
 * `family` is a NUL-terminated string and `out` a valid pointer.
 */
enum SuperinvStatus superinv_algebra_new(const char *family,
                                         uintptr_t m,
                                         uintptr_t n,
                                         struct SuperinvAlgebra **out);

/**
 * Releases a handle from [`superinv_algebra_new`]; null is ignored.
 *
 * # Safety
 * `alg` is null or a handle not yet freed.
 */
void superinv_algebra_free(struct SuperinvAlgebra *alg);

/**
 * Writes the dimension of the algebra to `out`.
 *
 * # Safety
 * `alg` is a live handle and `out` a valid pointer.
 */
enum SuperinvStatus superinv_algebra_dim(const struct SuperinvAlgebra *alg, uintptr_t *out);

/**
 * Writes `{"label","dim","generators":[..]}` for the algebra.
 *
 * # Safety
 * `alg` is a live handle and `out` a valid pointer.
 */
enum SuperinvStatus superinv_algebra_json(const struct SuperinvAlgebra *alg, char **out);

/**
 * Computes `z_sigma` for `sigma` in `S_degree` (cycle or one-line notation) and writes
 * `{"z": .., "central": bool}`.
 *
 * # Safety
 * `alg` is a live handle, `perm` a NUL-terminated string and `out` a valid pointer.
 */
enum SuperinvStatus superinv_z_sigma_json(const struct SuperinvAlgebra *alg,
                                          const char *perm,
                                          uintptr_t degree,
                                          char **out);

/**
 * Runs a command-line invocation given as a JSON array of arguments without the program
 * name, e.g. `["brauer","--k","3"]`, and writes its report. A report whose checked
 * property failed is still written and yields `PropertyFailed`.
 *
 * # Safety
 * `args_json` is a NUL-terminated string and `out` a valid pointer.
 */
enum SuperinvStatus superinv_run_json(const char *args_json, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void superinv_string_free(char *s);

/**
 * Message for the last failed call on this thread (empty after a success). The pointer
 * stays valid until the next call on the same thread.
 */
const char *superinv_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERINV_H */
