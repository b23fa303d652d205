#ifndef EVOALG_H
#define EVOALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EvoStatus {
  EVO_STATUS_OK = 0,
  EVO_STATUS_NULL_POINTER = 1,
  EVO_STATUS_INVALID_UTF8 = 2,
  EVO_STATUS_PARSE = 3,
  EVO_STATUS_PARAMETER = 4,
  EVO_STATUS_UNKNOWN_FAMILY = 5,
  EVO_STATUS_NOT_POWER_ASSOCIATIVE = 6,
  EVO_STATUS_INVALID_INPUT = 7,
  EVO_STATUS_PANIC = 8,
} EvoStatus;

/**
 * Opaque algebra handle.
 */
typedef struct EvoAlgebra EvoAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *evo_last_error(void);

/**
 * Parses an algebra file (JSON text).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be writable.
 */
enum EvoStatus evo_algebra_from_json(const char *json, struct EvoAlgebra **out);

/**
 * Builds a catalog family from `nparams` rational strings.
 *
 * # Safety
 * `name` must be a valid string, `params` must point to `nparams` valid
 * strings (it may be NULL when `nparams` is 0), and `out` must be writable.
 */
enum EvoStatus evo_catalog_build(const char *name,
                                 const char *const *params,
                                 size_t nparams,
                                 struct EvoAlgebra **out);

/**
 * # Safety
 * `h` must be NULL or a handle from this library not yet freed.
 */
void evo_algebra_free(struct EvoAlgebra *h);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void evo_string_free(char *s);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_algebra_dim(const struct EvoAlgebra *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_annihilator_dim(const struct EvoAlgebra *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_is_associative(const struct EvoAlgebra *h, bool *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_is_power_associative(const struct EvoAlgebra *h, bool *out);

/**
 * Number of support components in the natural basis.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_component_count(const struct EvoAlgebra *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_derivation_dim(const struct EvoAlgebra *h, size_t *out);

/**
 * Dimension of the derived subalgebra `[D, D]`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_derived_dim(const struct EvoAlgebra *h, size_t *out);

/**
 * Fails with `EVO_STATUS_NOT_POWER_ASSOCIATIVE` outside the Jordan setting.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum EvoStatus evo_inner_derivation_dim(const struct EvoAlgebra *h, size_t *out);

/**
 * Canonical derivation basis as JSON: `{"dim_D": k, "basis": [[[...]]]}`,
 * entries as rational strings, matrices row-major with `d(e_i)` in column `i`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable; free the result with
 * `evo_string_free`.
 */
enum EvoStatus evo_derivations_json(const struct EvoAlgebra *h, char **out);

/**
 * The algebra as an algebra file (JSON text).
 *
 * # Safety
 * `h` must be a live handle and `out` writable; free the result with
 * `evo_string_free`.
 */
enum EvoStatus evo_algebra_to_json(const struct EvoAlgebra *h, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVOALG_H */
