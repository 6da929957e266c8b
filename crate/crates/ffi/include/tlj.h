#ifndef TLJ_H
#define TLJ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TljStatus {
  TLJ_STATUS_OK = 0,
  TLJ_STATUS_PARSE = 1,
  TLJ_STATUS_INVALID_PARAMETERS = 2,
  TLJ_STATUS_INDEX_OUT_OF_RANGE = 3,
  TLJ_STATUS_SHAPE_MISMATCH = 4,
  TLJ_STATUS_RESOURCE_LIMIT = 5,
  TLJ_STATUS_CHEBYSHEV_ROOT = 6,
  TLJ_STATUS_NON_MODULAR = 7,
  TLJ_STATUS_NON_INTEGRAL = 8,
  TLJ_STATUS_MISSING_EXTENSION = 9,
  TLJ_STATUS_DEGENERATE_PARAMETER = 10,
  TLJ_STATUS_INVALID_ROOT = 11,
  TLJ_STATUS_ODD_CROSSING_PARITY = 12,
  TLJ_STATUS_NOT_ISOTROPIC = 13,
  TLJ_STATUS_REPEATED_ROOT = 14,
  TLJ_STATUS_WRONG_D = 15,
  TLJ_STATUS_UNSUPPORTED = 16,
  TLJ_STATUS_NULL_POINTER = 17,
  TLJ_STATUS_INVALID_UTF8 = 18,
  TLJ_STATUS_PANIC = 19,
} TljStatus;

/**
 * A braid word.
 */
typedef struct TljBraid TljBraid;

/**
 * A parameter context.
 */
typedef struct TljContext TljContext;

/**
 * Modular data at a `4r`-primitive root together with the `D` extension.
 */
typedef struct TljModularData TljModularData;

/**
 * An exact scalar.
 */
typedef struct TljScalar TljScalar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *tlj_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void tlj_string_free(char *s);

/**
 * Generic context, `A` a formal variable.
 *
 * # Safety
 * `out` must be writable.
 */
enum TljStatus tlj_context_generic(struct TljContext **out);

/**
 * `A = exp(2πi t/m)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TljStatus tlj_context_root(uint64_t m, int64_t t, struct TljContext **out);

/**
 * Only the loop value `d = num/den` is fixed.
 *
 * # Safety
 * `out` must be writable.
 */
enum TljStatus tlj_context_loop_value(int64_t num, int64_t den, struct TljContext **out);

/**
 * # Safety
 * `c` must come from a context constructor or be null.
 */
void tlj_context_free(struct TljContext *c);

/**
 * Braid on `strands` strands; letter `±i` is `σ_i^{±1}`.
 *
 * # Safety
 * `word` must point to `len` integers (may be null when `len` is 0); `out` must be writable.
 */
enum TljStatus tlj_braid_new(size_t strands,
                             const int32_t *word,
                             size_t len,
                             struct TljBraid **out);

/**
 * # Safety
 * `b` must come from `tlj_braid_new` or be null.
 */
void tlj_braid_free(struct TljBraid *b);

/**
 * Kauffman bracket of the braid closure.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum TljStatus tlj_bracket(const struct TljContext *ctx,
                           const struct TljBraid *b,
                           struct TljScalar **out);

/**
 * Jones polynomial of the braid closure, in the variable `A`.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum TljStatus tlj_jones(const struct TljContext *ctx,
                         const struct TljBraid *b,
                         struct TljScalar **out);

/**
 * Markov trace of the Jones-Wenzl projector `p_n`.
 *
 * # Safety
 * `ctx` must be valid; `out` must be writable.
 */
enum TljStatus tlj_jw_trace(const struct TljContext *ctx, size_t n, struct TljScalar **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void tlj_scalar_free(struct TljScalar *s);

/**
 * Complex value; fails with `UNSUPPORTED` for a non-constant function of `A`.
 *
 * # Safety
 * `s` must be valid; `re` and `im` must be writable.
 */
enum TljStatus tlj_scalar_approx(const struct TljScalar *s, double *re, double *im);

/**
 * # Safety
 * `s` must be valid; `out` must be writable.
 */
enum TljStatus tlj_scalar_is_zero(const struct TljScalar *s, bool *out);

/**
 * Exact JSON form; release with `tlj_string_free`.
 *
 * # Safety
 * `s` must be valid; `out` must be writable.
 */
enum TljStatus tlj_scalar_to_json(const struct TljScalar *s, char **out);

/**
 * Modular data at level `r`, root class `"4r"`, `"2r"` or `"r"`, embedding exponent `t`.
 * The `D` extension exists only for class `"4r"`.
 *
 * # Safety
 * `class` must be a nul-terminated string; `out` must be writable.
 */
enum TljStatus tlj_modular_data_new(size_t r,
                                    const char *class_,
                                    int64_t t,
                                    struct TljModularData **out);

/**
 * # Safety
 * `m` must come from `tlj_modular_data_new` or be null.
 */
void tlj_modular_data_free(struct TljModularData *m);

/**
 * Number of labels, `r − 1`.
 *
 * # Safety
 * `m` must be valid; `out` must be writable.
 */
enum TljStatus tlj_modular_rank(const struct TljModularData *m, size_t *out);

/**
 * Entry `s̃_ij`.
 *
 * # Safety
 * `m` must be valid; `out` must be writable.
 */
enum TljStatus tlj_modular_s_tilde(const struct TljModularData *m,
                                   size_t i,
                                   size_t j,
                                   struct TljScalar **out);

/**
 * Twist `θ_i`.
 *
 * # Safety
 * `m` must be valid; `out` must be writable.
 */
enum TljStatus tlj_modular_twist(const struct TljModularData *m, size_t i, struct TljScalar **out);

/**
 * Verlinde dimension for genus `genus` with `n` puncture labels.
 *
 * # Safety
 * `m` must be valid; `labels` must point to `n` values (may be null when `n` is 0); `out` must be writable.
 */
enum TljStatus tlj_verlinde_dim(const struct TljModularData *m,
                                size_t genus,
                                const size_t *labels,
                                size_t n,
                                uint64_t *out);

/**
 * Surgery invariant of the 3-manifold presented by a link JSON document.
 *
 * # Safety
 * `m` must be valid; `link_json` must be a nul-terminated string; `out` must be writable.
 */
enum TljStatus tlj_rt_invariant(const struct TljModularData *m,
                                const char *link_json,
                                struct TljScalar **out);

/**
 * Total number of annular irreducibles found at `level` (1 to 3); `plus` selects the loop value.
 *
 * # Safety
 * `out` must be writable.
 */
enum TljStatus tlj_annular_irrep_total(size_t level, bool plus, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TLJ_H */
