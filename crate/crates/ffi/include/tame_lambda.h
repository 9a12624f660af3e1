#ifndef TAME_LAMBDA_H
#define TAME_LAMBDA_H

/* Generated by cbindgen from the tame-lambda-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call across the C boundary.
 */
typedef enum TlStatus {
  TL_STATUS_OK = 0,
  TL_STATUS_NULL_POINTER = 1,
  TL_STATUS_INVALID_INPUT = 2,
  TL_STATUS_EVEN_CHARACTERISTIC = 3,
  TL_STATUS_UNKNOWN_SQUARE_CLASS = 4,
  TL_STATUS_INTERNAL = 5,
} TlStatus;

/**
 * Opaque handle to a tame field presentation (p, f, e, w).
 */
typedef struct TlTameField TlTameField;

/**
 * A fourth root of unity i^exp with its exact Gaussian-integer parts.
 */
typedef struct TlMu4 {
  int32_t re;
  int32_t im;
  int32_t exp;
} TlMu4;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a tame field handle for F/Q_p with residue degree `f`,
 * ramification index `e`, and unit residue w given by `w_len`
 * coefficients in the deterministic residue-field basis; an empty list
 * means w = 1.
 *
 * # Safety
 * `w_coeffs` must point to `w_len` readable u64 values (or `w_len` must be
 * 0), and `out` must be a valid pointer. On OK the handle in `*out` is
 * owned by the caller and must be released with [`tl_field_free`].
 */
enum TlStatus tl_field_new(uint64_t p,
                           uint32_t f,
                           uint32_t e,
                           const uint64_t *w_coeffs,
                           uintptr_t w_len,
                           struct TlTameField **out);

/**
 * Releases a handle returned by [`tl_field_new`]. A null pointer is a
 * no-op.
 *
 * # Safety
 * `field` must be a pointer previously returned by [`tl_field_new`] and
 * not yet freed.
 */
void tl_field_free(struct TlTameField *field);

/**
 * Lambda value of the norm-normalized ramified quadratic extension of the
 * field, assembled from the squareness factor at the admissible c with the
 * given unit residue (empty list: unit residue 1) and the closed Gauss
 * factor. The factor outputs may be null when not wanted.
 *
 * # Safety
 * `field` must be a live handle from [`tl_field_new`]; `c_unit` must point
 * to `c_len` readable u64 values (or `c_len` must be 0); `out_value` must
 * be valid; `out_delta` and `out_gauss` must each be valid or null.
 */
enum TlStatus tl_lambda_tame(const struct TlTameField *field,
                             const uint64_t *c_unit,
                             uintptr_t c_len,
                             struct TlMu4 *out_value,
                             struct TlMu4 *out_delta,
                             struct TlMu4 *out_gauss);

/**
 * Lambda value of the ramified quadratic extension at the conductor -1
 * character psi_{-1}: the eps of the closed quadratic Gauss form over the
 * residue field.
 *
 * # Safety
 * `field` must be a live handle from [`tl_field_new`]; `out` must be a
 * valid pointer.
 */
enum TlStatus tl_lambda_psi_minus_one(const struct TlTameField *field, struct TlMu4 *out);

/**
 * Lambda value of the unramified quadratic extension of the field against
 * an additive character of conductor `n`: (-1)^n.
 *
 * # Safety
 * `field` must be a live handle from [`tl_field_new`]; `out` must be a
 * valid pointer.
 */
enum TlStatus tl_lambda_unramified(const struct TlTameField *field, int64_t n, struct TlMu4 *out);

/**
 * Lambda value of the quadratic extension of Q_2 for one of the seven
 * nontrivial square classes 5, -1, -5, 2, 10, -2, -10.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TlStatus tl_lambda_q2(int64_t square_class, struct TlMu4 *out);

/**
 * Lambda value of the abelian extension whose norm group is exactly the
 * squares, in residue characteristic 2: constantly 1. The norm-group
 * hypothesis is the caller's responsibility.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TlStatus tl_lambda_full_square_norm_class(struct TlMu4 *out);

/**
 * Closed form of the quadratic Gauss sum over F_{p^s}: the value is
 * eps * p^(half_power_halves / 2).
 *
 * # Safety
 * `out_eps` and `out_half_power_halves` must be valid pointers.
 */
enum TlStatus tl_gauss_closed(uint64_t p,
                              uint32_t s,
                              struct TlMu4 *out_eps,
                              int64_t *out_half_power_halves);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAME_LAMBDA_H */
