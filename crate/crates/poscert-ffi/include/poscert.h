/* C bindings for the poscert positivity-certificate library. */

#ifndef POSCERT_H
#define POSCERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call outcome. Anything other than `Ok` leaves the out-parameters
 * untouched; the message is available via `poscert_last_error`.
 */
typedef enum PoscertStatus {
  POSCERT_STATUS_OK = 0,
  POSCERT_STATUS_NULL_ARGUMENT = 1,
  POSCERT_STATUS_INVALID_INPUT = 2,
  POSCERT_STATUS_RESOURCE_LIMIT = 3,
  POSCERT_STATUS_INTERNAL_ERROR = 4,
} PoscertStatus;

/**
 * Decision outcome for the root queries.
 */
typedef enum PoscertVerdict {
  POSCERT_VERDICT_NO_ROOT = 0,
  POSCERT_VERDICT_ROOT_EXISTS = 1,
} PoscertVerdict;

/**
 * Opaque univariate polynomial with exact rational coefficients.
 */
typedef struct PoscertPoly PoscertPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread. Never null; empty
 * before the first failure. The pointer is invalidated by the next
 * failing call on the same thread.
 */
const char *poscert_last_error(void);

/**
 * Parses a polynomial from text: `"x^2 - 2x + 1"` or ascending-list
 * `"[1, -2, 1]"`, coefficients as integers, fractions `p/q`, or decimals.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string, `out` a valid pointer.
 */
enum PoscertStatus poscert_poly_parse(const char *text, struct PoscertPoly **out);

/**
 * Releases a polynomial handle. Null is a no-op.
 *
 * # Safety
 * `poly` must have come from `poscert_poly_parse` and not been freed.
 */
void poscert_poly_free(struct PoscertPoly *poly);

/**
 * Degree of the polynomial, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a live handle.
 */
int64_t poscert_poly_degree(const struct PoscertPoly *poly);

/**
 * Decides whether the polynomial has a root in `]0, inf[`. A `NoRoot`
 * verdict is certificate-backed or oracle-confirmed; pass `degree_cap = 0`
 * for the default cap.
 *
 * # Safety
 * `poly` must be a live handle, `verdict` a valid pointer.
 */
enum PoscertStatus poscert_check_positive_root(const struct PoscertPoly *poly,
                                               uintptr_t degree_cap,
                                               bool use_oracle,
                                               enum PoscertVerdict *verdict);

/**
 * Decides whether the polynomial has any real root.
 *
 * # Safety
 * `poly` must be a live handle, `verdict` a valid pointer.
 */
enum PoscertStatus poscert_check_real_root(const struct PoscertPoly *poly,
                                           uintptr_t degree_cap,
                                           bool use_oracle,
                                           enum PoscertVerdict *verdict);

/**
 * Human-readable form of the polynomial. Free with
 * `poscert_string_free`.
 *
 * # Safety
 * `poly` must be a live handle, `out` a valid pointer.
 */
enum PoscertStatus poscert_poly_to_string(const struct PoscertPoly *poly, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have come from this library and not been freed.
 */
void poscert_string_free(char *s);

/**
 * Smallest index at which the cofactor sequence for ratio `h` turns
 * nonpositive; the index divided by `h` tends to pi.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PoscertStatus poscert_negative_index(double h, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSCERT_H */
