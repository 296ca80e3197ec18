#ifndef JACOBI_TURAN_H
#define JACOBI_TURAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JtStatus {
  JT_STATUS_OK = 0,
  JT_STATUS_NULL_POINTER = 1,
  JT_STATUS_INVALID_ARGUMENT = 2,
  JT_STATUS_PARSE = 3,
  JT_STATUS_OUT_OF_RANGE = 4,
  JT_STATUS_INTERNAL = 5,
} JtStatus;

typedef enum JtVerdict {
  JT_VERDICT_CERTIFIED_NEGATIVE = 0,
  JT_VERDICT_CERTIFIED_POSITIVE = 1,
  JT_VERDICT_NOT_CERTIFIED = 2,
} JtVerdict;

/**
 * Sign certificate for `Δ_n` on `(1, +inf)`.
 */
typedef struct JtCertificate JtCertificate;

/**
 * Exact polynomial with rational coefficients.
 */
typedef struct JtPoly JtPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *jt_last_error(void);

/**
 * Library version as a static string.
 */
const char *jt_version(void);

void jt_string_free(char *s);

/**
 * Exact `P_n^(an,bn)`; `a` and `b` are rational strings.
 */
enum JtStatus jt_poly_on_ray(uint32_t n, const char *a, const char *b, struct JtPoly **out);

/**
 * Exact `Δ_n` for `n >= 1`.
 */
enum JtStatus jt_delta(uint32_t n, const char *a, const char *b, struct JtPoly **out);

void jt_poly_free(struct JtPoly *p);

/**
 * Degree, or -1 for the zero polynomial.
 */
enum JtStatus jt_poly_degree(const struct JtPoly *p, int64_t *out);

/**
 * Coefficient of `x^i` as a newly allocated `"p/q"` string.
 */
enum JtStatus jt_poly_coeff(const struct JtPoly *p, size_t i, char **out);

/**
 * Comma-separated coefficients, ascending degree.
 */
enum JtStatus jt_poly_to_string(const struct JtPoly *p, char **out);

/**
 * Exact value at the rational `x`, as a `"p/q"` string.
 */
enum JtStatus jt_poly_eval(const struct JtPoly *p, const char *x, char **out);

/**
 * Nearest binary64 to the exact value at `x`.
 */
enum JtStatus jt_poly_eval_f64(const struct JtPoly *p, double x, double *out);

/**
 * Binary64 `P_n^(α,β)(x)` by the direct binomial sum.
 */
enum JtStatus jt_eval_jacobi_f64(uint32_t n, double alpha, double beta, double x, double *out);

/**
 * Writes 1 to `out` when all four recurrence identities hold exactly and the
 * Wronskian is certified positive, 0 otherwise.
 */
enum JtStatus jt_verify_identities(uint32_t n, const char *a, const char *b, int32_t *out);

/**
 * Writes 1 to `out` when `Δ_n(1) = 0` by both evaluation routes and the
 * closed-form leading coefficient matches the polynomial and is negative.
 */
enum JtStatus jt_check_anchors(uint32_t n, const char *a, const char *b, int32_t *out);

/**
 * Certificate that `Δ_n(x) < 0` on `(1, +inf)`.
 */
enum JtStatus jt_certify(uint32_t n, const char *a, const char *b, struct JtCertificate **out);

void jt_certificate_free(struct JtCertificate *c);

enum JtStatus jt_certificate_verdict(const struct JtCertificate *c, enum JtVerdict *out);

/**
 * Multiplicity of the root at the base point and number of roots inside.
 */
enum JtStatus jt_certificate_counts(const struct JtCertificate *c,
                                    uint32_t *multiplicity_at_base,
                                    size_t *root_count_inside);

/**
 * Canonical JSON record of the certificate.
 */
enum JtStatus jt_certificate_to_json(const struct JtCertificate *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JACOBI_TURAN_H */
