#ifndef FRI_LAB_H
#define FRI_LAB_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FriStatus {
  FRI_STATUS_OK = 0,
  FRI_STATUS_NULL_POINTER = 1,
  FRI_STATUS_PARSE = 2,
  FRI_STATUS_VALIDATION = 3,
  FRI_STATUS_NOT_FLANKED = 4,
  FRI_STATUS_ORDERING = 5,
  FRI_STATUS_INVALID_ARGUMENT = 6,
  FRI_STATUS_DIMENSION = 7,
  FRI_STATUS_INTERNAL = 8,
} FriStatus;

typedef enum FriLengthPath {
  FRI_LENGTH_PATH_GENERAL = 0,
  FRI_LENGTH_PATH_UNIFORM_NONZERO = 1,
  FRI_LENGTH_PATH_UNIFORM_ZERO = 2,
} FriLengthPath;

typedef enum FriVerdict {
  FRI_VERDICT_NORMAL = 0,
  FRI_VERDICT_PROBLEM = 1,
} FriVerdict;

typedef enum FriMethod {
  FRI_METHOD_KH = 0,
  FRI_METHOD_KHSTAB = 1,
} FriMethod;

/**
 * Opaque rule-base document.
 */
typedef struct FriDocument FriDocument;

/**
 * Diagnostics of one segment. Undefined ratios are NaN.
 */
typedef struct FriSegmentDiagnostics {
  double length1;
  double length2;
  enum FriLengthPath path;
  enum FriVerdict verdict;
  double ratio1;
  double ratio2;
  enum FriVerdict direct;
} FriSegmentDiagnostics;

/**
 * Segments in the order left boundary, core, right boundary.
 */
typedef struct FriNormalityReport {
  double points[4];
  struct FriSegmentDiagnostics segments[3];
  enum FriVerdict overall;
} FriNormalityReport;

typedef struct FriBenchmarkSummary {
  uint32_t cases;
  uint32_t passed;
  uint32_t failed;
} FriBenchmarkSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *fri_version(void);

/**
 * Message of the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *fri_last_error_message(void);

/**
 * KH conclusion for one-dimensional sets; writes four doubles to `out`.
 *
 * # Safety
 * Every pointer must reference four readable (`out`: writable) doubles.
 */
enum FriStatus fri_kh_points(const double *a1,
                             const double *a2,
                             const double *b1,
                             const double *b2,
                             const double *x,
                             double *out);

/**
 * KHstab conclusion over `n` one-dimensional rules. `antecedents` and
 * `consequents` hold `4 * n` doubles each.
 *
 * # Safety
 * Array sizes must match `n`; `x` and `out` reference four doubles.
 */
enum FriStatus fri_khstab_points(const double *antecedents,
                                 const double *consequents,
                                 size_t n,
                                 const double *x,
                                 double exponent,
                                 double *out);

/**
 * Full normality diagnostics for a one-dimensional configuration.
 *
 * # Safety
 * Set pointers reference four doubles; `out` must be writable.
 */
enum FriStatus fri_validate(const double *a1,
                            const double *a2,
                            const double *b1,
                            const double *b2,
                            const double *x,
                            struct FriNormalityReport *out);

/**
 * Runs the nine builtin benchmark cases.
 *
 * # Safety
 * `out` must be writable.
 */
enum FriStatus fri_benchmark_summary(struct FriBenchmarkSummary *out);

/**
 * Parses a NUL-terminated TOML document. On success `*out` owns a handle
 * that must be released with [`fri_document_free`].
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be writable.
 */
enum FriStatus fri_document_load(const char *text, struct FriDocument **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `doc` must come from [`fri_document_load`] and not be used afterwards.
 */
void fri_document_free(struct FriDocument *doc);

/**
 * Number of rules in the document.
 *
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum FriStatus fri_document_rule_count(const struct FriDocument *doc, size_t *out);

/**
 * Input dimension of the document.
 *
 * # Safety
 * `doc` must be a live handle; `out` must be writable.
 */
enum FriStatus fri_document_dimension(const struct FriDocument *doc, size_t *out);

/**
 * Interpolates the document's observation; writes four doubles to `out`.
 * `method` is a `FriMethod` value; `exponent` is used by
 * `FRI_METHOD_KHSTAB` only.
 *
 * # Safety
 * `doc` must be a live handle; `out` must reference four writable doubles.
 */
enum FriStatus fri_document_interpolate(const struct FriDocument *doc,
                                        uint32_t method,
                                        double exponent,
                                        double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRI_LAB_H */
