#ifndef LIEYAM_H
#define LIEYAM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum LyStatus {
  LY_STATUS_OK = 0,
  LY_STATUS_VERIFY_FAILED = 1,
  LY_STATUS_UNKNOWN_ENTRY = 2,
  LY_STATUS_MALFORMED = 3,
  LY_STATUS_CAP_EXCEEDED = 4,
  LY_STATUS_NULL_POINTER = 5,
  LY_STATUS_INVALID_ARGUMENT = 6,
  LY_STATUS_INTERNAL = 7,
} LyStatus;

// A structure-constant algebra.
typedef struct LyAlgebra LyAlgebra;

// The verification report of one catalog entry.
typedef struct LyReport LyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the message of the last failure on this thread into `*out`, or
// stores null when there was none. Release with [`ly_string_free`].
//
// # Safety
// `out` must be a valid pointer.
enum LyStatus ly_last_error(char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void ly_string_free(char *s);

// Parses `.sca` text into a new algebra handle.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum LyStatus ly_algebra_from_sca(const char *text, struct LyAlgebra **out);

// # Safety
// `a` must be null or a handle from [`ly_algebra_from_sca`], not yet freed.
void ly_algebra_free(struct LyAlgebra *a);

// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum LyStatus ly_algebra_dim(const struct LyAlgebra *a, size_t *out);

// Whether the algebra is a simple Lie algebra; a non-Lie algebra reports
// [`LyStatus::VerifyFailed`].
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum LyStatus ly_algebra_is_simple(const struct LyAlgebra *a, bool *out);

// Dimension of the derivation algebra.
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum LyStatus ly_algebra_derivation_dim(const struct LyAlgebra *a, size_t *out);

// Rank of the Killing form.
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum LyStatus ly_algebra_killing_rank(const struct LyAlgebra *a, size_t *out);

// Dimension of the irreducible module with highest weight `weight`
// (fundamental-weight coordinates, `len` must equal `rank`).
//
// # Safety
// `weight` must point to `len` readable values and `out` be a valid pointer.
enum LyStatus ly_weyl_dim(char kind, size_t rank, const int64_t *weight, size_t len, uint64_t *out);

// Verifies a catalog entry. A report is produced whenever the entry exists,
// and the status is [`LyStatus::VerifyFailed`] when some check failed.
//
// # Safety
// `id` must be a NUL-terminated string and `out` a valid pointer.
enum LyStatus ly_catalog_verify(const char *id, struct LyReport **out);

// # Safety
// `r` must be null or a handle from [`ly_catalog_verify`], not yet freed.
void ly_report_free(struct LyReport *r);

// # Safety
// `r` must be a live handle and `out` a valid pointer.
enum LyStatus ly_report_passed(const struct LyReport *r, bool *out);

// Dimensions of `g`, `h` and `m` of the standard enveloping algebra.
//
// # Safety
// `r` must be a live handle and the outputs valid pointers.
enum LyStatus ly_report_dims(const struct LyReport *r, size_t *dim_g, size_t *dim_h, size_t *dim_m);

// One line per axiom and cross-check. Release with [`ly_string_free`].
//
// # Safety
// `r` must be a live handle and `out` a valid pointer.
enum LyStatus ly_report_summary(const struct LyReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEYAM_H */
