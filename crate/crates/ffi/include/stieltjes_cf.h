#ifndef STIELTJES_CF_H
#define STIELTJES_CF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes. `STCF_STATUS_OK` is zero.
 */
typedef enum StcfStatus {
  STCF_STATUS_OK = 0,
  STCF_STATUS_NULL_POINTER = 1,
  STCF_STATUS_INVALID_UTF8 = 2,
  STCF_STATUS_PARSE_ERROR = 3,
  STCF_STATUS_INVALID_ARGUMENT = 4,
  /*
   The input is well-formed but the computation is undefined for it
   (for example, no S-fraction exists).
   */
  STCF_STATUS_MATH_ERROR = 5,
  /*
   The requested value does not exist (for example, the refutation
   index of a certified verdict).
   */
  STCF_STATUS_NOT_FOUND = 6,
  STCF_STATUS_PANIC = 7,
} StcfStatus;

/*
 Verdict kinds, mirroring the library's `CertStatus`.
 */
typedef enum StcfVerdictKind {
  STCF_VERDICT_KIND_CERTIFIED_PREFIX = 0,
  STCF_VERDICT_KIND_REFUTED = 1,
  STCF_VERDICT_KIND_DEGENERATE = 2,
} StcfVerdictKind;

/*
 Opaque moment sequence.
 */
typedef struct StcfMoments StcfMoments;

/*
 Opaque certification verdict.
 */
typedef struct StcfVerdict StcfVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds a moment sequence from a comma-separated list such as `"1,3/2,5/2"`.

 # Safety
 `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
 or writable.
 */
enum StcfStatus stcf_moments_from_list(const char *text, struct StcfMoments **out);

/*
 Builds a moment sequence from `{"moments": ["p/q", ...]}`.

 # Safety
 As for [`stcf_moments_from_list`].
 */
enum StcfStatus stcf_moments_from_json(const char *json, struct StcfMoments **out);

/*
 Number of moments held by `m`, or 0 for NULL.

 # Safety
 `m` must be NULL or a live handle.
 */
size_t stcf_moments_len(const struct StcfMoments *m);

/*
 Serializes `m` as JSON. Free the result with [`stcf_string_free`].

 # Safety
 `m` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum StcfStatus stcf_moments_to_json(const struct StcfMoments *m, char **out);

/*
 # Safety
 `m` must be NULL or a handle not yet freed.
 */
void stcf_moments_free(struct StcfMoments *m);

/*
 Binomial transform `b_n = sum_k C(n,k) a_k xi^(n-k)` as a new handle.

 # Safety
 Pointers must be NULL or valid as described in the module docs.
 */
enum StcfStatus stcf_binomial_transform(const struct StcfMoments *m,
                                        const char *xi,
                                        struct StcfMoments **out);

/*
 Standard S-fraction of `m` as JSON `{"c", "alphas", "terminated"}`.

 # Safety
 Pointers must be NULL or valid as described in the module docs.
 */
enum StcfStatus stcf_s_extract_json(const struct StcfMoments *m, char **out);

/*
 Certifies or refutes support in `[xi, inf)`.

 # Safety
 Pointers must be NULL or valid as described in the module docs.
 */
enum StcfStatus stcf_certify_xi_stieltjes(const struct StcfMoments *m,
                                          const char *xi,
                                          struct StcfVerdict **out);

/*
 Certifies or refutes support in `[0, xi]`.

 # Safety
 Pointers must be NULL or valid as described in the module docs.
 */
enum StcfStatus stcf_certify_wall(const struct StcfMoments *m,
                                  const char *xi,
                                  struct StcfVerdict **out);

/*
 # Safety
 `v` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum StcfStatus stcf_verdict_kind(const struct StcfVerdict *v, enum StcfVerdictKind *out);

/*
 Index of the first infeasible `g`; `STCF_STATUS_NOT_FOUND` unless refuted.

 # Safety
 `v` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum StcfStatus stcf_verdict_refutation_index(const struct StcfVerdict *v, size_t *out);

/*
 Full verdict as JSON. Free the result with [`stcf_string_free`].

 # Safety
 `v` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum StcfStatus stcf_verdict_to_json(const struct StcfVerdict *v, char **out);

/*
 # Safety
 `v` must be NULL or a handle not yet freed.
 */
void stcf_verdict_free(struct StcfVerdict *v);

/*
 Brackets the largest admissible `g_0` to within `tol`; JSON result.

 # Safety
 Pointers must be NULL or valid as described in the module docs.
 */
enum StcfStatus stcf_g0_max_json(const struct StcfMoments *m,
                                 const char *xi,
                                 const char *tol,
                                 char **out);

/*
 Releases a string returned by this library.

 # Safety
 `s` must be NULL or a string from this library not yet freed.
 */
void stcf_string_free(char *s);

/*
 Message for the last failure on this thread, or NULL. The pointer stays
 valid until the next failing call on the same thread; do not free it.
 */
const char *stcf_last_error_message(void);

/*
 Library version, static storage.
 */
const char *stcf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STIELTJES_CF_H */
