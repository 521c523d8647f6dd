#ifndef SPQ_H
#define SPQ_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SpqStatus {
  SPQ_STATUS_OK = 0,
  SPQ_STATUS_NULL_POINTER = 1,
  SPQ_STATUS_INVALID_UTF8 = 2,
  SPQ_STATUS_PARSE_ERROR = 3,
  SPQ_STATUS_INVALID_ARGUMENT = 4,
  SPQ_STATUS_COMPUTATION_FAILED = 5,
  SPQ_STATUS_VERIFICATION_FAILED = 6,
} SpqStatus;

/**
 * Which exhaustive check [`spq_verify`] runs.
 */
typedef enum SpqSuite {
  SPQ_SUITE_TAU = 0,
  SPQ_SUITE_WALL_CROSS = 1,
  SPQ_SUITE_BIJECTION = 2,
} SpqSuite;

/**
 * A signed involution.
 */
typedef struct SpqInvolution SpqInvolution;

/**
 * A domino tableau together with its class of signed tableaux.
 */
typedef struct SpqPair SpqPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *spq_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void spq_string_free(char *s);

/**
 * Parses the text form, e.g. `"1+ 2- (3,4)+ 5+"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SpqStatus spq_involution_parse(const char *text, struct SpqInvolution **out);

/**
 * # Safety
 * `inv` must come from [`spq_involution_parse`] and not have been freed.
 */
void spq_involution_free(struct SpqInvolution *inv);

/**
 * Rank and signature `(p, q)`.
 *
 * # Safety
 * `inv` must be a live handle; the output pointers must be writable.
 */
enum SpqStatus spq_involution_signature(const struct SpqInvolution *inv,
                                        uintptr_t *n,
                                        uintptr_t *p,
                                        uintptr_t *q);

/**
 * Canonical text form.
 *
 * # Safety
 * `inv` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_involution_to_string(const struct SpqInvolution *inv, char **out);

/**
 * Number of parameters of rank `n` and signature `p`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpqStatus spq_count(uintptr_t n, uintptr_t p, uint64_t *out);

/**
 * Computes `H(σ)`.
 *
 * # Safety
 * `inv` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_hmap(const struct SpqInvolution *inv, struct SpqPair **out);

/**
 * # Safety
 * `pair` must come from [`spq_hmap`] and not have been freed.
 */
void spq_pair_free(struct SpqPair *pair);

/**
 * Number of signed tableaux in the class.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_pair_class_size(const struct SpqPair *pair, uintptr_t *out);

/**
 * Normalized orbit descriptor, e.g. `"2+2+"`.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_pair_orbit(const struct SpqPair *pair, char **out);

/**
 * Bordered ASCII drawing of the domino tableau.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_pair_render(const struct SpqPair *pair, char **out);

/**
 * JSON form `{"t1": …, "class": […], "orbit": …}`.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum SpqStatus spq_pair_to_json(const struct SpqPair *pair, char **out);

/**
 * Runs one suite for all ranks up to `n_max`. `failures` receives the
 * number of failing cases; the status is `VerificationFailed` if any.
 *
 * # Safety
 * `failures` must be writable or null.
 */
enum SpqStatus spq_verify(enum SpqSuite suite, uintptr_t n_max, uintptr_t *failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPQ_H */
