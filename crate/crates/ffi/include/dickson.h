#ifndef DICKSON_H
#define DICKSON_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define DICKSON_ABI_VERSION 1

typedef enum DicksonStatus {
  DICKSON_STATUS_OK = 0,
  DICKSON_STATUS_NULL_POINTER = 1,
  DICKSON_STATUS_INVALID_UTF8 = 2,
  DICKSON_STATUS_SYNTAX = 3,
  DICKSON_STATUS_OVERFLOW = 4,
  DICKSON_STATUS_CONTRACT = 5,
  DICKSON_STATUS_CAPACITY = 6,
  DICKSON_STATUS_GUARD_RAIL = 7,
  DICKSON_STATUS_INVARIANT = 8,
  /**
   * `dickson_holds_d` found no witness.
   */
  DICKSON_STATUS_NOT_FOUND = 9,
} DicksonStatus;

/**
 * Opaque sequence handle.
 */
typedef struct DicksonSeq DicksonSeq;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t dickson_abi_version(void);

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * owned by the library and valid until the next failing call on the thread.
 */
const char *dickson_last_error(void);

/**
 * Parses a sequence literal such as `"1,0;0"` or `"0%1,2"`.
 */
enum DicksonStatus dickson_seq_parse(const char *text, struct DicksonSeq **out);

/**
 * Releases a handle from `dickson_seq_parse`. NULL is ignored.
 */
void dickson_seq_free(struct DicksonSeq *seq);

enum DicksonStatus dickson_seq_eval(const struct DicksonSeq *seq, uint64_t n, uint64_t *out);

/**
 * Canonical literal of `seq`; free with `dickson_string_free`.
 */
char *dickson_seq_render(const struct DicksonSeq *seq);

void dickson_string_free(char *s);

enum DicksonStatus dickson_pair_code(uint64_t n, uint64_t m, uint64_t *out);

/**
 * `I^{f_0 + g_0 + 1}(0)`.
 */
enum DicksonStatus dickson_guessed_bound(const struct DicksonSeq *f,
                                         const struct DicksonSeq *g,
                                         uint64_t *out);

enum DicksonStatus dickson_extracted_bound(const struct DicksonSeq *f,
                                           const struct DicksonSeq *g,
                                           uint64_t n,
                                           uint64_t *out);

enum DicksonStatus dickson_oracle_min_bound(const struct DicksonSeq *f,
                                            const struct DicksonSeq *g,
                                            uint64_t *out);

/**
 * Least witness `i < j ≤ n`, or `DICKSON_STATUS_NOT_FOUND`.
 */
enum DicksonStatus dickson_holds_d(const struct DicksonSeq *f,
                                   const struct DicksonSeq *g,
                                   uint64_t n,
                                   uint64_t *out_i,
                                   uint64_t *out_j);

/**
 * Writes `true` if the descent step at `n` reports a bound at `I(n)`,
 * `false` if the measure decreases instead.
 */
enum DicksonStatus dickson_descent(const struct DicksonSeq *f,
                                   const struct DicksonSeq *g,
                                   uint64_t n,
                                   bool *out_bound_reached);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DICKSON_H */
