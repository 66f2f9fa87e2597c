#ifndef SCREENQ_H
#define SCREENQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScreenqStatus {
  SCREENQ_STATUS_OK = 0,
  SCREENQ_STATUS_IDENTITY_FAILURE = 1,
  SCREENQ_STATUS_NULL_ARGUMENT = 2,
  SCREENQ_STATUS_INVALID_UTF8 = 3,
  SCREENQ_STATUS_CONFIG = 4,
  SCREENQ_STATUS_PARSE = 5,
  SCREENQ_STATUS_COMPUTATION = 6,
  SCREENQ_STATUS_PANIC = 7,
} ScreenqStatus;

// Opaque handle.
typedef struct ScreenqContext ScreenqContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a context. `algebra` is a catalog name (`sl2`, `sl3`, `sl2_1`,
// `osp1_2`) or a JSON root datum beginning with `{`. `weight` is `generic`
// or comma-separated coordinates. Set `json` nonzero for JSON output.
//
// # Safety
// String arguments must be null or valid nul-terminated strings; `out` must
// be a valid pointer.
enum ScreenqStatus screenq_context_new(const char *algebra,
                                       uint32_t depth,
                                       const char *weight,
                                       int32_t json,
                                       struct ScreenqContext **out);

// # Safety
// `ctx` must be null or a pointer returned by `screenq_context_new` that has
// not been freed.
void screenq_context_free(struct ScreenqContext *ctx);

// Runs `relations`, `coproduct`, `hopf` or `all`. Returns
// `SCREENQ_STATUS_IDENTITY_FAILURE` with the report when any identity fails.
//
// # Safety
// See `screenq_context_new`; `out` receives a string for `screenq_string_free`.
enum ScreenqStatus screenq_verify(const struct ScreenqContext *ctx, const char *suite, char **out);

// Applies a word such as `"E1 F1 K2-"` to the basis vector named by `start`
// (e.g. `"2,1"`, empty for the highest-weight vector).
//
// # Safety
// See `screenq_verify`.
enum ScreenqStatus screenq_act(const struct ScreenqContext *ctx,
                               const char *word,
                               const char *start,
                               char **out);

// Singular vectors of the comma-separated multidegree.
//
// # Safety
// See `screenq_verify`.
enum ScreenqStatus screenq_serre_scan(const struct ScreenqContext *ctx,
                                      const char *multidegree,
                                      char **out);

// Exchange phase of two screened vertex operators at concrete weights.
//
// # Safety
// See `screenq_verify`.
enum ScreenqStatus screenq_braid(const struct ScreenqContext *ctx,
                                 const char *lambda1,
                                 const char *seq1,
                                 const char *lambda2,
                                 const char *seq2,
                                 char **out);

// # Safety
// `s` must be null or a string returned by this library, freed at most once.
void screenq_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into this library on the same thread.
const char *screenq_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCREENQ_H */
