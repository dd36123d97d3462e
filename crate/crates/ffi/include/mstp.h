#ifndef MSTP_H
#define MSTP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum MstpStatus {
  MSTP_STATUS_OK = 0,
  MSTP_STATUS_NULL_POINTER = 1,
  MSTP_STATUS_INVALID_UTF8 = 2,
  MSTP_STATUS_PARSE_ERROR = 3,
  MSTP_STATUS_INVALID_ARGUMENT = 4,
  MSTP_STATUS_RESOURCE_LIMIT = 5,
  MSTP_STATUS_PANIC = 6,
} MstpStatus;

// Values accepted for the `algo` argument of [`mstp_solve`].
typedef enum MstpAlgo {
  MSTP_ALGO_AUTO = 0,
  MSTP_ALGO_XP = 1,
  MSTP_ALGO_FPT = 2,
  MSTP_ALGO_NAIVE = 3,
} MstpAlgo;

// Values accepted for the `rule` argument of [`mstp_kernelize`].
typedef enum MstpRule {
  MSTP_RULE_DISSIMILAR = 0,
  MSTP_RULE_SIMILAR = 1,
} MstpRule;

// Values accepted for the `measure` argument of [`mstp_instance_new`].
typedef enum MstpMeasure {
  MSTP_MEASURE_VDV = 0,
  MSTP_MEASURE_EDE = 1,
  MSTP_MEASURE_VIV = 2,
  MSTP_MEASURE_EIE = 3,
} MstpMeasure;

// Opaque problem instance.
typedef struct MstpInstance MstpInstance;

// Opaque sequence of paths, one per snapshot.
typedef struct MstpSolution MstpSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread, or null. The
// pointer stays valid until the next call into the library on this thread.
const char *mstp_last_error(void);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void mstp_string_free(char *s);

// Parses an instance in the `mstp 1` text format.
//
// # Safety
// `text` must be null or a NUL-terminated string; `out` must be null or
// writable.
enum MstpStatus mstp_instance_parse(const char *text_ptr, struct MstpInstance **out);

// Builds an instance from `edge_count` triples `(snapshot, u, v)` stored
// consecutively in `edges`; snapshots are numbered from 0. `measure` is one
// of [`MstpMeasure`].
//
// # Safety
// `edges` must point to `3 * edge_count` readable values (it may be null
// when `edge_count` is 0); `out` must be null or writable.
enum MstpStatus mstp_instance_new(uint32_t n,
                                  uint32_t tau,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  uint32_t s,
                                  uint32_t t,
                                  uint32_t k,
                                  uint32_t ell,
                                  uint32_t measure,
                                  struct MstpInstance **out);

// Releases an instance. Null is ignored.
//
// # Safety
// `inst` must be null or a handle from this library not yet freed.
void mstp_instance_free(struct MstpInstance *inst);

// Canonical text of an instance; release with [`mstp_string_free`].
//
// # Safety
// `inst` must be null or a live handle; `out` must be null or writable.
enum MstpStatus mstp_instance_write(const struct MstpInstance *inst, char **out);

// Number of vertices, or 0 for null.
//
// # Safety
// `inst` must be null or a live handle.
size_t mstp_instance_n(const struct MstpInstance *inst);

// Number of snapshots, or 0 for null.
//
// # Safety
// `inst` must be null or a live handle.
size_t mstp_instance_tau(const struct MstpInstance *inst);

// Decides an instance with one of [`MstpAlgo`]. Sets `*yes`; on YES and
// when `solution` is not null, stores a new solution handle there, otherwise
// stores null.
//
// # Safety
// `inst` must be null or a live handle; `yes` and `solution` must be null
// or writable.
enum MstpStatus mstp_solve(const struct MstpInstance *inst,
                           uint32_t algo,
                           bool *yes,
                           struct MstpSolution **solution);

// Checks a solution against an instance and sets `*accepted`. A rejection
// is not an error; its reason is available from [`mstp_last_error`].
//
// # Safety
// `inst` and `sol` must be null or live handles; `accepted` must be null
// or writable.
enum MstpStatus mstp_verify(const struct MstpInstance *inst,
                            const struct MstpSolution *sol,
                            bool *accepted);

// Kernelizes with one of [`MstpRule`] into a new instance handle.
//
// # Safety
// `inst` must be null or a live handle; `out` must be null or writable.
enum MstpStatus mstp_kernelize(const struct MstpInstance *inst,
                               uint32_t rule,
                               struct MstpInstance **out);

// Turns an edge-measure instance into the equivalent vertex-measure one.
//
// # Safety
// `inst` must be null or a live handle; `out` must be null or writable.
enum MstpStatus mstp_reduce(const struct MstpInstance *inst, struct MstpInstance **out);

// Parses a solution in the `mstp-solution 1` text format.
//
// # Safety
// `text` must be null or a NUL-terminated string; `out` must be null or
// writable.
enum MstpStatus mstp_solution_parse(const char *text_ptr, struct MstpSolution **out);

// Text of a solution; release with [`mstp_string_free`].
//
// # Safety
// `sol` must be null or a live handle; `out` must be null or writable.
enum MstpStatus mstp_solution_write(const struct MstpSolution *sol, char **out);

// Number of paths, or 0 for null.
//
// # Safety
// `sol` must be null or a live handle.
size_t mstp_solution_len(const struct MstpSolution *sol);

// Borrows path `index` (0-based). The vertex array belongs to the solution
// and lives as long as it does.
//
// # Safety
// `sol` must be null or a live handle; `vertices` and `len` must be null or
// writable.
enum MstpStatus mstp_solution_path(const struct MstpSolution *sol,
                                   size_t index,
                                   const uint32_t **vertices,
                                   size_t *len);

// Releases a solution. Null is ignored.
//
// # Safety
// `sol` must be null or a handle from this library not yet freed.
void mstp_solution_free(struct MstpSolution *sol);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MSTP_H */
