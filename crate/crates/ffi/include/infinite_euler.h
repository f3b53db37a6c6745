#ifndef INFINITE_EULER_H
#define INFINITE_EULER_H

/* Generated by cbindgen from src/lib.rs; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Pass as `budget` to use the default: unlimited when the graph declares
 * the matching condition, a fixed cap otherwise.
 */
#define IE_BUDGET_AUTO UINT64_MAX

typedef enum IeStatus {
  IE_STATUS_OK = 0,
  IE_STATUS_NULL_POINTER = 1,
  IE_STATUS_USAGE = 2,
  IE_STATUS_DOMAIN = 3,
  IE_STATUS_EXHAUSTED = 4,
  IE_STATUS_PARSE = 5,
  IE_STATUS_VALIDATION = 6,
  IE_STATUS_INVALID_UTF8 = 7,
  IE_STATUS_INTERNAL = 8,
} IeStatus;

typedef enum IeAnswer {
  IE_ANSWER_FALSE = 0,
  IE_ANSWER_TRUE = 1,
  IE_ANSWER_EXHAUSTED = 2,
} IeAnswer;

typedef enum IeSide {
  IE_SIDE_RIGHT = 0,
  IE_SIDE_LEFT = 1,
} IeSide;

/**
 * Opaque graph handle.
 */
typedef struct IeGraph IeGraph;

/**
 * Opaque stream handle.
 */
typedef struct IeStream IeStream;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ie_last_error(void);

/**
 * Looks up a built-in family (`ray`, `line`, `loop_star`, `fat_ray`).
 *
 * # Safety
 * `name` must be NULL or a NUL-terminated string; `out` must be NULL or
 * writable.
 */
enum IeStatus ie_graph_builtin(const char *name, struct IeGraph **out);

/**
 * Parses a graph presentation.
 *
 * # Safety
 * As for [`ie_graph_builtin`].
 */
enum IeStatus ie_graph_load(const char *presentation, struct IeGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void ie_graph_free(struct IeGraph *g);

/**
 * Degree of `v`. On success `*infinite` is true for infinite degree (and
 * `*degree` is then 0), otherwise false with the degree in `*degree`.
 *
 * # Safety
 * `g` must be a live handle; `infinite` and `degree` writable.
 */
enum IeStatus ie_graph_degree(const struct IeGraph *g,
                              uint64_t v,
                              bool *infinite,
                              uint64_t *degree);

/**
 * Endpoints of edge `e`, smaller first.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` writable.
 */
enum IeStatus ie_graph_incidence(const struct IeGraph *g, uint64_t e, uint64_t *u, uint64_t *v);

/**
 * Whether the path `tokens = v0 e0 v1 … vk` (domain starting at `base`)
 * extends to a one-way infinite Eulerian path.
 *
 * # Safety
 * `g` must be a live handle, `tokens` must point to `len` values and
 * `answer` must be writable.
 */
enum IeStatus ie_is_right_extensible(const struct IeGraph *g,
                                     int64_t base,
                                     const uint64_t *tokens,
                                     size_t len,
                                     uint64_t budget,
                                     enum IeAnswer *answer);

/**
 * Two-way counterpart of [`ie_is_right_extensible`].
 *
 * # Safety
 * As for [`ie_is_right_extensible`].
 */
enum IeStatus ie_is_bi_extensible(const struct IeGraph *g,
                                  int64_t base,
                                  const uint64_t *tokens,
                                  size_t len,
                                  uint64_t budget,
                                  enum IeAnswer *answer);

/**
 * Opens a one-way stream. With `has_start` false the least distinguished
 * vertex is used. The stream keeps its own reference to the graph.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum IeStatus ie_stream_one_way(const struct IeGraph *g,
                                bool has_start,
                                uint64_t start,
                                struct IeStream **out);

/**
 * Opens a two-way stream.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum IeStatus ie_stream_two_way(const struct IeGraph *g, struct IeStream **out);

/**
 * Pulls the next step on `side`: the edge crossed, the vertex reached and
 * its position. Pulling `Left` on a one-way stream is a usage error.
 *
 * # Safety
 * `s` must be a live stream handle; the outputs writable.
 */
enum IeStatus ie_stream_next(struct IeStream *s,
                             enum IeSide side,
                             uint64_t *edge,
                             uint64_t *vertex,
                             int64_t *pos);

/**
 * # Safety
 * `s` must be NULL or a stream handle not yet freed.
 */
void ie_stream_free(struct IeStream *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INFINITE_EULER_H */
