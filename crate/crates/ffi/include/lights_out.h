#ifndef LIGHTS_OUT_H
#define LIGHTS_OUT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum LoStatus {
  LO_STATUS_OK = 0,
  LO_STATUS_INVALID_ARGUMENT = 1,
  LO_STATUS_UNSUPPORTED_SIZE = 2,
  LO_STATUS_PARSE = 3,
  LO_STATUS_IO = 4,
  LO_STATUS_NULL_POINTER = 5,
  /*
   A numeric result does not fit the output type.
   */
  LO_STATUS_OVERFLOW = 6,
  LO_STATUS_INTERNAL = 7,
  LO_STATUS_PANIC = 8,
} LoStatus;

typedef struct LoGraph LoGraph;

/*
 Stream of uniformly random unlabeled graphs. Draw `k` is reproducible
 from `(n, seed, connected, k)`.
 */
typedef struct LoSampler LoSampler;

typedef struct LoExactCounts {
  uint32_t n;
  uint64_t total;
  uint64_t solvable;
  uint64_t connected;
  uint64_t connected_solvable;
} LoExactCounts;

typedef struct LoEstimateRequest {
  uint32_t n;
  uint64_t trials;
  uint64_t seed;
  /*
   Nonzero to sample connected graphs only.
   */
  uint8_t connected;
  /*
   0 picks the available parallelism.
   */
  uint32_t workers;
} LoEstimateRequest;

typedef struct LoEstimateResult {
  uint64_t trials;
  uint64_t solvable_count;
  /*
   `UINT64_MAX` in connected mode.
   */
  uint64_t connected_count;
  double p_solvable;
  /*
   NaN in connected mode.
   */
  double p_connected;
  double moe95;
  uint64_t rejected_draws;
  double elapsed_seconds;
} LoEstimateResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failing call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *lo_last_error_message(void);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void lo_string_free(char *s);

/*
 Edgeless graph on `n >= 1` vertices.

 # Safety
 `out` must be valid for writes.
 */
enum LoStatus lo_graph_new(size_t n, struct LoGraph **out);

/*
 # Safety
 `text` must be a nul-terminated string and `out` valid for writes.
 */
enum LoStatus lo_graph_from_graph6(const char *text, struct LoGraph **out);

/*
 # Safety
 `g` must be null or a handle from this library, not yet freed.
 */
void lo_graph_free(struct LoGraph *g);

/*
 Encodes `g` as graph6; release the string with [`lo_string_free`].

 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_to_graph6(const struct LoGraph *g, char **out);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_vertex_count(const struct LoGraph *g, size_t *out);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_edge_count(const struct LoGraph *g, size_t *out);

/*
 # Safety
 `g` must be a live handle.
 */
enum LoStatus lo_graph_add_edge(struct LoGraph *g, size_t u, size_t v);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_has_edge(const struct LoGraph *g, size_t u, size_t v, bool *out);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_is_universally_solvable(const struct LoGraph *g, bool *out);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum LoStatus lo_graph_is_connected(const struct LoGraph *g, bool *out);

/*
 Finds presses switching off the lights `lit[0..lit_len]`.

 On success `*solvable` says whether a solution exists; if so the press set
 is written ascending to `presses` (capacity at least the vertex count) and
 its size to `*presses_len`.

 # Safety
 `lit` must point to `lit_len` values (or be null when `lit_len` is 0),
 `presses` to writable space for `n` values, and the out pointers must be
 valid for writes.
 */
enum LoStatus lo_graph_solve(const struct LoGraph *g,
                             const size_t *lit,
                             size_t lit_len,
                             size_t *presses,
                             size_t *presses_len,
                             bool *solvable);

/*
 Number of unlabeled graphs on `n` vertices as a decimal string; release
 it with [`lo_string_free`].

 # Safety
 `out` must be valid for writes.
 */
enum LoStatus lo_gn(size_t n, char **out);

/*
 Exact unlabeled counts for `n <= 8`.

 # Safety
 `out` must be valid for writes.
 */
enum LoStatus lo_exact_counts(size_t n, struct LoExactCounts *out);

/*
 # Safety
 `req` must be readable and `out` valid for writes.
 */
enum LoStatus lo_estimate(const struct LoEstimateRequest *req, struct LoEstimateResult *out);

/*
 # Safety
 `out` must be valid for writes.
 */
enum LoStatus lo_sampler_new(size_t n, uint64_t seed, bool connected, struct LoSampler **out);

/*
 Draws the next graph; release it with [`lo_graph_free`].

 # Safety
 `s` must be a live sampler and `out` valid for writes.
 */
enum LoStatus lo_sampler_next(struct LoSampler *s, struct LoGraph **out);

/*
 # Safety
 `s` must be null or a sampler from this library, not yet freed.
 */
void lo_sampler_free(struct LoSampler *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIGHTS_OUT_H */
