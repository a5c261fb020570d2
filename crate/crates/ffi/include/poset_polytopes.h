#ifndef POSET_POLYTOPES_H
#define POSET_POLYTOPES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PpMethod {
  PP_METHOD_FLOW = 0,
  PP_METHOD_BRUTE = 1,
} PpMethod;

typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_POINTER = 1,
  PP_STATUS_INVALID_UTF8 = 2,
  // Malformed input: bad JSON, unknown label, wrong vector length.
  PP_STATUS_INVALID_INPUT = 3,
  // A domain error such as a point outside the polytope.
  PP_STATUS_DOMAIN = 4,
  // The caller's buffer is too small; the required length was written.
  PP_STATUS_BUFFER_TOO_SMALL = 5,
  PP_STATUS_PANIC = 6,
} PpStatus;

// Opaque poset handle.
typedef struct PpPoset PpPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next call on the same thread.
const char *pp_last_error(void);

// # Safety
// `s` must come from this library and not be freed twice.
void pp_string_free(char *s);

// Builds a poset from `{"elements": [...], "relations": [[a, b], ...]}`.
//
// # Safety
// `json` must be a nul-terminated string and `out` writable.
enum PpStatus pp_poset_from_json(const char *json, struct PpPoset **out);

// The root poset of `Gr(d, n)`.
//
// # Safety
// `out` must be writable.
enum PpStatus pp_poset_grassmann(size_t d, size_t n, struct PpPoset **out);

// # Safety
// `p` must come from this library and not be freed twice.
void pp_poset_free(struct PpPoset *p);

// # Safety
// `p` must be a live handle.
size_t pp_poset_size(const struct PpPoset *p);

// Poset as JSON in the input format, with cover relations only.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum PpStatus pp_poset_to_json(const struct PpPoset *p, char **out);

// # Safety
// `p` must be a live handle and `out` writable.
enum PpStatus pp_width(const struct PpPoset *p, size_t *out);

// `M(z)` for `z` given in element order; `method` is a [`PpMethod`] value.
//
// # Safety
// `z` must point to `len` readable values (may be null when `len == 0`).
enum PpStatus pp_violation_excess(const struct PpPoset *p,
                                  const int64_t *z,
                                  size_t len,
                                  uint32_t m,
                                  uint32_t method,
                                  int64_t *out);

// # Safety
// As for [`pp_violation_excess`].
enum PpStatus pp_membership(const struct PpPoset *p,
                            const int64_t *z,
                            size_t len,
                            uint32_t m,
                            uint32_t big_m,
                            bool *out);

// `|S(m, M)|`.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum PpStatus pp_enumerate_count(const struct PpPoset *p, uint32_t m, uint32_t big_m, size_t *out);

// Decomposition certificate of `z` as JSON.
//
// # Safety
// As for [`pp_violation_excess`]; `out` receives a string for [`pp_string_free`].
enum PpStatus pp_decompose_json(const struct PpPoset *p,
                                const int64_t *z,
                                size_t len,
                                uint32_t m,
                                uint32_t big_m,
                                char **out);

// # Safety
// `p` must be a live handle and `out` writable.
enum PpStatus pp_partition_json(const struct PpPoset *p, uint32_t m, uint32_t big_m, char **out);

// Coefficients of the graph-closure Poincaré polynomial of `Gr(d, n)`,
// constant term first. `*len` receives the coefficient count; with a null or
// short buffer the call returns `BufferTooSmall` and writes nothing else.
//
// # Safety
// `coeffs` must have room for `cap` values (may be null when `cap == 0`).
enum PpStatus pp_graph_poincare(size_t d, size_t n, int64_t *coeffs, size_t cap, size_t *len);

// Stratum index of the row space of a `d x n` row-major integer matrix.
//
// # Safety
// `rows` must point to `d * n` readable values.
enum PpStatus pp_stratum(const int64_t *rows, size_t d, size_t n, size_t *out);

// Runs the property suite (checks whose name starts with `prefix`) and
// returns its JSON report. `Domain` signals a failed check.
//
// # Safety
// `prefix` must be a nul-terminated string and `out` writable.
enum PpStatus pp_verify_json(uint64_t seed, const char *prefix, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSET_POLYTOPES_H */
