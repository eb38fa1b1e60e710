#ifndef GRADEDK_H
#define GRADEDK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum GkStatus {
  GK_STATUS_OK = 0,
  GK_STATUS_NULL_POINTER = 1,
  GK_STATUS_INVALID_UTF8 = 2,
  /*
   Malformed input: bad syntax, unknown generator, mismatched sizes.
   */
  GK_STATUS_INVALID = 3,
  /*
   Well-formed input outside the operation's domain, e.g. a graph with
   sinks passed to the graded computation.
   */
  GK_STATUS_PRECONDITION = 4,
  GK_STATUS_INTERNAL = 5,
} GkStatus;

/*
 Which K-theory to compute.
 */
typedef enum GkMode {
  GK_MODE_GRADED = 0,
  GK_MODE_UNGRADED = 1,
  /*
   Graded formula on graphs with sinks. Not backed by a proof.
   */
  GK_MODE_GRADED_EXPERIMENTAL = 2,
} GkMode;

/*
 Opaque parsed graph.
 */
typedef struct GkGraph GkGraph;

/*
 Opaque `(K0, K1)` result.
 */
typedef struct GkKGroups GkKGroups;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Last error message on this thread, or null. The pointer stays valid
 until the next call into the library from the same thread.
 */
const char *gk_last_error(void);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void gk_string_free(char *s);

/*
 Parses a graph in the `vertices:` / `edges:` text format.

 # Safety
 `source` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_graph_parse(const char *source, struct GkGraph **out);

/*
 # Safety
 `g` must be null or a handle from [`gk_graph_parse`], not yet freed.
 */
void gk_graph_free(struct GkGraph *g);

/*
 Number of vertices, 0 for a null handle.

 # Safety
 `g` must be null or a live graph handle.
 */
uintptr_t gk_graph_vertex_count(const struct GkGraph *g);

/*
 Structural properties of the graph as a JSON document.

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum GkStatus gk_graph_analyze_json(const struct GkGraph *g, char **out);

/*
 Computes `(K0, K1)` of the graph algebra.

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum GkStatus gk_kgroups_compute(const struct GkGraph *g, enum GkMode mode, struct GkKGroups **out);

/*
 Same computation as [`gk_kgroups_compute`], returned as a JSON document
 that includes the matrix and any warnings.

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum GkStatus gk_kgroups_json(const struct GkGraph *g, enum GkMode mode, char **out);

/*
 Graded K-theory of the complex Clifford algebra on `n` generators.

 # Safety
 `out` must be writable.
 */
enum GkStatus gk_clifford_ktheory(uintptr_t n, struct GkKGroups **out);

/*
 # Safety
 `k` must be null or a live K-groups handle.
 */
void gk_kgroups_free(struct GkKGroups *k);

/*
 Canonical text of `K0`, e.g. `Z (+) Z_2`.

 # Safety
 `k` must be a live K-groups handle; `out` must be writable.
 */
enum GkStatus gk_kgroups_k0(const struct GkKGroups *k, char **out);

/*
 Canonical text of `K1`.

 # Safety
 `k` must be a live K-groups handle; `out` must be writable.
 */
enum GkStatus gk_kgroups_k1(const struct GkKGroups *k, char **out);

/*
 Free ranks of `K0` and `K1`. Either output may be null.

 # Safety
 `k` must be a live K-groups handle; non-null outputs must be writable.
 */
enum GkStatus gk_kgroups_free_ranks(const struct GkKGroups *k, uintptr_t *rank0, uintptr_t *rank1);

/*
 True when the result came from the experimental sink-permitting path.

 # Safety
 `k` must be null or a live K-groups handle.
 */
bool gk_kgroups_is_experimental(const struct GkKGroups *k);

/*
 Smith normal form of a matrix in the `rows cols` text format, as JSON.

 # Safety
 `source` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_snf_json(const char *source, char **out);

/*
 Product `a * b` in the complex Clifford algebra. A negative `n` places
 both operands in the smallest algebra containing them.

 # Safety
 `a`, `b` must be NUL-terminated strings; `out` must be writable.
 */
enum GkStatus gk_clifford_mul(const char *a, const char *b, intptr_t n, char **out);

/*
 Adjoint `a*`. A negative `n` infers the generator count.

 # Safety
 `a` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_clifford_star(const char *a, intptr_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRADEDK_H */
