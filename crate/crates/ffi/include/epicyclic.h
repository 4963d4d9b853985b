#ifndef EPICYCLIC_H
#define EPICYCLIC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EpiGenerator {
  /**
   * `identity(n)`; `j` is ignored.
   */
  EPI_GENERATOR_IDENTITY = 0,
  /**
   * `x -> x - 1` on period `n`; `j` is ignored.
   */
  EPI_GENERATOR_TAU = 1,
  /**
   * Face `hat n -> hat (n+1)` missing `j`.
   */
  EPI_GENERATOR_DELTA = 2,
  /**
   * Degeneracy `hat (n+1) -> hat n` repeating `j`.
   */
  EPI_GENERATOR_SIGMA = 3,
  /**
   * `pi^j : hat (j n) -> hat n`.
   */
  EPI_GENERATOR_PI = 4,
} EpiGenerator;

typedef enum EpiStatus {
  EPI_STATUS_OK = 0,
  EPI_STATUS_NULL_POINTER = 1,
  EPI_STATUS_INVALID_ARGUMENT = 2,
  EPI_STATUS_INVARIANT_VIOLATION = 3,
  EPI_STATUS_PERIOD_MISMATCH = 4,
  EPI_STATUS_EQMOD_MISMATCH = 5,
  EPI_STATUS_UNSUPPORTED_DEGREE = 6,
  EPI_STATUS_BOUND_EXCEEDED = 7,
  EPI_STATUS_PARSE = 8,
  EPI_STATUS_BUFFER_TOO_SMALL = 9,
  EPI_STATUS_PANIC = 10,
} EpiStatus;

/**
 * Canonical morphism of `Arc ⋉ N` or `Arc_a`.
 */
typedef struct EpiMorphism EpiMorphism;

/**
 * Map of finite sets `{0..p-1} -> {0..q-1}`.
 */
typedef struct EpiSetMap EpiSetMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *epi_last_error_message(void);

/**
 * Name of the violated invariant for `EPI_STATUS_INVARIANT_VIOLATION`, or null.
 */
const char *epi_last_error_invariant(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void epi_string_free(char *s);

/**
 * Canonicalizes raw values `vals[0..len]` into a morphism `hat src -> hat dst`.
 *
 * # Safety
 * `vals` must point to `len` readable values; `out` must be writable.
 */
enum EpiStatus epi_morphism_new(int64_t src,
                                int64_t dst,
                                int64_t deg,
                                const int64_t *vals,
                                size_t len,
                                int64_t eqmod,
                                struct EpiMorphism **out);

/**
 * Parses `{"src","dst","deg","vals"[,"eqmod"]}` and canonicalizes it.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum EpiStatus epi_morphism_from_json(const char *json, struct EpiMorphism **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable. Free the result with
 * [`epi_string_free`].
 */
enum EpiStatus epi_morphism_to_json(const struct EpiMorphism *m, char **out);

/**
 * # Safety
 * `m` must be null or a handle from this library, not yet freed.
 */
void epi_morphism_free(struct EpiMorphism *m);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_morphism_clone(const struct EpiMorphism *m, struct EpiMorphism **out);

/**
 * Source period, degree etc. of a live handle; `-1` for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
int64_t epi_morphism_src(const struct EpiMorphism *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
int64_t epi_morphism_dst(const struct EpiMorphism *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
int64_t epi_morphism_deg(const struct EpiMorphism *m);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
int64_t epi_morphism_eqmod(const struct EpiMorphism *m);

/**
 * Copies the canonical values into `buf`. `*len` receives the number of
 * values even when the buffer is too small.
 *
 * # Safety
 * `m` must be a live handle, `buf` must hold `cap` values, `len` writable.
 */
enum EpiStatus epi_morphism_vals(const struct EpiMorphism *m,
                                 int64_t *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_morphism_eval(const struct EpiMorphism *m, int64_t x, int64_t *out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum EpiStatus epi_morphism_equal(const struct EpiMorphism *a,
                                  const struct EpiMorphism *b,
                                  bool *out);

/**
 * `g ∘ f`.
 *
 * # Safety
 * `g`, `f` must be live handles; `out` must be writable.
 */
enum EpiStatus epi_compose(const struct EpiMorphism *g,
                           const struct EpiMorphism *f,
                           struct EpiMorphism **out);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_transpose(const struct EpiMorphism *f, struct EpiMorphism **out);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_star_transpose(const struct EpiMorphism *f, struct EpiMorphism **out);

/**
 * Generator of `Arc_eqmod` (`Pi` only for `eqmod = 1`).
 *
 * # Safety
 * `out` must be writable.
 */
enum EpiStatus epi_generator(enum EpiGenerator kind,
                             int64_t n,
                             int64_t j,
                             int64_t eqmod,
                             struct EpiMorphism **out);

/**
 * # Safety
 * `table` must point to `len == src` readable values; `out` must be writable.
 */
enum EpiStatus epi_set_map_new(int64_t src,
                               int64_t dst,
                               const int64_t *table,
                               size_t len,
                               struct EpiSetMap **out);

/**
 * # Safety
 * `s` must be null or a handle from this library, not yet freed.
 */
void epi_set_map_free(struct EpiSetMap *s);

/**
 * # Safety
 * `s` must be a live handle, `buf` must hold `cap` values, `len` writable.
 */
enum EpiStatus epi_set_map_table(const struct EpiSetMap *s, int64_t *buf, size_t cap, size_t *len);

/**
 * Minimal-degree lift of a set map.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_lift(const struct EpiSetMap *s, struct EpiMorphism **out);

/**
 * Cyclic descent number.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_cdesc(const struct EpiSetMap *s, int64_t *out);

/**
 * Induced map on residues.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum EpiStatus epi_project(const struct EpiMorphism *f, struct EpiSetMap **out);

/**
 * The hyper-sum `x ⌣ y` in the signed chain of rank `n`, as signed integers
 * in increasing order.
 *
 * # Safety
 * `buf` must hold `cap` values; `len` must be writable.
 */
enum EpiStatus epi_hyper_add(int64_t x,
                             int64_t y,
                             int64_t n,
                             int64_t *buf,
                             size_t cap,
                             size_t *len);

/**
 * Library version as a static nul-terminated string.
 */
const char *epi_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* EPICYCLIC_H */
