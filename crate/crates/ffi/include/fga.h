#ifndef FGA_H
#define FGA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  FGA_STATUS_OK = 0,
  FGA_STATUS_NULL_POINTER = 1,
  FGA_STATUS_INVALID_UTF8 = 2,
  FGA_STATUS_PARSE = 3,
  FGA_STATUS_INVALID_FIELD = 4,
  FGA_STATUS_MISMATCH = 5,
  FGA_STATUS_NOT_MEMBER = 6,
  FGA_STATUS_NOT_CONTAINED = 7,
  FGA_STATUS_ZERO_OPERAND = 8,
  FGA_STATUS_BUDGET_EXCEEDED = 9,
  FGA_STATUS_UNSUPPORTED = 10,
  FGA_STATUS_INVALID_ARGUMENT = 11,
  FGA_STATUS_PANIC = 12,
} FgaStatus;

/**
 * An element of K[F].
 */
typedef struct FgaElement FgaElement;

/**
 * A finitely generated right submodule of K[F]^k.
 */
typedef struct FgaModule FgaModule;

/**
 * A finitely generated subgroup of F.
 */
typedef struct FgaSubgroup FgaSubgroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *fga_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void fga_string_free(char *s);

/**
 * Parses an element of K[F] over `field` ("gf:<p>" or "q").
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
FgaStatus fga_element_parse(const char *src, const char *field_spec, size_t rank, FgaElement **out);

/**
 * Canonical text of an element.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
FgaStatus fga_element_to_string(const FgaElement *e, char **out);

/**
 * # Safety
 * `e` must come from this library or be null.
 */
void fga_element_free(FgaElement *e);

/**
 * Parses a submodule of K[F]^k; generators are separated by `;`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
FgaStatus fga_module_parse(const char *src,
                           const char *field_spec,
                           size_t rank,
                           size_t k,
                           FgaModule **out);

/**
 * The right ideal generated by one element.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
FgaStatus fga_module_from_element(const FgaElement *e, FgaModule **out);

/**
 * # Safety
 * `m` must come from this library or be null.
 */
void fga_module_free(FgaModule *m);

/**
 * Canonical basis, one generator per line.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
FgaStatus fga_module_basis_string(const FgaModule *m, char **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
FgaStatus fga_module_rank(const FgaModule *m, size_t *out);

/**
 * Whether the vector `src` lies in `m`.
 *
 * # Safety
 * `m` must be a live handle; `src` NUL-terminated; `out` writable.
 */
FgaStatus fga_module_member(const FgaModule *m, const char *src, bool *out);

/**
 * Whether `sub` is contained in `sup`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_contains(const FgaModule *sup, const FgaModule *sub, bool *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_equal(const FgaModule *a, const FgaModule *b, bool *out);

/**
 * Algebraic closure of `m` in `n`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_closure(const FgaModule *m, const FgaModule *n, FgaModule **out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_is_free_factor(const FgaModule *m, const FgaModule *n, bool *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_is_algebraic(const FgaModule *m, const FgaModule *n, bool *out);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_module_intersection(const FgaModule *m, const FgaModule *n, FgaModule **out);

/**
 * ι-image of the dual of `m` with respect to the matrix `q_src`
 * (rows separated by `;`, entries by `,`).
 *
 * # Safety
 * `m` must be a live handle; `q_src` NUL-terminated; `out` writable.
 */
FgaStatus fga_module_q_dual(const char *q_src, const FgaModule *m, FgaModule **out);

/**
 * Word measure φ_{I,J}(N) as the string "a/b".
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
FgaStatus fga_phi_exact(const FgaModule *i,
                        const FgaModule *j,
                        size_t n,
                        uint64_t budget,
                        char **out);

/**
 * Parses a subgroup of F from words separated by `,` or `;`.
 *
 * # Safety
 * `src` NUL-terminated; `out` writable.
 */
FgaStatus fga_subgroup_parse(const char *src, size_t rank, FgaSubgroup **out);

/**
 * The whole free group of the given rank.
 *
 * # Safety
 * `out` writable.
 */
FgaStatus fga_subgroup_whole(size_t rank, FgaSubgroup **out);

/**
 * # Safety
 * `h` must come from this library or be null.
 */
void fga_subgroup_free(FgaSubgroup *h);

/**
 * Text of a subgroup as `<g1, g2>`.
 *
 * # Safety
 * `h` live; `out` writable.
 */
FgaStatus fga_subgroup_to_string(const FgaSubgroup *h, char **out);

/**
 * Algebraic closure of `h` in `k`.
 *
 * # Safety
 * Handles live; `out` writable.
 */
FgaStatus fga_group_closure(const FgaSubgroup *h, const FgaSubgroup *k, FgaSubgroup **out);

/**
 * Whether the word `w` is primitive in `k`.
 *
 * # Safety
 * `w` NUL-terminated; `k` live; `out` writable.
 */
FgaStatus fga_word_is_primitive(const char *w, const FgaSubgroup *k, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FGA_H */
