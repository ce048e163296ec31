#ifndef BRAIDED_THOMPSON_H
#define BRAIDED_THOMPSON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BtStatus {
  BT_STATUS_OK = 0,
  BT_STATUS_NULL_POINTER = 1,
  BT_STATUS_INVALID_UTF8 = 2,
  // Malformed JSON or a value violating its schema.
  BT_STATUS_PARSE = 3,
  // Well-formed input outside an operation's domain.
  BT_STATUS_DOMAIN = 4,
  BT_STATUS_PANIC = 5,
} BtStatus;

// A braid word on a fixed number of strands.
typedef struct BtBraid BtBraid;

// An element of braided V, kept in reduced form.
typedef struct BtElement BtElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failing call on this thread. The pointer stays
// valid until the next failure on the same thread.
const char *bt_last_error(void);

// # Safety
// `s` must come from this library and not have been freed.
void bt_string_free(char *s);

// # Safety
// `letters` must point to `len` readable values (or be null with `len = 0`);
// `out` must be writable.
enum BtStatus bt_braid_new(size_t strands,
                           const int32_t *letters,
                           size_t len,
                           struct BtBraid **out);

// Parses `{"strands": n, "letters": [...]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum BtStatus bt_braid_from_json(const char *json, struct BtBraid **out);

// # Safety
// `b` must be a live handle; `out` must be writable.
enum BtStatus bt_braid_to_json(const struct BtBraid *b, char **out);

// `a` followed by `b`, read bottom to top.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum BtStatus bt_braid_compose(const struct BtBraid *a,
                               const struct BtBraid *b,
                               struct BtBraid **out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum BtStatus bt_braid_equals(const struct BtBraid *a, const struct BtBraid *b, bool *out);

// The winding number of strands `i < j` of a pure braid.
//
// # Safety
// `b` must be a live handle; `out` must be writable.
enum BtStatus bt_braid_winding(const struct BtBraid *b, size_t i, size_t j, int64_t *out);

// # Safety
// `b` must be null or a live handle, not used afterwards.
void bt_braid_free(struct BtBraid *b);

// Parses `{"neg": Forest, "braid": Braid, "pos": Forest}` with single
// trees and reduces it.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum BtStatus bt_element_from_json(const char *json, struct BtElement **out);

// The generator `x_n` of F.
//
// # Safety
// `out` must be writable.
enum BtStatus bt_element_x(size_t n, struct BtElement **out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum BtStatus bt_element_to_json(const struct BtElement *g, char **out);

// # Safety
// `g` and `h` must be live handles; `out` must be writable.
enum BtStatus bt_element_multiply(const struct BtElement *g,
                                  const struct BtElement *h,
                                  struct BtElement **out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum BtStatus bt_element_invert(const struct BtElement *g, struct BtElement **out);

// # Safety
// `g` and `h` must be live handles; `out` must be writable.
enum BtStatus bt_element_equals(const struct BtElement *g, const struct BtElement *h, bool *out);

// Membership in the subgroup of elements with `w`-deferred trees; `w` is
// a string of `0`s and `1`s.
//
// # Safety
// `g` must be a live handle, `w` a NUL-terminated string, `out` writable.
enum BtStatus bt_element_in_deferred(const struct BtElement *g, const char *w, bool *out);

// The abelian image `(φ₀, φ₁, ω₀, ω₁)` of a pure element.
//
// # Safety
// `g` must be a live handle; `out` must point to four writable values.
enum BtStatus bt_element_abelian_image(const struct BtElement *g, int64_t *out);

// # Safety
// `g` must be null or a live handle, not used afterwards.
void bt_element_free(struct BtElement *g);

// Whether the class of `aφ₀ + bφ₁ + cω₀ + dω₁` lies in `Σ^m`; the
// coefficients are rationals such as `"3/2"`.
//
// # Safety
// The coefficient pointers must be NUL-terminated strings; `out` writable.
enum BtStatus bt_sigma_membership(const char *a,
                                  const char *b,
                                  const char *c,
                                  const char *d,
                                  uint32_t m,
                                  bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDED_THOMPSON_H */
