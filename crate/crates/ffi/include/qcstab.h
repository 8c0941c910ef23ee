#ifndef QCSTAB_H
#define QCSTAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QcstabForm {
  QCSTAB_FORM_SYMPLECTIC = 0,
  QCSTAB_FORM_EUCLIDEAN = 1,
  QCSTAB_FORM_HERMITIAN = 2,
} QcstabForm;

typedef enum QcstabStatus {
  QCSTAB_STATUS_OK = 0,
  QCSTAB_STATUS_NULL_POINTER = 1,
  QCSTAB_STATUS_INVALID_UTF8 = 2,
  QCSTAB_STATUS_PARSE = 3,
  /**
   * Bad characteristic, degree or modulus, or a field too large.
   */
  QCSTAB_STATUS_INVALID_FIELD = 4,
  QCSTAB_STATUS_NOT_COPRIME = 5,
  QCSTAB_STATUS_NOT_A_DIVISOR = 6,
  QCSTAB_STATUS_NOT_MONIC = 7,
  QCSTAB_STATUS_DEGREE_TOO_LARGE = 8,
  QCSTAB_STATUS_WRONG_FIELD_FOR_HERMITIAN = 9,
  QCSTAB_STATUS_INADMISSIBLE_H = 10,
  QCSTAB_STATUS_NOT_SELF_ORTHOGONAL = 11,
  QCSTAB_STATUS_BUDGET_EXCEEDED = 12,
  QCSTAB_STATUS_PRECONDITION_VIOLATED = 13,
  /**
   * Any other library error.
   */
  QCSTAB_STATUS_OTHER = 14,
  /**
   * A panic was caught at the boundary.
   */
  QCSTAB_STATUS_INTERNAL = 15,
} QcstabStatus;

/**
 * Opaque handle to a validated quasi-cyclic code.
 */
typedef struct QcstabCode QcstabCode;

/**
 * Stabilizer code parameters [[n, k, d]]_q.
 */
typedef struct QcstabParams {
  size_t n;
  size_t k;
  uint64_t q;
  /**
   * Certified lower bound on d; meaningful only when `d_known` is set.
   * UINT64_MAX stands for an infinite distance.
   */
  uint64_t d_lower;
  bool d_known;
} QcstabParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *qcstab_last_error_message(void);

/**
 * Builds Q(f, g, h) over GF(p^r) with polynomials in the text syntax of
 * the command line, e.g. "x^3 + x + 1" or "z^5*x + 1".
 *
 * # Safety
 * `f`, `g`, `h` must be NUL-terminated strings; `out` must be writable.
 */
enum QcstabStatus qcstab_code_new(uint64_t p,
                                  uint32_t r,
                                  size_t n,
                                  const char *f,
                                  const char *g,
                                  const char *h,
                                  struct QcstabCode **out);

/**
 * Releases a code; NULL is ignored.
 *
 * # Safety
 * `code` must come from [`qcstab_code_new`] and not be used afterwards.
 */
void qcstab_code_free(struct QcstabCode *code);

/**
 * Dimension 2n - deg f - deg g of the classical code.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum QcstabStatus qcstab_code_dimension(const struct QcstabCode *code, size_t *out);

/**
 * Whether the divisibility condition for self-orthogonality holds.
 *
 * # Safety
 * `code` must be a live handle and `holds` writable.
 */
enum QcstabStatus qcstab_code_check(const struct QcstabCode *code,
                                    enum QcstabForm form,
                                    bool *holds);

/**
 * Whether the dual lies inside the code, decided by linear algebra.
 *
 * # Safety
 * `code` must be a live handle and `holds` writable.
 */
enum QcstabStatus qcstab_code_verify(const struct QcstabCode *code,
                                     enum QcstabForm form,
                                     bool *holds);

/**
 * Stabilizer parameters under the form. Fails with NotSelfOrthogonal
 * unless both the condition and the rank check pass.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum QcstabStatus qcstab_code_params(const struct QcstabCode *code,
                                     enum QcstabForm form,
                                     struct QcstabParams *out);

/**
 * Full JSON report, the same document `qcstab check` prints. A budget of
 * 0 selects the default enumeration budget.
 *
 * # Safety
 * `code` must be a live handle and `out` writable; free the string with
 * [`qcstab_string_free`].
 */
enum QcstabStatus qcstab_code_report_json(const struct QcstabCode *code,
                                          enum QcstabForm form,
                                          uint64_t budget,
                                          char **out);

/**
 * The q-cyclotomic cosets modulo n, q = p^r, as a JSON array of arrays.
 *
 * # Safety
 * `out` must be writable; free the string with [`qcstab_string_free`].
 */
enum QcstabStatus qcstab_cosets_json(size_t n, uint64_t p, uint32_t r, char **out);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void qcstab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCSTAB_H */
