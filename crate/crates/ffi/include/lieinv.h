#ifndef LIEINV_H
#define LIEINV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LieinvStatus {
  LIEINV_STATUS_OK = 0,
  LIEINV_STATUS_NULL_POINTER = 1,
  LIEINV_STATUS_INVALID_ARGUMENT = 2,
  LIEINV_STATUS_UNSUPPORTED = 3,
  LIEINV_STATUS_BUDGET = 4,
  LIEINV_STATUS_CHECK_FAILED = 5,
  LIEINV_STATUS_PARSE = 6,
  LIEINV_STATUS_IO = 7,
  LIEINV_STATUS_INTERNAL = 8,
} LieinvStatus;

// An algebra in its defining representation with its structure constants.
typedef struct LieinvAlgebra LieinvAlgebra;

// A sparse symmetric or antisymmetric tensor.
typedef struct LieinvTensor LieinvTensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *lieinv_last_error(void);

// Build an algebra from a label such as "su3", "so5", "sp3" or "D4".
//
// # Safety
// `label` must be a NUL-terminated string and `out` a valid pointer.
enum LieinvStatus lieinv_algebra_new(const char *label, struct LieinvAlgebra **out);

// # Safety
// `alg` must come from `lieinv_algebra_new` and not be used afterwards.
void lieinv_algebra_free(struct LieinvAlgebra *alg);

// Dimension of the algebra and size of its defining matrices.
//
// # Safety
// `alg` must be a live handle; `dim` and `matrix_size` valid pointers.
enum LieinvStatus lieinv_algebra_dims(const struct LieinvAlgebra *alg,
                                      size_t *dim,
                                      size_t *matrix_size);

// A tensor by short name: "f", "d", "v", "pf", "delta", "k<m>", "d<m>",
// "v<m>", "omega<q>" or "t<m>". With `pfaffian` nonzero the Pfaffian
// member is used where two cocycles of D_l share an order.
//
// # Safety
// `alg` must be a live handle, `name` NUL-terminated and `out` valid.
enum LieinvStatus lieinv_tensor_new(const struct LieinvAlgebra *alg,
                                    const char *name,
                                    int pfaffian,
                                    struct LieinvTensor **out);

// # Safety
// `t` must come from this library and not be used afterwards.
void lieinv_tensor_free(struct LieinvTensor *t);

// Shape of a tensor: `is_alt` is 1 for antisymmetric, 0 for symmetric.
//
// # Safety
// `t` must be a live handle and the outputs valid pointers.
enum LieinvStatus lieinv_tensor_shape(const struct LieinvTensor *t,
                                      int *is_alt,
                                      size_t *order,
                                      size_t *dim,
                                      size_t *nnz);

// The k-th stored entry in canonical order: `order` 1-based indices are
// written to `indices` and the value to `value`.
//
// # Safety
// `indices` must have room for `order` values.
enum LieinvStatus lieinv_tensor_entry(const struct LieinvTensor *t,
                                      size_t k,
                                      uint32_t *indices,
                                      double *value);

// Value at arbitrary 1-based indices (any order; antisymmetric tensors
// carry the permutation sign).
//
// # Safety
// `indices` must point to `len` values.
enum LieinvStatus lieinv_tensor_get(const struct LieinvTensor *t,
                                    const uint32_t *indices,
                                    size_t len,
                                    double *value);

// K = t.t for a symmetric tensor (all index tuples summed).
//
// # Safety
// `t` must be a live handle and `out` valid.
enum LieinvStatus lieinv_tensor_norm_sq(const struct LieinvTensor *t, double *out);

// t-tensor of a cocycle handle, contracted with the structure constants of
// `alg`.
//
// # Safety
// Both handles must be live and `out` valid.
enum LieinvStatus lieinv_t_tensor(const struct LieinvAlgebra *alg,
                                  const struct LieinvTensor *cocycle,
                                  struct LieinvTensor **out);

// Serialize in the text format (`exact` nonzero adds radical forms).
//
// # Safety
// `t` must be live; `*out` receives a string to free with
// `lieinv_string_free`.
enum LieinvStatus lieinv_tensor_export(const struct LieinvTensor *t, int exact, char **out);

// Parse the text format. Parse errors report the offending line.
//
// # Safety
// `text` must be NUL-terminated and `out` valid.
enum LieinvStatus lieinv_tensor_import(const char *text, struct LieinvTensor **out);

// Run every check for the algebra. `failed` receives the number of failed
// checks and `report_json`, if not null, a JSON array of reports. Returns
// `CheckFailed` when any check fails.
//
// # Safety
// `alg` must be live; `failed` valid; `report_json` null or valid.
enum LieinvStatus lieinv_verify(const struct LieinvAlgebra *alg,
                                double tolerance,
                                uint64_t seed,
                                size_t *failed,
                                char **report_json);

// # Safety
// `s` must come from this library and not be used afterwards.
void lieinv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEINV_H */
