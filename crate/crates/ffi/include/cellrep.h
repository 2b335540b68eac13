#ifndef CELLREP_H
#define CELLREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * `side` argument values.
 */
#define CELLREP_SIDE_LEFT 0

#define CELLREP_SIDE_RIGHT 1

/**
 * `tier` argument values.
 */
#define CELLREP_TIER_COMBINATORIAL 0

#define CELLREP_TIER_PROJECTIVE_FUNCTOR 1

typedef enum CellrepStatus {
  CellrepStatus_Ok = 0,
  CellrepStatus_NullPointer = 1,
  CellrepStatus_InvalidArgument = 2,
  CellrepStatus_Internal = 3,
} CellrepStatus;

/**
 * Opaque star algebra handle.
 */
typedef struct CellrepAlgebra CellrepAlgebra;

/**
 * Opaque classification result handle.
 */
typedef struct CellrepReport CellrepReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *cellrep_last_error(void);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum CellrepStatus cellrep_algebra_new_star(int64_t n, struct CellrepAlgebra **out);

/**
 * # Safety
 * `a` must be NULL or a live handle; `out` NULL or valid for writes.
 */
enum CellrepStatus cellrep_algebra_dimension(const struct CellrepAlgebra *a, uintptr_t *out);

/**
 * Number of basis paths from vertex `i` to vertex `j`.
 *
 * # Safety
 * `a` must be NULL or a live handle; `out` NULL or valid for writes.
 */
enum CellrepStatus cellrep_algebra_hom_dim(const struct CellrepAlgebra *a,
                                           uintptr_t i,
                                           uintptr_t j,
                                           uintptr_t *out);

/**
 * # Safety
 * `a` must be NULL or a handle from `cellrep_algebra_new_star` not yet freed.
 */
void cellrep_algebra_free(struct CellrepAlgebra *a);

/**
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum CellrepStatus cellrep_classify(int64_t n,
                                    int32_t side,
                                    int32_t tier,
                                    struct CellrepReport **out);

/**
 * # Safety
 * `r` must be NULL or a live handle; `out` NULL or valid for writes.
 */
enum CellrepStatus cellrep_report_count(const struct CellrepReport *r, uintptr_t *out);

/**
 * Writes the set partition count, or -1 when the report carries none.
 *
 * # Safety
 * `r` must be NULL or a live handle; `out` NULL or valid for writes.
 */
enum CellrepStatus cellrep_report_oracle_count(const struct CellrepReport *r, int64_t *out);

/**
 * # Safety
 * `r` must be NULL or a live handle; `out` NULL or valid for writes. The
 * string must be released with `cellrep_string_free`.
 */
enum CellrepStatus cellrep_report_to_json(const struct CellrepReport *r, char **out);

/**
 * # Safety
 * `r` must be NULL or a handle from `cellrep_classify` not yet freed.
 */
void cellrep_report_free(struct CellrepReport *r);

/**
 * JSON of the cell 2-representation for the given side.
 *
 * # Safety
 * `out` must be NULL or valid for writes. The string must be released with
 * `cellrep_string_free`.
 */
enum CellrepStatus cellrep_cell_rep_json(int64_t n, int32_t side, char **out);

/**
 * Bell number `B(n)`, computed by enumeration.
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum CellrepStatus cellrep_count_set_partitions(uintptr_t n, uint64_t *out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void cellrep_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CELLREP_H */
