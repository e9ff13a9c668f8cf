#ifndef MODCOHOM_H
#define MODCOHOM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

enum ModcohomStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  MODCOHOM_STATUS_OK = 0,
  MODCOHOM_STATUS_NULL_POINTER = 1,
  MODCOHOM_STATUS_INVALID_ARGUMENT = 2,
  MODCOHOM_STATUS_INTERNAL_INCONSISTENCY = 3,
  MODCOHOM_STATUS_OUT_OF_RANGE = 4,
  MODCOHOM_STATUS_COMPUTATION_FAILED = 5,
  MODCOHOM_STATUS_PANIC = 6,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum ModcohomStatus ModcohomStatus;
#else
typedef int32_t ModcohomStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/*
 Computed cohomology of one module.
 */
typedef struct ModcohomReport ModcohomReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Computes `H^*(algebra, module)` over `F_p` (`algebra` is "sl3" or "gl3",
 `module` a selector such as "simple:3,1" or "trivial"). On success
 `*out` owns a new report.
 */
ModcohomStatus modcohom_compute(uint32_t p,
                                const char *algebra,
                                const char *module,
                                struct ModcohomReport **out);

void modcohom_report_free(struct ModcohomReport *report);

/*
 Number of degrees, `dim g + 1`.
 */
ModcohomStatus modcohom_report_num_degrees(const struct ModcohomReport *report, size_t *out);

ModcohomStatus modcohom_report_dim(const struct ModcohomReport *report, size_t degree, size_t *out);

ModcohomStatus modcohom_report_num_weights(const struct ModcohomReport *report,
                                           size_t degree,
                                           size_t *out);

/*
 The `index`-th weight of `H^degree` in ascending order, with its
 multiplicity.
 */
ModcohomStatus modcohom_report_weight_at(const struct ModcohomReport *report,
                                         size_t degree,
                                         size_t index,
                                         int64_t *a,
                                         int64_t *b,
                                         size_t *mult);

ModcohomStatus modcohom_report_num_factors(const struct ModcohomReport *report,
                                           size_t degree,
                                           size_t *out);

/*
 Composition factor `mult * L(a,b)^(twist)` of `H^degree`.
 */
ModcohomStatus modcohom_report_factor_at(const struct ModcohomReport *report,
                                         size_t degree,
                                         size_t index,
                                         int64_t *a,
                                         int64_t *b,
                                         uint32_t *twist,
                                         size_t *mult);

/*
 The report as JSON; free with `modcohom_string_free`. Null on failure.
 */
char *modcohom_report_to_json(const struct ModcohomReport *report);

void modcohom_string_free(char *s);

/*
 Message for the last failure on this thread, or null. Valid until the
 next call into this library from the same thread.
 */
const char *modcohom_last_error(void);

/*
 Whether `(r1,s1)` and `(r2,s2)` are linked for `p`: 1 if so, 0 if not.
 */
int32_t modcohom_is_linked(int64_t r1, int64_t s1, int64_t r2, int64_t s2, uint32_t p);

const char *modcohom_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MODCOHOM_H */
