#ifndef HOPFCYC_H
#define HOPFCYC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_ARGUMENT = 1,
  HC_STATUS_INVALID_UTF8 = 2,
  HC_STATUS_PARSE = 3,
  HC_STATUS_REFERENCE = 4,
  HC_STATUS_DIMENSION_MISMATCH = 5,
  HC_STATUS_CHAR_NOT_ZERO = 6,
  HC_STATUS_CERTIFICATE_FAILURE = 7,
  HC_STATUS_BUFFER_TOO_SMALL = 8,
  HC_STATUS_ENGINE = 9,
  HC_STATUS_PANIC = 10,
} HcStatus;

typedef enum {
  HC_THEORY_HOCHSCHILD = 0,
  HC_THEORY_CYCLIC = 1,
} HcTheory;

/**
 * A gallery Hopf algebroid.
 */
typedef struct HcAlgebroid HcAlgebroid;

/**
 * The report of one scenario run.
 */
typedef struct HcReport HcReport;

/**
 * A parsed scenario document.
 */
typedef struct HcScenario HcScenario;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; valid until the next call.
 */
const char *hc_last_error_message(void);

/**
 * # Safety
 * `json` is a NUL-terminated string and `out` a valid pointer.
 */
HcStatus hc_scenario_parse(const char *json, HcScenario **out);

/**
 * # Safety
 * `s` comes from `hc_scenario_parse`; `count` is a valid pointer.
 */
HcStatus hc_scenario_task_count(const HcScenario *s, size_t *count);

/**
 * Runs every task. A negative `max_degree` keeps the tasks' own values.
 *
 * # Safety
 * `s` comes from `hc_scenario_parse`; `out` is a valid pointer.
 */
HcStatus hc_scenario_run(const HcScenario *s, int32_t max_degree, bool parallel, HcReport **out);

/**
 * # Safety
 * `s` is null or comes from `hc_scenario_parse`, and is not used afterwards.
 */
void hc_scenario_free(HcScenario *s);

/**
 * The report as JSON; free the string with `hc_string_free`.
 *
 * # Safety
 * `r` comes from `hc_scenario_run`; `out` is a valid pointer.
 */
HcStatus hc_report_json(const HcReport *r, char **out);

/**
 * 0 all pass, 1 a check or certificate failed, 2 an input error; -1 for a null handle.
 *
 * # Safety
 * `r` is null or comes from `hc_scenario_run`.
 */
int32_t hc_report_exit_code(const HcReport *r);

/**
 * # Safety
 * `r` is null or comes from `hc_scenario_run`, and is not used afterwards.
 */
void hc_report_free(HcReport *r);

/**
 * # Safety
 * `s` is null or a string returned by this library, not freed before.
 */
void hc_string_free(char *s);

/**
 * A gallery algebroid by name over ℚ (`characteristic` 0) or 𝔽ₚ.
 *
 * # Safety
 * `name` is a NUL-terminated string and `out` a valid pointer.
 */
HcStatus hc_algebroid_gallery(const char *name, uint64_t characteristic, HcAlgebroid **out);

/**
 * `dim U` and `dim A`.
 *
 * # Safety
 * `h` comes from `hc_algebroid_gallery`; the outputs are valid pointers.
 */
HcStatus hc_algebroid_dims(const HcAlgebroid *h, size_t *du, size_t *da);

/**
 * Runs the Hopf algebroid checker; `passed` receives the verdict.
 *
 * # Safety
 * `h` comes from `hc_algebroid_gallery`; `passed` is a valid pointer.
 */
HcStatus hc_algebroid_validate(const HcAlgebroid *h, bool *passed);

/**
 * Homology dimensions in degrees `0..=max_degree` of `C_•` (or `C^•` when
 * `cocyclic`), written to `dims[0..cap]`; `len` receives the count needed.
 *
 * # Safety
 * `h` comes from `hc_algebroid_gallery`; `dims` has room for `cap` entries; `len` is valid.
 */
HcStatus hc_algebroid_homology(const HcAlgebroid *h,
                               HcTheory theory,
                               bool cocyclic,
                               size_t max_degree,
                               size_t *dims,
                               size_t cap,
                               size_t *len);

/**
 * # Safety
 * `h` is null or comes from `hc_algebroid_gallery`, and is not used afterwards.
 */
void hc_algebroid_free(HcAlgebroid *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFCYC_H */
