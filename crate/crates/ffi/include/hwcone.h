#ifndef HWCONE_H
#define HWCONE_H

/* Generated by cbindgen. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum HwcStatus {
  HWC_STATUS_OK = 0,
  HWC_STATUS_NULL_POINTER = 1,
  HWC_STATUS_INVALID_UTF8 = 2,
  HWC_STATUS_INVALID_ARGUMENT = 3,
  HWC_STATUS_VERIFICATION_FAILED = 4,
  HWC_STATUS_CONDITION_MISMATCH = 5,
  HWC_STATUS_INTERNAL = 6,
} HwcStatus;

typedef struct HwcPresentation HwcPresentation;

typedef struct HwcReport HwcReport;

typedef struct HwcVerification HwcVerification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version string of the library; static, do not free.
const char *hwc_version(void);

// Message for the last failed call on this thread, or NULL. Valid until the
// next `hwc_*` call on the same thread; do not free.
const char *hwc_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void hwc_string_free(char *s);

// Classify the weight with labels `labels` (comma separated, `:` between
// components of a product) for the Cartan type `cartan_type` (`"D3"`,
// `"A2xA1"`).
//
// # Safety
// `cartan_type` and `labels` must be NUL-terminated strings; `out` must be
// a valid pointer. On success `*out` holds a handle for `hwc_report_free`.
enum HwcStatus hwc_classify(const char *cartan_type, const char *labels, struct HwcReport **out);

// # Safety
// `report` must be NULL or a handle from `hwc_classify`, not yet freed.
void hwc_report_free(struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
size_t hwc_report_n(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
size_t hwc_report_u_minus_dim(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
bool hwc_report_condition_d(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
bool hwc_report_singular(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
bool hwc_report_ufd(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
bool hwc_report_negative_answer(const struct HwcReport *report);

// `dim E(w)` as a decimal string.
//
// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
char *hwc_report_dim_e(const struct HwcReport *report);

// Number of independent quadrics through the cone, as a decimal string.
//
// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
char *hwc_report_quadric_count(const struct HwcReport *report);

// # Safety
// `report` must be NULL or a live handle from `hwc_classify`.
char *hwc_report_to_json(const struct HwcReport *report);

// Dimension of the irreducible representation as a decimal string, or NULL
// on error.
//
// # Safety
// Both arguments must be NUL-terminated strings.
char *hwc_irrep_dimension(const char *cartan_type, const char *labels);

// Build the explicit presentation of family `family` (`'B'` or `'D'`) and
// rank `ell`.
//
// # Safety
// `out` must be a valid pointer.
enum HwcStatus hwc_presentation_build(char family, size_t ell, struct HwcPresentation **out);

// Parse a presentation record.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum HwcStatus hwc_presentation_from_json(const char *json, struct HwcPresentation **out);

// # Safety
// `p` must be NULL or a live presentation handle.
char *hwc_presentation_to_json(const struct HwcPresentation *p);

// Number of polynomial variables (`n + 1`).
//
// # Safety
// `p` must be NULL or a live presentation handle.
size_t hwc_presentation_variables(const struct HwcPresentation *p);

// # Safety
// `p` must be NULL or a live presentation handle.
size_t hwc_presentation_derivation_count(const struct HwcPresentation *p);

// # Safety
// `p` must be NULL or a handle not yet freed.
void hwc_presentation_free(struct HwcPresentation *p);

// Run the verification checks. `*out` is set whenever the checks ran, so a
// `VerificationFailed` result can still be inspected.
//
// # Safety
// `p` must be a live presentation handle; `out` must be a valid pointer.
enum HwcStatus hwc_verify(const struct HwcPresentation *p, struct HwcVerification **out);

// # Safety
// `v` must be NULL or a live verification handle.
bool hwc_verification_all_passed(const struct HwcVerification *v);

// # Safety
// `v` must be NULL or a live verification handle.
char *hwc_verification_to_json(const struct HwcVerification *v);

// # Safety
// `v` must be NULL or a handle not yet freed.
void hwc_verification_free(struct HwcVerification *v);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HWCONE_H */
