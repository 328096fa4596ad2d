/* C interface to the Hermitian invariant library.
 *
 * Handles are opaque. Every fallible call returns an hq_status; on failure
 * hq_last_error() holds a message for the calling thread. Strings returned
 * through handles stay valid until the handle is freed.
 */
#ifndef HERMITIAN_HQ_H
#define HERMITIAN_HQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HQ_API __declspec(dllexport)
#else
#define HQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hq_status {
  HQ_OK = 0,
  HQ_NON_PRIME_P = 1,
  HQ_DEGREE_TOO_LARGE = 2,
  HQ_NO_IRREDUCIBLE_FOUND = 3,
  HQ_DIVISION_BY_ZERO = 4,
  HQ_FIELD_MISMATCH = 5,
  HQ_FIELD_TOO_SMALL = 6,
  HQ_BAD_SUBFIELD_DEGREE = 7,
  HQ_ZERO_POLYNOMIAL = 8,
  HQ_DEGREE_ZERO_IN_VAR = 9,
  HQ_ZERO_DENOMINATOR = 10,
  HQ_NOT_ON_CURVE = 11,
  HQ_SCALE_EXCEEDED = 12,
  HQ_BAD_PARAMETERS = 13,
  HQ_ZERO_LAMBDA = 14,
  HQ_SINGULAR_MATRIX = 15,
  HQ_ENTRIES_NOT_IN_FQ2 = 16,
  HQ_DEGENERATE_ELIMINANT = 17,
  HQ_INVALID_ARGUMENT = 18,
  HQ_INTERNAL = 19
} hq_status;

/* Outcome kinds of a fraction evaluated at a point. */
typedef enum hq_outcome { HQ_VALUE = 0, HQ_POLE = 1, HQ_INDETERMINATE = 2 } hq_outcome;

typedef struct hq_field hq_field;
typedef struct hq_report hq_report;

HQ_API const char* hq_version(void);
HQ_API const char* hq_status_name(hq_status status);
HQ_API const char* hq_last_error(void);

/* F_{p^m} with q = p^h and the least irreducible modulus. */
HQ_API hq_status hq_field_create(uint32_t p, uint32_t h, uint32_t m, hq_field** out);
HQ_API void hq_field_free(hq_field* field);
/* {p, h, m, modulus} as JSON. */
HQ_API const char* hq_field_json(const hq_field* field);
HQ_API uint64_t hq_field_q(const hq_field* field);

/* Elements are passed as indices: the base-p digits of the index are the
 * coefficients of the residue, lowest degree first. */
HQ_API hq_status hq_add(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out);
HQ_API hq_status hq_mul(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out);
HQ_API hq_status hq_div(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out);
/* Exponent given as high and low 64-bit halves. */
HQ_API hq_status hq_pow(const hq_field* field, uint64_t a, uint64_t e_hi, uint64_t e_lo, uint64_t* out);
HQ_API hq_status hq_frob_q(const hq_field* field, uint64_t a, uint64_t k, uint64_t* out);

HQ_API hq_status hq_on_curve(const hq_field* field, uint64_t x, uint64_t y, int* out);
/* t at the affine point (x, y); *value is set only when *kind is HQ_VALUE. */
HQ_API hq_status hq_eval_t(const hq_field* field, uint64_t x, uint64_t y, hq_outcome* kind, uint64_t* value);
HQ_API hq_status hq_eval_t_x(const hq_field* field, uint64_t x, hq_outcome* kind, uint64_t* value);
HQ_API hq_status hq_eval_t_y(const hq_field* field, uint64_t y, hq_outcome* kind, uint64_t* value);

/* Runs a subcommand with a JSON configuration (NULL or "" for defaults). */
HQ_API hq_status hq_run(const char* subcommand, const char* config_json, hq_report** out);
HQ_API void hq_report_free(hq_report* report);
HQ_API int hq_report_pass(const hq_report* report);
/* The run document, pretty-printed with the given indent (negative: compact). */
HQ_API const char* hq_report_json(hq_report* report, int indent);

#ifdef __cplusplus
}
#endif

#endif
