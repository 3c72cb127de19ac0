#ifndef SCHURMULT_H
#define SCHURMULT_H

/*
 * Schur multipliers of class-2 p-groups with homocyclic abelianization.
 *
 * Every entry point returns an sm_status. On failure the message for the
 * calling thread is available from sm_last_error(). Strings returned through
 * char** out-parameters are owned by the caller and released with
 * sm_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SM_API __declspec(dllexport)
#else
#define SM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_E_PARSE = 1,
  SM_E_INVALID = 2,
  SM_E_PARAM = 3,
  SM_E_NOT_COVERED = 4,
  SM_E_BOUND = 5,
  SM_E_DIMENSION = 6,
  SM_E_CONSISTENCY = 7,
  SM_E_INTERNAL = 8,
  /* Null pointer or out-of-range argument at the API boundary. */
  SM_E_ARG = 9
} sm_status;

typedef struct sm_presentation sm_presentation;
typedef struct sm_report sm_report;

/* "E_PARSE" etc.; "OK" for SM_OK. */
SM_API const char* sm_status_name(sm_status status);
/* Process exit code for a status: 0, 1, or 2 for consistency and internal failures. */
SM_API int sm_exit_code(sm_status status);
SM_API const char* sm_last_error(void);
SM_API void sm_string_free(char* s);

SM_API sm_status sm_presentation_parse(const char* text, sm_presentation** out);
SM_API sm_status sm_presentation_serialize(const sm_presentation* P, char** out);
SM_API void sm_presentation_free(sm_presentation* P);

#define SM_SCHUR_WITNESS 1u
#define SM_SCHUR_CHECK_ORDER 2u

/* Never fails on an invalid presentation: the report lists the violations
 * and carries exit status 1. */
SM_API sm_status sm_validate(const sm_presentation* P, sm_report** out);
SM_API sm_status sm_order(const sm_presentation* P, sm_report** out);
SM_API sm_status sm_schur(const sm_presentation* P, unsigned flags, sm_report** out);
/* subgroup: NULL, or "c1,...,ck;c1,...,ck" in W coordinates. */
SM_API sm_status sm_epicenter(const sm_presentation* P, const char* subgroup, sm_report** out);
SM_API sm_status sm_decompose(const sm_presentation* P, sm_report** out);
SM_API sm_status sm_oracle(const sm_presentation* P, uint64_t max_order, sm_report** out);

typedef struct sm_family_params {
  /* "gk", "gkgap", "gjk", "extraspecial" or "table". */
  const char* family;
  long p;
  int s;
  int d;
  int k;
  int j;
  const int* t;
  size_t t_len;
  int r;
  /* Flattened (x1, x2) pairs, one pair per extraspecial factor. */
  const long* powers;
  size_t powers_len;
  int row;
  /* Negative when there is no direct cyclic factor. */
  int cyclic_t;
} sm_family_params;

/* Zero-initialized parameters with p = 3, s = 1, d = 2, j = 1, r = 1,
 * row = 1 and cyclic_t = -1. */
SM_API sm_family_params sm_family_defaults(void);
SM_API sm_status sm_family(const sm_family_params* params, sm_report** out);

typedef struct sm_target {
  long p;
  int s;
  int n;
  const int* m;
  size_t m_len;
} sm_target;

SM_API sm_status sm_realize(const sm_target* target, sm_report** out);
/* Target Z_{p^n1} x Z_{p^n2} x Z_{p^n3}. */
SM_API sm_status sm_realize_triple(long p, int n1, int n2, int n3, sm_report** out);

SM_API sm_status sm_report_text(const sm_report* r, char** out);
/* Single-line JSON with "p", "factors", "trace", "details", "input". */
SM_API sm_status sm_report_json(const sm_report* r, char** out);
/* Presentation text attached to family and realize reports;
 * SM_E_PARAM when the report has none. */
SM_API sm_status sm_report_presentation(const sm_report* r, char** out);
SM_API long sm_report_prime(const sm_report* r);
SM_API size_t sm_report_factor_count(const sm_report* r);
/* log_p of the i-th invariant factor, descending; -1 when out of range. */
SM_API int sm_report_factor(const sm_report* r, size_t i);
SM_API int sm_report_exit_status(const sm_report* r);
SM_API void sm_report_free(sm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SCHURMULT_H */
