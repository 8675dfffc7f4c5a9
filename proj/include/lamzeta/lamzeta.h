#ifndef LAMZETA_LAMZETA_H
#define LAMZETA_LAMZETA_H

/*
 * C interface to the lamzeta library: generalized Lambert series
 * sum n^r / (exp(n^s x) - 1) and two-sided numerical checks of the
 * transformation formulas built on them.
 *
 * All handles are opaque. Functions returning lz_status leave a message
 * for the calling thread in lz_last_error() when they fail. Strings handed
 * out through char** parameters are owned by the caller and released with
 * lz_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LAMZETA_BUILDING)
#define LZ_API __attribute__((visibility("default")))
#else
#define LZ_API
#endif

typedef enum lz_status {
  LZ_OK = 0,
  LZ_ERR_USAGE = 1,       /* unknown identity or parameter, malformed literal */
  LZ_ERR_CONSTRAINT = 2,  /* parameters violate the identity's side condition */
  LZ_ERR_DOMAIN = 3,      /* pole or other precondition of a numeric routine */
  LZ_ERR_BUDGET = 4,      /* a series needs more terms than max_terms */
  LZ_ERR_CONVERGENCE = 5, /* quadrature or expansion did not settle */
  LZ_ERR_INTERNAL = 6
} lz_status;

typedef enum lz_format { LZ_FORMAT_TEXT = 0, LZ_FORMAT_JSON = 1, LZ_FORMAT_CSV = 2 } lz_format;

typedef struct lz_context lz_context;
typedef struct lz_params lz_params;
typedef struct lz_report lz_report;
typedef struct lz_eval_result lz_eval_result;
typedef struct lz_oracle_result lz_oracle_result;

LZ_API const char* lz_version(void);
LZ_API const char* lz_status_name(lz_status status);

/* Message of the last failure on this thread, "" if none. */
LZ_API const char* lz_last_error(void);
/* For LZ_ERR_BUDGET: terms the requested accuracy needs, and the digits the
 * allowed budget still certifies. Zero otherwise. */
LZ_API uint64_t lz_last_error_required_terms(void);
LZ_API int lz_last_error_achievable_digits(void);

LZ_API void lz_string_free(char* s);

/* Precision context. Defaults: 30 digits, 15 guard digits, 10^8 terms. */
LZ_API lz_status lz_context_create(lz_context** out);
LZ_API void lz_context_destroy(lz_context* ctx);
LZ_API lz_status lz_context_set_digits(lz_context* ctx, int digits);
LZ_API lz_status lz_context_set_guard(lz_context* ctx, int guard_digits);
LZ_API lz_status lz_context_set_max_terms(lz_context* ctx, uint64_t max_terms);
/* When non-zero, series that exceed max_terms are cut at the cap and the
 * report's target drops to the digits the cap certifies. */
LZ_API lz_status lz_context_set_allow_reduced(lz_context* ctx, int allow);
LZ_API int lz_context_digits(const lz_context* ctx);

/* Identity catalogue. Names are the command-line names, e.g. "zeta-gen". */
LZ_API size_t lz_identity_count(void);
LZ_API const char* lz_identity_name(size_t index);
/* One-line summary followed by the accepted parameters. Caller frees. */
LZ_API lz_status lz_identity_describe(const char* name, char** out);

/* Key/value parameters for lz_verify. Values are literals: integers,
 * decimals, or forms such as "pi", "2pi", "pi^3/4". */
LZ_API lz_status lz_params_create(lz_params** out);
LZ_API void lz_params_destroy(lz_params* params);
LZ_API lz_status lz_params_set(lz_params* params, const char* key, const char* value);

LZ_API lz_status lz_verify(const lz_context* ctx, const char* identity, const lz_params* params, lz_report** out);

LZ_API void lz_report_destroy(lz_report* report);
LZ_API int lz_report_achieved(const lz_report* report);
LZ_API int lz_report_digits_agreed(const lz_report* report);
LZ_API int lz_report_target_digits(const lz_report* report);
LZ_API const char* lz_report_identity(const lz_report* report);
/* Overwrites the recorded run time; 0 gives byte-stable output. */
LZ_API void lz_report_set_elapsed(lz_report* report, double seconds);
LZ_API lz_status lz_report_format(const lz_report* report, lz_format format, char** out);
LZ_API lz_status lz_report_csv_header(char** out);
LZ_API lz_status lz_report_from_json(const char* json, lz_report** out);
/* Non-zero when every field, including the exact decimal values, matches. */
LZ_API int lz_report_equal(const lz_report* a, const lz_report* b);

/* sum n^r / (exp(n^s x) - 1) with x = x_re + i x_im. r and s are exact
 * rationals ("-3", "1/5", "0.2"); x_re and x_im are literals, x_im may be
 * NULL. */
LZ_API lz_status lz_eval(const lz_context* ctx, const char* r, const char* s, const char* x_re, const char* x_im,
                         lz_eval_result** out);
LZ_API void lz_eval_result_destroy(lz_eval_result* result);
LZ_API uint64_t lz_eval_result_terms(const lz_eval_result* result);
LZ_API int lz_eval_result_certified_digits(const lz_eval_result* result);
LZ_API lz_status lz_eval_result_format(const lz_eval_result* result, lz_format format, char** out);

/* Direct sum against the contour integral for sum n^{N-2h}/(e^{n^N x}-1).
 * t_max and c0 may be NULL for the defaults; quad_points 0 means default. */
LZ_API lz_status lz_oracle(const lz_context* ctx, unsigned N, int64_t h, const char* x, const char* t_max,
                           const char* c0, unsigned quad_points, lz_oracle_result** out);
LZ_API void lz_oracle_result_destroy(lz_oracle_result* result);
LZ_API int lz_oracle_result_achieved(const lz_oracle_result* result);
LZ_API int lz_oracle_result_digits_agreed(const lz_oracle_result* result);
LZ_API lz_status lz_oracle_result_format(const lz_oracle_result* result, lz_format format, char** out);

/* Rows (m, N, 2m+1, 2Nm+1) for 1 <= m <= max_m and odd N <= max_N. With
 * verify set, each row is also checked at alpha = beta = pi and
 * *all_achieved reports whether every check passed. */
LZ_API lz_status lz_zeta_table(const lz_context* ctx, int64_t max_m, unsigned max_N, int verify, lz_format format,
                               char** out, int* all_achieved);

#ifdef __cplusplus
}
#endif

#endif
