/* Exercises the C interface from C. */

#include "lamzeta/lamzeta.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static lz_report* verify(lz_context* ctx, const char* id, const char* const* kv, lz_status* status) {
  lz_params* params = NULL;
  lz_report* report = NULL;
  lz_params_create(&params);
  for (; kv && kv[0]; kv += 2) lz_params_set(params, kv[0], kv[1]);
  *status = lz_verify(ctx, id, params, &report);
  lz_params_destroy(params);
  return report;
}

int main(void) {
  lz_context* ctx = NULL;
  lz_status st;
  char* text = NULL;

  EXPECT(lz_context_create(&ctx) == LZ_OK);
  EXPECT(lz_context_digits(ctx) == 30);
  EXPECT(lz_context_set_digits(ctx, 0) == LZ_ERR_USAGE);
  EXPECT(strlen(lz_last_error()) > 0);
  EXPECT(lz_context_set_digits(ctx, 25) == LZ_OK);
  EXPECT(lz_context_digits(ctx) == 25);

  EXPECT(lz_identity_count() == 16);
  EXPECT(strcmp(lz_identity_name(0), "kty") == 0);
  EXPECT(lz_identity_name(99) == NULL);
  EXPECT(lz_identity_describe("zeta-gen", &text) == LZ_OK);
  EXPECT(text && strstr(text, "alpha") != NULL);
  lz_string_free(text);
  EXPECT(lz_identity_describe("nope", &text) == LZ_ERR_USAGE);

  {
    const char* kv[] = {"N", "3", "m", "1", "alpha", "pi", NULL};
    lz_report* r = verify(ctx, "zeta-gen", kv, &st);
    EXPECT(st == LZ_OK);
    EXPECT(lz_report_achieved(r));
    EXPECT(lz_report_digits_agreed(r) >= lz_report_target_digits(r));
    EXPECT(strcmp(lz_report_identity(r), "ZETA_GEN") == 0);

    char* json = NULL;
    EXPECT(lz_report_format(r, LZ_FORMAT_JSON, &json) == LZ_OK);
    lz_report* back = NULL;
    EXPECT(lz_report_from_json(json, &back) == LZ_OK);
    EXPECT(lz_report_equal(r, back));
    lz_report_set_elapsed(back, 123.0);
    EXPECT(!lz_report_equal(r, back));
    lz_report_destroy(back);
    lz_string_free(json);

    EXPECT(lz_report_format(r, LZ_FORMAT_CSV, &text) == LZ_OK);
    lz_string_free(text);
    EXPECT(lz_report_format(r, LZ_FORMAT_TEXT, &text) == LZ_OK);
    lz_string_free(text);
    lz_report_destroy(r);
  }
  {
    const char* kv[] = {"N", "2", "m", "1", "alpha", "pi", NULL};
    lz_report* r = verify(ctx, "zeta-gen", kv, &st);
    EXPECT(st == LZ_ERR_CONSTRAINT);
    EXPECT(r == NULL);
    EXPECT(strstr(lz_last_error(), "N must be odd") != NULL);
  }
  {
    lz_params* p = NULL;
    lz_params_create(&p);
    EXPECT(lz_params_set(p, "m", "1") == LZ_OK);
    EXPECT(lz_params_set(p, "m", "2") == LZ_ERR_USAGE);
    lz_params_destroy(p);
  }
  EXPECT(lz_report_from_json("{", NULL) == LZ_ERR_USAGE);
  {
    lz_report* r = NULL;
    EXPECT(lz_report_from_json("{\"schema_version\": 9}", &r) == LZ_ERR_USAGE);
    EXPECT(r == NULL);
  }

  /* Budget refusal carries the negotiation numbers. */
  {
    lz_eval_result* e = NULL;
    EXPECT(lz_context_set_max_terms(ctx, 100000) == LZ_OK);
    EXPECT(lz_context_set_digits(ctx, 30) == LZ_OK);
    EXPECT(lz_eval(ctx, "-3", "1/5", "pi", NULL, &e) == LZ_ERR_BUDGET);
    EXPECT(lz_last_error_required_terms() > 100000);
    EXPECT(lz_last_error_achievable_digits() == 22);
    EXPECT(lz_context_set_allow_reduced(ctx, 1) == LZ_OK);
    EXPECT(lz_eval(ctx, "-3", "1/5", "pi", NULL, &e) == LZ_OK);
    EXPECT(lz_eval_result_terms(e) == 100000);
    EXPECT(lz_eval_result_certified_digits(e) == 22);
    EXPECT(lz_eval_result_format(e, LZ_FORMAT_JSON, &text) == LZ_OK);
    EXPECT(strstr(text, "\"reduced\": true") != NULL);
    lz_string_free(text);
    lz_eval_result_destroy(e);
    EXPECT(lz_eval(ctx, "-3", "1", "-1", NULL, &e) == LZ_ERR_DOMAIN);
    EXPECT(lz_eval(ctx, "-3", "x", "1", NULL, &e) == LZ_ERR_USAGE);
  }

  /* Oracle: agreement, and a starved contour. */
  {
    lz_oracle_result* o = NULL;
    EXPECT(lz_context_set_digits(ctx, 20) == LZ_OK);
    EXPECT(lz_oracle(ctx, 2, 1, "2", NULL, NULL, 0, &o) == LZ_OK);
    EXPECT(lz_oracle_result_achieved(o));
    EXPECT(lz_oracle_result_digits_agreed(o) >= 15);
    lz_oracle_result_destroy(o);
    o = NULL;
    EXPECT(lz_oracle(ctx, 2, 1, "2", "0.01", NULL, 0, &o) == LZ_ERR_CONVERGENCE);
    EXPECT(o == NULL);
  }

  {
    int all = 0;
    EXPECT(lz_zeta_table(ctx, 4, 9, 0, LZ_FORMAT_CSV, &text, &all) == LZ_OK);
    EXPECT(strstr(text, "2,9,zeta(5),zeta(37)") != NULL);
    lz_string_free(text);
  }

  EXPECT(lz_verify(NULL, "kty", NULL, NULL) == LZ_ERR_USAGE);
  EXPECT(strcmp(lz_status_name(LZ_ERR_BUDGET), "term budget exceeded") == 0);
  lz_context_destroy(ctx);

  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  else printf("all C interface checks passed\n");
  return failures ? 1 : 0;
}
