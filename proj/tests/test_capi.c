/* The C interface, exercised from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hermitian/hq.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

int main(void) {
  hq_field* f = NULL;
  uint64_t r = 0;
  int on = -1;
  hq_outcome kind;
  uint64_t value = 0;
  hq_report* rep = NULL;

  EXPECT(strlen(hq_version()) > 0);

  /* F_4 = F_2[T]/(T^2 + T + 1); index 2 is T. */
  EXPECT(hq_field_create(2, 1, 2, &f) == HQ_OK);
  EXPECT(hq_field_q(f) == 2);
  EXPECT(strstr(hq_field_json(f), "\"modulus\":[1,1,1]") != NULL);
  EXPECT(hq_mul(f, 2, 2, &r) == HQ_OK && r == 3); /* T^2 = T + 1 */
  EXPECT(hq_add(f, 2, 3, &r) == HQ_OK && r == 1);
  EXPECT(hq_pow(f, 2, 0, 3, &r) == HQ_OK && r == 1);
  EXPECT(hq_frob_q(f, 2, 1, &r) == HQ_OK && r == 3);
  EXPECT(hq_div(f, 1, 0, &r) == HQ_DIVISION_BY_ZERO);
  EXPECT(strlen(hq_last_error()) > 0);
  EXPECT(hq_add(f, 4, 0, &r) == HQ_INVALID_ARGUMENT);
  EXPECT(hq_add(f, 1, 1, NULL) == HQ_INVALID_ARGUMENT);

  /* (0, 0) is on the curve, (1, 1) is not. */
  EXPECT(hq_on_curve(f, 0, 0, &on) == HQ_OK && on == 1);
  EXPECT(hq_on_curve(f, 1, 1, &on) == HQ_OK && on == 0);
  EXPECT(hq_eval_t(f, 1, 1, &kind, &value) == HQ_NOT_ON_CURVE);
  /* Rational points give 0/0. */
  EXPECT(hq_eval_t(f, 0, 0, &kind, &value) == HQ_OK && kind == HQ_INDETERMINATE);
  hq_field_free(f);

  EXPECT(hq_field_create(4, 1, 2, &f) == HQ_NON_PRIME_P);
  EXPECT(f == NULL);
  EXPECT(strcmp(hq_status_name(HQ_NON_PRIME_P), "NonPrimeP") == 0);

  /* On F_{2^10}: t(P) = t_x(x) = t_y(y) whenever all are values. */
  EXPECT(hq_field_create(2, 1, 10, &f) == HQ_OK);
  {
    int agree = 0;
    uint64_t x;
    for (x = 1; x < 1024 && agree < 20; ++x) {
      uint64_t y;
      for (y = 0; y < 1024; ++y) {
        uint64_t vt, vx, vy;
        hq_outcome kt, kx, ky;
        if (hq_on_curve(f, x, y, &on) != HQ_OK || !on) continue;
        EXPECT(hq_eval_t(f, x, y, &kt, &vt) == HQ_OK);
        EXPECT(hq_eval_t_x(f, x, &kx, &vx) == HQ_OK);
        EXPECT(hq_eval_t_y(f, y, &ky, &vy) == HQ_OK);
        if (kt == HQ_VALUE && kx == HQ_VALUE && ky == HQ_VALUE) {
          EXPECT(vt == vx && vt == vy);
          ++agree;
        }
        break;
      }
    }
    EXPECT(agree == 20);
  }
  hq_field_free(f);

  EXPECT(hq_run("count-points", "{\"q\":3,\"k\":1,\"timestamp\":false}", &rep) == HQ_OK);
  EXPECT(hq_report_pass(rep) == 1);
  EXPECT(strstr(hq_report_json(rep, -1), "\"total\":28") != NULL);
  EXPECT(strstr(hq_report_json(rep, -1), "timestamp") == NULL);
  hq_report_free(rep);

  EXPECT(hq_run("verify-invariance", "{\"q\":2,\"m\":7}", &rep) == HQ_FIELD_TOO_SMALL);
  EXPECT(rep == NULL);
  EXPECT(hq_run("no-such-check", NULL, &rep) == HQ_BAD_PARAMETERS);
  EXPECT(hq_run("field-info", "{\"q\":6}", &rep) == HQ_BAD_PARAMETERS);
  EXPECT(hq_run("field-info", "{\"colour\":1}", &rep) == HQ_BAD_PARAMETERS);
  EXPECT(hq_run("field-info", "not json", &rep) == HQ_BAD_PARAMETERS);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
