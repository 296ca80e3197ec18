#include <stdio.h>
#include <string.h>

#include "jacobi_turan.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond);   \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  JtPoly *p = NULL;
  CHECK(jt_poly_on_ray(2, "0", "0", &p) == JT_STATUS_OK);
  char *s = NULL;
  CHECK(jt_poly_to_string(p, &s) == JT_STATUS_OK);
  CHECK(strcmp(s, "-1/2, 0, 3/2") == 0);
  jt_string_free(s);
  CHECK(jt_poly_eval(p, "2", &s) == JT_STATUS_OK);
  CHECK(strcmp(s, "11/2") == 0);
  jt_string_free(s);
  jt_poly_free(p);

  JtCertificate *cert = NULL;
  CHECK(jt_certify(3, "1/2", "5/2", &cert) == JT_STATUS_OK);
  JtVerdict verdict;
  CHECK(jt_certificate_verdict(cert, &verdict) == JT_STATUS_OK);
  CHECK(verdict == JT_VERDICT_CERTIFIED_NEGATIVE);
  jt_certificate_free(cert);

  CHECK(jt_certify(0, "0", "0", &cert) == JT_STATUS_OUT_OF_RANGE);
  CHECK(jt_last_error() != NULL);
  CHECK(jt_poly_on_ray(1, "x", "0", &p) == JT_STATUS_PARSE);

  printf("ok\n");
  return 0;
}
