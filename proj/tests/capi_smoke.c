#include "conekit/conekit.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  const double worked[4] = {1, -2, -2, 1};
  const double ones[2] = {1, 1};
  ck_problem* p = NULL;
  ck_config* cfg = NULL;
  ck_report* r = NULL;
  double v = 0;
  int b = 0;
  size_t rows = 0, cols = 0;

  EXPECT(strlen(ck_version()) > 0);
  EXPECT(strcmp(ck_status_name(CK_ERR_PARSE), "parse error") == 0);

  EXPECT(ck_problem_create(worked, 2, 2, &p) == CK_OK);
  EXPECT(ck_problem_shape(p, &rows, &cols) == CK_OK && rows == 2 && cols == 2);
  EXPECT(ck_problem_set_vector(p, "z", ones, 2) == CK_OK);
  EXPECT(ck_problem_set_vector(p, "q", ones, 2) == CK_ERR_INVALID_ARGUMENT);
  EXPECT(ck_config_create(&cfg) == CK_OK);
  EXPECT(ck_config_set(cfg, "tau", 1e-9) == CK_OK);
  EXPECT(ck_config_set(cfg, "bogus", 1.0) != CK_OK);
  EXPECT(ck_config_get(cfg, "tau", &v) == CK_OK && v == 1e-9);

  EXPECT(ck_run_classify(p, cfg, &r) == CK_OK);
  EXPECT(ck_report_get_bool(r, "/result/somewhere_positive/verdict", &b) == CK_OK && b == 1);
  EXPECT(ck_report_get_bool(r, "/result/positive_off_diagonal/verdict", &b) == CK_OK && b == 0);
  EXPECT(ck_report_violation(r) == 0);
  EXPECT(strstr(ck_report_render(r, CK_FORMAT_JSON), "\"command\": \"classify\"") != NULL);
  ck_report_destroy(r);

  EXPECT(ck_run_theorem1(p, cfg, &r) == CK_OK);
  EXPECT(ck_report_get_number(r, "/result/conclusions/neg_inverse/0/1", &v) == CK_OK);
  EXPECT(fabs(v - 2.0 / 3.0) < 1e-12);
  ck_report_destroy(r);

  EXPECT(ck_run_theorem2(p, NULL, &r) == CK_OK);
  EXPECT(ck_report_get_bool(r, "/result/agreement", &b) == CK_OK && b == 1);
  ck_report_destroy(r);

  EXPECT(ck_problem_set_orthant(p, 2) == CK_OK);
  EXPECT(ck_run_norms(p, NULL, &r) == CK_OK);
  ck_report_destroy(r);
  ck_problem_destroy(p);

  p = NULL;
  EXPECT(ck_problem_parse("{\"matrix\": [[1,2],[3]]}", &p) == CK_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(strstr(ck_last_error(), "row") != NULL);
  EXPECT(ck_problem_parse("{\"matrix\": [[1,0],[0,1]]}", &p) == CK_OK);
  {
    const double singular[4] = {1, 2, 2, 4};
    EXPECT(ck_problem_set_cone(p, singular, 2) == CK_ERR_SINGULAR);
  }
  ck_problem_destroy(p);

  {
    ck_fuzz_options o;
    char first[1 << 16];
    ck_fuzz_options_default(&o);
    o.count = 5;
    o.seed = 7;
    o.generator = "mixed";
    EXPECT(ck_run_fuzz(&o, cfg, &r) == CK_OK);
    strncpy(first, ck_report_render(r, CK_FORMAT_JSON), sizeof first - 1);
    first[sizeof first - 1] = '\0';
    ck_report_destroy(r);
    EXPECT(ck_run_fuzz(&o, cfg, &r) == CK_OK);
    EXPECT(strcmp(first, ck_report_render(r, CK_FORMAT_JSON)) == 0);
    ck_report_destroy(r);
    o.generator = "nope";
    EXPECT(ck_run_fuzz(&o, cfg, &r) == CK_ERR_INVALID_ARGUMENT);
  }

  EXPECT(ck_run_classify(NULL, NULL, &r) == CK_ERR_INVALID_ARGUMENT);
  ck_config_destroy(cfg);

  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
