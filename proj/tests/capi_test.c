/* Exercises the C interface from plain C. argv[1] is the fixture directory. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "dvb/dvb.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static char* fixture(const char* dir, const char* name) {
  size_t len = strlen(dir) + strlen(name) + 2;
  char* p = malloc(len);
  snprintf(p, len, "%s/%s", dir, name);
  return p;
}

static void test_bundles(void) {
  dvb_bundle *b = NULL, *d = NULL, *l = NULL, *f = NULL;
  size_t n, nf, nc, ne;
  char* text = NULL;
  EXPECT(dvb_bundle_create(1, 2, 3, 4, &b) == DVB_OK);
  EXPECT(dvb_bundle_right_dual(b, &d) == DVB_OK);
  EXPECT(dvb_bundle_ranks(d, &n, &nf, &nc, &ne) == DVB_OK);
  EXPECT(n == 1 && nf == 4 && nc == 2 && ne == 3);
  EXPECT(dvb_bundle_left_dual(b, &l) == DVB_OK);
  EXPECT(dvb_bundle_ranks(l, &n, &nf, &nc, &ne) == DVB_OK);
  EXPECT(nf == 3 && nc == 4 && ne == 2);
  EXPECT(dvb_bundle_flip(b, &f) == DVB_OK);
  EXPECT(dvb_bundle_ranks(f, &n, &nf, &nc, &ne) == DVB_OK);
  EXPECT(nf == 4 && nc == 3 && ne == 2);
  EXPECT(dvb_bundle_describe(d, &text) == DVB_OK);
  EXPECT(text && strstr(text, "K(E, F*, C*)") != NULL);
  dvb_string_free(text);
  EXPECT(dvb_bundle_ranks(NULL, &n, &nf, &nc, &ne) == DVB_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(dvb_last_error()) > 0);
  dvb_bundle_free(b);
  dvb_bundle_free(d);
  dvb_bundle_free(l);
  dvb_bundle_free(f);
}

static void test_suites(const char* dir) {
  char* path = fixture(dir, "scalar_morphism.json");
  dvb_scenario* s = NULL;
  dvb_report* r = NULL;
  dvb_run_options opts;
  size_t i;
  uint64_t seed = 0;
  char* text = NULL;

  EXPECT(dvb_scenario_load_file(path, &s) == DVB_OK);
  EXPECT(dvb_scenario_seed(s, &seed) == DVB_OK && seed == 7);
  dvb_run_options_init(&opts);
  opts.samples = 10;
  opts.scenario_path = path;
  EXPECT(dvb_run_suite(s, "third-dual", &opts, &r) == DVB_OK);
  EXPECT(dvb_report_passed(r) == 1);
  EXPECT(dvb_report_count(r) == 4);
  for (i = 0; i < dvb_report_count(r); ++i) {
    const char* id = NULL;
    dvb_property_status st;
    EXPECT(dvb_report_entry(r, i, &id, &st, NULL, NULL) == DVB_OK);
    EXPECT(id != NULL && strncmp(id, "third_dual.", 11) == 0);
    EXPECT(st == DVB_PROPERTY_PASS);
  }
  EXPECT(dvb_report_entry(r, 99, NULL, NULL, NULL, NULL) == DVB_ERR_INVALID_ARGUMENT);
  EXPECT(dvb_report_text(r, 0, &text) == DVB_OK);
  EXPECT(strstr(text, "4 passed, 0 failed, 0 skipped") != NULL);
  dvb_string_free(text);
  dvb_report_free(r);

  EXPECT(dvb_run_suite(s, "connection-metric", &opts, &r) == DVB_ERR_INVALID_ARGUMENT);
  EXPECT(dvb_run_suite(s, "nonsense", &opts, &r) == DVB_ERR_INVALID_ARGUMENT);
  EXPECT(dvb_connection_check(s, "metric", &opts, &r) == DVB_ERR_INCONSISTENT);

  EXPECT(dvb_dualize(s, "right", "2", &text) == DVB_OK);
  EXPECT(strstr(text, "right dual") != NULL);
  dvb_string_free(text);
  EXPECT(dvb_dualize(s, "up", NULL, &text) == DVB_ERR_INVALID_ARGUMENT);
  EXPECT(dvb_dualize(s, "right", "1,2", &text) == DVB_ERR_ARITY);
  dvb_scenario_free(s);
  free(path);

  path = fixture(dir, "asymmetric_connection.json");
  EXPECT(dvb_scenario_load_file(path, &s) == DVB_OK);
  EXPECT(dvb_connection_check(s, "symmetric", NULL, &r) == DVB_OK);
  EXPECT(dvb_report_passed(r) == 0);
  {
    dvb_property_status st;
    const char* detail = NULL;
    EXPECT(dvb_report_entry(r, 0, NULL, &st, &detail, NULL) == DVB_OK);
    EXPECT(st == DVB_PROPERTY_FAIL);
    EXPECT(detail != NULL && strlen(detail) > 0);
  }
  dvb_report_free(r);
  dvb_scenario_free(s);
  free(path);

  path = fixture(dir, "bad_ranks.json");
  EXPECT(dvb_scenario_load_file(path, &s) == DVB_ERR_INCONSISTENT);
  free(path);
  EXPECT(dvb_scenario_load_file("/nonexistent/file.json", &s) != DVB_OK);
  EXPECT(dvb_scenario_load_json("{", &s) == DVB_ERR_PARSE);
}

static void test_generate(void) {
  dvb_generate_options g;
  dvb_scenario *a = NULL, *b = NULL;
  char *ja = NULL, *jb = NULL;
  dvb_generate_options_init(&g);
  g.symmetric_connection = 1;
  EXPECT(dvb_scenario_generate(5, &g, &a) == DVB_OK);
  EXPECT(dvb_scenario_generate(5, &g, &b) == DVB_OK);
  EXPECT(dvb_scenario_to_json(a, &ja) == DVB_OK);
  EXPECT(dvb_scenario_to_json(b, &jb) == DVB_OK);
  EXPECT(strcmp(ja, jb) == 0);
  {
    dvb_report* r = NULL;
    EXPECT(dvb_connection_check(a, "symmetric", NULL, &r) == DVB_OK);
    EXPECT(dvb_report_passed(r) == 1);
    dvb_report_free(r);
  }
  dvb_string_free(ja);
  dvb_string_free(jb);
  dvb_scenario_free(a);
  dvb_scenario_free(b);
  g.max_n = 0;
  EXPECT(dvb_scenario_generate(5, &g, &a) == DVB_ERR_INVALID_ARGUMENT);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: capi_test DATA_DIR\n");
    return 2;
  }
  EXPECT(strcmp(dvb_status_name(DVB_OK), "OK") == 0);
  EXPECT(strlen(dvb_version()) > 0);
  test_bundles();
  test_suites(argv[1]);
  test_generate();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}
