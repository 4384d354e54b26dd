#include <stdio.h>
#include <string.h>
#include "stieltjes_cf.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  StcfMoments *m = NULL;
  StcfVerdict *v = NULL;
  char *json = NULL;
  StcfVerdictKind kind;
  size_t index = 0;

  CHECK(stcf_moments_from_list("1,3/2,5/2,9/2,17/2", &m) == STCF_STATUS_OK);
  CHECK(stcf_moments_len(m) == 5);
  CHECK(stcf_certify_xi_stieltjes(m, "1", &v) == STCF_STATUS_OK);
  CHECK(stcf_verdict_kind(v, &kind) == STCF_STATUS_OK);
  CHECK(kind == STCF_VERDICT_KIND_CERTIFIED_PREFIX);
  CHECK(stcf_verdict_refutation_index(v, &index) == STCF_STATUS_NOT_FOUND);
  CHECK(stcf_verdict_to_json(v, &json) == STCF_STATUS_OK);
  CHECK(strstr(json, "\"witness_g\":[\"0\",\"1/2\",\"1/3\",\"0\"]") != NULL);
  stcf_string_free(json);
  stcf_verdict_free(v);
  stcf_moments_free(m);

  CHECK(stcf_moments_from_list("1,1,2,5,14,42", &m) == STCF_STATUS_OK);
  CHECK(stcf_certify_xi_stieltjes(m, "1/2", &v) == STCF_STATUS_OK);
  CHECK(stcf_verdict_refutation_index(v, &index) == STCF_STATUS_OK && index == 3);
  stcf_verdict_free(v);
  stcf_moments_free(m);

  CHECK(stcf_moments_from_list("1,oops", &m) == STCF_STATUS_PARSE_ERROR);
  CHECK(m == NULL);
  CHECK(stcf_last_error_message() != NULL);
  CHECK(stcf_moments_from_list(NULL, &m) == STCF_STATUS_NULL_POINTER);

  printf("ok %s\n", stcf_version());
  return 0;
}
