#include <stdio.h>
#include <string.h>

#include "dickson.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  DicksonSeq *f = NULL, *g = NULL, *bad = NULL;
  uint64_t value = 0, i = 0, j = 0;

  CHECK(dickson_abi_version() == DICKSON_ABI_VERSION);
  CHECK(dickson_seq_parse("1,0;0", &f) == DICKSON_STATUS_OK);
  CHECK(dickson_seq_parse(";0", &g) == DICKSON_STATUS_OK);

  CHECK(dickson_guessed_bound(f, g, &value) == DICKSON_STATUS_OK && value == 4);
  CHECK(dickson_extracted_bound(f, g, 0, &value) == DICKSON_STATUS_OK && value == 2);
  CHECK(dickson_oracle_min_bound(f, g, &value) == DICKSON_STATUS_OK && value == 2);
  CHECK(dickson_holds_d(f, g, 2, &i, &j) == DICKSON_STATUS_OK && i == 1 && j == 2);
  CHECK(dickson_holds_d(f, g, 1, &i, &j) == DICKSON_STATUS_NOT_FOUND);

  char *text = dickson_seq_render(f);
  CHECK(text != NULL && strcmp(text, "1,0;0") == 0);
  dickson_string_free(text);

  CHECK(dickson_seq_parse("1,,0", &bad) == DICKSON_STATUS_SYNTAX);
  CHECK(strstr(dickson_last_error(), "position 2") != NULL);

  dickson_seq_free(f);
  dickson_seq_free(g);
  puts("ok");
  return 0;
}
