/* Copyright 2026 The nsop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Plain C consumer of the public header. */

#include <stdio.h>
#include <string.h>

#include "nsop/c_api.h"

int main(void) {
  const char* text = "2 3  1 1 1  1 1  2 2 3";
  nsop_instance* inst = NULL;
  nsop_search_result* res = NULL;
  nsop_search_params params;
  if (nsop_instance_parse(text, strlen(text), "c", &inst) != NSOP_OK) {
    fprintf(stderr, "parse: %s\n", nsop_last_error());
    return 1;
  }
  nsop_search_params_default(&params);
  if (nsop_search_run(inst, &params, &res) != NSOP_OK) {
    fprintf(stderr, "search: %s\n", nsop_last_error());
    nsop_instance_free(inst);
    return 1;
  }
  printf("cost %lld final_k %d\n", (long long)nsop_search_result_cost(res),
         nsop_search_result_final_k(res));
  nsop_search_result_free(res);
  nsop_instance_free(inst);
  return 0;
}
