/* Copyright 2026 the djc-sim authors
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

/* C interface to the djc-sim core: detected-jump code construction and
 * verification, encoded-gate compilation, trajectory ensembles, and
 * preparation/readout checks. All run-level entry points take a JSON config
 * string and hand back malloc'd JSON/CSV strings the caller releases with
 * djc_string_free.
 */

#ifndef DJC_H_
#define DJC_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum djc_status {
  DJC_OK = 0,
  DJC_ERROR_VERIFY = 1,     /* checks ran and failed */
  DJC_ERROR_CONFIG = 2,     /* config rejected; see djc_last_error() */
  DJC_ERROR_INVALID = 3,    /* bad handle / argument */
  DJC_ERROR_INTERNAL = 4
} djc_status;

/* Thread-local message for the most recent failure in this thread. */
const char* djc_last_error(void);

const char* djc_version(void);

void djc_string_free(char* s);

/* ---- code handles ----------------------------------------------------- */

typedef struct djc_code djc_code;

/* pair_signs: n_pairs entries of +1/-1 (sign of J on each pair), or NULL
 * for all -1. Returns NULL on error. */
djc_code* djc_code_build(int n_pairs, const int* pair_signs);
djc_code* djc_code_from_json(const char* json_text);
void djc_code_free(djc_code* code);

int djc_code_n_pairs(const djc_code* code);
int djc_code_n_qubits(const djc_code* code);
int djc_code_n_logical(const djc_code* code);

/* Serialized code document (schema in the README). */
char* djc_code_to_json(const djc_code* code);

/* ---- run-level commands ------------------------------------------------ */

/* Each returns DJC_OK or an error status; *report_json (and the extra
 * artifacts where present) are set on DJC_OK and on DJC_ERROR_VERIFY, where
 * the report's "pass" field explains what failed. Pass NULL for artifacts
 * you do not need. */

djc_status djc_verify(const char* config_json, char** report_json);

djc_status djc_compile(const char* config_json, char** report_json,
                       char** schedule_json);

djc_status djc_simulate(const char* config_json, char** report_json,
                        char** trajectories_csv);

djc_status djc_prep_check(const char* config_json, char** report_json,
                          char** readout_csv);

#ifdef __cplusplus
}
#endif

#endif /* DJC_H_ */
