/* polyaxial: numerical harmonic analysis on the positive orthant with
 * power-weighted measures — C interface.
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

#ifndef POLYAXIAL_H
#define POLYAXIAL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PAX_API
#define PAX_API __attribute__((visibility("default")))
#endif

/* Status codes double as the process exit codes of the bundled CLI
 * (the CLI folds INTERNAL into the numeric-error exit). */
typedef enum pax_status {
  PAX_OK = 0,             /* computed; every check passed          */
  PAX_TOLERANCE_FAIL = 1, /* computed; at least one check failed   */
  PAX_INVALID_CONFIG = 2, /* unusable command, config, or options  */
  PAX_NUMERIC_ERROR = 3,  /* a computation degenerated             */
  PAX_INTERNAL_ERROR = 4  /* unexpected failure; please report it  */
} pax_status;

/* Opaque result of a run: an ordered list of check records rendered as JSON
 * and CSV. Owned by the caller once returned; release with pax_report_free. */
typedef struct pax_report pax_report;

/* Runs one command against a JSON configuration and hands back a report.
 *
 *   command      "transform", "norm", "solve", or "verify"
 *   config_json  configuration text (see docs/runconfig.schema.json)
 *   options_json NULL, or a JSON object with any of:
 *                  "suite"        verify only; one of bessel, transform,
 *                                 translation, sobolev, pde, all (default)
 *                  "regen_oracle" verify only; when true the report's JSON
 *                                 holds the regenerated expectation table
 *                                 instead of check records (CSV is empty)
 *                  "timestamp"    fixed generated_at string, for
 *                                 byte-reproducible JSON output
 *   out          receives the report on PAX_OK / PAX_TOLERANCE_FAIL;
 *                set to NULL on every other status
 *
 * Statuses PAX_OK and PAX_TOLERANCE_FAIL both deliver a report; the latter
 * means at least one record's pass flag is false. On the error statuses a
 * human-readable message is available from pax_last_error(). */
PAX_API pax_status pax_run_command(const char* command,
                                   const char* config_json,
                                   const char* options_json,
                                   pax_report** out);

/* Rendered report content. The returned pointers live as long as the report
 * and must not be freed individually. NULL-safe (empty string / zero). */
PAX_API const char* pax_report_json(const pax_report* report);
PAX_API const char* pax_report_csv(const pax_report* report);
PAX_API size_t pax_report_record_count(const pax_report* report);
PAX_API int pax_report_all_pass(const pax_report* report);
PAX_API void pax_report_free(pax_report* report);

/* Message for the most recent failing call on this thread; empty string
 * when the last call succeeded. */
PAX_API const char* pax_last_error(void);

/* Normalized Bessel function j_gamma(x) = Gamma(gamma+1) (2/x)^gamma
 * J_gamma(x), the transform kernel's axis factor. Requires gamma > -1 and
 * x >= 0; writes the value through out. */
PAX_API pax_status pax_bessel_j(double gamma, double x, double* out);

/* Library version as "major.minor.patch". */
PAX_API const char* pax_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POLYAXIAL_H */
