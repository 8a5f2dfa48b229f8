/* include/tdcf/tdcf.h
 *
 * Copyright 2026  The tdcf authors
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

/* C interface to the tandem detection cost function (t-DCF) library.
 *
 * The library evaluates cascaded spoofing-countermeasure (CM) + automatic
 * speaker verification (ASV) systems from labeled detection-score files:
 * empirical error rates, both t-DCF variants with normalization and
 * minimum-cost searches, and a closed-form Gaussian score simulator that
 * doubles as an analytic oracle.
 *
 * Conventions:
 *  - Every fallible function returns tdcf_status; results go to out
 *    parameters. On failure, tdcf_last_error() describes the problem
 *    (thread-local).
 *  - Opaque handles are created and released by their _free functions.
 *    Arrays returned through double-pointer out parameters are released
 *    with tdcf_free() / tdcf_free_strings().
 *  - Thresholds are extended reals: +-HUGE_VAL are valid and mean
 *    accept-everything / reject-everything. A score equal to the threshold
 *    is rejected (ACCEPT iff score > threshold).
 */

#ifndef TDCF_TDCF_H_
#define TDCF_TDCF_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TDCF_VERSION_STRING "0.1.0"

typedef enum tdcf_status {
  TDCF_OK = 0,
  TDCF_ERR_INVALID_ARGUMENT = 1,
  TDCF_ERR_PARSE = 2,
  TDCF_ERR_IO = 3,
  TDCF_ERR_DEGENERATE_MODEL = 4,
} tdcf_status;

/* Report flag bits. */
#define TDCF_FLAG_BADLY_CALIBRATED 0x1u          /* normalized cost > 1 */
#define TDCF_FLAG_NO_SPOOF_TRIALS 0x2u           /* SFAR pinned to 0 */
#define TDCF_FLAG_NEGATIVE_C1 0x4u               /* min sits at a boundary */
#define TDCF_FLAG_CM_IRRELEVANT 0x8u             /* c1 == c2 == 0 */
#define TDCF_FLAG_ZERO_SPOOF_PRIOR_WITH_SPOOFS 0x10u

typedef struct tdcf_score_set tdcf_score_set;
typedef struct tdcf_cost_model tdcf_cost_model;

typedef enum tdcf_score_kind {
  TDCF_SCORES_ASV = 0,
  TDCF_SCORES_CM = 1,
} tdcf_score_kind;

/* ASV error rates at a threshold. spoof_free is nonzero when the set had no
 * spoof trials and p_fa_spoof is therefore pinned to 0. */
typedef struct tdcf_asv_rates {
  double p_miss;
  double p_fa;
  double p_fa_spoof;
  double threshold;
  int spoof_free;
} tdcf_asv_rates;

typedef struct tdcf_cm_rates {
  double p_miss;
  double p_fa;
  double threshold;
} tdcf_cm_rates;

/* Probabilities of the four erroneous tandem outcomes. */
typedef struct tdcf_tandem_probs {
  double p_a; /* CM passes target, ASV misses it */
  double p_b; /* CM passes nontarget, ASV accepts it */
  double p_c; /* both accept a spoof */
  double p_d; /* CM misses a target */
} tdcf_tandem_probs;

/* Coefficients of the ASV-constrained form c0 + c1*Pmiss_cm + c2*Pfa_cm,
 * together with the ASV operating point they were built from. */
typedef struct tdcf_coefficients {
  double c0; /* ASV floor */
  double c1; /* may be negative */
  double c2;
  tdcf_asv_rates asv;
} tdcf_coefficients;

typedef enum tdcf_variant {
  TDCF_VARIANT_UNCONSTRAINED = 0,
  TDCF_VARIANT_CONSTRAINED = 1,
} tdcf_variant;

/* Cost report. raw is the cost at (tau_asv, tau_cm); normalized divides by
 * default_cost; min_normalized is the minimum over the relevant candidate
 * grid with argmin_tau_* its minimizers. Fields that do not apply are NaN. */
typedef struct tdcf_report {
  int variant; /* tdcf_variant */
  double raw;
  double default_cost;
  double normalized;
  double min_normalized;
  double tau_asv;
  double tau_cm;
  double argmin_tau_asv;
  double argmin_tau_cm;
  uint32_t flags;
} tdcf_report;

typedef struct tdcf_coefficient_row {
  double tau_asv;
  double c0;
  double c1;
  double c2;
} tdcf_coefficient_row;

/* Gaussian simulator controls. EERs must lie strictly inside (0, 0.5);
 * the spoofing factor xi is unbounded; n_spoof may be 0 (spoof-free ASV
 * set, no CM set). Sampling is deterministic in the seed. */
typedef struct tdcf_sim_config {
  double p_e_asv;
  double p_e_cm;
  double xi;
  int64_t n_tar;
  int64_t n_non;
  int64_t n_spoof;
  uint64_t seed;
} tdcf_sim_config;

const char* tdcf_version(void);

/* Message of the last failing call on this thread ("" if none). */
const char* tdcf_last_error(void);

/* Releases arrays returned by the library. */
void tdcf_free(void* ptr);
void tdcf_free_strings(char** strings, int64_t count);

/* ---- cost model ------------------------------------------------------- */

/* Builds a validated cost model: priors in [0,1], pi_non derived as
 * 1 - pi_tar - pi_spoof >= 0, nonnegative costs, not both dummy systems
 * free. */
tdcf_status tdcf_cost_model_create(double pi_tar, double pi_spoof,
                                   double c_miss, double c_fa,
                                   double c_fa_spoof, tdcf_cost_model** out);

/* The 'asvspoof19' banking preset: costs (1, 10, 10) and
 * pi_tar = (1 - pi_spoof) * 0.99. */
tdcf_status tdcf_cost_model_asvspoof19(double pi_spoof, tdcf_cost_model** out);

void tdcf_cost_model_free(tdcf_cost_model* model);

void tdcf_cost_model_params(const tdcf_cost_model* model, double* pi_tar,
                            double* pi_non, double* pi_spoof, double* c_miss,
                            double* c_fa, double* c_fa_spoof);

/* ---- score sets ------------------------------------------------------- */

/* Parses the text score-file format: one `trial_id class score [attack_id]`
 * record per line, class in {target, nontarget, spoof, bonafide}
 * case-insensitive ('bonafide' is CM only), '#' and blank lines ignored. */
tdcf_status tdcf_score_set_parse_file(const char* path, tdcf_score_kind kind,
                                      tdcf_score_set** out);
tdcf_status tdcf_score_set_parse_buffer(const char* data, size_t size,
                                        tdcf_score_kind kind,
                                        tdcf_score_set** out);

void tdcf_score_set_free(tdcf_score_set* set);

tdcf_status tdcf_score_set_write_file(const tdcf_score_set* set,
                                      const char* path);

tdcf_score_kind tdcf_score_set_kind(const tdcf_score_set* set);

/* Class counts. For ASV sets n_bonafide reads 0; for CM sets n_target and
 * n_nontarget count the explicitly labeled bona fide records. Null out
 * pointers are allowed. */
void tdcf_score_set_counts(const tdcf_score_set* set, int64_t* n_target,
                           int64_t* n_nontarget, int64_t* n_bonafide,
                           int64_t* n_spoof);

int64_t tdcf_score_set_warning_count(const tdcf_score_set* set);
const char* tdcf_score_set_warning(const tdcf_score_set* set, int64_t index);

/* Distinct attack ids over spoof records, sorted. */
tdcf_status tdcf_score_set_attacks(const tdcf_score_set* set, char*** out_ids,
                                   int64_t* out_count);

/* Keeps all non-spoof records, filters spoof records to one attack. */
tdcf_status tdcf_score_set_per_attack(const tdcf_score_set* set,
                                      const char* attack_id,
                                      tdcf_score_set** out);

/* ---- empirical error rates ------------------------------------------- */

tdcf_status tdcf_asv_error_rates(const tdcf_score_set* set, double tau,
                                 tdcf_asv_rates* out);
tdcf_status tdcf_cm_error_rates(const tdcf_score_set* set, double tau,
                                tdcf_cm_rates* out);

/* Candidate thresholds of the set's pooled scores: -inf, midpoints between
 * consecutive distinct scores, max + 1, +inf. Realizes every empirical
 * operating point. */
tdcf_status tdcf_candidate_thresholds(const tdcf_score_set* set, double** out,
                                      int64_t* out_count);

/* Error rates at every candidate threshold, in threshold order; identical
 * to per-threshold calls. */
tdcf_status tdcf_asv_sweep(const tdcf_score_set* set, tdcf_asv_rates** out,
                           int64_t* out_count);
tdcf_status tdcf_cm_sweep(const tdcf_score_set* set, tdcf_cm_rates** out,
                          int64_t* out_count);

/* Empirical EER (target vs nontarget for ASV sets, bonafide vs spoof for CM
 * sets): candidate threshold minimizing |p_miss - p_fa|, lowest threshold
 * on ties, rates averaged there. */
tdcf_status tdcf_score_set_eer(const tdcf_score_set* set, double* eer,
                               double* threshold);

/* ---- costs ------------------------------------------------------------ */

void tdcf_tandem_error_probs(const tdcf_asv_rates* asv,
                             const tdcf_cm_rates* cm, tdcf_tandem_probs* out);

tdcf_status tdcf_unconstrained(const tdcf_cost_model* model,
                               const tdcf_asv_rates* asv,
                               const tdcf_cm_rates* cm, double* out);

tdcf_status tdcf_default_unconstrained(const tdcf_cost_model* model,
                                       double* out);

tdcf_status tdcf_compute_coefficients(const tdcf_cost_model* model,
                                      const tdcf_asv_rates* asv,
                                      tdcf_coefficients* out);

tdcf_status tdcf_constrained(const tdcf_coefficients* coeffs,
                             const tdcf_cm_rates* cm, double* out);

tdcf_status tdcf_default_constrained(const tdcf_coefficients* coeffs,
                                     double* out);

tdcf_status tdcf_normalize(double raw, double default_cost, double* out);

/* NIST DCF special case; the model must have pi_spoof == 0. */
tdcf_status tdcf_nist_dcf(const tdcf_cost_model* model,
                          const tdcf_asv_rates* asv, double* out);

/* ---- minimum-cost searches and threshold selection -------------------- */

/* Minimum normalized unconstrained t-DCF over the Cartesian product of both
 * candidate grids; ties resolve to (smaller tau_asv, then smaller tau_cm). */
tdcf_status tdcf_min_unconstrained(const tdcf_cost_model* model,
                                   const tdcf_score_set* asv,
                                   const tdcf_score_set* cm,
                                   tdcf_report* out);

/* Minimum normalized constrained t-DCF over the CM candidate grid. */
tdcf_status tdcf_min_constrained(const tdcf_coefficients* coeffs,
                                 const tdcf_score_set* cm, tdcf_report* out);

/* ASV threshold minimizing the ASV floor c0 on development data. */
tdcf_status tdcf_select_asv_threshold(const tdcf_cost_model* model,
                                      const tdcf_score_set* dev_asv,
                                      double* out);

/* CM threshold minimizing the constrained cost on development data. */
tdcf_status tdcf_select_cm_threshold(const tdcf_coefficients* coeffs,
                                     const tdcf_score_set* dev_cm,
                                     double* out);

/* Normalized constrained t-DCF on evaluation data at externally fixed
 * thresholds; may exceed 1 (flagged). */
tdcf_status tdcf_actual(const tdcf_cost_model* model,
                        const tdcf_score_set* eval_asv,
                        const tdcf_score_set* eval_cm, double tau_asv,
                        double tau_cm, tdcf_report* out);

/* (tau_asv, c0, c1, c2) at every ASV candidate threshold. */
tdcf_status tdcf_coefficient_curves(const tdcf_cost_model* model,
                                    const tdcf_score_set* asv,
                                    tdcf_coefficient_row** out,
                                    int64_t* out_count);

/* ---- Gaussian score simulator / analytic oracle ----------------------- */

/* Standard normal CDF. */
double tdcf_normal_cdf(double x);

/* Inverse standard normal CDF; p in [0,1], 0 and 1 map to -/+infinity. */
tdcf_status tdcf_normal_quantile(double p, double* out);

/* mu = 2 * [Phi^-1(1 - p_e)]^2; p_e strictly inside (0, 0.5). */
tdcf_status tdcf_mu_from_eer(double p_e, double* out);

/* Closed-form error rates of the tied-Gaussian score model. */
tdcf_status tdcf_analytic_asv_rates(double mu_asv, double xi, double tau,
                                    tdcf_asv_rates* out);
tdcf_status tdcf_analytic_cm_rates(double mu_cm, double tau,
                                   tdcf_cm_rates* out);

/* Draws labeled score sets from the simulator. *cm_out is set to NULL when
 * n_spoof == 0. Spoof records carry attack id "SIM". */
tdcf_status tdcf_simulate(const tdcf_sim_config* config,
                          tdcf_score_set** asv_out, tdcf_score_set** cm_out);

/* t-DCF of the analytic rates at one threshold pair, in both variants. */
tdcf_status tdcf_analytic_tdcf(const tdcf_sim_config* config,
                               const tdcf_cost_model* model, double tau_asv,
                               double tau_cm, tdcf_report* unconstrained_out,
                               tdcf_report* constrained_out,
                               tdcf_coefficients* coeffs_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TDCF_TDCF_H_ */
