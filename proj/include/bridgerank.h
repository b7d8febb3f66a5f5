/* Copyright 2026 The bridgerank Authors
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

/* C API of the bridgerank shared library.
 *
 * bridgerank fits an intercept-plus-factor model to crowd votes on notes,
 * scores each note by its fitted intercept (its "bridging" score: approval
 * that viewpoint alignment cannot explain), classifies notes against a
 * display threshold, and ships a polarized-population simulator plus a
 * sybil-attack harness for evaluating the mechanism.
 *
 * Conventions: every function returns br_status; BR_OK is zero. Out
 * parameters are written only on success. br_last_error() returns a
 * thread-local message for the most recent failure on the calling thread.
 * Objects returned through br_*_free-able handles are owned by the caller.
 */

#ifndef BRIDGERANK_H
#define BRIDGERANK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
  BR_OK = 0,
  BR_ERROR_INVALID_ARGUMENT = 1, /* null handle, bad enum value, ... */
  BR_ERROR_CONTRACT = 2,         /* precondition violated */
  BR_ERROR_PARSE = 3,            /* malformed input text */
  BR_ERROR_IO = 4,               /* filesystem failure */
  BR_ERROR_TRAINING = 5,         /* optimization diverged */
  BR_ERROR_UNKNOWN = 6
} br_status;

/* Message for the most recent error on this thread; empty string if none. */
const char* br_last_error(void);
const char* br_status_name(br_status status);

/* ---- datasets -------------------------------------------------------- */

typedef struct br_dataset br_dataset;

/* Duplicate (user, note) policy for br_dataset_read. */
enum { BR_DUPLICATES_REJECT = 0, BR_DUPLICATES_LAST_WRITE_WINS = 1 };

br_status br_dataset_read(const char* path, int duplicate_policy, br_dataset** out);
br_status br_dataset_write(const br_dataset* data, const char* path);
br_status br_dataset_counts(const br_dataset* data, uint64_t* users, uint64_t* notes,
                            uint64_t* votes);
void br_dataset_free(br_dataset* data);

/* ---- training -------------------------------------------------------- */

typedef struct br_train_config {
  uint64_t seed;
  double init_scale;
  double learning_rate;
  uint32_t max_epochs;
  double tolerance;
  double lambda_intercept;
  double lambda_factor;
} br_train_config;

typedef struct br_train_report {
  uint32_t epochs_run;
  double final_loss;
  int converged;
} br_train_report;

typedef struct br_model br_model;

void br_train_config_defaults(br_train_config* cfg);

/* Fits model parameters to the dataset; deterministic per (data, cfg).
 * `report` may be NULL. */
br_status br_train(const br_dataset* data, const br_train_config* cfg, br_model** out,
                   br_train_report* report);
br_status br_model_write(const br_model* model, const char* path);
br_status br_model_read(const char* path, br_model** out);
void br_model_free(br_model* model);

/* ---- scoring --------------------------------------------------------- */

typedef struct br_thresholds {
  double display_threshold;
  uint32_t min_votes;
  int factor_penalty;
} br_thresholds;

typedef struct br_scores br_scores;

void br_thresholds_defaults(br_thresholds* thresholds);

/* Scores every dataset note by its fitted intercept, sorted descending
 * (ties by note id), and classifies each row. The model must cover every
 * dataset entity (matched by id). */
br_status br_score(const br_model* model, const br_dataset* data,
                   const br_thresholds* thresholds, br_scores** out);
br_status br_scores_write(const br_scores* scores, const char* path);
br_status br_scores_read(const char* path, br_scores** out);
br_status br_scores_count(const br_scores* scores, uint64_t* count);
/* note_id stays owned by `scores`. Any out pointer may be NULL. */
br_status br_scores_row(const br_scores* scores, uint64_t index, const char** note_id,
                        double* intercept, double* factor, uint64_t* vote_count,
                        const char** status, uint64_t* rank);
void br_scores_free(br_scores* scores);

/* ---- simulation and attack harness ----------------------------------- */

/* Archetype rows: bridging, partisan-A, partisan-B. Group columns: A, B. */
typedef struct br_sim_config {
  uint32_t users_per_group;
  uint32_t notes_per_archetype;
  uint32_t votes_per_note;
  double approval_probability[3][2];
  uint64_t seed;
} br_sim_config;

enum { BR_GROUP_A = 0, BR_GROUP_B = 1 };

typedef struct br_attack_config {
  const char* target_note;
  uint32_t injected_raters;
  int injected_rating; /* +1 or -1 */
  int rater_group_alignment;
  uint32_t camouflage_votes_per_sybil;
  /* Archetype-by-group approval table the camouflage votes mimic; pass the
   * generating config's table when attacking simulated data. */
  double camouflage_probability[3][2];
} br_attack_config;

typedef struct br_truth br_truth;

void br_sim_config_defaults(br_sim_config* cfg);
void br_attack_config_defaults(br_attack_config* cfg);

br_status br_simulate(const br_sim_config* cfg, br_dataset** data, br_truth** truth);
br_status br_inject_attack(const br_dataset* data, const br_truth* truth,
                           const br_attack_config* attack, uint64_t seed,
                           br_dataset** out);
br_status br_truth_read(const char* path, br_truth** out);
br_status br_truth_write(const br_truth* truth, const char* path);
br_status br_truth_note_count(const br_truth* truth, uint64_t* count);
/* Strings stay owned by `truth`. Archetypes are "BRIDGING", "PARTISAN_A",
 * "PARTISAN_B". */
br_status br_truth_note(const br_truth* truth, uint64_t index, const char** note_id,
                        const char** archetype);
void br_truth_free(br_truth* truth);

typedef struct br_recovery_metrics {
  double separation_margin;
  double auc;
  double mean_abs_factor_bridging;
  double mean_abs_factor_partisan_a;
  double mean_abs_factor_partisan_b;
  double mean_abs_factor_partisan;
} br_recovery_metrics;

br_status br_evaluate(const br_scores* scores, const br_truth* truth,
                      br_recovery_metrics* out);
br_status br_report_write(const br_scores* scores, const br_truth* truth,
                          const char* path);

/* ---- utilities ------------------------------------------------------- */

enum { BR_CONVERT_DROP = 0, BR_CONVERT_TRI = 1 };

typedef struct br_convert_stats {
  uint64_t rows_read;
  uint64_t rows_written;
  uint64_t dropped_somewhat;
  uint64_t dropped_unknown;
} br_convert_stats;

/* Adapts a public notes-ratings dump to the votes format. `stats` may be
 * NULL. */
br_status br_convert_public_data(const char* ratings_path, const char* out_path,
                                 int mode, br_convert_stats* stats);

/* Compares analytic gradients against central finite differences on a
 * seeded random instance; writes the max relative error. */
br_status br_gradient_check(uint64_t seed, double* max_rel_error);

#ifdef __cplusplus
}
#endif

#endif /* BRIDGERANK_H */
