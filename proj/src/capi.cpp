// Copyright 2026 The bridgerank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bridgerank.h"

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bridgerank/data_io.hpp"
#include "bridgerank/dataset.hpp"
#include "bridgerank/errors.hpp"
#include "bridgerank/model.hpp"
#include "bridgerank/scoring.hpp"
#include "bridgerank/simulator.hpp"
#include "bridgerank/trainer.hpp"

// Thin extern-C shell over the C++ core: opaque handles own the core values,
// every entry point catches and maps exceptions to status codes, and the
// message lands in a thread-local buffer for br_last_error().

struct br_dataset {
  bridgerank::RatingsDataset data;
};

struct br_model {
  bridgerank::ParamsTable table;
};

struct br_scores {
  std::vector<bridgerank::ScoreRow> rows;
};

struct br_truth {
  bridgerank::GroundTruth truth;
};

namespace {

thread_local std::string t_last_error;

br_status set_error(br_status code, const char* what) {
  t_last_error = what;
  return code;
}

template <typename Fn>
br_status guarded(Fn&& fn) {
  try {
    fn();
    return BR_OK;
  } catch (const bridgerank::ParseError& e) {
    return set_error(BR_ERROR_PARSE, e.what());
  } catch (const bridgerank::IoError& e) {
    return set_error(BR_ERROR_IO, e.what());
  } catch (const bridgerank::TrainingError& e) {
    return set_error(BR_ERROR_TRAINING, e.what());
  } catch (const bridgerank::ContractError& e) {
    return set_error(BR_ERROR_CONTRACT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(BR_ERROR_CONTRACT, e.what());
  } catch (const std::exception& e) {
    return set_error(BR_ERROR_UNKNOWN, e.what());
  } catch (...) {
    return set_error(BR_ERROR_UNKNOWN, "unknown error");
  }
}

br_status require(bool ok, const char* what) {
  return ok ? BR_OK : set_error(BR_ERROR_INVALID_ARGUMENT, what);
}

bridgerank::ParamsTable table_from(const bridgerank::ModelParams& params,
                                   const bridgerank::RatingsDataset& data) {
  bridgerank::ParamsTable table;
  table.users.reserve(data.user_count());
  for (std::size_t u = 0; u < data.user_count(); ++u) {
    table.users.push_back(
        {data.user_id(u), params.user_intercepts[u], params.user_factors[u]});
  }
  table.notes.reserve(data.note_count());
  for (std::size_t n = 0; n < data.note_count(); ++n) {
    table.notes.push_back(
        {data.note_id(n), params.note_intercepts[n], params.note_factors[n]});
  }
  return table;
}

std::vector<bridgerank::NoteScore> scores_from_rows(
    const std::vector<bridgerank::ScoreRow>& rows) {
  std::vector<bridgerank::NoteScore> scores;
  scores.reserve(rows.size());
  for (const auto& row : rows) {
    scores.push_back({row.note_id, row.intercept, row.factor, row.vote_count});
  }
  return scores;
}

}  // namespace

extern "C" {

const char* br_last_error(void) { return t_last_error.c_str(); }

const char* br_status_name(br_status status) {
  switch (status) {
    case BR_OK:
      return "ok";
    case BR_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case BR_ERROR_CONTRACT:
      return "contract error";
    case BR_ERROR_PARSE:
      return "parse error";
    case BR_ERROR_IO:
      return "io error";
    case BR_ERROR_TRAINING:
      return "training error";
    case BR_ERROR_UNKNOWN:
      return "unknown error";
  }
  return "unknown error";
}

br_status br_dataset_read(const char* path, int duplicate_policy, br_dataset** out) {
  if (auto bad = require(path && out, "br_dataset_read: null argument")) {
    return bad;
  }
  if (duplicate_policy != BR_DUPLICATES_REJECT &&
      duplicate_policy != BR_DUPLICATES_LAST_WRITE_WINS) {
    return set_error(BR_ERROR_INVALID_ARGUMENT,
                     "br_dataset_read: bad duplicate policy");
  }
  return guarded([&] {
    const auto policy = duplicate_policy == BR_DUPLICATES_REJECT
                            ? bridgerank::DuplicatePolicy::kReject
                            : bridgerank::DuplicatePolicy::kLastWriteWins;
    *out = new br_dataset{bridgerank::read_votes(path, policy)};
  });
}

br_status br_dataset_write(const br_dataset* data, const char* path) {
  if (auto bad = require(data && path, "br_dataset_write: null argument")) {
    return bad;
  }
  return guarded([&] { bridgerank::write_votes(data->data, path); });
}

br_status br_dataset_counts(const br_dataset* data, uint64_t* users, uint64_t* notes,
                            uint64_t* votes) {
  if (auto bad = require(data != nullptr, "br_dataset_counts: null dataset")) {
    return bad;
  }
  if (users) {
    *users = data->data.user_count();
  }
  if (notes) {
    *notes = data->data.note_count();
  }
  if (votes) {
    *votes = data->data.vote_count();
  }
  return BR_OK;
}

void br_dataset_free(br_dataset* data) { delete data; }

void br_train_config_defaults(br_train_config* cfg) {
  if (!cfg) {
    return;
  }
  const bridgerank::TrainConfig defaults;
  cfg->seed = defaults.seed;
  cfg->init_scale = defaults.init_scale;
  cfg->learning_rate = defaults.learning_rate;
  cfg->max_epochs = defaults.max_epochs;
  cfg->tolerance = defaults.tolerance;
  cfg->lambda_intercept = defaults.reg.lambda_intercept;
  cfg->lambda_factor = defaults.reg.lambda_factor;
}

br_status br_train(const br_dataset* data, const br_train_config* cfg, br_model** out,
                   br_train_report* report) {
  if (auto bad = require(data && cfg && out, "br_train: null argument")) {
    return bad;
  }
  return guarded([&] {
    bridgerank::TrainConfig train_cfg;
    train_cfg.seed = cfg->seed;
    train_cfg.init_scale = cfg->init_scale;
    train_cfg.learning_rate = cfg->learning_rate;
    train_cfg.max_epochs = cfg->max_epochs;
    train_cfg.tolerance = cfg->tolerance;
    train_cfg.reg.lambda_intercept = cfg->lambda_intercept;
    train_cfg.reg.lambda_factor = cfg->lambda_factor;
    auto [params, train_report] = bridgerank::fit(data->data, train_cfg);
    if (report) {
      report->epochs_run = train_report.epochs_run;
      report->final_loss = train_report.final_loss;
      report->converged = train_report.converged ? 1 : 0;
    }
    *out = new br_model{table_from(params, data->data)};
  });
}

br_status br_model_write(const br_model* model, const char* path) {
  if (auto bad = require(model && path, "br_model_write: null argument")) {
    return bad;
  }
  return guarded([&] { bridgerank::write_params(model->table, path); });
}

br_status br_model_read(const char* path, br_model** out) {
  if (auto bad = require(path && out, "br_model_read: null argument")) {
    return bad;
  }
  return guarded([&] { *out = new br_model{bridgerank::read_params(path)}; });
}

void br_model_free(br_model* model) { delete model; }

void br_thresholds_defaults(br_thresholds* thresholds) {
  if (!thresholds) {
    return;
  }
  const bridgerank::Thresholds defaults;
  thresholds->display_threshold = defaults.display_threshold;
  thresholds->min_votes = defaults.min_votes;
  thresholds->factor_penalty = defaults.factor_penalty ? 1 : 0;
}

br_status br_score(const br_model* model, const br_dataset* data,
                   const br_thresholds* thresholds, br_scores** out) {
  if (auto bad = require(model && data && thresholds && out, "br_score: null argument")) {
    return bad;
  }
  return guarded([&] {
    const bridgerank::ModelParams params =
        bridgerank::align_params(model->table, data->data);
    const auto scores = bridgerank::score_notes(params, data->data);
    bridgerank::Thresholds th;
    th.display_threshold = thresholds->display_threshold;
    th.min_votes = thresholds->min_votes;
    th.factor_penalty = thresholds->factor_penalty != 0;
    *out = new br_scores{bridgerank::make_score_rows(scores, th)};
  });
}

br_status br_scores_write(const br_scores* scores, const char* path) {
  if (auto bad = require(scores && path, "br_scores_write: null argument")) {
    return bad;
  }
  return guarded([&] { bridgerank::write_scores(scores->rows, path); });
}

br_status br_scores_read(const char* path, br_scores** out) {
  if (auto bad = require(path && out, "br_scores_read: null argument")) {
    return bad;
  }
  return guarded([&] { *out = new br_scores{bridgerank::read_scores(path)}; });
}

br_status br_scores_count(const br_scores* scores, uint64_t* count) {
  if (auto bad = require(scores && count, "br_scores_count: null argument")) {
    return bad;
  }
  *count = scores->rows.size();
  return BR_OK;
}

br_status br_scores_row(const br_scores* scores, uint64_t index, const char** note_id,
                        double* intercept, double* factor, uint64_t* vote_count,
                        const char** status, uint64_t* rank) {
  if (auto bad = require(scores != nullptr, "br_scores_row: null scores")) {
    return bad;
  }
  if (index >= scores->rows.size()) {
    return set_error(BR_ERROR_INVALID_ARGUMENT, "br_scores_row: index out of range");
  }
  const auto& row = scores->rows[static_cast<std::size_t>(index)];
  if (note_id) {
    *note_id = row.note_id.c_str();
  }
  if (intercept) {
    *intercept = row.intercept;
  }
  if (factor) {
    *factor = row.factor;
  }
  if (vote_count) {
    *vote_count = row.vote_count;
  }
  if (status) {
    *status = bridgerank::to_string(row.status).data();
  }
  if (rank) {
    *rank = row.rank;
  }
  return BR_OK;
}

void br_scores_free(br_scores* scores) { delete scores; }

void br_sim_config_defaults(br_sim_config* cfg) {
  if (!cfg) {
    return;
  }
  const bridgerank::SimulationConfig defaults;
  cfg->users_per_group = defaults.users_per_group;
  cfg->notes_per_archetype = defaults.notes_per_archetype;
  cfg->votes_per_note = defaults.votes_per_note;
  for (int a = 0; a < 3; ++a) {
    for (int g = 0; g < 2; ++g) {
      cfg->approval_probability[a][g] = defaults.approval_probability[a][g];
    }
  }
  cfg->seed = defaults.seed;
}

void br_attack_config_defaults(br_attack_config* cfg) {
  if (!cfg) {
    return;
  }
  const bridgerank::AttackConfig defaults;
  cfg->target_note = nullptr;
  cfg->injected_raters = defaults.injected_raters;
  cfg->injected_rating = defaults.injected_rating;
  cfg->rater_group_alignment = static_cast<int>(defaults.rater_group_alignment);
  cfg->camouflage_votes_per_sybil = defaults.camouflage_votes_per_sybil;
  for (int a = 0; a < 3; ++a) {
    for (int g = 0; g < 2; ++g) {
      cfg->camouflage_probability[a][g] = defaults.camouflage_probability[a][g];
    }
  }
}

br_status br_simulate(const br_sim_config* cfg, br_dataset** data, br_truth** truth) {
  if (auto bad = require(cfg && data && truth, "br_simulate: null argument")) {
    return bad;
  }
  return guarded([&] {
    bridgerank::SimulationConfig sim_cfg;
    sim_cfg.users_per_group = cfg->users_per_group;
    sim_cfg.notes_per_archetype = cfg->notes_per_archetype;
    sim_cfg.votes_per_note = cfg->votes_per_note;
    for (int a = 0; a < 3; ++a) {
      for (int g = 0; g < 2; ++g) {
        sim_cfg.approval_probability[a][g] = cfg->approval_probability[a][g];
      }
    }
    sim_cfg.seed = cfg->seed;
    auto [dataset, ground_truth] = bridgerank::generate(sim_cfg);
    *data = new br_dataset{std::move(dataset)};
    *truth = new br_truth{std::move(ground_truth)};
  });
}

br_status br_inject_attack(const br_dataset* data, const br_truth* truth,
                           const br_attack_config* attack, uint64_t seed,
                           br_dataset** out) {
  if (auto bad =
          require(data && truth && attack && out, "br_inject_attack: null argument")) {
    return bad;
  }
  if (!attack->target_note) {
    return set_error(BR_ERROR_INVALID_ARGUMENT, "br_inject_attack: null target note");
  }
  if (attack->rater_group_alignment != BR_GROUP_A &&
      attack->rater_group_alignment != BR_GROUP_B) {
    return set_error(BR_ERROR_INVALID_ARGUMENT,
                     "br_inject_attack: bad group alignment");
  }
  return guarded([&] {
    bridgerank::AttackConfig attack_cfg;
    attack_cfg.target_note = attack->target_note;
    attack_cfg.injected_raters = attack->injected_raters;
    attack_cfg.injected_rating = attack->injected_rating;
    attack_cfg.rater_group_alignment =
        static_cast<bridgerank::Group>(attack->rater_group_alignment);
    attack_cfg.camouflage_votes_per_sybil = attack->camouflage_votes_per_sybil;
    for (int a = 0; a < 3; ++a) {
      for (int g = 0; g < 2; ++g) {
        attack_cfg.camouflage_probability[a][g] = attack->camouflage_probability[a][g];
      }
    }
    *out = new br_dataset{
        bridgerank::inject_attack(data->data, truth->truth, attack_cfg, seed)};
  });
}

br_status br_truth_read(const char* path, br_truth** out) {
  if (auto bad = require(path && out, "br_truth_read: null argument")) {
    return bad;
  }
  return guarded([&] { *out = new br_truth{bridgerank::read_truth(path)}; });
}

br_status br_truth_write(const br_truth* truth, const char* path) {
  if (auto bad = require(truth && path, "br_truth_write: null argument")) {
    return bad;
  }
  return guarded([&] { bridgerank::write_truth(truth->truth, path); });
}

br_status br_truth_note_count(const br_truth* truth, uint64_t* count) {
  if (auto bad = require(truth && count, "br_truth_note_count: null argument")) {
    return bad;
  }
  *count = truth->truth.note_archetypes.size();
  return BR_OK;
}

br_status br_truth_note(const br_truth* truth, uint64_t index, const char** note_id,
                        const char** archetype) {
  if (auto bad = require(truth != nullptr, "br_truth_note: null truth")) {
    return bad;
  }
  if (index >= truth->truth.note_archetypes.size()) {
    return set_error(BR_ERROR_INVALID_ARGUMENT, "br_truth_note: index out of range");
  }
  const auto& entry = truth->truth.note_archetypes[static_cast<std::size_t>(index)];
  if (note_id) {
    *note_id = entry.first.c_str();
  }
  if (archetype) {
    *archetype = bridgerank::to_string(entry.second).data();
  }
  return BR_OK;
}

void br_truth_free(br_truth* truth) { delete truth; }

br_status br_evaluate(const br_scores* scores, const br_truth* truth,
                      br_recovery_metrics* out) {
  if (auto bad = require(scores && truth && out, "br_evaluate: null argument")) {
    return bad;
  }
  return guarded([&] {
    const auto note_scores = scores_from_rows(scores->rows);
    const bridgerank::RecoveryMetrics metrics =
        bridgerank::evaluate_recovery(note_scores, truth->truth);
    out->separation_margin = metrics.separation_margin;
    out->auc = metrics.auc;
    out->mean_abs_factor_bridging = metrics.mean_abs_factor_bridging;
    out->mean_abs_factor_partisan_a = metrics.mean_abs_factor_partisan_a;
    out->mean_abs_factor_partisan_b = metrics.mean_abs_factor_partisan_b;
    out->mean_abs_factor_partisan = metrics.mean_abs_factor_partisan;
  });
}

br_status br_report_write(const br_scores* scores, const br_truth* truth,
                          const char* path) {
  if (auto bad = require(scores && truth && path, "br_report_write: null argument")) {
    return bad;
  }
  return guarded([&] {
    const auto note_scores = scores_from_rows(scores->rows);
    const bridgerank::RecoveryMetrics metrics =
        bridgerank::evaluate_recovery(note_scores, truth->truth);
    bridgerank::write_report(metrics, scores->rows, truth->truth, path);
  });
}

br_status br_convert_public_data(const char* ratings_path, const char* out_path,
                                 int mode, br_convert_stats* stats) {
  if (auto bad =
          require(ratings_path && out_path, "br_convert_public_data: null argument")) {
    return bad;
  }
  if (mode != BR_CONVERT_DROP && mode != BR_CONVERT_TRI) {
    return set_error(BR_ERROR_INVALID_ARGUMENT, "br_convert_public_data: bad mode");
  }
  return guarded([&] {
    const auto convert_mode = mode == BR_CONVERT_DROP ? bridgerank::ConvertMode::kDrop
                                                      : bridgerank::ConvertMode::kTri;
    const bridgerank::ConvertStats result =
        bridgerank::convert_public_data(ratings_path, out_path, convert_mode);
    if (stats) {
      stats->rows_read = result.rows_read;
      stats->rows_written = result.rows_written;
      stats->dropped_somewhat = result.dropped_somewhat;
      stats->dropped_unknown = result.dropped_unknown;
    }
  });
}

br_status br_gradient_check(uint64_t seed, double* max_rel_error) {
  if (auto bad = require(max_rel_error != nullptr, "br_gradient_check: null output")) {
    return bad;
  }
  return guarded([&] { *max_rel_error = bridgerank::gradient_check(seed); });
}

}  // extern "C"
