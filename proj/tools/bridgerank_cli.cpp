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

// Batch front end over the bridgerank shared library (C API only).
//
// Exit codes: 0 success, 1 usage error, 2 data/contract error. All
// randomness flows from the single --seed, so identical invocations write
// byte-identical outputs.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bridgerank.h"

namespace fs = std::filesystem;

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

void check(br_status status, const std::string& context) {
  if (status != BR_OK) {
    throw CliError{2, context + ": " + br_last_error()};
  }
}

// RAII wrappers over the opaque C handles.
using DatasetPtr = std::unique_ptr<br_dataset, decltype(&br_dataset_free)>;
using ModelPtr = std::unique_ptr<br_model, decltype(&br_model_free)>;
using ScoresPtr = std::unique_ptr<br_scores, decltype(&br_scores_free)>;
using TruthPtr = std::unique_ptr<br_truth, decltype(&br_truth_free)>;

DatasetPtr read_dataset(const std::string& path) {
  br_dataset* raw = nullptr;
  check(br_dataset_read(path.c_str(), BR_DUPLICATES_REJECT, &raw),
        "reading votes '" + path + "'");
  return DatasetPtr(raw, &br_dataset_free);
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

// ---------------------------------------------------------------------------
// Experiment configuration: `key = value` lines, full-line # comments,
// unknown keys rejected. One flat schema shared by every subcommand; each
// stage reads the keys it needs.

struct ExperimentConfig {
  br_train_config train{};
  br_thresholds thresholds{};
  br_sim_config sim{};
  std::string attack_target_note;  // empty: first PARTISAN_B note
  std::uint32_t attack_injected_raters = 0;
  int attack_injected_rating = 1;
  int attack_alignment = BR_GROUP_B;
  std::uint32_t attack_camouflage = 0;

  static ExperimentConfig defaults() {
    ExperimentConfig cfg;
    br_train_config_defaults(&cfg.train);
    br_thresholds_defaults(&cfg.thresholds);
    br_sim_config_defaults(&cfg.sim);
    br_attack_config attack;
    br_attack_config_defaults(&attack);
    cfg.attack_injected_raters = attack.injected_raters;
    cfg.attack_injected_rating = attack.injected_rating;
    cfg.attack_alignment = attack.rater_group_alignment;
    cfg.attack_camouflage = attack.camouflage_votes_per_sybil;
    return cfg;
  }
};

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

double parse_real(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw CliError{2, "config: key '" + key + "' has invalid real '" + value + "'"};
  }
}

std::uint64_t parse_unsigned(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw CliError{2, "config: key '" + key + "' has invalid integer '" + value + "'"};
  }
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  auto as_u32 = [&](std::uint32_t& out) {
    out = static_cast<std::uint32_t>(parse_unsigned(value, key));
  };
  if (key == "seed") {
    const std::uint64_t seed = parse_unsigned(value, key);
    cfg.train.seed = seed;
    cfg.sim.seed = seed;
  } else if (key == "init_scale") {
    cfg.train.init_scale = parse_real(value, key);
  } else if (key == "learning_rate") {
    cfg.train.learning_rate = parse_real(value, key);
  } else if (key == "max_epochs") {
    as_u32(cfg.train.max_epochs);
  } else if (key == "tolerance") {
    cfg.train.tolerance = parse_real(value, key);
  } else if (key == "lambda_intercept") {
    cfg.train.lambda_intercept = parse_real(value, key);
  } else if (key == "lambda_factor") {
    cfg.train.lambda_factor = parse_real(value, key);
  } else if (key == "display_threshold") {
    cfg.thresholds.display_threshold = parse_real(value, key);
  } else if (key == "min_votes") {
    as_u32(cfg.thresholds.min_votes);
  } else if (key == "factor_penalty") {
    if (value != "true" && value != "false") {
      throw CliError{2, "config: key 'factor_penalty' expects true or false"};
    }
    cfg.thresholds.factor_penalty = value == "true" ? 1 : 0;
  } else if (key == "users_per_group") {
    as_u32(cfg.sim.users_per_group);
  } else if (key == "notes_per_archetype") {
    as_u32(cfg.sim.notes_per_archetype);
  } else if (key == "votes_per_note") {
    as_u32(cfg.sim.votes_per_note);
  } else if (key == "approve_bridging_a") {
    cfg.sim.approval_probability[0][0] = parse_real(value, key);
  } else if (key == "approve_bridging_b") {
    cfg.sim.approval_probability[0][1] = parse_real(value, key);
  } else if (key == "approve_partisan_a_a") {
    cfg.sim.approval_probability[1][0] = parse_real(value, key);
  } else if (key == "approve_partisan_a_b") {
    cfg.sim.approval_probability[1][1] = parse_real(value, key);
  } else if (key == "approve_partisan_b_a") {
    cfg.sim.approval_probability[2][0] = parse_real(value, key);
  } else if (key == "approve_partisan_b_b") {
    cfg.sim.approval_probability[2][1] = parse_real(value, key);
  } else if (key == "attack_target_note") {
    cfg.attack_target_note = value;
  } else if (key == "attack_injected_raters") {
    as_u32(cfg.attack_injected_raters);
  } else if (key == "attack_injected_rating") {
    const double rating = parse_real(value, key);
    if (rating != 1.0 && rating != -1.0) {
      throw CliError{2, "config: attack_injected_rating must be 1 or -1"};
    }
    cfg.attack_injected_rating = static_cast<int>(rating);
  } else if (key == "attack_rater_group_alignment") {
    if (value == "A") {
      cfg.attack_alignment = BR_GROUP_A;
    } else if (value == "B") {
      cfg.attack_alignment = BR_GROUP_B;
    } else {
      throw CliError{2, "config: attack_rater_group_alignment must be A or B"};
    }
  } else if (key == "attack_camouflage_votes_per_sybil") {
    as_u32(cfg.attack_camouflage);
  } else {
    throw CliError{2, "config: unknown key '" + key + "'"};
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CliError{2, "cannot open config file '" + path + "'"};
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') {
      continue;
    }
    const auto equals = stripped.find('=');
    if (equals == std::string::npos) {
      throw CliError{2, path + ":" + std::to_string(line_number) +
                            ": expected 'key = value'"};
    }
    const std::string key = trim(stripped.substr(0, equals));
    const std::string value = trim(stripped.substr(equals + 1));
    if (key.empty()) {
      throw CliError{2, path + ":" + std::to_string(line_number) + ": empty key"};
    }
    try {
      apply_config_entry(cfg, key, value);
    } catch (CliError& e) {
      e.message = path + ":" + std::to_string(line_number) + ": " + e.message;
      throw;
    }
  }
}

enum ConfigSections : unsigned {
  kEchoTrain = 1u << 0,
  kEchoThresholds = 1u << 1,
  kEchoSim = 1u << 2,
  kEchoAttack = 1u << 3,
};

// Effective-config provenance record, written next to every output
// directory. Canonical key order, values exactly re-parseable.
std::string render_config(const ExperimentConfig& cfg, unsigned sections) {
  std::ostringstream out;
  out << "# effective configuration\n";
  if (sections & (kEchoTrain | kEchoSim)) {
    out << "seed = " << cfg.train.seed << "\n";
  }
  if (sections & kEchoTrain) {
    out << "init_scale = " << format_real(cfg.train.init_scale) << "\n";
    out << "learning_rate = " << format_real(cfg.train.learning_rate) << "\n";
    out << "max_epochs = " << cfg.train.max_epochs << "\n";
    out << "tolerance = " << format_real(cfg.train.tolerance) << "\n";
    out << "lambda_intercept = " << format_real(cfg.train.lambda_intercept) << "\n";
    out << "lambda_factor = " << format_real(cfg.train.lambda_factor) << "\n";
  }
  if (sections & kEchoThresholds) {
    out << "display_threshold = " << format_real(cfg.thresholds.display_threshold)
        << "\n";
    out << "min_votes = " << cfg.thresholds.min_votes << "\n";
    out << "factor_penalty = " << (cfg.thresholds.factor_penalty ? "true" : "false")
        << "\n";
  }
  if (sections & kEchoSim) {
    out << "users_per_group = " << cfg.sim.users_per_group << "\n";
    out << "notes_per_archetype = " << cfg.sim.notes_per_archetype << "\n";
    out << "votes_per_note = " << cfg.sim.votes_per_note << "\n";
    static constexpr const char* kProbabilityKeys[3][2] = {
        {"approve_bridging_a", "approve_bridging_b"},
        {"approve_partisan_a_a", "approve_partisan_a_b"},
        {"approve_partisan_b_a", "approve_partisan_b_b"}};
    for (int a = 0; a < 3; ++a) {
      for (int g = 0; g < 2; ++g) {
        out << kProbabilityKeys[a][g] << " = "
            << format_real(cfg.sim.approval_probability[a][g]) << "\n";
      }
    }
  }
  if (sections & kEchoAttack) {
    out << "attack_target_note = " << cfg.attack_target_note << "\n";
    out << "attack_injected_raters = " << cfg.attack_injected_raters << "\n";
    out << "attack_injected_rating = " << cfg.attack_injected_rating << "\n";
    out << "attack_rater_group_alignment = "
        << (cfg.attack_alignment == BR_GROUP_A ? "A" : "B") << "\n";
    out << "attack_camouflage_votes_per_sybil = " << cfg.attack_camouflage << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Output handling

void refuse_existing(const fs::path& path, bool force) {
  if (!force && fs::exists(path)) {
    throw CliError{2, "refusing to overwrite '" + path.string() +
                          "' (use --force to allow)"};
  }
}

fs::path prepare_out_dir(const std::string& out_dir, bool force,
                         const std::vector<std::string>& outputs) {
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw CliError{2, "cannot create output directory '" + out_dir + "': " +
                          ec.message()};
  }
  for (const auto& name : outputs) {
    refuse_existing(dir / name, force);
  }
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw CliError{2, "cannot write '" + path.string() + "'"};
  }
}

std::string resolve_attack_target(const ExperimentConfig& cfg, const br_truth* truth) {
  if (!cfg.attack_target_note.empty()) {
    return cfg.attack_target_note;
  }
  uint64_t count = 0;
  check(br_truth_note_count(truth, &count), "reading ground truth");
  for (uint64_t i = 0; i < count; ++i) {
    const char* id = nullptr;
    const char* archetype = nullptr;
    check(br_truth_note(truth, i, &id, &archetype), "reading ground truth");
    if (std::string(archetype) == "PARTISAN_B") {
      return id;
    }
  }
  throw CliError{2, "attack: no PARTISAN_B note to target and none configured"};
}

br_attack_config attack_config_of(const ExperimentConfig& cfg,
                                  const std::string& target) {
  br_attack_config attack;
  br_attack_config_defaults(&attack);
  attack.target_note = target.c_str();
  attack.injected_raters = cfg.attack_injected_raters;
  attack.injected_rating = cfg.attack_injected_rating;
  attack.rater_group_alignment = cfg.attack_alignment;
  attack.camouflage_votes_per_sybil = cfg.attack_camouflage;
  for (int a = 0; a < 3; ++a) {
    for (int g = 0; g < 2; ++g) {
      attack.camouflage_probability[a][g] = cfg.sim.approval_probability[a][g];
    }
  }
  return attack;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_train(const std::string& votes_path, const std::string& out_dir,
              const std::string& config_path, const std::uint64_t* seed, bool force) {
  ExperimentConfig cfg = ExperimentConfig::defaults();
  if (!config_path.empty()) {
    load_config_file(cfg, config_path);
  }
  if (seed) {
    cfg.train.seed = *seed;
    cfg.sim.seed = *seed;
  }
  const auto data = read_dataset(votes_path);
  br_model* model_raw = nullptr;
  br_train_report report;
  check(br_train(data.get(), &cfg.train, &model_raw, &report), "training");
  const ModelPtr model(model_raw, &br_model_free);

  const fs::path dir = prepare_out_dir(out_dir, force, {"params.tsv", "config.echo"});
  check(br_model_write(model.get(), (dir / "params.tsv").string().c_str()),
        "writing params");
  write_text(dir / "config.echo", render_config(cfg, kEchoTrain));
  std::printf("trained: epochs=%u final_loss=%s converged=%s\n", report.epochs_run,
              format_real(report.final_loss).c_str(),
              report.converged ? "yes" : "no");
  return 0;
}

int run_score(const std::string& params_path, const std::string& votes_path,
              const std::string& out_path, const double* threshold,
              const std::uint32_t* min_votes, bool force) {
  br_thresholds thresholds;
  br_thresholds_defaults(&thresholds);
  if (threshold) {
    thresholds.display_threshold = *threshold;
  }
  if (min_votes) {
    thresholds.min_votes = *min_votes;
  }
  br_model* model_raw = nullptr;
  check(br_model_read(params_path.c_str(), &model_raw),
        "reading params '" + params_path + "'");
  const ModelPtr model(model_raw, &br_model_free);
  const auto data = read_dataset(votes_path);
  br_scores* scores_raw = nullptr;
  check(br_score(model.get(), data.get(), &thresholds, &scores_raw), "scoring");
  const ScoresPtr scores(scores_raw, &br_scores_free);
  refuse_existing(out_path, force);
  check(br_scores_write(scores.get(), out_path.c_str()), "writing scores");
  uint64_t count = 0;
  check(br_scores_count(scores.get(), &count), "scoring");
  std::printf("scored %" PRIu64 " notes -> %s\n", count, out_path.c_str());
  return 0;
}

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 std::uint64_t seed, bool force) {
  ExperimentConfig cfg = ExperimentConfig::defaults();
  load_config_file(cfg, config_path);
  cfg.train.seed = seed;
  cfg.sim.seed = seed;
  br_dataset* data_raw = nullptr;
  br_truth* truth_raw = nullptr;
  check(br_simulate(&cfg.sim, &data_raw, &truth_raw), "simulating");
  const DatasetPtr data(data_raw, &br_dataset_free);
  const TruthPtr truth(truth_raw, &br_truth_free);

  const fs::path dir =
      prepare_out_dir(out_dir, force, {"votes.tsv", "truth.tsv", "config.echo"});
  check(br_dataset_write(data.get(), (dir / "votes.tsv").string().c_str()),
        "writing votes");
  check(br_truth_write(truth.get(), (dir / "truth.tsv").string().c_str()),
        "writing truth");
  write_text(dir / "config.echo", render_config(cfg, kEchoSim));
  uint64_t users = 0;
  uint64_t notes = 0;
  uint64_t votes = 0;
  check(br_dataset_counts(data.get(), &users, &notes, &votes), "counting");
  std::printf("simulated: users=%" PRIu64 " notes=%" PRIu64 " votes=%" PRIu64 "\n",
              users, notes, votes);
  return 0;
}

int run_attack(const std::string& config_path, const std::string& out_dir,
               std::uint64_t seed, bool force) {
  ExperimentConfig cfg = ExperimentConfig::defaults();
  load_config_file(cfg, config_path);
  cfg.train.seed = seed;
  cfg.sim.seed = seed;

  br_dataset* organic_raw = nullptr;
  br_truth* truth_raw = nullptr;
  check(br_simulate(&cfg.sim, &organic_raw, &truth_raw), "simulating");
  const DatasetPtr organic(organic_raw, &br_dataset_free);
  const TruthPtr truth(truth_raw, &br_truth_free);

  const std::string target = resolve_attack_target(cfg, truth.get());
  cfg.attack_target_note = target;  // echoed resolved
  const br_attack_config attack = attack_config_of(cfg, target);
  br_dataset* attacked_raw = nullptr;
  check(br_inject_attack(organic.get(), truth.get(), &attack, seed, &attacked_raw),
        "injecting attack");
  const DatasetPtr attacked(attacked_raw, &br_dataset_free);

  br_model* model_raw = nullptr;
  br_train_report report;
  check(br_train(attacked.get(), &cfg.train, &model_raw, &report), "training");
  const ModelPtr model(model_raw, &br_model_free);
  br_scores* scores_raw = nullptr;
  check(br_score(model.get(), attacked.get(), &cfg.thresholds, &scores_raw),
        "scoring");
  const ScoresPtr scores(scores_raw, &br_scores_free);

  const fs::path dir = prepare_out_dir(
      out_dir, force,
      {"votes.tsv", "truth.tsv", "params.tsv", "scores.tsv", "report.tsv",
       "config.echo"});
  check(br_dataset_write(attacked.get(), (dir / "votes.tsv").string().c_str()),
        "writing votes");
  check(br_truth_write(truth.get(), (dir / "truth.tsv").string().c_str()),
        "writing truth");
  check(br_model_write(model.get(), (dir / "params.tsv").string().c_str()),
        "writing params");
  check(br_scores_write(scores.get(), (dir / "scores.tsv").string().c_str()),
        "writing scores");
  check(br_report_write(scores.get(), truth.get(),
                        (dir / "report.tsv").string().c_str()),
        "writing report");
  write_text(dir / "config.echo",
             render_config(cfg, kEchoTrain | kEchoThresholds | kEchoSim | kEchoAttack));

  uint64_t count = 0;
  check(br_scores_count(scores.get(), &count), "scoring");
  for (uint64_t i = 0; i < count; ++i) {
    const char* id = nullptr;
    double intercept = 0.0;
    const char* status = nullptr;
    check(br_scores_row(scores.get(), i, &id, &intercept, nullptr, nullptr, &status,
                        nullptr),
          "scoring");
    if (target == id) {
      std::printf("attack target %s: intercept=%s status=%s\n", id,
                  format_real(intercept).c_str(), status);
      break;
    }
  }
  return 0;
}

int run_gradcheck(std::uint64_t seed) {
  double max_rel_error = 0.0;
  check(br_gradient_check(seed, &max_rel_error), "gradient check");
  std::printf("max relative gradient error: %s\n",
              format_real(max_rel_error).c_str());
  return max_rel_error < 1e-6 ? 0 : 2;
}

int run_convert(const std::string& in_path, const std::string& out_path,
                const std::string& mode, bool force) {
  refuse_existing(out_path, force);
  const int mode_value = mode == "tri" ? BR_CONVERT_TRI : BR_CONVERT_DROP;
  br_convert_stats stats;
  check(br_convert_public_data(in_path.c_str(), out_path.c_str(), mode_value, &stats),
        "converting '" + in_path + "'");
  if (stats.dropped_unknown > 0) {
    std::fprintf(stderr,
                 "convert: dropped %" PRIu64 " rows with unrecognized "
                 "helpfulnessLevel\n",
                 stats.dropped_unknown);
  }
  std::printf("converted: read=%" PRIu64 " written=%" PRIu64 " dropped_somewhat=%" PRIu64
              " dropped_unknown=%" PRIu64 "\n",
              stats.rows_read, stats.rows_written, stats.dropped_somewhat,
              stats.dropped_unknown);
  return 0;
}

int run_report(const std::string& scores_path, const std::string& truth_path,
               const std::string& out_path, bool force) {
  br_scores* scores_raw = nullptr;
  check(br_scores_read(scores_path.c_str(), &scores_raw),
        "reading scores '" + scores_path + "'");
  const ScoresPtr scores(scores_raw, &br_scores_free);
  br_truth* truth_raw = nullptr;
  check(br_truth_read(truth_path.c_str(), &truth_raw),
        "reading truth '" + truth_path + "'");
  const TruthPtr truth(truth_raw, &br_truth_free);
  refuse_existing(out_path, force);
  check(br_report_write(scores.get(), truth.get(), out_path.c_str()),
        "writing report");
  br_recovery_metrics metrics;
  check(br_evaluate(scores.get(), truth.get(), &metrics), "evaluating");
  std::printf("separation_margin=%s auc=%s\n",
              format_real(metrics.separation_margin).c_str(),
              format_real(metrics.auc).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bridgerank: bridging-based note ranking toolkit"};
  app.require_subcommand(1);

  std::string votes_path;
  std::string params_path;
  std::string scores_path;
  std::string truth_path;
  std::string config_path;
  std::string in_path;
  std::string out_path;
  std::string mode = "drop";
  std::uint64_t seed = 0;
  double threshold = 0.0;
  std::uint32_t min_votes = 0;
  bool force = false;

  auto* train = app.add_subcommand("train", "Fit model parameters to a votes file");
  train->add_option("--votes", votes_path, "votes TSV")->required();
  train->add_option("--out", out_path, "output directory")->required();
  auto* train_config = train->add_option("--config", config_path, "experiment config");
  auto* train_seed = train->add_option("--seed", seed, "training seed");
  train->add_flag("--force", force, "overwrite existing outputs");

  auto* score = app.add_subcommand("score", "Score and classify notes");
  score->add_option("--params", params_path, "params TSV")->required();
  score->add_option("--votes", votes_path, "votes TSV")->required();
  score->add_option("--out", out_path, "scores output file")->required();
  auto* score_threshold =
      score->add_option("--threshold", threshold, "display threshold");
  auto* score_min_votes = score->add_option("--min-votes", min_votes, "volume gate");
  score->add_flag("--force", force, "overwrite existing outputs");

  auto* simulate =
      app.add_subcommand("simulate", "Generate a polarized-population vote set");
  simulate->add_option("--config", config_path, "experiment config")->required();
  simulate->add_option("--out", out_path, "output directory")->required();
  simulate->add_option("--seed", seed, "simulation seed")->required();
  simulate->add_flag("--force", force, "overwrite existing outputs");

  auto* attack = app.add_subcommand(
      "attack", "Run the sybil-injection experiment end to end");
  attack->add_option("--config", config_path, "experiment config")->required();
  attack->add_option("--out", out_path, "output directory")->required();
  attack->add_option("--seed", seed, "experiment seed")->required();
  attack->add_flag("--force", force, "overwrite existing outputs");

  auto* gradcheck =
      app.add_subcommand("gradcheck", "Verify analytic gradients numerically");
  gradcheck->add_option("--seed", seed, "instance seed")->required();

  auto* convert =
      app.add_subcommand("convert", "Adapt a public notes-ratings dump to votes");
  convert->add_option("--in", in_path, "public ratings TSV")->required();
  convert->add_option("--out", out_path, "votes output file")->required();
  convert->add_option("--mode", mode, "SOMEWHAT_HELPFUL handling")
      ->check(CLI::IsMember({"drop", "tri"}));
  convert->add_flag("--force", force, "overwrite existing outputs");

  auto* report = app.add_subcommand("report", "Evaluate scores against ground truth");
  report->add_option("--scores", scores_path, "scores TSV")->required();
  report->add_option("--truth", truth_path, "ground truth TSV")->required();
  report->add_option("--out", out_path, "report output file")->required();
  report->add_flag("--force", force, "overwrite existing outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (train->parsed()) {
      return run_train(votes_path, out_path, train_config->count() ? config_path : "",
                       train_seed->count() ? &seed : nullptr, force);
    }
    if (score->parsed()) {
      return run_score(params_path, votes_path, out_path,
                       score_threshold->count() ? &threshold : nullptr,
                       score_min_votes->count() ? &min_votes : nullptr, force);
    }
    if (simulate->parsed()) {
      return run_simulate(config_path, out_path, seed, force);
    }
    if (attack->parsed()) {
      return run_attack(config_path, out_path, seed, force);
    }
    if (gradcheck->parsed()) {
      return run_gradcheck(seed);
    }
    if (convert->parsed()) {
      return run_convert(in_path, out_path, mode, force);
    }
    if (report->parsed()) {
      return run_report(scores_path, truth_path, out_path, force);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
