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

#ifndef BRIDGERANK_TRAINER_HPP
#define BRIDGERANK_TRAINER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bridgerank/dataset.hpp"
#include "bridgerank/model.hpp"

namespace bridgerank {

struct TrainConfig {
  std::uint64_t seed = 0;
  /// Half-width of the uniform initialization interval. Zero yields
  /// all-zero parameters.
  double init_scale = 0.05;
  /// Full-batch step size. The sum-form loss has curvature proportional to
  /// the largest per-entity vote count, so the step must stay below
  /// 2 / (2 * max votes per note); 0.005 keeps a comfortable margin for
  /// per-note budgets of a few hundred votes.
  double learning_rate = 0.005;
  std::uint32_t max_epochs = 2000;
  /// Relative loss-change convergence threshold, checked per epoch.
  double tolerance = 1e-7;
  RegConfig reg;
};

struct TrainReport {
  std::uint32_t epochs_run = 0;
  double final_loss = 0.0;
  /// Loss after each epoch; final_loss equals its last entry.
  std::vector<double> loss_history;
  bool converged = false;
};

/// Draws every parameter i.i.d. uniform in [-init_scale, +init_scale) from a
/// generator seeded by cfg.seed, filling user intercepts, user factors, note
/// intercepts, then note factors. Bit-reproducible per (data, cfg).
ModelParams init_params(const RatingsDataset& data, const TrainConfig& cfg);

/// Minimizes the regularized loss by full-batch gradient descent from
/// init_params, stopping when the relative loss change drops below
/// cfg.tolerance or after cfg.max_epochs. Returns canonicalized parameters.
///
/// Deterministic given (data, cfg). Throws ContractError for an empty
/// dataset or invalid config, TrainingError (naming the epoch) if the loss
/// becomes non-finite.
std::pair<ModelParams, TrainReport> fit(const RatingsDataset& data, const TrainConfig& cfg);

/// Resolves the factor sign symmetry: if the user factor with the largest
/// absolute value (lowest index on ties) is negative, negates all user and
/// note factors. Predictions are unchanged. Idempotent.
ModelParams canonicalize(ModelParams params);

}  // namespace bridgerank

#endif  // BRIDGERANK_TRAINER_HPP
