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

#include "bridgerank/trainer.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "bridgerank/errors.hpp"
#include "bridgerank/rng.hpp"

namespace bridgerank {

namespace {

void validate(const TrainConfig& cfg) {
  if (!(cfg.init_scale >= 0.0) || !std::isfinite(cfg.init_scale)) {
    throw ContractError("train config: init_scale must be finite and >= 0");
  }
  if (!(cfg.learning_rate > 0.0) || !std::isfinite(cfg.learning_rate)) {
    throw ContractError("train config: learning_rate must be finite and > 0");
  }
  if (cfg.max_epochs < 1) {
    throw ContractError("train config: max_epochs must be >= 1");
  }
  if (!(cfg.tolerance > 0.0)) {
    throw ContractError("train config: tolerance must be > 0");
  }
  if (!(cfg.reg.lambda_intercept >= 0.0) || !(cfg.reg.lambda_factor >= 0.0)) {
    throw ContractError("train config: regularization must be >= 0");
  }
}

void fill_uniform(std::vector<double>& values, Rng& rng, double scale) {
  for (double& v : values) {
    v = scale * (2.0 * rng.uniform01() - 1.0);
  }
}

void step(ModelParams& params, const ModelParams& grad, double learning_rate) {
  auto apply = [learning_rate](std::vector<double>& values,
                               const std::vector<double>& deltas) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] -= learning_rate * deltas[i];
    }
  };
  apply(params.user_intercepts, grad.user_intercepts);
  apply(params.user_factors, grad.user_factors);
  apply(params.note_intercepts, grad.note_intercepts);
  apply(params.note_factors, grad.note_factors);
}

}  // namespace

ModelParams init_params(const RatingsDataset& data, const TrainConfig& cfg) {
  validate(cfg);
  ModelParams params = ModelParams::zeros(data.user_count(), data.note_count());
  Rng rng(cfg.seed);
  // Draw order is part of the contract: user intercepts, user factors,
  // note intercepts, note factors.
  fill_uniform(params.user_intercepts, rng, cfg.init_scale);
  fill_uniform(params.user_factors, rng, cfg.init_scale);
  fill_uniform(params.note_intercepts, rng, cfg.init_scale);
  fill_uniform(params.note_factors, rng, cfg.init_scale);
  return params;
}

std::pair<ModelParams, TrainReport> fit(const RatingsDataset& data, const TrainConfig& cfg) {
  validate(cfg);
  if (data.empty()) {
    throw ContractError("fit: dataset has no votes");
  }
  ModelParams params = init_params(data, cfg);
  TrainReport report;
  report.loss_history.reserve(cfg.max_epochs);
  double previous = loss(params, data, cfg.reg);
  for (std::uint32_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const ModelParams grad = gradient(params, data, cfg.reg);
    step(params, grad, cfg.learning_rate);
    const double current = loss(params, data, cfg.reg);
    if (!std::isfinite(current)) {
      throw TrainingError("fit: loss diverged to non-finite at epoch " +
                          std::to_string(epoch) +
                          " (learning rate too large for this dataset?)");
    }
    report.loss_history.push_back(current);
    // Relative change with a floor so that exactly-fit losses terminate.
    const double relative_change =
        std::abs(previous - current) / std::max(std::abs(previous), 1e-12);
    previous = current;
    if (relative_change < cfg.tolerance) {
      report.converged = true;
      break;
    }
  }
  report.epochs_run = static_cast<std::uint32_t>(report.loss_history.size());
  report.final_loss = report.loss_history.back();
  params = canonicalize(std::move(params));
  if (!params.all_finite()) {
    throw TrainingError("fit: non-finite parameters after training");
  }
  return {std::move(params), std::move(report)};
}

ModelParams canonicalize(ModelParams params) {
  double best = -1.0;
  double best_value = 0.0;
  for (double f : params.user_factors) {
    if (std::abs(f) > best) {  // strict: lowest index wins ties
      best = std::abs(f);
      best_value = f;
    }
  }
  if (best_value < 0.0) {
    for (double& f : params.user_factors) {
      f = -f;
    }
    for (double& f : params.note_factors) {
      f = -f;
    }
  }
  return params;
}

}  // namespace bridgerank
