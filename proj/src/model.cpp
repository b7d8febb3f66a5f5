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

#include "bridgerank/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bridgerank/errors.hpp"

namespace bridgerank {

namespace {

void require_dims(const ModelParams& params, const RatingsDataset& data,
                  const char* op) {
  if (!params.dims_match(data)) {
    throw ContractError(std::string(op) + ": params sized for " +
                        std::to_string(params.user_count()) + " users / " +
                        std::to_string(params.note_count()) + " notes, dataset has " +
                        std::to_string(data.user_count()) + " / " +
                        std::to_string(data.note_count()));
  }
}

double sum_squares(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) {
    total += v * v;
  }
  return total;
}

}  // namespace

ModelParams ModelParams::zeros(std::size_t users, std::size_t notes) {
  ModelParams params;
  params.user_intercepts.assign(users, 0.0);
  params.user_factors.assign(users, 0.0);
  params.note_intercepts.assign(notes, 0.0);
  params.note_factors.assign(notes, 0.0);
  return params;
}

bool ModelParams::dims_match(const RatingsDataset& data) const {
  return user_intercepts.size() == data.user_count() &&
         user_factors.size() == data.user_count() &&
         note_intercepts.size() == data.note_count() &&
         note_factors.size() == data.note_count();
}

bool ModelParams::all_finite() const {
  for (const auto* array :
       {&user_intercepts, &user_factors, &note_intercepts, &note_factors}) {
    for (double v : *array) {
      if (!std::isfinite(v)) {
        return false;
      }
    }
  }
  return true;
}

double predict(const ModelParams& params, std::size_t user, std::size_t note) {
  if (user >= params.user_count()) {
    throw std::out_of_range("predict: user index " + std::to_string(user) +
                            " out of range");
  }
  if (note >= params.note_count()) {
    throw std::out_of_range("predict: note index " + std::to_string(note) +
                            " out of range");
  }
  return params.user_intercepts[user] + params.note_intercepts[note] +
         params.user_factors[user] * params.note_factors[note];
}

double loss(const ModelParams& params, const RatingsDataset& data, const RegConfig& reg) {
  require_dims(params, data, "loss");
  double total = 0.0;
  for (const auto& vote : data.votes()) {
    const double predicted = params.user_intercepts[vote.user] +
                             params.note_intercepts[vote.note] +
                             params.user_factors[vote.user] * params.note_factors[vote.note];
    const double residual = predicted - vote.rating;
    total += residual * residual;
  }
  total += reg.lambda_intercept *
           (sum_squares(params.user_intercepts) + sum_squares(params.note_intercepts));
  total += reg.lambda_factor *
           (sum_squares(params.user_factors) + sum_squares(params.note_factors));
  return total;
}

ModelParams gradient(const ModelParams& params, const RatingsDataset& data,
                     const RegConfig& reg) {
  require_dims(params, data, "gradient");
  ModelParams grad = ModelParams::zeros(params.user_count(), params.note_count());
  for (const auto& vote : data.votes()) {
    const double predicted = params.user_intercepts[vote.user] +
                             params.note_intercepts[vote.note] +
                             params.user_factors[vote.user] * params.note_factors[vote.note];
    const double twice_residual = 2.0 * (predicted - vote.rating);
    grad.user_intercepts[vote.user] += twice_residual;
    grad.note_intercepts[vote.note] += twice_residual;
    grad.user_factors[vote.user] += twice_residual * params.note_factors[vote.note];
    grad.note_factors[vote.note] += twice_residual * params.user_factors[vote.user];
  }
  for (std::size_t u = 0; u < params.user_count(); ++u) {
    grad.user_intercepts[u] += 2.0 * reg.lambda_intercept * params.user_intercepts[u];
    grad.user_factors[u] += 2.0 * reg.lambda_factor * params.user_factors[u];
  }
  for (std::size_t n = 0; n < params.note_count(); ++n) {
    grad.note_intercepts[n] += 2.0 * reg.lambda_intercept * params.note_intercepts[n];
    grad.note_factors[n] += 2.0 * reg.lambda_factor * params.note_factors[n];
  }
  return grad;
}

}  // namespace bridgerank
