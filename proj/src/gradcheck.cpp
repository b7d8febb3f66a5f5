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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bridgerank/dataset.hpp"
#include "bridgerank/model.hpp"
#include "bridgerank/rng.hpp"

namespace bridgerank {

namespace {

constexpr double kStep = 1e-5;

double central_difference(ModelParams& params, std::vector<double>& array,
                          std::size_t index, const RatingsDataset& data,
                          const RegConfig& reg) {
  const double original = array[index];
  array[index] = original + kStep;
  const double upper = loss(params, data, reg);
  array[index] = original - kStep;
  const double lower = loss(params, data, reg);
  array[index] = original;
  return (upper - lower) / (2.0 * kStep);
}

}  // namespace

double gradient_check(std::uint64_t seed) {
  Rng rng(mix64(seed));
  const auto users = static_cast<std::size_t>(5 + rng.below(16));
  const auto notes = static_cast<std::size_t>(4 + rng.below(12));

  std::vector<std::string> user_ids;
  for (std::size_t u = 0; u < users; ++u) {
    user_ids.push_back("u" + std::to_string(u));
  }
  std::vector<std::string> note_ids;
  for (std::size_t n = 0; n < notes; ++n) {
    note_ids.push_back("n" + std::to_string(n));
  }
  std::vector<Vote> votes;
  for (std::size_t u = 0; u < users; ++u) {
    for (std::size_t n = 0; n < notes; ++n) {
      if (rng.uniform01() < 0.3) {
        votes.push_back({user_ids[u], note_ids[n], rng.below(2) == 0 ? 1.0 : -1.0});
      }
    }
  }
  if (votes.empty()) {
    votes.push_back({user_ids[0], note_ids[0], 1.0});
  }
  const RatingsDataset data =
      RatingsDataset::with_universe(user_ids, note_ids, votes);

  ModelParams params = ModelParams::zeros(users, notes);
  for (auto* array : {&params.user_intercepts, &params.user_factors,
                      &params.note_intercepts, &params.note_factors}) {
    for (double& v : *array) {
      v = rng.uniform(-0.5, 0.5);
    }
  }

  const RegConfig reg;
  const ModelParams analytic = gradient(params, data, reg);
  double worst = 0.0;
  const std::pair<std::vector<double>*, const std::vector<double>*> arrays[] = {
      {&params.user_intercepts, &analytic.user_intercepts},
      {&params.user_factors, &analytic.user_factors},
      {&params.note_intercepts, &analytic.note_intercepts},
      {&params.note_factors, &analytic.note_factors}};
  for (const auto& [values, grads] : arrays) {
    for (std::size_t i = 0; i < values->size(); ++i) {
      const double numeric = central_difference(params, *values, i, data, reg);
      const double exact = (*grads)[i];
      const double rel = std::abs(exact - numeric) /
                         std::max({1.0, std::abs(exact), std::abs(numeric)});
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

}  // namespace bridgerank
