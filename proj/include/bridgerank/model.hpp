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

#ifndef BRIDGERANK_MODEL_HPP
#define BRIDGERANK_MODEL_HPP

#include <cstddef>
#include <vector>

#include "bridgerank/dataset.hpp"

namespace bridgerank {

/// Per-user and per-note parameters of the bridging model.
///
/// Each user and each note carries an intercept (its general propensity to
/// approve / be approved) and a one-dimensional factor (its learned
/// viewpoint). A note's intercept is its bridging score: it captures the
/// approval that viewpoint alignment cannot explain.
struct ModelParams {
  std::vector<double> user_intercepts;
  std::vector<double> user_factors;
  std::vector<double> note_intercepts;
  std::vector<double> note_factors;

  static ModelParams zeros(std::size_t users, std::size_t notes);

  std::size_t user_count() const { return user_intercepts.size(); }
  std::size_t note_count() const { return note_intercepts.size(); }

  /// True when all four arrays are sized for `data`.
  bool dims_match(const RatingsDataset& data) const;

  /// True when every entry is finite.
  bool all_finite() const;
};

/// L2 penalty coefficients. The model is ill-posed without them (a user or
/// note with a single vote can be fit exactly); intercepts are penalized
/// more heavily than factors so that sparsely-voted notes score
/// conservatively. (0, 0) reproduces the bare squared-error objective.
struct RegConfig {
  double lambda_intercept = 0.15;
  double lambda_factor = 0.03;
};

/// Predicted rating of note `note` by user `user`:
/// user intercept + note intercept + product of the two factors.
/// Throws std::out_of_range for an out-of-range index.
double predict(const ModelParams& params, std::size_t user, std::size_t note);

/// Sum of squared prediction errors over the observed votes, plus the L2
/// penalties. Nonnegative; zero with reg = (0,0) iff every vote is predicted
/// exactly. Throws ContractError on a dimension mismatch.
double loss(const ModelParams& params, const RatingsDataset& data, const RegConfig& reg);

/// Analytic gradient of `loss` with respect to every parameter, in a
/// ModelParams-shaped container. Throws ContractError on a dimension
/// mismatch.
ModelParams gradient(const ModelParams& params, const RatingsDataset& data,
                     const RegConfig& reg);

/// Self-check: builds a seeded random instance (5-20 users, 4-15 notes,
/// roughly 30% vote density, random parameters) and returns the maximum
/// relative error between the analytic gradient and central finite
/// differences of the loss with step 1e-5. Healthy builds stay well below
/// 1e-6.
double gradient_check(std::uint64_t seed);

}  // namespace bridgerank

#endif  // BRIDGERANK_MODEL_HPP
