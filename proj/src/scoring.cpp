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

#include "bridgerank/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "bridgerank/errors.hpp"

namespace bridgerank {

std::string_view to_string(NoteStatus status) {
  switch (status) {
    case NoteStatus::kDisplayed:
      return "DISPLAYED";
    case NoteStatus::kNeedsMoreVotes:
      return "NEEDS_MORE_VOTES";
    case NoteStatus::kNotDisplayed:
      return "NOT_DISPLAYED";
  }
  return "NOT_DISPLAYED";
}

NoteStatus note_status_from_string(std::string_view text) {
  if (text == "DISPLAYED") {
    return NoteStatus::kDisplayed;
  }
  if (text == "NEEDS_MORE_VOTES") {
    return NoteStatus::kNeedsMoreVotes;
  }
  if (text == "NOT_DISPLAYED") {
    return NoteStatus::kNotDisplayed;
  }
  throw ParseError("unknown note status: '" + std::string(text) + "'");
}

std::vector<NoteScore> score_notes(const ModelParams& params, const RatingsDataset& data) {
  if (!params.dims_match(data)) {
    throw ContractError("score_notes: params not dimensioned for dataset");
  }
  const std::vector<std::uint32_t> counts = data.note_vote_counts();
  std::vector<NoteScore> scores;
  scores.reserve(data.note_count());
  for (std::size_t n = 0; n < data.note_count(); ++n) {
    scores.push_back({data.note_id(n), params.note_intercepts[n],
                      params.note_factors[n], counts[n]});
  }
  std::sort(scores.begin(), scores.end(), [](const NoteScore& a, const NoteScore& b) {
    if (a.intercept != b.intercept) {
      return a.intercept > b.intercept;
    }
    return a.note_id < b.note_id;
  });
  return scores;
}

NoteStatus classify(const NoteScore& score, const Thresholds& thresholds) {
  if (score.vote_count < thresholds.min_votes) {
    return NoteStatus::kNeedsMoreVotes;
  }
  if (thresholds.factor_penalty &&
      score.intercept < -0.05 - 0.8 * std::abs(score.factor)) {
    return NoteStatus::kNotDisplayed;
  }
  return score.intercept >= thresholds.display_threshold ? NoteStatus::kDisplayed
                                                         : NoteStatus::kNotDisplayed;
}

}  // namespace bridgerank
