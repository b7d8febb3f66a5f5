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

#ifndef BRIDGERANK_SCORING_HPP
#define BRIDGERANK_SCORING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bridgerank/dataset.hpp"
#include "bridgerank/model.hpp"

namespace bridgerank {

/// A note's fitted intercept (its bridging score), fitted factor, and vote
/// volume.
struct NoteScore {
  std::string note_id;
  double intercept = 0.0;
  double factor = 0.0;
  std::uint64_t vote_count = 0;
};

enum class NoteStatus {
  kDisplayed,
  kNeedsMoreVotes,
  kNotDisplayed,
};

std::string_view to_string(NoteStatus status);
NoteStatus note_status_from_string(std::string_view text);

struct Thresholds {
  /// A note is displayed once its intercept reaches this value.
  double display_threshold = 0.40;
  /// Notes with fewer votes than this are held back regardless of score.
  std::uint32_t min_votes = 5;
  /// Optional demotion rule: when set, a note whose intercept falls below
  /// -0.05 - 0.8 * |factor| is never displayed. Off by default; the default
  /// ranking uses the intercept alone.
  bool factor_penalty = false;
};

/// One NoteScore per dataset note, sorted by intercept descending, ties
/// broken by note_id ascending. Throws ContractError if params are not
/// dimensioned for the dataset.
std::vector<NoteScore> score_notes(const ModelParams& params, const RatingsDataset& data);

/// NEEDS_MORE_VOTES below the volume gate, otherwise DISPLAYED iff the
/// intercept reaches the display threshold (subject to the optional factor
/// penalty rule).
NoteStatus classify(const NoteScore& score, const Thresholds& thresholds);

}  // namespace bridgerank

#endif  // BRIDGERANK_SCORING_HPP
