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

#ifndef BRIDGERANK_SIMULATOR_HPP
#define BRIDGERANK_SIMULATOR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bridgerank/dataset.hpp"
#include "bridgerank/scoring.hpp"

namespace bridgerank {

/// Population halves with opposed leanings toward the planted content.
enum class Group : int { kA = 0, kB = 1 };

/// Planted note kinds: bridging notes are approved across both groups,
/// partisan notes mainly by one.
enum class Archetype : int { kBridging = 0, kPartisanA = 1, kPartisanB = 2 };

std::string_view to_string(Group group);
std::string_view to_string(Archetype archetype);
std::optional<Group> group_from_string(std::string_view text);
std::optional<Archetype> archetype_from_string(std::string_view text);

/// Two-group population with planted note archetypes. approval_probability
/// is indexed [archetype][group].
struct SimulationConfig {
  std::uint32_t users_per_group = 100;
  std::uint32_t notes_per_archetype = 20;
  std::uint32_t votes_per_note = 30;
  std::array<std::array<double, 2>, 3> approval_probability = {{
      {0.85, 0.85},  // bridging: approved across both groups
      {0.90, 0.10},  // partisan A
      {0.10, 0.90},  // partisan B
  }};
  std::uint64_t seed = 0;
};

/// Planted labels for every generated user and note, in generation order.
struct GroundTruth {
  std::vector<std::pair<std::string, Archetype>> note_archetypes;
  std::vector<std::pair<std::string, Group>> user_groups;

  std::optional<Archetype> archetype_of(std::string_view note_id) const;
  std::optional<Group> group_of(std::string_view user_id) const;
};

/// Sybil raters injected on top of an organic dataset. Each sybil casts
/// `injected_rating` on the target note and `camouflage_votes_per_sybil`
/// votes on random other notes, voting there like an organic member of
/// `rater_group_alignment` would under `camouflage_probability`.
struct AttackConfig {
  std::string target_note;
  std::uint32_t injected_raters = 100;
  int injected_rating = +1;
  Group rater_group_alignment = Group::kB;
  std::uint32_t camouflage_votes_per_sybil = 0;
  /// Archetype-by-group approval table the camouflage mimics; pass the
  /// generating config's table when attacking simulated data.
  std::array<std::array<double, 2>, 3> camouflage_probability =
      SimulationConfig{}.approval_probability;
};

/// Separation quality of a fitted scoring run against planted truth.
struct RecoveryMetrics {
  /// Min bridging intercept minus max partisan intercept; positive means
  /// every bridging note outranks every partisan note.
  double separation_margin = 0.0;
  /// Pairwise bridging-vs-partisan ranking AUC of the intercept; ties
  /// count one half.
  double auc = 0.0;
  double mean_abs_factor_bridging = 0.0;
  double mean_abs_factor_partisan_a = 0.0;
  double mean_abs_factor_partisan_b = 0.0;
  /// Pooled over both partisan archetypes.
  double mean_abs_factor_partisan = 0.0;
};

/// Samples votes for every planted note: votes_per_note raters drawn
/// uniformly without replacement, split evenly across groups (remainder to
/// group A); each rater approves with the configured archetype-by-group
/// probability, else disapproves. Deterministic per cfg.seed; each note uses
/// its own derived substream. The dataset universe covers every generated
/// user and note, voted or not.
std::pair<RatingsDataset, GroundTruth> generate(const SimulationConfig& cfg);

/// Returns a copy of `data` with the sybil votes appended; the input is
/// untouched. Throws ContractError if the target note is unknown or a
/// camouflaged note is missing from `truth`.
RatingsDataset inject_attack(const RatingsDataset& data, const GroundTruth& truth,
                             const AttackConfig& attack, std::uint64_t seed);

/// Computes recovery metrics for fitted scores against planted truth.
/// Throws ContractError if a truth note is missing from `scores` or either
/// note class is empty.
RecoveryMetrics evaluate_recovery(std::span<const NoteScore> scores,
                                  const GroundTruth& truth);

}  // namespace bridgerank

#endif  // BRIDGERANK_SIMULATOR_HPP
