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

#include "bridgerank/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bridgerank/errors.hpp"
#include "bridgerank/rng.hpp"

namespace bridgerank {

namespace {

constexpr std::array<Archetype, 3> kArchetypeOrder = {
    Archetype::kBridging, Archetype::kPartisanA, Archetype::kPartisanB};

std::string padded(std::string_view prefix, std::uint32_t index, std::uint32_t count) {
  std::size_t width = 4;
  for (std::uint64_t bound = 10000; bound < count; bound *= 10) {
    ++width;
  }
  std::string digits = std::to_string(index);
  std::string id(prefix);
  id.append(width - std::min(width, digits.size()), '0');
  id += digits;
  return id;
}

std::string_view note_prefix(Archetype archetype) {
  switch (archetype) {
    case Archetype::kBridging:
      return "BR";
    case Archetype::kPartisanA:
      return "PA";
    case Archetype::kPartisanB:
      return "PB";
  }
  return "BR";
}

void validate(const SimulationConfig& cfg) {
  if (cfg.users_per_group < 1 || cfg.notes_per_archetype < 1 || cfg.votes_per_note < 1) {
    throw ContractError("simulation config: counts must be >= 1");
  }
  if (cfg.votes_per_note > 2ull * cfg.users_per_group) {
    throw ContractError("simulation config: votes_per_note exceeds the population");
  }
  for (const auto& row : cfg.approval_probability) {
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ContractError("simulation config: approval probability outside [0, 1]");
      }
    }
  }
}

// Uniform sample of `count` distinct values from [0, pool_size), selection
// order preserved (partial Fisher-Yates).
std::vector<std::uint32_t> sample_without_replacement(std::uint32_t pool_size,
                                                      std::uint32_t count, Rng& rng) {
  std::vector<std::uint32_t> pool(pool_size);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint32_t> picks;
  picks.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::uint32_t>(rng.below(pool_size - i));
    std::swap(pool[i], pool[j]);
    picks.push_back(pool[i]);
  }
  return picks;
}

double draw_rating(Rng& rng, double approval_probability) {
  return rng.uniform01() < approval_probability ? 1.0 : -1.0;
}

}  // namespace

std::string_view to_string(Group group) {
  return group == Group::kA ? "A" : "B";
}

std::string_view to_string(Archetype archetype) {
  switch (archetype) {
    case Archetype::kBridging:
      return "BRIDGING";
    case Archetype::kPartisanA:
      return "PARTISAN_A";
    case Archetype::kPartisanB:
      return "PARTISAN_B";
  }
  return "BRIDGING";
}

std::optional<Group> group_from_string(std::string_view text) {
  if (text == "A") {
    return Group::kA;
  }
  if (text == "B") {
    return Group::kB;
  }
  return std::nullopt;
}

std::optional<Archetype> archetype_from_string(std::string_view text) {
  if (text == "BRIDGING") {
    return Archetype::kBridging;
  }
  if (text == "PARTISAN_A") {
    return Archetype::kPartisanA;
  }
  if (text == "PARTISAN_B") {
    return Archetype::kPartisanB;
  }
  return std::nullopt;
}

std::optional<Archetype> GroundTruth::archetype_of(std::string_view note_id) const {
  for (const auto& [id, archetype] : note_archetypes) {
    if (id == note_id) {
      return archetype;
    }
  }
  return std::nullopt;
}

std::optional<Group> GroundTruth::group_of(std::string_view user_id) const {
  for (const auto& [id, group] : user_groups) {
    if (id == user_id) {
      return group;
    }
  }
  return std::nullopt;
}

std::pair<RatingsDataset, GroundTruth> generate(const SimulationConfig& cfg) {
  validate(cfg);
  GroundTruth truth;
  std::vector<std::string> user_ids;
  user_ids.reserve(2ull * cfg.users_per_group);
  for (Group group : {Group::kA, Group::kB}) {
    for (std::uint32_t i = 0; i < cfg.users_per_group; ++i) {
      user_ids.push_back(padded(to_string(group), i, cfg.users_per_group));
      truth.user_groups.emplace_back(user_ids.back(), group);
    }
  }
  std::vector<std::string> note_ids;
  note_ids.reserve(3ull * cfg.notes_per_archetype);
  for (Archetype archetype : kArchetypeOrder) {
    for (std::uint32_t i = 0; i < cfg.notes_per_archetype; ++i) {
      note_ids.push_back(padded(note_prefix(archetype), i, cfg.notes_per_archetype));
      truth.note_archetypes.emplace_back(note_ids.back(), archetype);
    }
  }

  // Even rater split across groups, remainder to group A. Group B user k has
  // global index users_per_group + k.
  const std::uint32_t from_a = (cfg.votes_per_note + 1) / 2;
  const std::uint32_t from_b = cfg.votes_per_note / 2;
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(note_ids.size()) * cfg.votes_per_note);
  for (std::size_t note = 0; note < note_ids.size(); ++note) {
    const Archetype archetype = truth.note_archetypes[note].second;
    const auto& probabilities =
        cfg.approval_probability[static_cast<std::size_t>(archetype)];
    // One substream per note, so generation order never matters.
    Rng rng(substream_seed(cfg.seed, stream_tag::kSimulate, note));
    std::vector<std::uint32_t> raters = sample_without_replacement(
        cfg.users_per_group, from_a, rng);
    for (std::uint32_t pick : sample_without_replacement(cfg.users_per_group, from_b, rng)) {
      raters.push_back(cfg.users_per_group + pick);
    }
    for (std::uint32_t rater : raters) {
      const auto group = rater < cfg.users_per_group ? Group::kA : Group::kB;
      const double p = probabilities[static_cast<std::size_t>(group)];
      votes.push_back({user_ids[rater], note_ids[note], draw_rating(rng, p)});
    }
  }
  RatingsDataset data = RatingsDataset::with_universe(std::move(user_ids),
                                                      std::move(note_ids), votes);
  return {std::move(data), std::move(truth)};
}

RatingsDataset inject_attack(const RatingsDataset& data, const GroundTruth& truth,
                             const AttackConfig& attack, std::uint64_t seed) {
  const auto target = data.find_note(attack.target_note);
  if (!target) {
    throw ContractError("inject_attack: unknown target note '" + attack.target_note + "'");
  }
  if (attack.injected_rating != 1 && attack.injected_rating != -1) {
    throw ContractError("inject_attack: injected rating must be +1 or -1");
  }
  if (attack.camouflage_votes_per_sybil > data.note_count() - 1) {
    throw ContractError("inject_attack: not enough notes to camouflage on");
  }
  for (const auto& row : attack.camouflage_probability) {
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ContractError("inject_attack: camouflage probability outside [0, 1]");
      }
    }
  }

  std::vector<std::string> user_ids(data.user_ids().begin(), data.user_ids().end());
  std::vector<std::string> note_ids(data.note_ids().begin(), data.note_ids().end());
  std::vector<Vote> votes;
  votes.reserve(data.vote_count() +
                static_cast<std::size_t>(attack.injected_raters) *
                    (1 + attack.camouflage_votes_per_sybil));
  for (std::size_t i = 0; i < data.vote_count(); ++i) {
    votes.push_back(data.vote_at(i));
  }

  // Camouflage pool: every note except the target, in index order.
  std::vector<std::uint32_t> other_notes;
  other_notes.reserve(data.note_count() - 1);
  for (std::uint32_t n = 0; n < data.note_count(); ++n) {
    if (n != *target) {
      other_notes.push_back(n);
    }
  }

  Rng rng(substream_seed(seed, stream_tag::kAttack, 0));
  const auto alignment = static_cast<std::size_t>(attack.rater_group_alignment);
  // Approval probabilities an organic member of the aligned group would use,
  // looked up per camouflaged note's archetype.
  for (std::uint32_t s = 0; s < attack.injected_raters; ++s) {
    std::string sybil = padded("SYB", s, attack.injected_raters);
    if (data.find_user(sybil)) {
      throw ContractError("inject_attack: sybil id collides with existing user '" +
                          sybil + "'");
    }
    user_ids.push_back(sybil);
    votes.push_back({sybil, attack.target_note,
                     static_cast<double>(attack.injected_rating)});
    if (attack.camouflage_votes_per_sybil == 0) {
      continue;
    }
    const std::vector<std::uint32_t> picks = sample_without_replacement(
        static_cast<std::uint32_t>(other_notes.size()),
        attack.camouflage_votes_per_sybil, rng);
    for (std::uint32_t pick : picks) {
      const std::string& note_id = note_ids[other_notes[pick]];
      const auto archetype = truth.archetype_of(note_id);
      if (!archetype) {
        throw ContractError("inject_attack: note '" + note_id +
                            "' missing from ground truth");
      }
      const double p =
          attack.camouflage_probability[static_cast<std::size_t>(*archetype)][alignment];
      votes.push_back({sybil, note_id, draw_rating(rng, p)});
    }
  }
  return RatingsDataset::with_universe(std::move(user_ids), std::move(note_ids), votes);
}

RecoveryMetrics evaluate_recovery(std::span<const NoteScore> scores,
                                  const GroundTruth& truth) {
  std::unordered_map<std::string_view, const NoteScore*> by_id;
  by_id.reserve(scores.size());
  for (const NoteScore& score : scores) {
    by_id.emplace(score.note_id, &score);
  }
  std::vector<const NoteScore*> bridging;
  std::vector<const NoteScore*> partisan_a;
  std::vector<const NoteScore*> partisan_b;
  for (const auto& [note_id, archetype] : truth.note_archetypes) {
    auto it = by_id.find(note_id);
    if (it == by_id.end()) {
      throw ContractError("evaluate_recovery: note '" + note_id +
                          "' missing from scores");
    }
    switch (archetype) {
      case Archetype::kBridging:
        bridging.push_back(it->second);
        break;
      case Archetype::kPartisanA:
        partisan_a.push_back(it->second);
        break;
      case Archetype::kPartisanB:
        partisan_b.push_back(it->second);
        break;
    }
  }
  if (bridging.empty()) {
    throw ContractError("evaluate_recovery: no bridging notes in ground truth");
  }
  if (partisan_a.empty() && partisan_b.empty()) {
    throw ContractError("evaluate_recovery: no partisan notes in ground truth");
  }

  double min_bridging = bridging.front()->intercept;
  double mean_abs_bridging = 0.0;
  for (const NoteScore* score : bridging) {
    min_bridging = std::min(min_bridging, score->intercept);
    mean_abs_bridging += std::abs(score->factor);
  }
  mean_abs_bridging /= static_cast<double>(bridging.size());

  double max_partisan = 0.0;
  bool first = true;
  double pair_score = 0.0;
  std::size_t pair_count = 0;
  double abs_factor_a = 0.0;
  double abs_factor_b = 0.0;
  for (const auto* group : {&partisan_a, &partisan_b}) {
    for (const NoteScore* partisan : *group) {
      if (first || partisan->intercept > max_partisan) {
        max_partisan = partisan->intercept;
        first = false;
      }
      for (const NoteScore* bridge : bridging) {
        if (bridge->intercept > partisan->intercept) {
          pair_score += 1.0;
        } else if (bridge->intercept == partisan->intercept) {
          pair_score += 0.5;
        }
        ++pair_count;
      }
    }
  }
  for (const NoteScore* score : partisan_a) {
    abs_factor_a += std::abs(score->factor);
  }
  for (const NoteScore* score : partisan_b) {
    abs_factor_b += std::abs(score->factor);
  }

  RecoveryMetrics metrics;
  metrics.separation_margin = min_bridging - max_partisan;
  metrics.auc = pair_score / static_cast<double>(pair_count);
  metrics.mean_abs_factor_bridging = mean_abs_bridging;
  metrics.mean_abs_factor_partisan_a =
      partisan_a.empty() ? 0.0 : abs_factor_a / static_cast<double>(partisan_a.size());
  metrics.mean_abs_factor_partisan_b =
      partisan_b.empty() ? 0.0 : abs_factor_b / static_cast<double>(partisan_b.size());
  metrics.mean_abs_factor_partisan =
      (abs_factor_a + abs_factor_b) /
      static_cast<double>(partisan_a.size() + partisan_b.size());
  return metrics;
}

}  // namespace bridgerank
