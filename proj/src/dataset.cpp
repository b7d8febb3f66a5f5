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

#include "bridgerank/dataset.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "bridgerank/errors.hpp"

namespace bridgerank {

namespace {

constexpr std::uint32_t kMaxEntities = std::numeric_limits<std::uint32_t>::max();

std::uint32_t intern(const std::string& id, std::vector<std::string>& ids,
                     std::unordered_map<std::string, std::uint32_t>& lookup,
                     const char* kind) {
  if (id.empty()) {
    throw ContractError(std::string(kind) + " id must not be empty");
  }
  if (id.find_first_of("\t\n\r") != std::string::npos) {
    // Ids must stay representable in the tab-separated file formats.
    throw ContractError(std::string(kind) + " id contains tab or newline");
  }
  auto it = lookup.find(id);
  if (it != lookup.end()) {
    return it->second;
  }
  if (ids.size() >= kMaxEntities) {
    throw ContractError(std::string(kind) + " count exceeds index capacity");
  }
  const auto index = static_cast<std::uint32_t>(ids.size());
  ids.push_back(id);
  lookup.emplace(id, index);
  return index;
}

void check_rating(double rating, const std::string& user_id, const std::string& note_id) {
  if (!(rating >= -1.0 && rating <= 1.0)) {  // also rejects NaN
    throw ContractError("rating for (" + user_id + ", " + note_id +
                        ") outside [-1, 1]");
  }
}

// (user, note) pair packed for duplicate detection.
std::uint64_t pair_key(std::uint32_t user, std::uint32_t note) {
  return (static_cast<std::uint64_t>(user) << 32) | note;
}

}  // namespace

RatingsDataset RatingsDataset::from_votes(std::span<const Vote> votes,
                                          DuplicatePolicy policy) {
  RatingsDataset data;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(votes.size());
  data.votes_.reserve(votes.size());
  for (const Vote& vote : votes) {
    check_rating(vote.rating, vote.user_id, vote.note_id);
    const std::uint32_t user =
        intern(vote.user_id, data.user_ids_, data.user_lookup_, "user");
    const std::uint32_t note =
        intern(vote.note_id, data.note_ids_, data.note_lookup_, "note");
    auto [it, inserted] = seen.emplace(pair_key(user, note), data.votes_.size());
    if (!inserted) {
      if (policy == DuplicatePolicy::kReject) {
        throw ContractError("duplicate vote for (" + vote.user_id + ", " +
                            vote.note_id + ")");
      }
      data.votes_[it->second].rating = vote.rating;  // keeps first position
      continue;
    }
    data.votes_.push_back({user, note, vote.rating});
  }
  return data;
}

RatingsDataset RatingsDataset::with_universe(std::vector<std::string> user_ids,
                                             std::vector<std::string> note_ids,
                                             std::span<const Vote> votes,
                                             DuplicatePolicy policy) {
  RatingsDataset data;
  for (const std::string& id : user_ids) {
    if (intern(id, data.user_ids_, data.user_lookup_, "user") + 1 !=
        data.user_ids_.size()) {
      throw ContractError("duplicate user id in universe: " + id);
    }
  }
  for (const std::string& id : note_ids) {
    if (intern(id, data.note_ids_, data.note_lookup_, "note") + 1 !=
        data.note_ids_.size()) {
      throw ContractError("duplicate note id in universe: " + id);
    }
  }
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(votes.size());
  data.votes_.reserve(votes.size());
  for (const Vote& vote : votes) {
    check_rating(vote.rating, vote.user_id, vote.note_id);
    const auto user = data.find_user(vote.user_id);
    const auto note = data.find_note(vote.note_id);
    if (!user) {
      throw ContractError("vote references undeclared user: " + vote.user_id);
    }
    if (!note) {
      throw ContractError("vote references undeclared note: " + vote.note_id);
    }
    auto [it, inserted] = seen.emplace(pair_key(*user, *note), data.votes_.size());
    if (!inserted) {
      if (policy == DuplicatePolicy::kReject) {
        throw ContractError("duplicate vote for (" + vote.user_id + ", " +
                            vote.note_id + ")");
      }
      data.votes_[it->second].rating = vote.rating;
      continue;
    }
    data.votes_.push_back({*user, *note, vote.rating});
  }
  return data;
}

std::optional<std::uint32_t> RatingsDataset::find_user(std::string_view id) const {
  auto it = user_lookup_.find(std::string(id));
  if (it == user_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::uint32_t> RatingsDataset::find_note(std::string_view id) const {
  auto it = note_lookup_.find(std::string(id));
  if (it == note_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Vote RatingsDataset::vote_at(std::size_t index) const {
  const IndexedVote& vote = votes_.at(index);
  return Vote{user_ids_[vote.user], note_ids_[vote.note], vote.rating};
}

std::vector<std::uint32_t> RatingsDataset::note_vote_counts() const {
  std::vector<std::uint32_t> counts(note_ids_.size(), 0);
  for (const IndexedVote& vote : votes_) {
    ++counts[vote.note];
  }
  return counts;
}

}  // namespace bridgerank
