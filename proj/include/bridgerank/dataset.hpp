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

#ifndef BRIDGERANK_DATASET_HPP
#define BRIDGERANK_DATASET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bridgerank {

/// One rater's approval (+1) or disapproval (-1) of one note. Ratings are
/// kept as reals in [-1, +1] so adapters may map intermediate levels.
struct Vote {
  std::string user_id;
  std::string note_id;
  double rating = 0.0;
};

enum class DuplicatePolicy {
  kReject,         // duplicate (user, note) pairs are an error
  kLastWriteWins,  // later rating replaces the earlier one in place
};

/// Sparse vote collection with dense user/note index maps.
///
/// Indices are assigned in first-appearance order (or declaration order when
/// built with an explicit universe), so construction is deterministic and two
/// datasets built from the same votes are identical. Immutable once built.
class RatingsDataset {
 public:
  struct IndexedVote {
    std::uint32_t user = 0;
    std::uint32_t note = 0;
    double rating = 0.0;
  };

  RatingsDataset() = default;

  /// Builds a dataset whose universe is exactly the users/notes that appear
  /// in `votes`, indexed in first-appearance order.
  static RatingsDataset from_votes(std::span<const Vote> votes,
                                   DuplicatePolicy policy = DuplicatePolicy::kReject);

  /// Builds a dataset over a declared universe; entities with zero votes keep
  /// their index. Every vote must reference a declared id.
  static RatingsDataset with_universe(std::vector<std::string> user_ids,
                                      std::vector<std::string> note_ids,
                                      std::span<const Vote> votes,
                                      DuplicatePolicy policy = DuplicatePolicy::kReject);

  std::size_t user_count() const { return user_ids_.size(); }
  std::size_t note_count() const { return note_ids_.size(); }
  std::size_t vote_count() const { return votes_.size(); }
  bool empty() const { return votes_.empty(); }

  std::span<const IndexedVote> votes() const { return votes_; }
  std::span<const std::string> user_ids() const { return user_ids_; }
  std::span<const std::string> note_ids() const { return note_ids_; }

  const std::string& user_id(std::size_t index) const { return user_ids_.at(index); }
  const std::string& note_id(std::size_t index) const { return note_ids_.at(index); }

  std::optional<std::uint32_t> find_user(std::string_view id) const;
  std::optional<std::uint32_t> find_note(std::string_view id) const;

  /// Vote materialized with string ids.
  Vote vote_at(std::size_t index) const;

  /// Number of votes cast on each note, indexed by note index.
  std::vector<std::uint32_t> note_vote_counts() const;

 private:
  std::vector<IndexedVote> votes_;
  std::vector<std::string> user_ids_;
  std::vector<std::string> note_ids_;
  std::unordered_map<std::string, std::uint32_t> user_lookup_;
  std::unordered_map<std::string, std::uint32_t> note_lookup_;
};

}  // namespace bridgerank

#endif  // BRIDGERANK_DATASET_HPP
