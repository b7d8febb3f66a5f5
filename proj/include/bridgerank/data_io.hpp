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

#ifndef BRIDGERANK_DATA_IO_HPP
#define BRIDGERANK_DATA_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bridgerank/dataset.hpp"
#include "bridgerank/model.hpp"
#include "bridgerank/scoring.hpp"
#include "bridgerank/simulator.hpp"

// Stable UTF-8 TSV formats, LF line endings. Reals are serialized with 17
// significant digits so that every finite double round-trips bit-exactly.
// Readers reject malformed input with a ParseError naming the line.

namespace bridgerank {

/// Votes file: header `user_id\tnote_id\trating`, one vote per line.
/// Indices are assigned in first-appearance order on read. Note that only
/// voting entities are representable: a dataset built over a wider declared
/// universe serializes its votes alone.
RatingsDataset read_votes(const std::filesystem::path& path,
                          DuplicatePolicy policy = DuplicatePolicy::kReject);
void write_votes(const RatingsDataset& data, const std::filesystem::path& path);

/// Params file contents: per-entity rows keyed by id, `[users]` section then
/// `[notes]`, each with a `<id>\tintercept\tfactor` header.
struct ParamsTable {
  struct Row {
    std::string id;
    double intercept = 0.0;
    double factor = 0.0;
  };
  std::vector<Row> users;
  std::vector<Row> notes;
};

void write_params(const ModelParams& params, const RatingsDataset& data,
                  const std::filesystem::path& path);
void write_params(const ParamsTable& table, const std::filesystem::path& path);
ParamsTable read_params(const std::filesystem::path& path);

/// Maps a params table onto a dataset's dense indices by id. Every dataset
/// entity must be present in the table; extra table rows are ignored.
ModelParams align_params(const ParamsTable& table, const RatingsDataset& data);

/// Score report row: `note_id\tintercept\tfactor\tvote_count\tstatus\trank`.
struct ScoreRow {
  std::string note_id;
  double intercept = 0.0;
  double factor = 0.0;
  std::uint64_t vote_count = 0;
  NoteStatus status = NoteStatus::kNotDisplayed;
  std::uint64_t rank = 0;
};

/// Materializes rows from sorted scores: rank is the 1-based position,
/// status comes from `classify` under `thresholds`.
std::vector<ScoreRow> make_score_rows(std::span<const NoteScore> scores,
                                      const Thresholds& thresholds);
void write_scores(std::span<const ScoreRow> rows, const std::filesystem::path& path);
std::vector<ScoreRow> read_scores(const std::filesystem::path& path);

/// Ground truth file: `[notes]` id/archetype rows then `[users]` id/group
/// rows, generation order.
void write_truth(const GroundTruth& truth, const std::filesystem::path& path);
GroundTruth read_truth(const std::filesystem::path& path);

/// Recovery report: `# metric\tvalue` comment lines followed by a score
/// table with planted archetypes, rank order.
void write_report(const RecoveryMetrics& metrics, std::span<const ScoreRow> rows,
                  const GroundTruth& truth, const std::filesystem::path& path);

enum class ConvertMode {
  kDrop,  // SOMEWHAT_HELPFUL rows are omitted
  kTri,   // SOMEWHAT_HELPFUL maps to rating 0
};

struct ConvertStats {
  std::uint64_t rows_read = 0;
  std::uint64_t rows_written = 0;
  std::uint64_t dropped_somewhat = 0;
  std::uint64_t dropped_unknown = 0;
};

/// Adapts a public notes-ratings dump (TSV with at least noteId,
/// raterParticipantId and helpfulnessLevel columns, in any column order) to
/// the votes format: HELPFUL -> 1, NOT_HELPFUL -> -1. Unknown levels are
/// dropped and counted. Throws ParseError if a required column is missing.
ConvertStats convert_public_data(const std::filesystem::path& ratings_path,
                                 const std::filesystem::path& out_path,
                                 ConvertMode mode);

/// Canonical 17-significant-digit text for a double (round-trip exact).
std::string format_double(double value);
/// Strict full-token parse; throws ParseError with `context` on failure.
double parse_double(std::string_view token, const std::string& context);

}  // namespace bridgerank

#endif  // BRIDGERANK_DATA_IO_HPP
