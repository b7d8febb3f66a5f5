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

#include "bridgerank/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <system_error>
#include <utility>

#include "bridgerank/errors.hpp"

namespace bridgerank {

namespace {

constexpr std::string_view kVotesHeader = "user_id\tnote_id\trating";
constexpr std::string_view kParamsHeaderUsers = "user_id\tintercept\tfactor";
constexpr std::string_view kParamsHeaderNotes = "note_id\tintercept\tfactor";
constexpr std::string_view kScoresHeader =
    "note_id\tintercept\tfactor\tvote_count\tstatus\trank";
constexpr std::string_view kTruthHeaderNotes = "note_id\tarchetype";
constexpr std::string_view kTruthHeaderUsers = "user_id\tgroup";

// Line-oriented reader that keeps track of position for diagnostics and
// rejects CR line endings (the formats are LF-only).
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path)
      : path_(path.string()), in_(path) {
    if (!in_) {
      throw IoError("cannot open '" + path_ + "' for reading");
    }
  }

  bool next(std::string& line) {
    if (!std::getline(in_, line)) {
      return false;
    }
    ++line_number_;
    if (!line.empty() && line.back() == '\r') {
      fail("CR line ending; expected LF");
    }
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(path_ + ":" + std::to_string(line_number_) + ": " + what);
  }

  std::string context() const { return path_ + ":" + std::to_string(line_number_); }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::uint64_t parse_uint(std::string_view token, const std::string& context) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(context + ": invalid unsigned integer '" + std::string(token) + "'");
  }
  return value;
}

class FileWriter {
 public:
  explicit FileWriter(const std::filesystem::path& path)
      : path_(path.string()), out_(path, std::ios::binary) {
    if (!out_) {
      throw IoError("cannot open '" + path_ + "' for writing");
    }
  }

  void line(std::string_view text) {
    out_ << text << '\n';
  }

  void close() {
    out_.flush();
    if (!out_) {
      throw IoError("write failed for '" + path_ + "'");
    }
    out_.close();
  }

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  if (ec != std::errc()) {
    throw ContractError("format_double: value not formattable");
  }
  return std::string(buffer, end);
}

double parse_double(std::string_view token, const std::string& context) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(context + ": invalid real number '" + std::string(token) + "'");
  }
  return value;
}

RatingsDataset read_votes(const std::filesystem::path& path, DuplicatePolicy policy) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line)) {
    throw ParseError(path.string() + ": empty file, expected header");
  }
  if (line != kVotesHeader) {
    reader.fail("bad header, expected 'user_id<TAB>note_id<TAB>rating'");
  }
  std::vector<Vote> votes;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      reader.fail("expected 3 tab-separated fields, got " +
                  std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      reader.fail("empty id field");
    }
    const double rating = parse_double(fields[2], reader.context());
    if (!(rating >= -1.0 && rating <= 1.0)) {
      reader.fail("rating " + std::string(fields[2]) + " outside [-1, 1]");
    }
    votes.push_back({std::string(fields[0]), std::string(fields[1]), rating});
  }
  try {
    return RatingsDataset::from_votes(votes, policy);
  } catch (const ContractError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_votes(const RatingsDataset& data, const std::filesystem::path& path) {
  FileWriter out(path);
  out.line(kVotesHeader);
  std::string row;
  for (std::size_t i = 0; i < data.vote_count(); ++i) {
    const Vote vote = data.vote_at(i);
    row.clear();
    row += vote.user_id;
    row += '\t';
    row += vote.note_id;
    row += '\t';
    row += format_double(vote.rating);
    out.line(row);
  }
  out.close();
}

namespace {

void write_params_section(FileWriter& out, std::string_view section,
                          std::string_view header,
                          const std::vector<ParamsTable::Row>& rows) {
  out.line(section);
  out.line(header);
  std::string row;
  for (const auto& entry : rows) {
    row.clear();
    row += entry.id;
    row += '\t';
    row += format_double(entry.intercept);
    row += '\t';
    row += format_double(entry.factor);
    out.line(row);
  }
}

}  // namespace

void write_params(const ParamsTable& table, const std::filesystem::path& path) {
  FileWriter out(path);
  write_params_section(out, "[users]", kParamsHeaderUsers, table.users);
  write_params_section(out, "[notes]", kParamsHeaderNotes, table.notes);
  out.close();
}

void write_params(const ModelParams& params, const RatingsDataset& data,
                  const std::filesystem::path& path) {
  if (!params.dims_match(data)) {
    throw ContractError("write_params: params not dimensioned for dataset");
  }
  ParamsTable table;
  table.users.reserve(data.user_count());
  for (std::size_t u = 0; u < data.user_count(); ++u) {
    table.users.push_back({data.user_id(u), params.user_intercepts[u],
                           params.user_factors[u]});
  }
  table.notes.reserve(data.note_count());
  for (std::size_t n = 0; n < data.note_count(); ++n) {
    table.notes.push_back({data.note_id(n), params.note_intercepts[n],
                           params.note_factors[n]});
  }
  write_params(table, path);
}

ParamsTable read_params(const std::filesystem::path& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line) || line != "[users]") {
    throw ParseError(path.string() + ": expected '[users]' section");
  }
  if (!reader.next(line) || line != kParamsHeaderUsers) {
    throw ParseError(path.string() + ": bad users header");
  }
  ParamsTable table;
  bool in_notes = false;
  while (reader.next(line)) {
    if (!in_notes && line == "[notes]") {
      if (!reader.next(line) || line != kParamsHeaderNotes) {
        throw ParseError(path.string() + ": bad notes header");
      }
      in_notes = true;
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      reader.fail("expected 3 tab-separated fields, got " +
                  std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      reader.fail("empty id field");
    }
    ParamsTable::Row row{std::string(fields[0]),
                         parse_double(fields[1], reader.context()),
                         parse_double(fields[2], reader.context())};
    (in_notes ? table.notes : table.users).push_back(std::move(row));
  }
  if (!in_notes) {
    throw ParseError(path.string() + ": missing '[notes]' section");
  }
  return table;
}

ModelParams align_params(const ParamsTable& table, const RatingsDataset& data) {
  ModelParams params = ModelParams::zeros(data.user_count(), data.note_count());
  std::unordered_map<std::string_view, const ParamsTable::Row*> users;
  users.reserve(table.users.size());
  for (const auto& row : table.users) {
    users.emplace(row.id, &row);
  }
  std::unordered_map<std::string_view, const ParamsTable::Row*> notes;
  notes.reserve(table.notes.size());
  for (const auto& row : table.notes) {
    notes.emplace(row.id, &row);
  }
  for (std::size_t u = 0; u < data.user_count(); ++u) {
    auto it = users.find(data.user_id(u));
    if (it == users.end()) {
      throw ContractError("align_params: user '" + data.user_id(u) +
                          "' missing from params table");
    }
    params.user_intercepts[u] = it->second->intercept;
    params.user_factors[u] = it->second->factor;
  }
  for (std::size_t n = 0; n < data.note_count(); ++n) {
    auto it = notes.find(data.note_id(n));
    if (it == notes.end()) {
      throw ContractError("align_params: note '" + data.note_id(n) +
                          "' missing from params table");
    }
    params.note_intercepts[n] = it->second->intercept;
    params.note_factors[n] = it->second->factor;
  }
  return params;
}

std::vector<ScoreRow> make_score_rows(std::span<const NoteScore> scores,
                                      const Thresholds& thresholds) {
  std::vector<ScoreRow> rows;
  rows.reserve(scores.size());
  std::uint64_t rank = 1;
  for (const NoteScore& score : scores) {
    rows.push_back({score.note_id, score.intercept, score.factor, score.vote_count,
                    classify(score, thresholds), rank++});
  }
  return rows;
}

void write_scores(std::span<const ScoreRow> rows, const std::filesystem::path& path) {
  FileWriter out(path);
  out.line(kScoresHeader);
  std::string row;
  for (const ScoreRow& entry : rows) {
    row.clear();
    row += entry.note_id;
    row += '\t';
    row += format_double(entry.intercept);
    row += '\t';
    row += format_double(entry.factor);
    row += '\t';
    row += std::to_string(entry.vote_count);
    row += '\t';
    row += to_string(entry.status);
    row += '\t';
    row += std::to_string(entry.rank);
    out.line(row);
  }
  out.close();
}

std::vector<ScoreRow> read_scores(const std::filesystem::path& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line) || line != kScoresHeader) {
    throw ParseError(path.string() + ": bad scores header");
  }
  std::vector<ScoreRow> rows;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 6) {
      reader.fail("expected 6 tab-separated fields, got " +
                  std::to_string(fields.size()));
    }
    ScoreRow row;
    row.note_id = std::string(fields[0]);
    if (row.note_id.empty()) {
      reader.fail("empty note id");
    }
    row.intercept = parse_double(fields[1], reader.context());
    row.factor = parse_double(fields[2], reader.context());
    row.vote_count = parse_uint(fields[3], reader.context());
    try {
      row.status = note_status_from_string(fields[4]);
    } catch (const ParseError& e) {
      reader.fail(e.what());
    }
    row.rank = parse_uint(fields[5], reader.context());
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_truth(const GroundTruth& truth, const std::filesystem::path& path) {
  FileWriter out(path);
  out.line("[notes]");
  out.line(kTruthHeaderNotes);
  std::string row;
  for (const auto& [id, archetype] : truth.note_archetypes) {
    row.clear();
    row += id;
    row += '\t';
    row += to_string(archetype);
    out.line(row);
  }
  out.line("[users]");
  out.line(kTruthHeaderUsers);
  for (const auto& [id, group] : truth.user_groups) {
    row.clear();
    row += id;
    row += '\t';
    row += to_string(group);
    out.line(row);
  }
  out.close();
}

GroundTruth read_truth(const std::filesystem::path& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line) || line != "[notes]") {
    throw ParseError(path.string() + ": expected '[notes]' section");
  }
  if (!reader.next(line) || line != kTruthHeaderNotes) {
    throw ParseError(path.string() + ": bad notes header");
  }
  GroundTruth truth;
  bool in_users = false;
  while (reader.next(line)) {
    if (!in_users && line == "[users]") {
      if (!reader.next(line) || line != kTruthHeaderUsers) {
        throw ParseError(path.string() + ": bad users header");
      }
      in_users = true;
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      reader.fail("expected 2 tab-separated fields, got " +
                  std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      reader.fail("empty id field");
    }
    if (in_users) {
      const auto group = group_from_string(fields[1]);
      if (!group) {
        reader.fail("unknown group '" + std::string(fields[1]) + "'");
      }
      truth.user_groups.emplace_back(std::string(fields[0]), *group);
    } else {
      const auto archetype = archetype_from_string(fields[1]);
      if (!archetype) {
        reader.fail("unknown archetype '" + std::string(fields[1]) + "'");
      }
      truth.note_archetypes.emplace_back(std::string(fields[0]), *archetype);
    }
  }
  if (!in_users) {
    throw ParseError(path.string() + ": missing '[users]' section");
  }
  return truth;
}

void write_report(const RecoveryMetrics& metrics, std::span<const ScoreRow> rows,
                  const GroundTruth& truth, const std::filesystem::path& path) {
  FileWriter out(path);
  auto metric = [&out](std::string_view name, double value) {
    std::string line = "# ";
    line += name;
    line += '\t';
    line += format_double(value);
    out.line(line);
  };
  metric("separation_margin", metrics.separation_margin);
  metric("auc", metrics.auc);
  metric("mean_abs_factor_bridging", metrics.mean_abs_factor_bridging);
  metric("mean_abs_factor_partisan_a", metrics.mean_abs_factor_partisan_a);
  metric("mean_abs_factor_partisan_b", metrics.mean_abs_factor_partisan_b);
  metric("mean_abs_factor_partisan", metrics.mean_abs_factor_partisan);
  out.line("note_id\tarchetype\tintercept\tfactor\tvote_count\tstatus\trank");
  std::string row;
  for (const ScoreRow& entry : rows) {
    const auto archetype = truth.archetype_of(entry.note_id);
    if (!archetype) {
      throw ContractError("write_report: note '" + entry.note_id +
                          "' missing from ground truth");
    }
    row.clear();
    row += entry.note_id;
    row += '\t';
    row += to_string(*archetype);
    row += '\t';
    row += format_double(entry.intercept);
    row += '\t';
    row += format_double(entry.factor);
    row += '\t';
    row += std::to_string(entry.vote_count);
    row += '\t';
    row += to_string(entry.status);
    row += '\t';
    row += std::to_string(entry.rank);
    out.line(row);
  }
  out.close();
}

ConvertStats convert_public_data(const std::filesystem::path& ratings_path,
                                 const std::filesystem::path& out_path,
                                 ConvertMode mode) {
  LineReader reader(ratings_path);
  std::string line;
  if (!reader.next(line)) {
    throw ParseError(ratings_path.string() + ": empty file, expected header");
  }
  const auto header = split_tabs(line);
  std::size_t note_col = header.size();
  std::size_t rater_col = header.size();
  std::size_t level_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "noteId") {
      note_col = i;
    } else if (header[i] == "raterParticipantId") {
      rater_col = i;
    } else if (header[i] == "helpfulnessLevel") {
      level_col = i;
    }
  }
  const std::pair<std::size_t, const char*> required[] = {
      {note_col, "noteId"},
      {rater_col, "raterParticipantId"},
      {level_col, "helpfulnessLevel"}};
  for (const auto& [col, name] : required) {
    if (col == header.size()) {
      throw ParseError(ratings_path.string() + ": missing required column '" +
                       std::string(name) + "'");
    }
  }

  FileWriter out(out_path);
  out.line(kVotesHeader);
  ConvertStats stats;
  std::string row;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() <= std::max({note_col, rater_col, level_col})) {
      reader.fail("row has " + std::to_string(fields.size()) +
                  " fields, fewer than the header");
    }
    ++stats.rows_read;
    const std::string_view level = fields[level_col];
    std::string_view rating;
    if (level == "HELPFUL") {
      rating = "1";
    } else if (level == "NOT_HELPFUL") {
      rating = "-1";
    } else if (level == "SOMEWHAT_HELPFUL") {
      if (mode == ConvertMode::kDrop) {
        ++stats.dropped_somewhat;
        continue;
      }
      rating = "0";
    } else {
      ++stats.dropped_unknown;
      continue;
    }
    row.clear();
    row += fields[rater_col];
    row += '\t';
    row += fields[note_col];
    row += '\t';
    row += rating;
    out.line(row);
    ++stats.rows_written;
  }
  out.close();
  return stats;
}

}  // namespace bridgerank
