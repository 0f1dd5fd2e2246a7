#pragma once

#include "minedit/config.hpp"
#include "minedit/normalize.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minedit {

struct Candidate {
  std::string text;
  bool correct = false;
};

/// One repair task, as read from an eval JSONL line:
/// {"task_id", "language", "buggy", "golden", "candidates": [{"text", "correct"}],
///  "description"?, "bug_category"?}
struct EvalRecord {
  std::string task_id;
  Language language = Language::plain;
  std::string buggy;
  std::string golden;
  std::vector<Candidate> candidates;
  std::string description;
  std::optional<std::string> bug_category;
};

struct Rejection {
  std::size_t line = 0;
  std::string id;
  std::string reason;
};

struct IngestResult {
  std::vector<EvalRecord> records;
  std::vector<Rejection> rejections;
};

/// Throws LineError(ParseError) for malformed JSON and LineError(SchemaError)
/// for missing or mistyped fields (an unknown language tag included).
EvalRecord parse_eval_record(std::string_view json_line, std::size_t line_no);

/// Reads an eval JSONL stream. Blank lines are skipped. Records whose golden
/// fix normalizes to the buggy program, whose buggy program is empty, or
/// whose task_id repeats are rejected and reported rather than thrown.
IngestResult ingest(std::istream& in, const RunConfig& config);
IngestResult ingest_file(const std::filesystem::path& path, const RunConfig& config);

/// One rollout group, as read from a reward JSONL line:
/// {"group_id", "language", "buggy", "samples": [{"text", "correct"}],
///  "alpha"?, "beta"?}
struct GroupRecord {
  std::string group_id;
  Language language = Language::plain;
  std::string buggy;
  std::vector<Candidate> samples;
  std::optional<double> alpha;
  std::optional<double> beta;
};

GroupRecord parse_group_record(std::string_view json_line, std::size_t line_no);

} // namespace minedit
