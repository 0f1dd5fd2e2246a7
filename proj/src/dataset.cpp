#include "minedit/dataset.hpp"

#include "minedit/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <unordered_set>

namespace minedit {

namespace {

using nlohmann::json;

json parse_line(std::string_view text, std::size_t line_no) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw LineError(ErrorKind::ParseError, line_no, e.what());
  }
}

const json& field(const json& obj, const char* name, json::value_t type, std::size_t line_no) {
  const auto it = obj.find(name);
  if (it == obj.end())
    throw LineError(ErrorKind::SchemaError, line_no, std::string("missing field '") + name + "'");
  const bool ok = it->type() == type ||
                  (type == json::value_t::number_float && it->is_number());
  if (!ok)
    throw LineError(ErrorKind::SchemaError, line_no,
                    std::string("field '") + name + "' has the wrong type");
  return *it;
}

std::string string_field(const json& obj, const char* name, std::size_t line_no) {
  return field(obj, name, json::value_t::string, line_no).get<std::string>();
}

std::optional<double> optional_number(const json& obj, const char* name, std::size_t line_no) {
  if (!obj.contains(name) || obj.at(name).is_null()) return std::nullopt;
  return field(obj, name, json::value_t::number_float, line_no).get<double>();
}

Language language_field(const json& obj, std::size_t line_no) {
  const auto tag = string_field(obj, "language", line_no);
  try {
    return parse_language(tag);
  } catch (const Error& e) {
    throw LineError(ErrorKind::SchemaError, line_no, e.what());
  }
}

std::vector<Candidate> candidate_list(const json& obj, const char* name, std::size_t line_no) {
  const auto& list = field(obj, name, json::value_t::array, line_no);
  std::vector<Candidate> out;
  out.reserve(list.size());
  for (const auto& item : list) {
    if (!item.is_object())
      throw LineError(ErrorKind::SchemaError, line_no,
                      std::string("entries of '") + name + "' must be objects");
    out.push_back({string_field(item, "text", line_no),
                   field(item, "correct", json::value_t::boolean, line_no).get<bool>()});
  }
  return out;
}

json require_object(std::string_view text, std::size_t line_no) {
  json obj = parse_line(text, line_no);
  if (!obj.is_object()) throw LineError(ErrorKind::SchemaError, line_no, "expected a JSON object");
  return obj;
}

} // namespace

EvalRecord parse_eval_record(std::string_view json_line, std::size_t line_no) {
  const json obj = require_object(json_line, line_no);
  EvalRecord record;
  record.task_id = string_field(obj, "task_id", line_no);
  record.language = language_field(obj, line_no);
  record.buggy = string_field(obj, "buggy", line_no);
  record.golden = string_field(obj, "golden", line_no);
  record.candidates = candidate_list(obj, "candidates", line_no);
  if (obj.contains("description") && obj.at("description").is_string())
    record.description = obj.at("description").get<std::string>();
  if (obj.contains("bug_category") && obj.at("bug_category").is_string())
    record.bug_category = obj.at("bug_category").get<std::string>();
  return record;
}

IngestResult ingest(std::istream& in, const RunConfig& config) {
  IngestResult result;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    EvalRecord record = parse_eval_record(line, line_no);

    const auto buggy = prepare_program(record.buggy, record.language, config);
    const auto golden = prepare_program(record.golden, record.language, config);
    const bool empty =
        config.granularity == Granularity::line ? buggy.lines.empty() : tokens_of(buggy).empty();
    if (empty) {
      result.rejections.push_back({line_no, record.task_id, "buggy program is empty"});
      continue;
    }
    if (buggy == golden) {
      result.rejections.push_back({line_no, record.task_id, "golden identical to buggy"});
      continue;
    }
    if (!seen.insert(record.task_id).second) {
      result.rejections.push_back({line_no, record.task_id, "duplicate task_id"});
      continue;
    }
    result.records.push_back(std::move(record));
  }
  if (in.bad()) throw Error(ErrorKind::IoError, "read failure");
  return result;
}

IngestResult ingest_file(const std::filesystem::path& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return ingest(in, config);
}

GroupRecord parse_group_record(std::string_view json_line, std::size_t line_no) {
  const json obj = require_object(json_line, line_no);
  GroupRecord group;
  group.group_id = string_field(obj, "group_id", line_no);
  group.language = language_field(obj, line_no);
  group.buggy = string_field(obj, "buggy", line_no);
  group.samples = candidate_list(obj, "samples", line_no);
  group.alpha = optional_number(obj, "alpha", line_no);
  group.beta = optional_number(obj, "beta", line_no);
  return group;
}

} // namespace minedit
