#include "minedit/pipeline.hpp"

#include "minedit/detail/parallel.hpp"
#include "minedit/editcost.hpp"
#include "minedit/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <variant>

namespace minedit {

namespace {

struct ScoredTask {
  TaskCounts counts;
  TaskDetail detail;
};

ScoredTask score_record(const EvalRecord& record, const RunConfig& config) {
  if (record.candidates.size() != config.n_expected)
    throw Error(ErrorKind::InconsistentN, "task '" + record.task_id + "' has " +
                                              std::to_string(record.candidates.size()) +
                                              " candidates, expected " +
                                              std::to_string(config.n_expected));

  const auto buggy = prepare_program(record.buggy, record.language, config);
  const auto golden = prepare_program(record.golden, record.language, config);
  const Ratio golden_cost = edit_cost(buggy, golden, config.granularity).exact();
  if (golden_cost.numerator() == 0)
    throw Error(ErrorKind::GoldenIsIdentical, "task '" + record.task_id + "'");

  TaskOutcomes task{record.task_id, {}};
  task.candidates.reserve(record.candidates.size());
  ScoredTask scored;
  scored.detail.task_id = record.task_id;
  scored.detail.golden_edit_cost = golden_cost;
  for (const auto& c : record.candidates) {
    const auto program = prepare_program(c.text, record.language, config);
    const Ratio cost = edit_cost(buggy, program, config.granularity).exact();
    task.candidates.push_back({c.correct, cost, golden_cost});
    scored.detail.candidate_edit_costs.push_back(cost);
  }
  scored.counts = count_task(task, config.ps);
  scored.detail.c_pass = scored.counts.pass;
  scored.detail.c_fix = scored.counts.fix;
  return scored;
}

} // namespace

EvalResult run_eval(std::span<const EvalRecord> records, const RunConfig& config) {
  if (records.empty()) throw Error(ErrorKind::EmptyDataset, "no records to evaluate");

  std::vector<ScoredTask> scored(records.size());
  detail::parallel_for(records.size(), config.jobs,
                       [&](std::size_t i) { scored[i] = score_record(records[i], config); });

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].task_id < records[b].task_id;
  });

  EvalResult result;
  result.ps = config.ps;
  std::vector<TaskCounts> counts;
  counts.reserve(order.size());
  for (auto i : order) {
    counts.push_back(scored[i].counts);
    result.details.push_back(std::move(scored[i].detail));
  }
  result.report = aggregate(counts, config.ks, config.ps);
  return result;
}

std::string details_jsonl(const EvalResult& result) {
  std::string out;
  for (const auto& d : result.details) {
    nlohmann::ordered_json row;
    row["task_id"] = d.task_id;
    row["c_pass"] = d.c_pass;
    nlohmann::ordered_json fix = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < result.ps.size() && i < d.c_fix.size(); ++i)
      fix[format_ratio(result.ps[i])] = d.c_fix[i];
    row["c_fix"] = fix;
    row["golden_edit_cost"] = format_ratio(d.golden_edit_cost);
    auto costs = nlohmann::ordered_json::array();
    for (const auto& c : d.candidate_edit_costs) costs.push_back(format_ratio(c));
    row["candidate_edit_costs"] = costs;
    out += row.dump();
    out += '\n';
  }
  return out;
}

RolloutGroup make_group(const GroupRecord& record, const RunConfig& config) {
  RolloutGroup group;
  group.buggy = prepare_program(record.buggy, record.language, config);
  group.params = config.reward;
  if (record.alpha) group.params.alpha = *record.alpha;
  if (record.beta) group.params.beta = *record.beta;
  group.samples.reserve(record.samples.size());
  for (const auto& s : record.samples)
    group.samples.push_back({prepare_program(s.text, record.language, config), s.correct});
  return group;
}

std::string reward_line(const std::string& group_id, const RewardVector& rv,
                        const Eigen::VectorXd& advantages) {
  auto as_array = [](const Eigen::VectorXd& v) {
    auto arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
  };
  nlohmann::ordered_json row;
  row["group_id"] = group_id;
  row["activated"] = rv.activated;
  row["group_accuracy"] = rv.group_accuracy;
  row["edit_costs"] = as_array(rv.edit_costs);
  auto penalties = nlohmann::ordered_json::array();
  for (const auto& p : rv.penalties) penalties.push_back(p ? nlohmann::ordered_json(*p) : nullptr);
  row["penalties"] = penalties;
  row["rewards"] = as_array(rv.rewards);
  row["advantages"] = as_array(advantages);
  return row.dump();
}

RewardBatchStats run_reward(std::istream& in, std::ostream& out, std::ostream& rejects,
                            const RunConfig& config) {
  const std::size_t chunk = 256 * std::max(1u, config.jobs);
  RewardBatchStats stats;
  std::size_t line_no = 0;

  struct Pending {
    std::size_t line;
    std::string text;
  };
  std::vector<Pending> batch;
  // Either an output line or an error message.
  std::vector<std::variant<std::string, std::string>> results;

  auto flush = [&] {
    results.assign(batch.size(), {});
    detail::parallel_for(batch.size(), config.jobs, [&](std::size_t i) {
      try {
        const auto record = parse_group_record(batch[i].text, batch[i].line);
        const auto group = make_group(record, config);
        const auto rv = rewards(group);
        results[i].emplace<0>(
            reward_line(record.group_id, rv, advantages(rv, group.params.std_convention)));
      } catch (const std::exception& e) {
        results[i].emplace<1>(e.what());
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (results[i].index() == 0) {
        out << std::get<0>(results[i]) << '\n';
        ++stats.processed;
      } else {
        nlohmann::ordered_json err;
        err["line"] = batch[i].line;
        err["error"] = std::get<1>(results[i]);
        rejects << err.dump() << '\n';
        ++stats.rejected;
      }
    }
    batch.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    batch.push_back({line_no, std::move(line)});
    if (batch.size() == chunk) flush();
  }
  flush();
  if (in.bad()) throw Error(ErrorKind::IoError, "read failure");
  return stats;
}

} // namespace minedit
