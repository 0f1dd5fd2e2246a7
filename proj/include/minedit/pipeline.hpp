#pragma once

#include "minedit/config.hpp"
#include "minedit/dataset.hpp"
#include "minedit/metrics.hpp"
#include "minedit/reward.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace minedit {

struct TaskDetail {
  std::string task_id;
  std::size_t c_pass = 0;
  std::vector<std::size_t> c_fix; // aligned with EvalResult::ps
  Ratio golden_edit_cost;
  std::vector<Ratio> candidate_edit_costs;
};

struct EvalResult {
  MetricReport report;
  std::vector<Ratio> ps;
  std::vector<TaskDetail> details; // sorted by task_id
};

/// Scores every record (normalize, edit cost, fix/pass counts) on
/// `config.jobs` threads and aggregates. Output does not depend on the
/// worker count. Throws Error(EmptyDataset) for no records and
/// Error(InconsistentN) when a record does not carry n_expected candidates.
EvalResult run_eval(std::span<const EvalRecord> records, const RunConfig& config);

/// One JSON object per task, fixed key order, newline-terminated.
std::string details_jsonl(const EvalResult& result);

/// Builds the rollout group for a parsed reward line; per-group alpha/beta
/// override the config.
RolloutGroup make_group(const GroupRecord& record, const RunConfig& config);

/// {"group_id", "activated", "group_accuracy", "edit_costs", "penalties",
///  "rewards", "advantages"} on one line, no trailing newline.
std::string reward_line(const std::string& group_id, const RewardVector& rv,
                        const Eigen::VectorXd& advantages);

struct RewardBatchStats {
  std::size_t processed = 0;
  std::size_t rejected = 0;
};

/// Streams reward JSONL from `in` to `out` in input order, in chunks so
/// memory stays bounded. Lines that fail to parse or score go to `rejects`
/// as {"line", "error"} and processing continues.
RewardBatchStats run_reward(std::istream& in, std::ostream& out, std::ostream& rejects,
                            const RunConfig& config);

} // namespace minedit
