#pragma once

#include "minedit/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace minedit {

/// Unbiased (.)@k estimator 1 - C(n-c, k) / C(n, k), evaluated as a
/// telescoping product so it never forms a factorial.
/// Requires 0 <= c <= n and 1 <= k <= n, else Error(DomainError).
double at_k(std::size_t n, std::size_t c, std::size_t k);

/// Same estimator in exact rational arithmetic.
BigRational at_k_exact(std::size_t n, std::size_t c, std::size_t k);

/// One evaluated candidate. Edit costs are exact ratios so the fix
/// criterion has no floating-point boundary cases.
struct CandidateOutcome {
  bool correct = false;
  Ratio candidate_edit_cost;
  Ratio golden_edit_cost;
};

/// Candidates that are correct and whose cost ratio to the golden fix is at
/// most p (inclusive). Throws Error(GoldenIsIdentical) if any golden cost is
/// zero.
std::size_t fix_count(std::span<const CandidateOutcome> outcomes, const Ratio& p);

std::size_t pass_count(std::span<const CandidateOutcome> outcomes);

struct TaskOutcomes {
  std::string task_id;
  std::vector<CandidateOutcome> candidates;
};

/// Per-task success counts: c for pass and one c per tolerance in `ps`.
struct TaskCounts {
  std::size_t n = 0;
  std::size_t pass = 0;
  std::vector<std::size_t> fix;
};

TaskCounts count_task(const TaskOutcomes& task, std::span<const Ratio> ps);

enum class MetricKind { pass, fix };

struct MetricValue {
  MetricKind kind = MetricKind::pass;
  std::size_t k = 1;
  std::optional<Ratio> p; // only for fix
  BigRational exact;

  double value() const { return to_double(exact); }
  /// "pass@5", "fix_1.5@10".
  std::string label() const;

  bool operator==(const MetricValue&) const = default;
};

/// Metric values ordered as in the usual results table: pass@k for every k,
/// then fix_p@k for every p (ascending) and k (ascending).
struct MetricReport {
  std::size_t n = 0;
  std::size_t task_count = 0;
  std::vector<MetricValue> values;

  const MetricValue* find(MetricKind kind, std::size_t k,
                          const std::optional<Ratio>& p = std::nullopt) const;

  bool operator==(const MetricReport&) const = default;
};

/// Uniform mean over tasks of the per-task estimators. `ks` and `ps` are
/// sorted and de-duplicated internally. Throws Error(InconsistentN) when the
/// tasks disagree on n, Error(DomainError) for k outside [1, n], and
/// Error(EmptyDataset) for zero tasks.
MetricReport aggregate(std::span<const TaskCounts> counts, std::span<const std::size_t> ks,
                       std::span<const Ratio> ps);

MetricReport report(std::span<const TaskOutcomes> tasks, std::span<const std::size_t> ks,
                    std::span<const Ratio> ps);

} // namespace minedit
