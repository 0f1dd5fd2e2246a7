#include "minedit/metrics.hpp"

#include "minedit/errors.hpp"

#include <algorithm>

namespace minedit {

namespace {

void check_domain(std::size_t n, std::size_t c, std::size_t k) {
  if (n == 0 || c > n || k == 0 || k > n)
    throw Error(ErrorKind::DomainError, "at_k requires 0 <= c <= n and 1 <= k <= n (n=" +
                                            std::to_string(n) + ", c=" + std::to_string(c) +
                                            ", k=" + std::to_string(k) + ")");
}

template <typename T>
std::vector<T> sorted_unique(std::span<const T> values) {
  std::vector<T> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

double at_k(std::size_t n, std::size_t c, std::size_t k) {
  check_domain(n, c, k);
  if (n - c < k) return 1.0;
  // C(n-c, k) / C(n, k) = prod_{i=n-c+1}^{n} (1 - k / i)
  double miss = 1.0;
  for (std::size_t i = n - c + 1; i <= n; ++i)
    miss *= 1.0 - static_cast<double>(k) / static_cast<double>(i);
  return 1.0 - miss;
}

BigRational at_k_exact(std::size_t n, std::size_t c, std::size_t k) {
  check_domain(n, c, k);
  if (n - c < k) return BigRational(1);
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= n - c - i;
    den *= n - i;
  }
  return BigRational(1) - BigRational(num, den);
}

std::size_t fix_count(std::span<const CandidateOutcome> outcomes, const Ratio& p) {
  std::size_t count = 0;
  for (const auto& o : outcomes) {
    if (o.golden_edit_cost.numerator() == 0)
      throw Error(ErrorKind::GoldenIsIdentical, "golden fix has zero edit cost");
    if (o.correct && o.candidate_edit_cost / o.golden_edit_cost <= p) ++count;
  }
  return count;
}

std::size_t pass_count(std::span<const CandidateOutcome> outcomes) {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.correct; }));
}

TaskCounts count_task(const TaskOutcomes& task, std::span<const Ratio> ps) {
  TaskCounts counts;
  counts.n = task.candidates.size();
  counts.pass = pass_count(task.candidates);
  counts.fix.reserve(ps.size());
  for (const auto& p : ps) counts.fix.push_back(fix_count(task.candidates, p));
  return counts;
}

std::string MetricValue::label() const {
  if (kind == MetricKind::pass) return "pass@" + std::to_string(k);
  return "fix_" + format_ratio(p.value_or(Ratio(1))) + "@" + std::to_string(k);
}

const MetricValue* MetricReport::find(MetricKind kind, std::size_t k,
                                      const std::optional<Ratio>& p) const {
  for (const auto& v : values)
    if (v.kind == kind && v.k == k && (kind == MetricKind::pass || v.p == p)) return &v;
  return nullptr;
}

MetricReport aggregate(std::span<const TaskCounts> counts, std::span<const std::size_t> ks_in,
                       std::span<const Ratio> ps_in) {
  if (counts.empty()) throw Error(ErrorKind::EmptyDataset, "no tasks to aggregate");
  const std::size_t n = counts.front().n;
  for (const auto& c : counts)
    if (c.n != n)
      throw Error(ErrorKind::InconsistentN, "tasks disagree on n (" + std::to_string(n) + " vs " +
                                                std::to_string(c.n) + ")");
  if (n == 0) throw Error(ErrorKind::DomainError, "tasks have no candidates");

  const auto ks = sorted_unique(ks_in);
  for (auto k : ks)
    if (k == 0 || k > n)
      throw Error(ErrorKind::DomainError,
                  "k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

  MetricReport out;
  out.n = n;
  out.task_count = counts.size();
  const BigRational tasks(static_cast<long long>(counts.size()));

  for (auto k : ks) {
    BigRational sum = 0;
    for (const auto& c : counts) sum += at_k_exact(n, c.pass, k);
    out.values.push_back({MetricKind::pass, k, std::nullopt, sum / tasks});
  }

  // Counts carry one fix entry per input p; map sorted p back to that slot.
  const std::vector<Ratio> ps_given(ps_in.begin(), ps_in.end());
  for (const auto& p : sorted_unique(ps_in)) {
    const auto slot = static_cast<std::size_t>(
        std::find(ps_given.begin(), ps_given.end(), p) - ps_given.begin());
    for (auto k : ks) {
      BigRational sum = 0;
      for (const auto& c : counts) {
        if (slot >= c.fix.size())
          throw Error(ErrorKind::DomainError, "task counts missing tolerance " + format_ratio(p));
        sum += at_k_exact(n, c.fix[slot], k);
      }
      out.values.push_back({MetricKind::fix, k, p, sum / tasks});
    }
  }
  return out;
}

MetricReport report(std::span<const TaskOutcomes> tasks, std::span<const std::size_t> ks,
                    std::span<const Ratio> ps) {
  std::vector<TaskCounts> counts;
  counts.reserve(tasks.size());
  for (const auto& t : tasks) counts.push_back(count_task(t, ps));
  return aggregate(counts, ks, ps);
}

} // namespace minedit
