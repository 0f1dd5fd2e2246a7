#include "minedit/reward.hpp"

#include "minedit/editcost.hpp"
#include "minedit/errors.hpp"

#include <algorithm>

namespace minedit {

StdConvention parse_std_convention(std::string_view text) {
  if (text == "population") return StdConvention::population;
  if (text == "sample") return StdConvention::sample;
  throw Error(ErrorKind::DomainError, "unknown std convention '" + std::string(text) + "'");
}

std::string_view to_string(StdConvention convention) noexcept {
  return convention == StdConvention::population ? "population" : "sample";
}

namespace {

void check_params(const RewardParams& params) {
  if (!(params.alpha >= 0.0 && params.alpha <= 1.1))
    throw Error(ErrorKind::DomainError, "alpha must lie in [0, 1.1]");
  if (!(params.beta >= 0.0)) throw Error(ErrorKind::DomainError, "beta must be non-negative");
}

std::vector<bool> correctness(const RolloutGroup& group) {
  std::vector<bool> flags;
  flags.reserve(group.samples.size());
  for (const auto& s : group.samples) flags.push_back(s.correct);
  return flags;
}

double accuracy_of(const std::vector<bool>& correct) {
  if (correct.empty()) throw Error(ErrorKind::EmptyGroup, "rollout group has no samples");
  const auto hits = std::count(correct.begin(), correct.end(), true);
  return static_cast<double>(hits) / static_cast<double>(correct.size());
}

Eigen::VectorXd correct_costs(const Eigen::VectorXd& costs, const std::vector<bool>& correct) {
  std::vector<double> kept;
  for (std::size_t i = 0; i < correct.size(); ++i)
    if (correct[i]) kept.push_back(costs(static_cast<Eigen::Index>(i)));
  return Eigen::Map<const Eigen::VectorXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
}

} // namespace

double group_accuracy(const RolloutGroup& group) { return accuracy_of(correctness(group)); }

bool threshold_gate(const RolloutGroup& group) {
  return group_accuracy(group) >= group.params.alpha;
}

Eigen::VectorXd sample_edit_costs(const RolloutGroup& group) {
  Eigen::VectorXd costs(static_cast<Eigen::Index>(group.samples.size()));
  for (std::size_t i = 0; i < group.samples.size(); ++i)
    costs(static_cast<Eigen::Index>(i)) =
        edit_cost(group.buggy, group.samples[i].output, Granularity::line).edit_cost;
  return costs;
}

Eigen::VectorXd edit_penalties(const RolloutGroup& group) {
  const auto correct = correctness(group);
  if (std::find(correct.begin(), correct.end(), true) == correct.end())
    throw Error(ErrorKind::NoCorrectSamples, "no correct sample to penalize");
  return standardized_penalties(correct_costs(sample_edit_costs(group), correct),
                                group.params.std_convention);
}

RewardVector shaped_rewards(const Eigen::VectorXd& edit_costs, const std::vector<bool>& correct,
                            const RewardParams& params) {
  check_params(params);
  if (static_cast<std::size_t>(edit_costs.size()) != correct.size())
    throw Error(ErrorKind::DomainError, "edit costs and correctness flags differ in length");

  RewardVector rv;
  rv.group_accuracy = accuracy_of(correct);
  rv.edit_costs = edit_costs;
  rv.penalties.assign(correct.size(), std::nullopt);
  rv.rewards = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(correct.size()));

  const bool any_correct = std::find(correct.begin(), correct.end(), true) != correct.end();
  rv.activated = rv.group_accuracy >= params.alpha;

  Eigen::VectorXd penalties;
  if (rv.activated && any_correct)
    penalties = standardized_penalties(correct_costs(edit_costs, correct), params.std_convention);

  Eigen::Index next = 0;
  for (std::size_t i = 0; i < correct.size(); ++i) {
    if (!correct[i]) continue;
    const auto at = static_cast<Eigen::Index>(i);
    if (penalties.size() > 0) {
      rv.penalties[i] = penalties(next++);
      rv.rewards(at) = 1.0 - params.beta * *rv.penalties[i];
    } else {
      rv.rewards(at) = 1.0;
    }
  }
  return rv;
}

RewardVector rewards(const RolloutGroup& group) {
  return shaped_rewards(sample_edit_costs(group), correctness(group), group.params);
}

Eigen::VectorXd advantages(const RewardVector& rv, StdConvention convention) {
  return group_advantages(rv.rewards, convention);
}

} // namespace minedit
