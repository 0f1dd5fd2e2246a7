#pragma once

#include "minedit/normalize.hpp"

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <vector>

namespace minedit {

enum class StdConvention { population, sample };

StdConvention parse_std_convention(std::string_view text);
std::string_view to_string(StdConvention convention) noexcept;

struct RewardParams {
  double alpha = 0.8;  // group accuracy threshold; > 1 disables the penalty
  double beta = 0.05;  // penalty coefficient
  StdConvention std_convention = StdConvention::population;
};

struct RolloutSample {
  NormalizedProgram output;
  bool correct = false;
};

/// Candidate repairs sampled for one buggy input. Nothing here refers to a
/// golden fix: rewards only compare samples against the buggy program.
struct RolloutGroup {
  NormalizedProgram buggy;
  std::vector<RolloutSample> samples;
  RewardParams params;
};

struct RewardVector {
  Eigen::VectorXd rewards;
  std::vector<std::optional<double>> penalties; // set for penalized samples only
  Eigen::VectorXd edit_costs;                   // line-level D_EC(buggy, sample)
  bool activated = false;
  double group_accuracy = 0.0;
};

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

/// Standard deviation around `mean` under the given convention. A single
/// value has zero spread under both conventions.
template <typename Derived>
double spread(const Eigen::MatrixBase<Derived>& values, double mean, StdConvention convention) {
  const auto count = values.size();
  if (count < 2) return 0.0;
  const double ss = (values.array() - mean).square().sum();
  const double denom = convention == StdConvention::population ? static_cast<double>(count)
                                                               : static_cast<double>(count - 1);
  return std::sqrt(ss / denom);
}

template <typename Derived>
bool all_equal(const Eigen::MatrixBase<Derived>& values) {
  return values.size() == 0 || (values.array() == values(0)).all();
}

/// sigma((D_i - mean) / std) for every entry. When all costs are equal the
/// z-score is undefined and every penalty is sigma(0) = 0.5.
template <typename Derived>
Eigen::VectorXd standardized_penalties(const Eigen::MatrixBase<Derived>& costs,
                                       StdConvention convention = StdConvention::population) {
  Eigen::VectorXd out(costs.size());
  if (all_equal(costs)) return out.setConstant(0.5);
  const double mean = costs.mean();
  const double sd = spread(costs, mean, convention);
  for (Eigen::Index i = 0; i < costs.size(); ++i) out(i) = logistic((costs(i) - mean) / sd);
  return out;
}

/// (R_i - mean) / std; all zeros when every reward is equal.
template <typename Derived>
Eigen::VectorXd group_advantages(const Eigen::MatrixBase<Derived>& rewards,
                                 StdConvention convention = StdConvention::population) {
  if (all_equal(rewards)) return Eigen::VectorXd::Zero(rewards.size());
  const double mean = rewards.mean();
  const double sd = spread(rewards, mean, convention);
  return ((rewards.array() - mean) / sd).matrix();
}

/// Fraction of correct samples. Throws Error(EmptyGroup).
double group_accuracy(const RolloutGroup& group);

/// accuracy >= alpha.
bool threshold_gate(const RolloutGroup& group);

/// Line-level D_EC(buggy, output) per sample. Throws Error(EmptySource) when
/// the buggy program is empty.
Eigen::VectorXd sample_edit_costs(const RolloutGroup& group);

/// One penalty per correct sample, in sample order. Throws
/// Error(NoCorrectSamples).
Eigen::VectorXd edit_penalties(const RolloutGroup& group);

/// Reward shaping from precomputed per-sample edit costs.
RewardVector shaped_rewards(const Eigen::VectorXd& edit_costs, const std::vector<bool>& correct,
                            const RewardParams& params);

RewardVector rewards(const RolloutGroup& group);

Eigen::VectorXd advantages(const RewardVector& rv,
                           StdConvention convention = StdConvention::population);

} // namespace minedit
