#pragma once

#include "minedit/normalize.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace minedit {

/// sim(i, j) = 1 - D_EC(X_i, X_j). Not symmetric in general, since the edit
/// cost is normalized by the first argument; entries can be negative.
template <typename Scalar = double>
using SimilarityMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Line-level similarity of every ordered pair. Throws Error(EmptySource) if
/// any program is empty.
SimilarityMatrix<double> build_similarity(std::span<const NormalizedProgram> items);

/// Element-wise max(sim(i, j), sim(j, i)): a pair counts as similar if
/// either direction says so.
template <typename Derived>
auto symmetrized(const Eigen::MatrixBase<Derived>& sim) {
  return sim.cwiseMax(sim.transpose());
}

enum class SelectionStrategy { exact, greedy };

struct Selection {
  std::vector<std::size_t> indices; // ascending
  double objective = 0.0;           // max pairwise symmetrized similarity
};

inline constexpr std::uint64_t default_exact_budget = 1'000'000;

/// Largest symmetrized similarity over distinct pairs of `subset`.
double max_pairwise_similarity(const SimilarityMatrix<double>& sim,
                               std::span<const std::size_t> subset);

/// Picks k of the m items minimizing the maximum pairwise similarity.
///
/// `exact` enumerates k-subsets in lexicographic order with pruning and
/// returns the lexicographically smallest optimal subset; it throws
/// Error(ExactTooLarge) when C(m, k) exceeds `budget`. `greedy` seeds with
/// the least similar pair and repeatedly adds the item whose worst
/// similarity to the chosen set is smallest (lowest index on ties).
/// Requires 2 <= k <= m, else Error(DomainError).
Selection select_diverse(const SimilarityMatrix<double>& sim, std::size_t k,
                         SelectionStrategy strategy,
                         std::uint64_t budget = default_exact_budget);

} // namespace minedit
