#include "minedit/diversity.hpp"

#include "minedit/editcost.hpp"
#include "minedit/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace minedit {

SimilarityMatrix<double> build_similarity(std::span<const NormalizedProgram> items) {
  const auto m = static_cast<Eigen::Index>(items.size());
  SimilarityMatrix<double> sim(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (items[static_cast<std::size_t>(i)].lines.empty())
      throw Error(ErrorKind::EmptySource, "item " + std::to_string(i) + " has no lines");
    for (Eigen::Index j = 0; j < m; ++j)
      sim(i, j) = i == j ? 1.0
                         : 1.0 - edit_cost(items[static_cast<std::size_t>(i)],
                                           items[static_cast<std::size_t>(j)], Granularity::line)
                                     .edit_cost;
  }
  return sim;
}

double max_pairwise_similarity(const SimilarityMatrix<double>& sim,
                               std::span<const std::size_t> subset) {
  const SimilarityMatrix<double> sym = symmetrized(sim);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      worst = std::max(worst, sym(static_cast<Eigen::Index>(subset[a]),
                                  static_cast<Eigen::Index>(subset[b])));
  return worst;
}

namespace {

// C(m, k), saturating at `cap + 1`.
std::uint64_t bounded_binomial(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
  k = std::min(k, m - k);
  boost::multiprecision::uint128_t value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (m - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return value.convert_to<std::uint64_t>();
}

class ExactSearch {
public:
  ExactSearch(const SimilarityMatrix<double>& sym, std::size_t k)
      : sym_(sym), m_(static_cast<std::size_t>(sym.rows())), k_(k) {
    current_.reserve(k);
  }

  Selection run() {
    extend(0, -std::numeric_limits<double>::infinity());
    return {best_, best_value_};
  }

private:
  // Subsets are visited in lexicographic order, so the first subset reaching
  // an objective value is the tie-break winner; anything that cannot do
  // strictly better is pruned.
  void extend(std::size_t next, double partial_max) {
    if (current_.size() == k_) {
      if (partial_max < best_value_) {
        best_value_ = partial_max;
        best_ = current_;
      }
      return;
    }
    const std::size_t remaining = k_ - current_.size();
    for (std::size_t i = next; i + remaining <= m_; ++i) {
      double candidate_max = partial_max;
      for (auto chosen : current_)
        candidate_max = std::max(candidate_max, sym_(static_cast<Eigen::Index>(chosen),
                                                     static_cast<Eigen::Index>(i)));
      if (candidate_max >= best_value_) continue;
      current_.push_back(i);
      extend(i + 1, candidate_max);
      current_.pop_back();
    }
  }

  const SimilarityMatrix<double>& sym_;
  std::size_t m_;
  std::size_t k_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  double best_value_ = std::numeric_limits<double>::infinity();
};

Selection greedy_select(const SimilarityMatrix<double>& sym, std::size_t k) {
  const auto m = static_cast<std::size_t>(sym.rows());
  std::size_t seed_a = 0, seed_b = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sym(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) <
          sym(static_cast<Eigen::Index>(seed_a), static_cast<Eigen::Index>(seed_b))) {
        seed_a = i;
        seed_b = j;
      }

  std::vector<bool> taken(m, false);
  taken[seed_a] = taken[seed_b] = true;
  // worst[i]: max similarity of item i to anything chosen so far
  Eigen::VectorXd worst = sym.row(static_cast<Eigen::Index>(seed_a))
                              .cwiseMax(sym.row(static_cast<Eigen::Index>(seed_b)))
                              .transpose();
  std::vector<std::size_t> chosen{seed_a, seed_b};
  double objective = sym(static_cast<Eigen::Index>(seed_a), static_cast<Eigen::Index>(seed_b));

  while (chosen.size() < k) {
    std::size_t pick = m;
    for (std::size_t i = 0; i < m; ++i)
      if (!taken[i] && (pick == m || worst(static_cast<Eigen::Index>(i)) <
                                         worst(static_cast<Eigen::Index>(pick))))
        pick = i;
    taken[pick] = true;
    chosen.push_back(pick);
    objective = std::max(objective, worst(static_cast<Eigen::Index>(pick)));
    worst = worst.cwiseMax(sym.row(static_cast<Eigen::Index>(pick)).transpose());
  }
  std::sort(chosen.begin(), chosen.end());
  return {chosen, objective};
}

} // namespace

Selection select_diverse(const SimilarityMatrix<double>& sim, std::size_t k,
                         SelectionStrategy strategy, std::uint64_t budget) {
  if (sim.rows() != sim.cols())
    throw Error(ErrorKind::DomainError, "similarity matrix must be square");
  const auto m = static_cast<std::size_t>(sim.rows());
  if (k < 2 || k > m)
    throw Error(ErrorKind::DomainError,
                "k=" + std::to_string(k) + " outside [2, " + std::to_string(m) + "]");

  const SimilarityMatrix<double> sym = symmetrized(sim);
  if (strategy == SelectionStrategy::greedy) return greedy_select(sym, k);

  if (bounded_binomial(m, k, budget) > budget)
    throw Error(ErrorKind::ExactTooLarge, "C(" + std::to_string(m) + ", " + std::to_string(k) +
                                              ") exceeds the budget of " +
                                              std::to_string(budget) + " subsets");
  return ExactSearch(sym, k).run();
}

} // namespace minedit
