#pragma once

// Independent reference implementations used only by tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Minimum over all edit scripts, by plain recursion on suffixes with no
/// memoization. Exponential; keep inputs tiny.
inline std::size_t naive_levenshtein(const std::vector<std::string>& x,
                                     const std::vector<std::string>& y, std::size_t i = 0,
                                     std::size_t j = 0) {
  if (i == x.size()) return y.size() - j;
  if (j == y.size()) return x.size() - i;
  const std::size_t sub = naive_levenshtein(x, y, i + 1, j + 1) + (x[i] == y[j] ? 0 : 1);
  const std::size_t del = naive_levenshtein(x, y, i + 1, j) + 1;
  const std::size_t ins = naive_levenshtein(x, y, i, j + 1) + 1;
  return std::min({sub, del, ins});
}

/// Same recursion over suffixes, memoized so length-8 inputs stay cheap.
inline std::size_t recursive_levenshtein(const std::vector<std::string>& x,
                                         const std::vector<std::string>& y) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == x.size()) return y.size() - j;
    if (j == y.size()) return x.size() - i;
    if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
    const std::size_t best = std::min({go(i + 1, j + 1) + (x[i] == y[j] ? 0 : 1),
                                       go(i + 1, j) + 1, go(i, j + 1) + 1});
    memo[{i, j}] = best;
    return best;
  };
  return go(0, 0);
}

inline cpp_int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  cpp_int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// Exact mean over every k-subset of n items (the first c being successes)
/// of the indicator "subset contains a success". n <= 20.
inline cpp_rational enumerate_at_k(unsigned n, unsigned c, unsigned k) {
  const std::uint32_t success_mask = (c == 32 ? ~0u : ((1u << c) - 1u));
  std::uint64_t hits = 0, total = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (static_cast<unsigned>(__builtin_popcount(s)) != k) continue;
    ++total;
    if (s & success_mask) ++hits;
  }
  return cpp_rational(cpp_int(hits), cpp_int(total));
}

/// Exhaustive min-max dispersion: every k-subset of m items by bitmask,
/// lexicographically smallest index set among optima.
inline std::pair<std::vector<std::size_t>, double> brute_min_max(const Eigen::MatrixXd& sim,
                                                                 std::size_t k) {
  const auto m = static_cast<std::size_t>(sim.rows());
  std::vector<std::size_t> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (static_cast<std::size_t>(__builtin_popcount(s)) != k) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (1u << i)) subset.push_back(i);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b) {
        const auto i = static_cast<Eigen::Index>(subset[a]);
        const auto j = static_cast<Eigen::Index>(subset[b]);
        worst = std::max({worst, sim(i, j), sim(j, i)});
      }
    if (worst < best_value || (worst == best_value && subset < best)) {
      best_value = worst;
      best = subset;
    }
  }
  return {best, best_value};
}

/// E[X] straight from the truncated geometric PMF.
inline long double pmf_expected_tokens(long double r, int k) {
  long double e = 0.0L;
  for (int i = 0; i < k; ++i) e += (i + 1) * std::pow(r, i) * (1.0L - r);
  return e + (k + 1) * std::pow(r, k);
}

inline long double logistic(long double z) { return 1.0L / (1.0L + std::exp(-z)); }

/// Two-pass mean / standard deviation in long double.
inline std::pair<long double, long double> mean_std(const std::vector<double>& v,
                                                    bool population = true) {
  long double mean = 0.0L;
  for (double x : v) mean += x;
  mean /= static_cast<long double>(v.size());
  long double ss = 0.0L;
  for (double x : v) ss += (x - mean) * (x - mean);
  const long double denom = population ? v.size() : v.size() - 1;
  return {mean, std::sqrt(ss / denom)};
}

} // namespace oracle
