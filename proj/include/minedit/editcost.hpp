#pragma once

#include "minedit/normalize.hpp"
#include "minedit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ranges>
#include <vector>

namespace minedit {

/// Unit-cost Levenshtein distance between two sequences, compared with
/// operator==. O(|x|·|y|) time, O(min(|x|, |y|)) space.
template <std::ranges::random_access_range X, std::ranges::random_access_range Y>
std::size_t levenshtein(const X& x, const Y& y) {
  // Keep the shorter sequence along the row.
  if (std::ranges::size(y) > std::ranges::size(x)) return levenshtein(y, x);

  const std::size_t cols = std::ranges::size(y);
  std::vector<std::size_t> row(cols + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});

  std::size_t i = 0;
  for (const auto& xi : x) {
    ++i;
    std::size_t diagonal = row[0];
    row[0] = i;
    std::size_t j = 0;
    for (const auto& yj : y) {
      ++j;
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (xi == yj ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[cols];
}

enum class EditOp { keep, substitute, insert, remove };

/// One minimal edit script turning x into y, recovered from the full DP
/// matrix. Diagnostics only: O(|x|·|y|) memory.
template <std::ranges::random_access_range X, std::ranges::random_access_range Y>
std::vector<EditOp> edit_script(const X& x, const Y& y) {
  const std::size_t rows = std::ranges::size(x);
  const std::size_t cols = std::ranges::size(y);
  std::vector<std::size_t> dp((rows + 1) * (cols + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return dp[i * (cols + 1) + j]; };

  for (std::size_t i = 0; i <= rows; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= cols; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      const bool same = x[i - 1] == y[j - 1];
      at(i, j) = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1, at(i - 1, j - 1) + (same ? 0 : 1)});
    }

  std::vector<EditOp> ops;
  std::size_t i = rows, j = cols;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = x[i - 1] == y[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        ops.push_back(same ? EditOp::keep : EditOp::substitute);
        --i, --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ops.push_back(EditOp::remove);
      --i;
    } else {
      ops.push_back(EditOp::insert);
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

struct EditCostResult {
  std::size_t distance = 0;
  std::size_t source_length = 0;
  Granularity granularity = Granularity::line;
  double edit_cost = 0.0;

  /// distance / source_length, exactly.
  Ratio exact() const {
    return Ratio(static_cast<std::int64_t>(distance), static_cast<std::int64_t>(source_length));
  }
};

/// D_EC(source, target) = levenshtein / |source| at the chosen granularity.
/// Not clamped: appending lines can push it above 1. Throws
/// Error(EmptySource) when the source has no elements.
EditCostResult edit_cost(const NormalizedProgram& source, const NormalizedProgram& target,
                         Granularity granularity = Granularity::line);

} // namespace minedit
