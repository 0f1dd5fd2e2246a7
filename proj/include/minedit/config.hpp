#pragma once

#include "minedit/normalize.hpp"
#include "minedit/rational.hpp"
#include "minedit/reward.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

namespace minedit {

/// Run-wide settings. Defaults match the usual reporting grid: k in
/// {1, 5, 10}, p in {1, 1.5, 2}, 20 candidates per task, alpha 0.8,
/// beta 0.05.
struct RunConfig {
  std::vector<std::size_t> ks{1, 5, 10};
  std::vector<Ratio> ps{Ratio(1), Ratio(3, 2), Ratio(2)};
  RewardParams reward;
  Granularity granularity = Granularity::line;
  bool normalization = true;
  std::size_t n_expected = 20;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  int ngram = 2;
  int window = 8;
  std::uint64_t exact_budget = 1'000'000;
};

/// Applies one `key = value` setting. Keys: ks, ps, alpha, beta, std,
/// granularity, normalization, n_expected, seed, jobs, ngram, window,
/// exact_budget. Throws Error(DomainError) for unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads `key = value` lines; '#' starts a comment. Later lines win.
void load_config(RunConfig& config, std::istream& in);
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Normalizes (or raw-splits, when normalization is off) at the configured
/// granularity.
NormalizedProgram prepare_program(std::string_view text, Language language,
                                  const RunConfig& config);

} // namespace minedit
