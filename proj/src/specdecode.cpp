#include "minedit/specdecode.hpp"

#include <algorithm>
#include <random>
#include <span>

namespace minedit {

SpecDecodeProfile profile(double d_ec, int window) {
  SpecDecodeProfile p;
  p.d_ec = d_ec;
  p.window = window;
  p.acceptance = acceptance_from_edit_cost(d_ec);
  p.expected_tokens = expected_tokens(p.acceptance, window);
  p.relative_throughput = throughput_factor(d_ec, window, true);
  return p;
}

double SimTrace::empirical_acceptance() const {
  if (draft_tokens == 0) return 0.0;
  return static_cast<double>(accepted_tokens) / static_cast<double>(draft_tokens);
}

double SimTrace::empirical_expected_tokens() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(emitted_tokens) / static_cast<double>(trials);
}

double SimTrace::standard_error() const {
  if (trials < 2) return 0.0;
  const double t = static_cast<double>(trials);
  const double mean = static_cast<double>(emitted_tokens) / t;
  const double variance = std::max(0.0, (emitted_sq_sum - t * mean * mean) / (t - 1.0));
  return std::sqrt(variance / t);
}

SimTrace& SimTrace::operator+=(const SimTrace& other) {
  trials += other.trials;
  accepted_tokens += other.accepted_tokens;
  draft_tokens += other.draft_tokens;
  emitted_tokens += other.emitted_tokens;
  emitted_sq_sum += other.emitted_sq_sum;
  return *this;
}

SimTrace trace_from_counts(std::uint64_t accepted, std::uint64_t draft) {
  SimTrace t;
  t.accepted_tokens = accepted;
  t.draft_tokens = draft;
  return t;
}

SimTrace simulate_geometric(double r, int k, std::uint64_t steps, std::uint64_t seed) {
  if (!(r >= 0.0 && r <= 1.0))
    throw Error(ErrorKind::DomainError, "acceptance rate must lie in [0, 1]");
  if (k < 1) throw Error(ErrorKind::DomainError, "window must be positive");

  std::mt19937_64 gen(seed);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  SimTrace trace;
  trace.seed = seed;
  trace.trials = steps;
  for (std::uint64_t step = 0; step < steps; ++step) {
    int accepted = 0;
    while (accepted < k && uniform() < r) ++accepted;
    const bool rejected = accepted < k;
    trace.accepted_tokens += static_cast<std::uint64_t>(accepted);
    trace.draft_tokens += static_cast<std::uint64_t>(accepted + (rejected ? 1 : 0));
    // accepted drafts plus the token the verifier contributes itself
    const auto yield = static_cast<std::uint64_t>(accepted + 1);
    trace.emitted_tokens += yield;
    trace.emitted_sq_sum += static_cast<double>(yield * yield);
  }
  return trace;
}

namespace {

using Lines = std::vector<std::string>;

std::size_t find_sequence(const Lines& haystack, std::span<const std::string> key,
                          std::size_t skip) {
  if (key.size() > haystack.size()) return haystack.size();
  for (std::size_t j = 0; j + key.size() <= haystack.size(); ++j)
    if (j + key.size() + skip < haystack.size() &&
        std::equal(key.begin(), key.end(), haystack.begin() + static_cast<std::ptrdiff_t>(j)))
      return j;
  return haystack.size();
}

// Draft for the next verification step once `emitted` output lines exist.
//
// The anchor is the longest n-gram (n <= ngram) ending `lag` lines before
// the tip of the output that occurs in the prompt; the draft is the prompt
// continuation after skipping `lag` lines. lag = 0 is plain prompt lookup.
// Larger lags let the lookup resynchronize after a replaced line, the way a
// token-level lookup recovers a few tokens into the next unchanged line.
// The first occurrence in the prompt wins.
std::span<const std::string> find_draft(const Lines& prompt, std::span<const std::string> emitted,
                                        const LookupParams& params) {
  const std::size_t window = static_cast<std::size_t>(params.window);
  if (emitted.empty()) return {};
  const std::size_t max_lag = std::min(window, emitted.size() - 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    const std::size_t tip = emitted.size() - lag;
    for (std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(params.ngram), tip); n >= 1;
         --n) {
      const auto key = emitted.subspan(tip - n, n);
      const std::size_t j = find_sequence(prompt, key, lag);
      if (j == prompt.size()) continue;
      const std::size_t start = j + n + lag;
      const std::size_t stop = std::min(prompt.size(), start + window);
      return std::span<const std::string>(prompt).subspan(start, stop - start);
    }
  }
  return {};
}

} // namespace

SimTrace simulate_prompt_lookup(const NormalizedProgram& buggy, const NormalizedProgram& fixed,
                                const LookupParams& params) {
  if (buggy.lines.empty() || fixed.lines.empty())
    throw Error(ErrorKind::EmptySource, "prompt lookup needs non-empty programs");
  if (params.ngram < 1 || params.window < 1)
    throw Error(ErrorKind::DomainError, "ngram and window must be positive");

  const Lines& truth = fixed.lines;
  const std::span<const std::string> output(truth);
  SimTrace trace;
  std::size_t pos = 0;
  while (pos < truth.size()) {
    ++trace.trials;
    const auto draft = find_draft(buggy.lines, output.first(pos), params);

    std::size_t accepted = 0;
    while (accepted < draft.size() && pos + accepted < truth.size() &&
           draft[accepted] == truth[pos + accepted])
      ++accepted;
    const bool rejected = accepted < draft.size();
    trace.accepted_tokens += accepted;
    trace.draft_tokens += accepted + (rejected ? 1 : 0);

    const std::size_t produced = accepted + (pos + accepted < truth.size() ? 1 : 0);
    pos += produced;
    trace.emitted_tokens += produced;
    trace.emitted_sq_sum += static_cast<double>(produced * produced);
  }
  return trace;
}

} // namespace minedit
