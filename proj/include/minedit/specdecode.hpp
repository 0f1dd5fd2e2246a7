#pragma once

#include "minedit/errors.hpp"
#include "minedit/normalize.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

namespace minedit {

namespace detail {

template <typename Scalar>
Scalar power(Scalar base, int exponent) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::pow(base, exponent);
  } else {
    Scalar result(1);
    for (; exponent > 0; exponent >>= 1, base *= base)
      if (exponent & 1) result *= base;
    return result;
  }
}

} // namespace detail

/// Line-level acceptance approximation R = 1 - D_EC. Edit costs above 1 have
/// no acceptance interpretation and are rejected, not clamped.
template <typename Scalar>
Scalar acceptance_from_edit_cost(Scalar d_ec) {
  if (!(d_ec >= Scalar(0) && d_ec <= Scalar(1)))
    throw Error(ErrorKind::DomainError, "edit cost must lie in [0, 1] for acceptance");
  return Scalar(1) - d_ec;
}

/// Expected tokens per verification step with window k and independent
/// per-token acceptance r: (1 - r^(k+1)) / (1 - r), and k + 1 at r = 1.
template <typename Scalar>
Scalar expected_tokens(Scalar r, int k) {
  if (!(r >= Scalar(0) && r <= Scalar(1)))
    throw Error(ErrorKind::DomainError, "acceptance rate must lie in [0, 1]");
  if (k < 1) throw Error(ErrorKind::DomainError, "window must be positive");
  if (r == Scalar(1)) return Scalar(k + 1);
  return (Scalar(1) - detail::power(r, k + 1)) / (Scalar(1) - r);
}

/// Relative throughput f(d) = (1 - (1 - d)^(k+1)) / d for d in (0, 1].
/// d = 0 is a pole of the closed form; pass `limit_at_zero` to get the
/// limiting value k + 1 there instead of Error(DomainError).
template <typename Scalar>
Scalar throughput_factor(Scalar d_ec, int k, bool limit_at_zero = false) {
  if (k < 1) throw Error(ErrorKind::DomainError, "window must be positive");
  if (d_ec == Scalar(0) && limit_at_zero) return Scalar(k + 1);
  if (!(d_ec > Scalar(0) && d_ec <= Scalar(1)))
    throw Error(ErrorKind::DomainError, "edit cost must lie in (0, 1] for throughput");
  return (Scalar(1) - detail::power(Scalar(1) - d_ec, k + 1)) / d_ec;
}

struct SpecDecodeProfile {
  double d_ec = 0.0;
  int window = 1;
  double acceptance = 0.0;
  double expected_tokens = 0.0;
  double relative_throughput = 0.0;
};

/// Closed-form profile for d_ec in (0, 1].
SpecDecodeProfile profile(double d_ec, int window);

/// Counts from a decoding run. `draft_tokens` counts drafted tokens that were
/// actually verified: every accepted one plus the first rejected one of a
/// step, if any.
struct SimTrace {
  std::uint64_t trials = 0; // verification steps
  std::uint64_t accepted_tokens = 0;
  std::uint64_t draft_tokens = 0;
  std::uint64_t emitted_tokens = 0;
  double emitted_sq_sum = 0.0; // sum of squared per-step yields
  std::uint64_t seed = 0;

  /// accepted / draft, 0 when nothing was drafted.
  double empirical_acceptance() const;
  /// emitted tokens per verification step.
  double empirical_expected_tokens() const;
  /// Standard error of empirical_expected_tokens().
  double standard_error() const;

  SimTrace& operator+=(const SimTrace& other);
};

/// Trace with only the accepted/draft counts filled in.
SimTrace trace_from_counts(std::uint64_t accepted, std::uint64_t draft);

/// Monte-Carlo run of `steps` verification steps: each of the k drafted
/// tokens is accepted independently with probability r until the first
/// rejection. Draws come from std::mt19937_64 mapped to [0, 1) by hand, so
/// a seed gives the same trace on every standard library.
SimTrace simulate_geometric(double r, int k, std::uint64_t steps, std::uint64_t seed);

struct LookupParams {
  int ngram = 2;
  int window = 8;
};

/// Deterministic line-level prompt-lookup decoding of `fixed` using `buggy`
/// as the prompt. See the implementation for the anchoring rule. Throws
/// Error(EmptySource) if either program is empty.
SimTrace simulate_prompt_lookup(const NormalizedProgram& buggy, const NormalizedProgram& fixed,
                                const LookupParams& params = {});

} // namespace minedit
