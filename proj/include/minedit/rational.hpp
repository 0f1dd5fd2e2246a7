#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace minedit {

/// Small exact ratio, used for edit costs (distance / length) and tolerances.
using Ratio = boost::rational<std::int64_t>;

/// Arbitrary precision rational for estimator values and task means.
using BigRational = boost::multiprecision::cpp_rational;

/// Parses "2", "1.5", "-0.25" or "3/2". Throws Error(DomainError) on garbage.
Ratio parse_ratio(std::string_view text);

/// Decimal form when the denominator only has factors 2 and 5 ("1.5"),
/// otherwise "num/den".
std::string format_ratio(const Ratio& r);

std::string format_rational(const BigRational& r);
BigRational parse_rational(std::string_view text);

inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

/// Rounds |r| * 10^decimals half away from zero and prints it with a fixed
/// number of decimals. Exact, so identical inputs always give identical text.
std::string format_fixed(const BigRational& r, int decimals);

} // namespace minedit
