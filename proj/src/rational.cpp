#include "minedit/rational.hpp"

#include "minedit/errors.hpp"

#include <charconv>
#include <limits>

namespace minedit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::UnknownLanguageTag: return "UnknownLanguageTag";
  case ErrorKind::EmptySource: return "EmptySource";
  case ErrorKind::DomainError: return "DomainError";
  case ErrorKind::GoldenIsIdentical: return "GoldenIsIdentical";
  case ErrorKind::InconsistentN: return "InconsistentN";
  case ErrorKind::ExactTooLarge: return "ExactTooLarge";
  case ErrorKind::EmptyGroup: return "EmptyGroup";
  case ErrorKind::NoCorrectSamples: return "NoCorrectSamples";
  case ErrorKind::EmptyDataset: return "EmptyDataset";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::SchemaError: return "SchemaError";
  case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(whole) + "'");
  return value;
}

} // namespace

Ratio parse_ratio(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::DomainError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator in '" + std::string(whole) + "'");
    return Ratio(num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(whole) + "'");
  if (frac_part.size() > 15)
    throw Error(ErrorKind::DomainError, "too many decimals in '" + std::string(whole) + "'");

  std::int64_t num = int_part.empty() ? 0 : parse_int(int_part, whole);
  std::int64_t den = 1;
  for (char ch : frac_part) {
    if (ch < '0' || ch > '9')
      throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(whole) + "'");
    if (num > std::numeric_limits<std::int64_t>::max() / 10)
      throw Error(ErrorKind::DomainError, "rational out of range: '" + std::string(whole) + "'");
    num = num * 10 + (ch - '0');
    den *= 10;
  }
  return Ratio(negative ? -num : num, den);
}

std::string format_ratio(const Ratio& r) {
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());

  if (r.denominator() == 1) return std::to_string(r.numerator());
  const int decimals = std::max(twos, fives);
  return format_fixed(BigRational(r.numerator(), r.denominator()), decimals);
}

std::string format_rational(const BigRational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRational parse_rational(std::string_view text) {
  using boost::multiprecision::cpp_int;
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      cpp_int num(std::string(text.substr(0, slash)));
      cpp_int den(std::string(text.substr(slash + 1)));
      if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
      return BigRational(num, den);
    }
    return BigRational(cpp_int(std::string(text)));
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(text) + "'");
  }
}

std::string format_fixed(const BigRational& r, int decimals) {
  using boost::multiprecision::cpp_int;
  cpp_int scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;

  const bool negative = r < 0;
  const BigRational magnitude = negative ? BigRational(-r) : r;
  const cpp_int num = boost::multiprecision::numerator(magnitude) * scale;
  const cpp_int den = boost::multiprecision::denominator(magnitude);
  // half away from zero
  const cpp_int rounded = (2 * num + den) / (2 * den);

  std::string digits = rounded.str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals))
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  if (negative && rounded != 0) digits.insert(0, "-");
  return digits;
}

} // namespace minedit
