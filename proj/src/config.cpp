#include "minedit/config.hpp"

#include "minedit/errors.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace minedit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error(ErrorKind::DomainError,
                "setting '" + std::string(key) + "' expects a non-negative integer, got '" +
                    std::string(value) + "'");
  return out;
}

template <typename F>
void for_each_item(std::string_view list, F&& f) {
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (!item.empty()) f(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
}

bool parse_switch(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw Error(ErrorKind::DomainError,
              "setting '" + std::string(key) + "' expects on/off, got '" + std::string(value) + "'");
}

} // namespace

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "ks") {
    config.ks.clear();
    for_each_item(value, [&](auto item) {
      const auto k = parse_unsigned(key, item);
      if (k == 0) throw Error(ErrorKind::DomainError, "k must be positive");
      config.ks.push_back(k);
    });
  } else if (key == "ps") {
    config.ps.clear();
    for_each_item(value, [&](auto item) {
      const Ratio p = parse_ratio(item);
      if (p < Ratio(1)) throw Error(ErrorKind::DomainError, "tolerance p must be >= 1");
      config.ps.push_back(p);
    });
  } else if (key == "alpha") {
    config.reward.alpha = to_double(parse_ratio(value));
    if (!(config.reward.alpha >= 0.0 && config.reward.alpha <= 1.1))
      throw Error(ErrorKind::DomainError, "alpha must lie in [0, 1.1]");
  } else if (key == "beta") {
    config.reward.beta = to_double(parse_ratio(value));
  } else if (key == "std") {
    config.reward.std_convention = parse_std_convention(value);
  } else if (key == "granularity") {
    config.granularity = parse_granularity(value);
  } else if (key == "normalization") {
    config.normalization = parse_switch(key, value);
  } else if (key == "n_expected") {
    config.n_expected = parse_unsigned(key, value);
  } else if (key == "seed") {
    config.seed = parse_unsigned(key, value);
  } else if (key == "jobs") {
    config.jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, parse_unsigned(key, value)));
  } else if (key == "ngram" || key == "window") {
    const auto v = parse_unsigned(key, value);
    if (v == 0 || v > 1024)
      throw Error(ErrorKind::DomainError, std::string(key) + " must lie in [1, 1024]");
    (key == "ngram" ? config.ngram : config.window) = static_cast<int>(v);
  } else if (key == "exact_budget") {
    config.exact_budget = parse_unsigned(key, value);
  } else {
    throw Error(ErrorKind::DomainError, "unknown setting '" + std::string(key) + "'");
  }
}

void load_config(RunConfig& config, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw LineError(ErrorKind::ParseError, line_no, "expected 'key = value'");
    try {
      apply_setting(config, view.substr(0, eq), view.substr(eq + 1));
    } catch (const Error& e) {
      throw LineError(e.kind(), line_no, e.what());
    }
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config file " + path.string());
  load_config(config, in);
}

NormalizedProgram prepare_program(std::string_view text, Language language,
                                  const RunConfig& config) {
  const SourceText source{std::string(text), language};
  return config.normalization ? normalize(source, config.granularity)
                              : split_raw(source, config.granularity);
}

} // namespace minedit
