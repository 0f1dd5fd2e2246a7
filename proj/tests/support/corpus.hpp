#pragma once

// Deterministic synthetic programs for property and acceptance tests.

#include "minedit/normalize.hpp"

#include <random>
#include <string>
#include <vector>

namespace corpus {

/// `count` distinct statement lines for the language, each unique thanks to
/// the `tag` / index suffix.
inline std::vector<std::string> unique_lines(minedit::Language language, std::size_t count,
                                             const std::string& tag) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string id = tag + std::to_string(i);
    switch (language) {
    case minedit::Language::python:
      lines.push_back((i % 3 == 0 ? "" : "    ") + ("v_" + id + " = v_" + id + " + " +
                                                     std::to_string(i + 1)));
      break;
    case minedit::Language::verilog:
      lines.push_back("assign w_" + id + " = a_" + id + " & 4'b" + (i % 2 ? "1010;" : "0101;"));
      break;
    case minedit::Language::plain:
      lines.push_back("step " + id);
      break;
    }
  }
  return lines;
}

inline std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

/// Adds comment-only lines, blank lines and trailing comments without
/// touching any statement.
inline std::string inject_noise(const std::vector<std::string>& lines, minedit::Language language,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::string out;
  for (const auto& line : lines) {
    switch (coin(rng)) {
    case 0:
      out += "\n";
      break;
    case 1:
      if (language == minedit::Language::python) out += "    # reviewer note\n";
      else if (language == minedit::Language::verilog) out += "/* block\n   comment */\n";
      else out += "   \n";
      break;
    default:
      break;
    }
    out += line;
    if (coin(rng) == 0) {
      if (language == minedit::Language::python) out += "  # trailing remark";
      else if (language == minedit::Language::verilog) out += " // trailing remark";
      else out += "   ";
    }
    out += "\n";
  }
  if (coin(rng) == 0) out += language == minedit::Language::verilog ? "// eof\n" : "\n\n";
  return out;
}

} // namespace corpus
