#include "minedit/normalize.hpp"

#include <array>
#include <cctype>

namespace minedit {

namespace {

bool ident_start(char ch) {
  const auto u = static_cast<unsigned char>(ch);
  return std::isalpha(u) || ch == '_' || u >= 0x80;
}

bool ident_char(char ch) {
  const auto u = static_cast<unsigned char>(ch);
  return std::isalnum(u) || ch == '_' || u >= 0x80;
}

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

constexpr std::array python_ops{
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=", ">=", "==", "!=",
    "+=",  "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "@=",
};

constexpr std::array verilog_ops{
    "<<<=", ">>>=", "===", "!==", "<<<", ">>>", "<=", ">=", "==", "!=", "&&", "||", "<<", ">>",
    "**",   "~&",   "~|",  "~^",  "^~",  "->",  "+:", "-:", "::", "++", "--", "+=", "-=", "=>",
};

template <std::size_t N>
std::size_t match_operator(std::string_view rest, const std::array<const char*, N>& ops) {
  std::size_t best = 0;
  for (const char* op : ops) {
    const std::string_view candidate(op);
    if (candidate.size() > best && rest.substr(0, candidate.size()) == candidate) best = candidate.size();
  }
  return best;
}

std::vector<std::string> tokenize_python(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    if (ch == '\'' || ch == '"') {
      const bool triple = i + 2 < n && text[i + 1] == ch && text[i + 2] == ch;
      i += triple ? 3 : 1;
      while (i < n) {
        if (text[i] == '\\' && !(i + 1 < n && text[i + 1] == '\n' && !triple)) {
          i += 2;
          continue;
        }
        if (text[i] == '\n' && !triple) break;
        if (text[i] == ch && (!triple || (i + 2 < n && text[i + 1] == ch && text[i + 2] == ch))) {
          i += triple ? 3 : 1;
          break;
        }
        ++i;
      }
      tokens.emplace_back(text.substr(start, std::min(i, n) - start));
      continue;
    }
    if (ident_start(ch)) {
      while (i < n && ident_char(text[i])) ++i;
      tokens.emplace_back(text.substr(start, i - start));
      continue;
    }
    if (is_digit(ch) || (ch == '.' && i + 1 < n && is_digit(text[i + 1]))) {
      while (i < n) {
        const char c = text[i];
        if (ident_char(c) || c == '.') {
          ++i;
        } else if ((c == '+' || c == '-') && (text[i - 1] == 'e' || text[i - 1] == 'E') &&
                   !(text.substr(start, 2) == "0x" || text.substr(start, 2) == "0X")) {
          ++i;
        } else {
          break;
        }
      }
      tokens.emplace_back(text.substr(start, i - start));
      continue;
    }
    const std::size_t len = std::max<std::size_t>(1, match_operator(text.substr(i), python_ops));
    tokens.emplace_back(text.substr(i, len));
    i += len;
  }
  return tokens;
}

bool verilog_value_char(char ch) {
  return std::isxdigit(static_cast<unsigned char>(ch)) || ch == '_' || ch == 'x' || ch == 'X' ||
         ch == 'z' || ch == 'Z' || ch == '?';
}

bool verilog_base_char(char ch) {
  return ch == 'b' || ch == 'B' || ch == 'o' || ch == 'O' || ch == 'd' || ch == 'D' || ch == 'h' ||
         ch == 'H';
}

// Consumes "'[sS]?<base><value>" starting at i (text[i] == '\'') and returns
// the new position, or i when this is not a based literal.
std::size_t verilog_based_suffix(std::string_view text, std::size_t i) {
  std::size_t j = i + 1;
  if (j < text.size() && (text[j] == 's' || text[j] == 'S')) ++j;
  if (j >= text.size() || !verilog_base_char(text[j])) return i;
  ++j;
  while (j < text.size() && verilog_value_char(text[j])) ++j;
  return j;
}

std::vector<std::string> tokenize_verilog(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '/' && i + 1 < n && text[i + 1] == '*') {
      const auto close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? n : close + 2;
      continue;
    }
    const std::size_t start = i;
    if (ch == '"') {
      ++i;
      while (i < n && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < n && text[i + 1] != '\n') {
          i += 2;
          continue;
        }
        if (text[i++] == '"') break;
      }
      tokens.emplace_back(text.substr(start, std::min(i, n) - start));
      continue;
    }
    if (ch == '\\') {
      while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      tokens.emplace_back(text.substr(start, i - start));
      continue;
    }
    if (ident_start(ch) || ch == '$' || ch == '`') {
      ++i;
      while (i < n && (ident_char(text[i]) || text[i] == '$')) ++i;
      tokens.emplace_back(text.substr(start, i - start));
      continue;
    }
    if (is_digit(ch)) {
      while (i < n && (is_digit(text[i]) || text[i] == '_')) ++i;
      if (i + 1 < n && text[i] == '.' && is_digit(text[i + 1])) {
        ++i;
        while (i < n && (is_digit(text[i]) || text[i] == '_')) ++i;
      }
      if (i < n && text[i] == '\'') i = verilog_based_suffix(text, i);
      tokens.emplace_back(text.substr(start, i - start));
      continue;
    }
    if (ch == '\'') {
      const std::size_t end = verilog_based_suffix(text, i);
      if (end != i) {
        tokens.emplace_back(text.substr(start, end - start));
        i = end;
        continue;
      }
    }
    const std::size_t len = std::max<std::size_t>(1, match_operator(text.substr(i), verilog_ops));
    tokens.emplace_back(text.substr(i, len));
    i += len;
  }
  return tokens;
}

std::vector<std::string> tokenize_plain(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

} // namespace

std::vector<std::string> tokenize(const std::vector<std::string>& lines, Language language) {
  std::string text;
  for (const auto& line : lines) {
    text += line;
    text.push_back('\n');
  }
  switch (language) {
  case Language::python: return tokenize_python(text);
  case Language::verilog: return tokenize_verilog(text);
  case Language::plain: break;
  }
  return tokenize_plain(text);
}

} // namespace minedit
