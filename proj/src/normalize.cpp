#include "minedit/normalize.hpp"

#include "minedit/errors.hpp"

#include <algorithm>

namespace minedit {

Language parse_language(std::string_view tag) {
  if (tag == "python-like" || tag == "python") return Language::python;
  if (tag == "verilog-like" || tag == "verilog") return Language::verilog;
  if (tag == "plain") return Language::plain;
  throw Error(ErrorKind::UnknownLanguageTag, "'" + std::string(tag) + "'");
}

std::string_view to_string(Language language) noexcept {
  switch (language) {
  case Language::python: return "python-like";
  case Language::verilog: return "verilog-like";
  case Language::plain: return "plain";
  }
  return "plain";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "line") return Granularity::line;
  if (text == "token") return Granularity::token;
  throw Error(ErrorKind::DomainError, "unknown granularity '" + std::string(text) + "'");
}

std::string_view to_string(Granularity granularity) noexcept {
  return granularity == Granularity::line ? "line" : "token";
}

namespace {

struct Cell {
  char ch;
  bool in_string;
};

bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\f' || ch == '\v' || ch == '\r'; }

std::string unify_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    out.push_back(text[i]);
  }
  return out;
}

// Python: '#' comments, single/double quoted strings, triple-quoted strings.
std::vector<Cell> strip_python(std::string_view text) {
  std::vector<Cell> cells;
  cells.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char ch = text[i];
    if (ch == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (ch != '\'' && ch != '"') {
      cells.push_back({ch, false});
      ++i;
      continue;
    }
    const bool triple = i + 2 < n && text[i + 1] == ch && text[i + 2] == ch;
    const std::size_t quote_len = triple ? 3 : 1;
    for (std::size_t q = 0; q < quote_len; ++q) cells.push_back({ch, true});
    i += quote_len;
    while (i < n) {
      const char c = text[i];
      if (c == '\\' && !(i + 1 < n && text[i + 1] == '\n' && !triple)) {
        cells.push_back({c, true});
        if (i + 1 < n) cells.push_back({text[i + 1], true});
        i += 2;
        continue;
      }
      if (c == '\n' && !triple) break; // single-quoted strings never span lines
      if (c == ch && (!triple || (i + 2 < n && text[i + 1] == ch && text[i + 2] == ch))) {
        for (std::size_t q = 0; q < quote_len; ++q) cells.push_back({ch, true});
        i += quote_len;
        break;
      }
      cells.push_back({c, true});
      ++i;
    }
  }
  return cells;
}

// Verilog: '//' and '/* */' comments, double quoted strings.
std::vector<Cell> strip_verilog(std::string_view text) {
  std::vector<Cell> cells;
  cells.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char ch = text[i];
    if (ch == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '/' && i + 1 < n && text[i + 1] == '*') {
      // A block comment separates tokens; keep its line breaks so the
      // surrounding lines stay apart.
      i += 2;
      bool had_newline = false;
      while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) {
        if (text[i] == '\n') {
          cells.push_back({'\n', false});
          had_newline = true;
        }
        ++i;
      }
      i = std::min(n, i + 2);
      if (!had_newline) cells.push_back({' ', false});
      continue;
    }
    if (ch != '"') {
      cells.push_back({ch, false});
      ++i;
      continue;
    }
    cells.push_back({ch, true});
    ++i;
    while (i < n) {
      const char c = text[i];
      if (c == '\\' && !(i + 1 < n && text[i + 1] == '\n')) {
        cells.push_back({c, true});
        if (i + 1 < n) cells.push_back({text[i + 1], true});
        i += 2;
        continue;
      }
      if (c == '\n') break;
      cells.push_back({c, true});
      ++i;
      if (c == '"') break;
    }
  }
  return cells;
}

std::vector<Cell> strip_comments(std::string_view text, Language language) {
  switch (language) {
  case Language::python: return strip_python(text);
  case Language::verilog: return strip_verilog(text);
  case Language::plain: break;
  }
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (char ch : text) cells.push_back({ch, false});
  return cells;
}

std::string build_line(const Cell* first, const Cell* last, bool keep_indent) {
  std::string out;
  const Cell* it = first;
  if (keep_indent) {
    while (it != last && !it->in_string && (it->ch == ' ' || it->ch == '\t' || it->ch == '\f')) {
      out.push_back(it->ch);
      ++it;
    }
  } else {
    while (it != last && !it->in_string && is_blank(it->ch)) ++it;
  }
  const std::size_t indent = out.size();

  bool pending_space = false;
  for (; it != last; ++it) {
    if (!it->in_string && is_blank(it->ch)) {
      pending_space = true;
      continue;
    }
    if (pending_space && out.size() > indent) out.push_back(' ');
    pending_space = false;
    out.push_back(it->ch);
  }

  const bool blank = std::all_of(out.begin(), out.end(), [](char ch) { return is_blank(ch); });
  if (blank) out.clear();
  return out;
}

} // namespace

NormalizedProgram normalize(const SourceText& source, Granularity mode) {
  const std::string text = unify_newlines(source.content);
  const std::vector<Cell> cells = strip_comments(text, source.language);
  const bool keep_indent = source.language == Language::python;

  NormalizedProgram program;
  program.language = source.language;
  const Cell* begin = cells.data();
  const Cell* end = cells.data() + cells.size();
  const Cell* line_start = begin;
  for (const Cell* it = begin;; ++it) {
    if (it == end || it->ch == '\n') {
      std::string line = build_line(line_start, it, keep_indent);
      if (!line.empty()) program.lines.push_back(std::move(line));
      if (it == end) break;
      line_start = it + 1;
    }
  }
  if (mode == Granularity::token) program.tokens = tokenize(program.lines, program.language);
  return program;
}

NormalizedProgram split_raw(const SourceText& source, Granularity mode) {
  const std::string text = unify_newlines(source.content);
  NormalizedProgram program;
  program.language = source.language;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t stop = text.find('\n', start);
    if (stop == std::string::npos) {
      program.lines.push_back(text.substr(start));
      break;
    }
    program.lines.push_back(text.substr(start, stop - start));
    start = stop + 1;
  }
  if (mode == Granularity::token) program.tokens = tokenize(program.lines, program.language);
  return program;
}

std::string render(const NormalizedProgram& program) {
  std::string out;
  for (std::size_t i = 0; i < program.lines.size(); ++i) {
    if (i) out.push_back('\n');
    out += program.lines[i];
  }
  return out;
}

std::vector<std::string> tokens_of(const NormalizedProgram& program) {
  if (program.tokens) return *program.tokens;
  return tokenize(program.lines, program.language);
}

} // namespace minedit
