#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minedit {

/// Comment syntax family used by the lexer.
enum class Language { python, verilog, plain };

/// Accepts "python-like", "python", "verilog-like", "verilog" and "plain".
/// Throws Error(UnknownLanguageTag) for anything else.
Language parse_language(std::string_view tag);
std::string_view to_string(Language language) noexcept;

enum class Granularity { line, token };

Granularity parse_granularity(std::string_view text);
std::string_view to_string(Granularity granularity) noexcept;

struct SourceText {
  std::string content;
  Language language = Language::plain;
};

/// A program as a sequence of semantic lines. `tokens` is only populated when
/// normalized in token mode.
struct NormalizedProgram {
  std::vector<std::string> lines;
  std::optional<std::vector<std::string>> tokens;
  Language language = Language::plain;

  bool operator==(const NormalizedProgram&) const = default;
};

/// Strips comments and blank lines, collapses intra-line whitespace outside
/// string literals and, except for python where indentation is semantic,
/// drops leading indentation. Never fails on malformed input: unterminated
/// strings and comments simply run to the end of the line / file. Only
/// triple-quoted python strings span lines; a trailing backslash does not
/// continue a single-quoted one.
NormalizedProgram normalize(const SourceText& source, Granularity mode = Granularity::line);

/// Splits on '\n' only. Used when normalization is switched off; may produce
/// empty lines.
NormalizedProgram split_raw(const SourceText& source, Granularity mode = Granularity::line);

/// Joins lines with a single '\n', no trailing newline.
std::string render(const NormalizedProgram& program);

/// Lexical tokens of a program given as lines. String literals (including
/// triple-quoted ones spanning lines) are single tokens.
std::vector<std::string> tokenize(const std::vector<std::string>& lines, Language language);

/// The token view of `program`, lexing its lines when it was normalized in
/// line mode.
std::vector<std::string> tokens_of(const NormalizedProgram& program);

} // namespace minedit
