#pragma once

#include "minedit/metrics.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace minedit {

enum class ReportFormat { json, csv, markdown };

ReportFormat parse_report_format(std::string_view text);

/// Serializes a report with fixed field order and formatting. Percentages
/// are rounded exactly from the rational value to two decimals ("91.19"), so
/// the text is identical for identical reports. Always newline-terminated.
std::string emit_report(const MetricReport& report, ReportFormat format);

/// Writes emit_report() to `path`. Throws Error(IoError).
void write_report(const MetricReport& report, ReportFormat format,
                  const std::filesystem::path& path);

/// Inverse of emit_report(.., json). Throws Error(ParseError/SchemaError).
MetricReport parse_report_json(std::string_view text);

} // namespace minedit
