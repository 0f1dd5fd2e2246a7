#include "minedit/report_io.hpp"

#include "minedit/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace minedit {

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "markdown" || text == "md") return ReportFormat::markdown;
  throw Error(ErrorKind::DomainError, "unknown report format '" + std::string(text) + "'");
}

namespace {

std::string percent(const MetricValue& v) { return format_fixed(v.exact * 100, 2); }

std::string emit_json(const MetricReport& report) {
  nlohmann::ordered_json root;
  root["n"] = report.n;
  root["task_count"] = report.task_count;
  auto metrics = nlohmann::ordered_json::array();
  for (const auto& v : report.values) {
    nlohmann::ordered_json m;
    m["metric"] = v.kind == MetricKind::pass ? "pass" : "fix";
    m["k"] = v.k;
    m["p"] = v.p ? nlohmann::ordered_json(format_ratio(*v.p)) : nullptr;
    m["label"] = v.label();
    m["value"] = v.value();
    m["percent"] = percent(v);
    m["exact"] = format_rational(v.exact);
    metrics.push_back(std::move(m));
  }
  root["metrics"] = std::move(metrics);
  return root.dump(2) + "\n";
}

std::string emit_csv(const MetricReport& report) {
  std::string out = "metric,k,p,value,percent,exact\n";
  for (const auto& v : report.values) {
    out += v.kind == MetricKind::pass ? "pass" : "fix";
    out += ',' + std::to_string(v.k) + ',';
    if (v.p) out += format_ratio(*v.p);
    out += ',' + format_fixed(v.exact, 6) + ',' + percent(v) + ',' + format_rational(v.exact) + '\n';
  }
  return out;
}

std::string emit_markdown(const MetricReport& report) {
  std::string out = "| Metric | Value (%) |\n|:--|--:|\n";
  for (const auto& v : report.values) out += "| " + v.label() + " | " + percent(v) + " |\n";
  return out;
}

} // namespace

std::string emit_report(const MetricReport& report, ReportFormat format) {
  switch (format) {
  case ReportFormat::json: return emit_json(report);
  case ReportFormat::csv: return emit_csv(report);
  case ReportFormat::markdown: return emit_markdown(report);
  }
  return {};
}

void write_report(const MetricReport& report, ReportFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << emit_report(report, format);
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

MetricReport parse_report_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    MetricReport report;
    report.n = root.at("n").get<std::size_t>();
    report.task_count = root.at("task_count").get<std::size_t>();
    for (const auto& m : root.at("metrics")) {
      MetricValue v;
      const auto kind = m.at("metric").get<std::string>();
      if (kind != "pass" && kind != "fix")
        throw Error(ErrorKind::SchemaError, "unknown metric '" + kind + "'");
      v.kind = kind == "pass" ? MetricKind::pass : MetricKind::fix;
      v.k = m.at("k").get<std::size_t>();
      if (!m.at("p").is_null()) v.p = parse_ratio(m.at("p").get<std::string>());
      v.exact = parse_rational(m.at("exact").get<std::string>());
      report.values.push_back(std::move(v));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
}

} // namespace minedit
