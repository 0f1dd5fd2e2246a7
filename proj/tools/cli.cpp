#include "cli.hpp"

#include "minedit/config.hpp"
#include "minedit/dataset.hpp"
#include "minedit/diversity.hpp"
#include "minedit/editcost.hpp"
#include "minedit/errors.hpp"
#include "minedit/pipeline.hpp"
#include "minedit/report_io.hpp"
#include "minedit/specdecode.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace minedit::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_io = 2;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return in;
}

// Writes to `path`, or to `fallback` when path is empty.
void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(ErrorKind::IoError, "write to " + path + " failed");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  return file;
}

// Settings given as flags; applied after the config file so they win.
struct Overrides {
  std::map<std::string, std::string> values;

  void bind(CLI::App* app, const std::string& flag, const std::string& key,
            const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

nlohmann::ordered_json trace_json(const SimTrace& t) {
  nlohmann::ordered_json j;
  j["trials"] = t.trials;
  j["accepted_tokens"] = t.accepted_tokens;
  j["draft_tokens"] = t.draft_tokens;
  j["empirical_acceptance"] = t.empirical_acceptance();
  j["empirical_expected_tokens"] = t.empirical_expected_tokens();
  j["standard_error"] = t.standard_error();
  j["seed"] = t.seed;
  return j;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"minedit: edit-cost metrics, edit-aware rewards and speculative-edit analysis"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides global;
  app.add_option("--config", config_path, "key = value settings file");
  global.bind(&app, "--seed", "seed", "RNG seed");
  global.bind(&app, "--jobs", "jobs", "worker threads");

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "print the normalized form of a program");
  std::string norm_input = "-", norm_lang = "plain", norm_mode = "line";
  bool norm_json = false;
  normalize_cmd->add_option("input", norm_input, "source file, '-' for stdin");
  normalize_cmd->add_option("--lang", norm_lang, "python-like | verilog-like | plain");
  normalize_cmd->add_option("--mode", norm_mode, "line | token");
  normalize_cmd->add_flag("--json", norm_json, "emit lines and tokens as JSON");

  // editcost
  auto* editcost_cmd = app.add_subcommand("editcost", "edit cost between two programs");
  std::string ec_source, ec_target, ec_lang = "plain";
  Overrides ec_flags;
  editcost_cmd->add_option("source", ec_source, "source (buggy) program")->required();
  editcost_cmd->add_option("target", ec_target, "target program")->required();
  editcost_cmd->add_option("--lang", ec_lang, "python-like | verilog-like | plain");
  ec_flags.bind(editcost_cmd, "--granularity", "granularity", "line | token");
  ec_flags.bind(editcost_cmd, "--normalization", "normalization", "on | off");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "pass@k and fix_p@k over an eval JSONL file");
  std::string m_input, m_out, m_details, m_rejects, m_format = "json";
  Overrides m_flags;
  metrics_cmd->add_option("--input", m_input, "eval records (JSONL)")->required();
  metrics_cmd->add_option("--format", m_format, "json | csv | markdown");
  metrics_cmd->add_option("--out", m_out, "report file (default stdout)");
  metrics_cmd->add_option("--details", m_details, "per-task JSONL detail file");
  metrics_cmd->add_option("--rejects", m_rejects, "rejected records (JSONL)");
  m_flags.bind(metrics_cmd, "--ks", "ks", "comma separated k values");
  m_flags.bind(metrics_cmd, "--ps", "ps", "comma separated tolerances");
  m_flags.bind(metrics_cmd, "--n", "n_expected", "candidates per task");
  m_flags.bind(metrics_cmd, "--granularity", "granularity", "line | token");
  m_flags.bind(metrics_cmd, "--normalization", "normalization", "on | off");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "min-max diverse subset of programs");
  std::string s_input, s_strategy = "exact";
  std::size_t s_k = 4;
  Overrides s_flags;
  sample_cmd->add_option("--input", s_input, "programs (JSONL: {id?, language, text})")->required();
  sample_cmd->add_option("--k", s_k, "subset size");
  sample_cmd->add_option("--strategy", s_strategy, "exact | greedy");
  s_flags.bind(sample_cmd, "--budget", "exact_budget", "max subsets for the exact search");
  s_flags.bind(sample_cmd, "--normalization", "normalization", "on | off");

  // reward
  auto* reward_cmd = app.add_subcommand("reward", "edit-aware rewards and advantages per group");
  std::string r_input, r_out, r_rejects;
  Overrides r_flags;
  reward_cmd->add_option("--input", r_input, "rollout groups (JSONL)")->required();
  reward_cmd->add_option("--out", r_out, "output JSONL (default stdout)");
  reward_cmd->add_option("--rejects", r_rejects, "sidecar for malformed groups (default stderr)");
  r_flags.bind(reward_cmd, "--alpha", "alpha", "group accuracy threshold");
  r_flags.bind(reward_cmd, "--beta", "beta", "penalty coefficient");
  r_flags.bind(reward_cmd, "--std", "std", "population | sample");
  r_flags.bind(reward_cmd, "--normalization", "normalization", "on | off");

  // spec-sim
  auto* spec_cmd = app.add_subcommand("spec-sim", "speculative-edit throughput analysis");
  spec_cmd->require_subcommand(1);
  auto* sweep_cmd = spec_cmd->add_subcommand("sweep", "closed-form grid over edit cost and window");
  std::vector<double> sw_d{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<int> sw_k{1, 2, 4, 8};
  std::string sw_format = "csv", sw_out;
  sweep_cmd->add_option("--d", sw_d, "edit costs in (0, 1]")->delimiter(',');
  sweep_cmd->add_option("--k", sw_k, "windows")->delimiter(',');
  sweep_cmd->add_option("--format", sw_format, "csv | json");
  sweep_cmd->add_option("--out", sw_out, "output file (default stdout)");

  auto* geo_cmd = spec_cmd->add_subcommand("geometric", "Monte-Carlo check of the closed form");
  double g_r = 0.5;
  int g_k = 3;
  std::uint64_t g_steps = 1'000'000;
  geo_cmd->add_option("--r", g_r, "per-token acceptance");
  geo_cmd->add_option("--k", g_k, "window");
  geo_cmd->add_option("--steps", g_steps, "verification steps");

  auto* lookup_cmd = spec_cmd->add_subcommand("lookup", "line-level prompt-lookup simulation");
  std::string l_input, l_out;
  Overrides l_flags;
  lookup_cmd->add_option("--input", l_input, "pairs (JSONL: {id?, language, buggy, fixed})")
      ->required();
  lookup_cmd->add_option("--out", l_out, "output JSONL (default stdout)");
  l_flags.bind(lookup_cmd, "--ngram", "ngram", "anchor n-gram length in lines");
  l_flags.bind(lookup_cmd, "--window", "window", "draft window in lines");

  // report
  auto* report_cmd = app.add_subcommand("report", "re-emit a JSON metric report");
  std::string rep_input, rep_format = "markdown", rep_out;
  report_cmd->add_option("--input", rep_input, "JSON report")->required();
  report_cmd->add_option("--format", rep_format, "json | csv | markdown");
  report_cmd->add_option("--out", rep_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_invalid;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) load_config_file(config, config_path);
    for (const auto* flags : {&global, &ec_flags, &m_flags, &s_flags, &r_flags, &l_flags})
      for (const auto& [key, value] : flags->values) apply_setting(config, key, value);

    if (normalize_cmd->parsed()) {
      const auto program = normalize({read_text(norm_input), parse_language(norm_lang)},
                                     parse_granularity(norm_mode));
      if (norm_json) {
        nlohmann::ordered_json j;
        j["language"] = std::string(to_string(program.language));
        j["lines"] = program.lines;
        if (program.tokens) j["tokens"] = *program.tokens;
        out << j.dump() << "\n";
      } else if (!program.lines.empty()) {
        out << render(program) << "\n";
      }
    } else if (editcost_cmd->parsed()) {
      const auto language = parse_language(ec_lang);
      const auto source = prepare_program(read_text(ec_source), language, config);
      const auto target = prepare_program(read_text(ec_target), language, config);
      const auto result = edit_cost(source, target, config.granularity);
      nlohmann::ordered_json j;
      j["granularity"] = std::string(to_string(result.granularity));
      j["distance"] = result.distance;
      j["source_length"] = result.source_length;
      j["edit_cost"] = result.edit_cost;
      j["exact"] = format_ratio(result.exact());
      out << j.dump() << "\n";
    } else if (metrics_cmd->parsed()) {
      const auto ingested = ingest_file(m_input, config);
      std::string rejected;
      for (const auto& r : ingested.rejections) {
        nlohmann::ordered_json j;
        j["line"] = r.line;
        j["task_id"] = r.id;
        j["reason"] = r.reason;
        rejected += j.dump() + "\n";
      }
      if (!m_rejects.empty()) write_output(m_rejects, rejected, err);
      else if (!rejected.empty()) err << rejected;

      const auto result = run_eval(ingested.records, config);
      write_output(m_out, emit_report(result.report, parse_report_format(m_format)), out);
      if (!m_details.empty()) write_output(m_details, details_jsonl(result), out);
    } else if (sample_cmd->parsed()) {
      auto in = open_input(s_input);
      std::vector<NormalizedProgram> programs;
      std::vector<std::string> ids;
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
          throw LineError(ErrorKind::ParseError, line_no, e.what());
        }
        if (!j.is_object() || !j.contains("text") || !j.at("text").is_string())
          throw LineError(ErrorKind::SchemaError, line_no, "missing string field 'text'");
        const auto language = parse_language(j.value("language", std::string("plain")));
        programs.push_back(prepare_program(j.at("text").get<std::string>(), language, config));
        ids.push_back(j.contains("id") ? j.at("id").dump() : std::to_string(programs.size() - 1));
      }
      const auto strategy = s_strategy == "exact"    ? SelectionStrategy::exact
                            : s_strategy == "greedy" ? SelectionStrategy::greedy
                                                     : throw Error(ErrorKind::DomainError,
                                                                   "unknown strategy " + s_strategy);
      const auto sim = build_similarity(programs);
      const auto selection = select_diverse(sim, s_k, strategy, config.exact_budget);
      nlohmann::ordered_json j;
      j["strategy"] = s_strategy;
      j["k"] = s_k;
      j["indices"] = selection.indices;
      j["objective"] = selection.objective;
      out << j.dump() << "\n";
    } else if (reward_cmd->parsed()) {
      auto in = open_input(r_input);
      std::ofstream out_file, rejects_file;
      std::ostream* sink = &out;
      std::ostream* reject_sink = &err;
      if (!r_out.empty()) sink = &(out_file = open_output(r_out));
      if (!r_rejects.empty()) reject_sink = &(rejects_file = open_output(r_rejects));
      const auto stats = run_reward(in, *sink, *reject_sink, config);
      if (!*sink || !*reject_sink) throw Error(ErrorKind::IoError, "write failed");
      err << "reward: " << stats.processed << " groups, " << stats.rejected << " rejected\n";
    } else if (sweep_cmd->parsed()) {
      std::string text;
      if (sw_format == "csv") {
        text = "d_ec,k,acceptance,expected_tokens,throughput_factor\n";
        for (int k : sw_k)
          for (double d : sw_d) {
            const auto p = profile(d, k);
            std::ostringstream row;
            row.precision(10);
            row << d << ',' << k << ',' << p.acceptance << ',' << p.expected_tokens << ','
                << p.relative_throughput << '\n';
            text += row.str();
          }
      } else if (sw_format == "json") {
        auto rows = nlohmann::ordered_json::array();
        for (int k : sw_k)
          for (double d : sw_d) {
            const auto p = profile(d, k);
            nlohmann::ordered_json row;
            row["d_ec"] = d;
            row["k"] = k;
            row["acceptance"] = p.acceptance;
            row["expected_tokens"] = p.expected_tokens;
            row["throughput_factor"] = p.relative_throughput;
            rows.push_back(row);
          }
        text = rows.dump(2) + "\n";
      } else {
        throw Error(ErrorKind::DomainError, "unknown sweep format " + sw_format);
      }
      write_output(sw_out, text, out);
    } else if (geo_cmd->parsed()) {
      const auto trace = simulate_geometric(g_r, g_k, g_steps, config.seed);
      auto j = trace_json(trace);
      j["closed_form"] = expected_tokens(g_r, g_k);
      out << j.dump() << "\n";
    } else if (lookup_cmd->parsed()) {
      auto in = open_input(l_input);
      const LookupParams params{config.ngram, config.window};
      std::string text, line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
          throw LineError(ErrorKind::ParseError, line_no, e.what());
        }
        if (!j.is_object() || !j.contains("buggy") || !j.contains("fixed"))
          throw LineError(ErrorKind::SchemaError, line_no, "expected fields 'buggy' and 'fixed'");
        const auto language = parse_language(j.value("language", std::string("plain")));
        const auto buggy = prepare_program(j.at("buggy").get<std::string>(), language, config);
        const auto fixed = prepare_program(j.at("fixed").get<std::string>(), language, config);
        auto row = nlohmann::ordered_json::object();
        if (j.contains("id")) row["id"] = j.at("id");
        row["edit_cost"] = edit_cost(buggy, fixed).edit_cost;
        row.update(trace_json(simulate_prompt_lookup(buggy, fixed, params)));
        text += row.dump() + "\n";
      }
      write_output(l_out, text, out);
    } else if (report_cmd->parsed()) {
      const auto report = parse_report_json(read_text(rep_input));
      write_output(rep_out, emit_report(report, parse_report_format(rep_format)), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::IoError ? exit_io : exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}

} // namespace minedit::cli
