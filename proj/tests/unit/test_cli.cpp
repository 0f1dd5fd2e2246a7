#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path fixtures{MINEDIT_FIXTURE_DIR};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "minedit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = minedit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("minedit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return (dir_ / name).string();
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  fs::path dir_;
};

} // namespace

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"metrics"}).code, 1); // --input required
}

TEST_F(Cli, Normalize) {
  const auto src = write("a.py", "x  =  1   # c\n\n\ny = 'a  b'\n");
  auto r = run({"normalize", src, "--lang", "python-like"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x = 1\ny = 'a  b'\n");
  r = run({"normalize", src, "--lang", "python-like", "--mode", "token", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lines"].size(), 2u);
  EXPECT_EQ(j["tokens"][0], "x");
  EXPECT_EQ(run({"normalize", src, "--lang", "cobol"}).code, 1);
  EXPECT_EQ(run({"normalize", (dir_ / "missing.py").string()}).code, 2);
}

TEST_F(Cli, EditCost) {
  const auto a = write("a.txt", "a\nb\nc\n");
  const auto b = write("b.txt", "a\nB\nc\n");
  auto r = run({"editcost", a, b});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["distance"], 1);
  EXPECT_EQ(j["exact"], "1/3");
  r = run({"editcost", a, b, "--granularity", "token"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["granularity"], "token");
  const auto empty = write("e.txt", "\n\n");
  EXPECT_EQ(run({"editcost", empty, b}).code, 1);
}

TEST_F(Cli, MetricsFormatsAndSidecars) {
  const auto input = (fixtures / "eval_small.jsonl").string();
  const auto conf = (fixtures / "eval_small.conf").string();
  auto r = run({"--config", conf, "metrics", "--input", input, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pass,1,,0.700000,70.00,7/10"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("fix,2,1.5,0.400000,40.00,2/5"), std::string::npos) << r.out;

  const auto out = dir_ / "report.json";
  const auto details = dir_ / "details.jsonl";
  r = run({"--config", conf, "metrics", "--input", input, "--out", out.string(), "--details",
           details.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(out))["task_count"], 5);
  EXPECT_FALSE(slurp(details).empty());

  r = run({"report", "--input", out.string(), "--format", "markdown"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| fix_2@2 | 60.00 |"), std::string::npos) << r.out;

  // the default n_expected of 20 does not match the two-candidate fixture
  EXPECT_EQ(run({"metrics", "--input", input}).code, 1);
  EXPECT_EQ(run({"--config", conf, "metrics", "--input", input, "--n", "2", "--ks", "3"}).code, 1);
  EXPECT_EQ(run({"metrics", "--input", (dir_ / "none.jsonl").string()}).code, 2);
  EXPECT_EQ(run({"--config", conf, "metrics", "--input", input, "--out",
                 (dir_ / "no/such/dir.json").string()})
                .code,
            2);
}

TEST_F(Cli, MetricsRejectsSidecar) {
  std::ifstream in(fixtures / "eval_small.jsonl");
  std::string first;
  std::getline(in, first);
  auto j = nlohmann::json::parse(first);
  std::string data;
  for (const char* id : {"x1", "x2"}) {
    j["task_id"] = id;
    data += j.dump() + "\n";
  }
  j["task_id"] = "same";
  j["golden"] = j["buggy"];
  data += j.dump() + "\n";
  const auto input = write("in.jsonl", data);
  const auto rejects = dir_ / "rejects.jsonl";
  const auto r = run({"metrics", "--input", input, "--n", "2", "--ks", "1", "--rejects",
                      rejects.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rej = nlohmann::json::parse(slurp(rejects));
  EXPECT_EQ(rej["task_id"], "same");
  EXPECT_EQ(rej["line"], 3);
}

TEST_F(Cli, ParseErrorExitCode) {
  const auto input = write("bad.jsonl", "{not json\n");
  const auto r = run({"metrics", "--input", input});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST_F(Cli, Reward) {
  const auto input = (fixtures / "groups_small.jsonl").string();
  const auto out = dir_ / "rewards.jsonl";
  const auto rejects = dir_ / "rejects.jsonl";
  const auto r = run({"reward", "--input", input, "--out", out.string(), "--rejects",
                      rejects.string(), "--beta", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = slurp(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 40);
  EXPECT_EQ(nlohmann::json::parse(slurp(rejects))["line"], 19);
  EXPECT_EQ(run({"reward", "--input", input, "--alpha", "2"}).code, 1);
}

TEST_F(Cli, Sample) {
  std::string data;
  for (const char* text : {"a\nb\nc\n", "a\nb\nd\n", "x\ny\nz\n", "a\nq\nc\n"})
    data += nlohmann::json{{"language", "plain"}, {"text", text}}.dump() + "\n";
  const auto input = write("p.jsonl", data);
  auto r = run({"sample", "--input", input, "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["indices"], nlohmann::json::array({0, 2}));
  EXPECT_EQ(j["objective"], 0.0);
  EXPECT_EQ(run({"sample", "--input", input, "--k", "9"}).code, 1);
  EXPECT_EQ(run({"sample", "--input", input, "--k", "2", "--strategy", "magic"}).code, 1);
}

TEST_F(Cli, SpecSim) {
  auto r = run({"spec-sim", "sweep", "--d", "0.5,1", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "d_ec,k,acceptance,expected_tokens,throughput_factor\n"
                   "0.5,3,0.5,1.875,1.875\n1,3,0,1,1\n");
  // d = 0 reports the limiting value k + 1
  EXPECT_EQ(run({"spec-sim", "sweep", "--d", "0", "--k", "3"}).out,
            "d_ec,k,acceptance,expected_tokens,throughput_factor\n0,3,1,4,4\n");
  EXPECT_EQ(run({"spec-sim", "sweep", "--d", "1.5", "--k", "3"}).code, 1);

  r = run({"--seed", "7", "spec-sim", "geometric", "--r", "0.5", "--k", "3", "--steps", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["closed_form"], 1.875);
  EXPECT_EQ(run({"--seed", "7", "spec-sim", "geometric", "--r", "0.5", "--k", "3", "--steps",
                 "1000"})
                .out,
            r.out);

  const auto pairs = write("pairs.jsonl", nlohmann::json{{"id", "p"},
                                                         {"language", "plain"},
                                                         {"buggy", "a\nb\nc\nd\n"},
                                                         {"fixed", "a\nb\nc\nd\n"}}
                                                  .dump() +
                                              "\n");
  r = run({"spec-sim", "lookup", "--input", pairs});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["id"], "p");
  EXPECT_EQ(j["edit_cost"], 0.0);
  EXPECT_EQ(j["empirical_acceptance"], 1.0);
}
