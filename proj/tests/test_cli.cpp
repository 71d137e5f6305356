#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semt/cli.hpp"

namespace semt {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "semt_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  return text.str();
}

TEST(Cli, LabelGPlus) {
  auto r = run({"label", "g-plus", "--n", "5", "--k", "2", "--c", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["magic_constant"], 40);
  EXPECT_EQ(doc["family"], "5;2,2,2,2,5");
}

TEST(Cli, LabelEveryKind) {
  EXPECT_EQ(Json::parse(run({"label", "g-minus", "--n", "5", "--k", "4", "--c", "2"}).out)["magic_constant"], 50);
  EXPECT_EQ(Json::parse(run({"label", "g-sym", "--n", "5", "--k", "2", "--r", "3"}).out)["magic_constant"], 38);
  EXPECT_EQ(Json::parse(run({"label", "equal-k", "--n", "7", "--k", "1"}).out)["magic_constant"], 33);
  EXPECT_EQ(Json::parse(run({"label", "cycle", "--n", "9"}).out)["magic_constant"], 24);
}

TEST(Cli, LabelAsDot) {
  auto r = run({"label", "cycle", "--n", "3", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph \"3;0,0,0\" {", 0), 0u);
}

TEST(Cli, LabelPreconditionsAreDomainErrors) {
  EXPECT_EQ(run({"label", "cycle", "--n", "4"}).code, 1);
  EXPECT_EQ(run({"label", "g-minus", "--n", "5", "--k", "2", "--c", "3"}).code, 1);
  EXPECT_EQ(run({"label", "g-sym", "--n", "5", "--k", "2", "--r", "2"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"label", "triangle", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"label", "cycle"}).code, 2);
  EXPECT_EQ(run({"search"}).code, 2);
  EXPECT_EQ(run({"search", "--family", "3;1,x,1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--n-max", "4"}).code, 2);
  EXPECT_EQ(run({"bounds", "--family", "3;0,0,0", "--config", "/nonexistent/semt.conf"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyFixture) {
  auto r = run({"verify", "--input", std::string(SEMT_FIXTURES_DIR) + "/figure1_g_plus_5_2_3.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["magic_constant"], 40);
}

TEST(Cli, VerifyReportsViolations) {
  auto doc = Json::parse(run({"label", "cycle", "--n", "5"}).out);
  doc["edge_labels"][0]["label"] = 99;
  auto r = run({"verify"}, doc.dump());
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(Json::parse(r.out)["valid"].get<bool>());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyMalformedInput) {
  EXPECT_EQ(run({"verify"}, "not json").code, 1);
  EXPECT_EQ(run({"verify", "--input", "/nonexistent/labeling.json"}).code, 2);
}

TEST(Cli, LabelPipesIntoVerify) {
  for (std::vector<std::string> args : {std::vector<std::string>{"label", "g-sym", "--n", "7", "--k", "3", "--r", "5"},
                                        std::vector<std::string>{"label", "g-minus", "--n", "9", "--k", "3", "--c", "3"}}) {
    auto labeled = run(args);
    ASSERT_EQ(labeled.code, 0);
    auto verified = run({"verify"}, labeled.out);
    EXPECT_EQ(verified.code, 0) << verified.err;
    EXPECT_EQ(Json::parse(verified.out)["magic_constant"], Json::parse(labeled.out)["magic_constant"]);
  }
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--family", "3;1,2,4"});
  ASSERT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["conjecture_value"], 23);
  EXPECT_EQ(doc["theorem4_lower"], 23);
  EXPECT_EQ(doc["theorem4_upper"], 25);
  EXPECT_TRUE(doc.contains("theorem4_upper_rotation_min"));
  EXPECT_EQ(run({"bounds", "--family", "4;0,0,0,0"}).code, 1);
}

TEST(Cli, Search) {
  auto r = run({"search", "--family", "3;1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["sm"], 15);
  EXPECT_EQ(doc["status"], "Exact");
  auto witness = run({"verify"}, doc["witness"].dump());
  EXPECT_EQ(witness.code, 0);
}

TEST(Cli, SearchBudget) {
  auto doc = Json::parse(run({"search", "--family", "3;1,2,4", "--budget", "10"}).out);
  EXPECT_EQ(doc["status"], "Budget-exhausted");
  EXPECT_TRUE(doc["sm"].is_null());
  EXPECT_EQ(Json::parse(run({"search", "--family", "3;1,2,4", "--budget", "0"}).out)["sm"], 24);
}

TEST(Cli, SearchIsByteIdenticalAcrossRunsAndWorkers) {
  auto a = run({"search", "--family", "5;2,0,1,0,3"});
  auto b = run({"search", "--family", "5;2,0,1,0,3"});
  auto c = run({"search", "--family", "5;2,0,1,0,3", "--workers", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, ExportDot) {
  auto labeled = run({"label", "cycle", "--n", "3"});
  auto dot = run({"export-dot"}, labeled.out);
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out, run({"label", "cycle", "--n", "3", "--format", "dot"}).out);

  auto doc = Json::parse(labeled.out);
  doc["magic_constant"] = 10;
  EXPECT_EQ(run({"export-dot"}, doc.dump()).code, 1);
}

TEST(Cli, SweepToStdout) {
  auto r = run({"sweep", "--n-max", "3", "--pendant-sum-max", "1", "--format", "csv", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("family,n,p,q,", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_NE(r.err.find("2 instances"), std::string::npos);
}

TEST(Cli, SweepToFiles) {
  const auto base = scratch("sweep").string();
  auto r = run({"sweep", "--n-max", "5", "--pendant-sum-max", "2", "--output", base, "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto jsonl = slurp(base + ".jsonl");
  const auto csv = slurp(base + ".csv");
  EXPECT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n') + 1, std::count(csv.begin(), csv.end(), '\n'));
  auto again = run({"sweep", "--n-max", "5", "--pendant-sum-max", "2", "--workers", "2", "--no-timing"});
  EXPECT_EQ(again.out, jsonl);
}

TEST(Cli, ConfigSuppliesDefaultsAndFlagsWin) {
  const auto path = scratch("semt.conf");
  std::ofstream(path) << "# sweep defaults\nn-max = 3\npendant-sum-max=1\nformat=csv\nbudget = 10\n";
  auto from_config = run({"sweep", "--config", path.string(), "--no-timing"});
  ASSERT_EQ(from_config.code, 0) << from_config.err;
  EXPECT_EQ(from_config.out.rfind("family,", 0), 0u);

  auto overridden = run({"sweep", "--config", path.string(), "--format", "json", "--budget", "0", "--no-timing"});
  ASSERT_EQ(overridden.code, 0);
  EXPECT_EQ(overridden.out.front(), '{');
  EXPECT_EQ(overridden.out.find("Budget-exhausted"), std::string::npos);

  auto budgeted = run({"search", "--config", path.string(), "--family", "3;1,2,4"});
  EXPECT_EQ(Json::parse(budgeted.out)["status"], "Budget-exhausted");

  std::ofstream(path) << "budget = lots\n";
  EXPECT_EQ(run({"search", "--config", path.string(), "--family", "3;0,0,0"}).code, 2);
}

TEST(Cli, OutputFile) {
  const auto path = scratch("c7.json");
  auto r = run({"label", "cycle", "--n", "7", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(path))["magic_constant"], 19);
}

}  // namespace
}  // namespace semt
