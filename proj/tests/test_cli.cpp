#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ybekit/cli.hpp"
#include "ybekit/json_io.hpp"

using namespace ybekit;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ybekit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kCyclic3 = R"({"n":3,"sigma":[[1,2,0],[1,2,0],[1,2,0]]})";
const char* kBroken = R"({"n":2,"sigma":[[0,1],[1,0]]})";

}  // namespace

TEST(Cli, ValidateOk) {
  const auto r = run_cli({"validate", kCyclic3});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("passes"), true);
}

TEST(Cli, ValidateInvalidSolution) {
  const auto r = run_cli({"validate", kBroken, "--pretty"});
  EXPECT_EQ(r.code, cli::kInvalidSolution);
  EXPECT_NE(r.out.find("braid counterexample: (0, 0, 1)"), std::string::npos) << r.out;
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(run_cli({"validate", "/nonexistent/file.json"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"validate", "{\"sigma\": [[0,1]"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"validate", R"({"sigma":[[0,0],[1,0]]})"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"enumerate"}).code, cli::kIoError);
}

TEST(Cli, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "ybekit_cli_test.json";
  std::ofstream(path) << kCyclic3;
  const auto r = run_cli({"analyze", path.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("primitive"), true);
  EXPECT_EQ(j.at("mpl"), 1);
  std::filesystem::remove(path);
}

TEST(Cli, AnalyzeInvalid) { EXPECT_EQ(run_cli({"analyze", kBroken}).code, cli::kInvalidSolution); }

TEST(Cli, Brace) {
  const auto r = run_cli({"brace", kCyclic3, "--lambda"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("order"), 3);
  EXPECT_TRUE(j.contains("lambda"));
  EXPECT_EQ(run_cli({"brace", kBroken}).code, cli::kInvalidSolution);
}

TEST(Cli, BudgetExceeded) {
  const char* sym3 = R"({"sigma":[[0,1,2,3,4],[0,1,2,3,4],[0,1,2,3,4],[0,2,1,4,3],[1,0,2,4,3]]})";
  EXPECT_EQ(run_cli({"analyze", sym3, "--group-cap", "3"}).code, cli::kBudget);
  EXPECT_EQ(run_cli({"brace", sym3, "--brace-cap", "3"}).code, cli::kBudget);
  EXPECT_EQ(run_cli({"enumerate", "--n", "8"}).code, cli::kBudget);
  EXPECT_EQ(run_cli({"enumerate", "--n", "7", "--budget-secs", "0.000001"}).code, cli::kBudget);
}

TEST(Cli, EnumerateCatalogOnStdout) {
  const auto r = run_cli({"enumerate", "--n", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream in(r.out);
  const auto cat = read_catalog(in);
  EXPECT_EQ(cat.records.size(), 5u);
  EXPECT_EQ(Json::parse(r.err).at("n"), 3);
}

TEST(Cli, EnumerateToFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybekit_cli_catalog.jsonl";
  const auto r = run_cli({"enumerate", "--n", "4", "--threads", "2", "-o", path.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::ifstream in(path);
  EXPECT_EQ(read_catalog(in).records.size(), 23u);
  EXPECT_EQ(Json::parse(r.out).at("n"), 4);
  std::filesystem::remove(path);
}

TEST(Cli, Classify) {
  const auto csv = std::filesystem::temp_directory_path() / "ybekit_cli_classify.csv";
  const auto r = run_cli({"classify", "--n-max", "4", "--csv", csv.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("ok"), true);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,classes,indecomposable,irretractable,primitive,shape_ok");
  std::filesystem::remove(csv);
}
