#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gmock/gmock.h"
#include "json.hpp"
#include "permdeg/cache.hpp"
#include "temp_dir.hpp"

using ::testing::HasSubstr;
using namespace permdeg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliTest, MuOfCyclicSix) {
  const Result r = run_cli({"mu", "--gens", "(1 2)(3 4 5)", "--degree", "5"});
  EXPECT_EQ(cli::kOk, r.code) << r.err;
  EXPECT_EQ("5\n", r.out);

  const Result two = run_cli({"mu", "--gens", "(1,2), (3,4,5)", "--degree", "5"});
  EXPECT_EQ("5\n", two.out) << "C2 x C3 given by two generators";
}

TEST(CliTest, MuFromFile) {
  TempDir dir;
  const std::string path = dir.str() + "/a5.txt";
  std::ofstream(path) << "# A5 on five points\ndegree: 5\ngens: (1 2 3 4 5), (1 2 3)\n";
  const Result r = run_cli({"mu", "--file", path});
  EXPECT_EQ(cli::kOk, r.code) << r.err;
  EXPECT_EQ("5\n", r.out);

  std::ofstream(path) << "gens: (1 2)\n";
  EXPECT_EQ(cli::kUsage, run_cli({"mu", "--file", path}).code) << "degree line missing";
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(cli::kUsage, run_cli({}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"frobnicate"}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"survey"}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"survey", "-m", "12"}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"mu"}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"mu", "--gens", "(1 2"}).code) << "--gens needs --degree";
  EXPECT_EQ(cli::kUsage, run_cli({"mu", "--gens", "(1 2", "--degree", "3"}).code);
  EXPECT_EQ(cli::kUsage, run_cli({"mu", "--gens", "(1 7)", "--degree", "3"}).code);
  EXPECT_EQ(cli::kOk, run_cli({"--help"}).code);
}

TEST(CliTest, BudgetExceeded) {
  const Result r = run_cli({"--max-classes", "3", "enumerate", "-m", "5"});
  EXPECT_EQ(cli::kBudget, r.code);
  EXPECT_THAT(r.err, HasSubstr("budget"));
  EXPECT_EQ(cli::kBudget, run_cli({"mu", "--gens", "(1 2 3 4 5 6 7 8), (1 2)", "--degree", "8"}).code)
      << "S8 is beyond the order cap";
}

TEST(CliTest, EnumerateSummary) {
  const Result r = run_cli({"enumerate", "-m", "5"});
  EXPECT_EQ(cli::kOk, r.code);
  EXPECT_THAT(r.out, HasSubstr("Sym(5): 19 classes, 156 subgroups"));
}

TEST(CliTest, VerifyThroughDegree7) {
  TempDir dir;
  const Result r = run_cli({"--cache", dir.str(), "verify", "--max", "7"});
  EXPECT_EQ(cli::kOk, r.code) << r.err;
  EXPECT_THAT(r.out, HasSubstr("m=5: 19 classes, 7 minimally embedded, Ind {1:7}, Comp []"));
  EXPECT_THAT(r.out, HasSubstr("m=6: 56 classes, 18 minimally embedded, Ind {1:18}, Comp []"));
  EXPECT_THAT(r.out, HasSubstr("m=7: 96 classes, 29 minimally embedded, Ind {1:28, 2:1}, Comp []"));
  EXPECT_THAT(r.out, HasSubstr("verdict: no complement up to degree 7"));
}

TEST(CliTest, SurveyJsonIsStable) {
  TempDir dir;
  const Result a = run_cli({"--cache", dir.str(), "survey", "-m", "6", "--json"});
  const Result b = run_cli({"--cache", dir.str(), "survey", "-m", "6", "--json"});
  EXPECT_EQ(cli::kOk, a.code) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(6, j["degree"]);
  EXPECT_EQ(18, j["minemb_count"]);
  EXPECT_EQ(18u, j["classes"].size());
  EXPECT_EQ(18, j["ind_multiset"]["1"]);
  EXPECT_FALSE(j["comp_nonempty"].get<bool>());
}

TEST(CliTest, CorruptCacheIsRefused) {
  TempDir dir;
  std::ofstream(cache_path(dir.str(), 5)) << "{\"schema_version\": 99}\n";
  const Result r = run_cli({"--cache", dir.str(), "survey", "-m", "5"});
  EXPECT_EQ(cli::kUsage, r.code);
  EXPECT_THAT(r.err, HasSubstr("cache"));
}

TEST(CliTest, Witness) {
  const Result r = run_cli({"witness"});
  EXPECT_EQ(cli::kOk, r.code) << r.err;
  EXPECT_THAT(r.out, HasSubstr("|G| = 1920"));
  EXPECT_THAT(r.out, HasSubstr("mu(G) = 10"));
  EXPECT_THAT(r.out, HasSubstr("10 < 12"));
  EXPECT_THAT(r.out, HasSubstr("certified"));
}
