#include <flexmeadow/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace flexmeadow {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& stem) {
  return std::string(::testing::TempDir()) + stem;
}

TEST(Cli, EvalFrozenOutputs) {
  CliRun r = run({"eval", "--model", "external", "x^-1", "--bind", "x=2 ; o"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2 ; o\n");

  r = run({"eval", "--model", "external", "N(x)", "--bind", "x=1 ; L"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 ; L\n");

  r = run({"eval", "--model", "ffp-common:3", "0^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "E\n");

  r = run({"eval", "--model", "rat-involutive", "0^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, EvalBindingsAndErrors) {
  // later bindings override earlier ones for the same variable
  CliRun r = run({"eval", "--model", "ffp:5", "x + y", "--bind", "x=1",
                  "--bind", "y=2", "--bind", "x=3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");

  r = run({"eval", "--model", "external", "x + y", "--bind", "x=1 ; o"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unbound variable"), std::string::npos);

  r = run({"eval", "--model", "external", "x*-y"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unary minus"), std::string::npos);

  r = run({"eval", "--model", "external", "err"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no error element"), std::string::npos);

  r = run({"eval", "--model", "nosuch", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown model"), std::string::npos);
}

TEST(Cli, DecomposeFrozenOutputs) {
  CliRun r = run({"decompose", "cut(1,closed)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r = e^1, I = L\n");

  r = run({"decompose", "o"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r = 1, I = o\n");

  r = run({"decompose", "cut(-3/2,open)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r = e^(-3/2), I = o\n");

  r = run({"decompose", "bogus"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, QuotientFrozenOutputs) {
  CliRun r = run({"quotient", "1 ; zero", "0 ; o"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "empty\n");

  r = run({"quotient", "0 ; o", "0 ; o"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 ; L\n");

  r = run({"quotient", "1 ; o", "2 ; o"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2 ; o\n");
}

TEST(Cli, CheckExitCodes) {
  CliRun ok = run({"check", "--model", "ffp:5", "--catalog", "involutive",
                   "--exhaustive"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("model: ffp:5"), std::string::npos);
  EXPECT_NE(ok.out.find("strategy: exhaustive"), std::string::npos);
  EXPECT_NE(ok.out.find("summary: 10 pass, 0 fail, 0 error"),
            std::string::npos);

  CliRun fail = run({"check", "--model", "external", "--catalog",
                     "distributivity-variants", "--samples", "10000", "--seed",
                     "42"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("dist-classical"), std::string::npos);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);
  EXPECT_NE(fail.out.find("at: "), std::string::npos);
  EXPECT_NE(fail.out.find("lhs: "), std::string::npos);

  // an error status (M13 needs err, ffp has none) exits 2
  CliRun err = run({"check", "--model", "ffp:5", "--catalog", "common",
                    "--exhaustive"});
  EXPECT_EQ(err.code, 2);
  EXPECT_NE(err.out.find("error"), std::string::npos);
}

TEST(Cli, CheckUsageErrors) {
  EXPECT_EQ(run({"check", "--model", "nosuch", "--catalog", "involutive"}).code,
            2);
  EXPECT_EQ(run({"check", "--model", "ffp:5", "--catalog", "nosuch"}).code, 2);
  EXPECT_EQ(run({"check", "--model", "ffp:5"}).code, 2);  // catalog required
  EXPECT_EQ(run({"check", "--catalog", "involutive"}).code, 2);
  EXPECT_EQ(run({"check", "--model", "external", "--catalog", "flexible",
                 "--exhaustive"})
                .code,
            2);
  EXPECT_EQ(run({"check", "--model", "ffp:5", "--catalog", "involutive",
                 "--samples", "0"})
                .code,
            2);
  EXPECT_EQ(run({"check", "--model", "ffp:5", "--catalog", "involutive",
                 "--samples", "99999999"})
                .code,
            2);
  // --exhaustive and --samples are mutually exclusive
  EXPECT_EQ(run({"check", "--model", "ffp:5", "--catalog", "involutive",
                 "--exhaustive", "--samples", "10"})
                .code,
            2);
  CliRun inf = run({"check", "--model", "external", "--catalog", "flexible",
                    "--exhaustive"});
  EXPECT_NE(inf.err.find("infinite"), std::string::npos);
}

TEST(Cli, CheckMultipleCatalogsInOrder) {
  CliRun r = run({"check", "--model", "ffp:5", "--catalog", "involutive",
                  "--catalog", "flexible", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  std::size_t i1 = r.out.find("I1 ");
  std::size_t fi1 = r.out.find("FI1 ");
  ASSERT_NE(i1, std::string::npos);
  ASSERT_NE(fi1, std::string::npos);
  EXPECT_LT(i1, fi1);
  EXPECT_NE(r.out.find("summary: 20 pass, 0 fail, 0 error"),
            std::string::npos);
}

TEST(Cli, CheckLawFileCatalog) {
  std::string path = temp_path("laws.txt");
  {
    std::ofstream f(path);
    f << "# a tiny custom suite\n";
    f << "comm : x + y = y + x\n";
    f << "self-inv : nonzero(x) => x*x^-1 = 1\n";
  }
  CliRun r = run({"check", "--model", "ffp:7", "--catalog", path,
                  "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("comm"), std::string::npos);
  EXPECT_NE(r.out.find("self-inv"), std::string::npos);
  EXPECT_NE(r.out.find("summary: 2 pass, 0 fail, 0 error"),
            std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, JsonReportSchemaAndDeterminism) {
  std::string p1 = temp_path("rep1.json");
  std::string p2 = temp_path("rep2.json");
  std::vector<std::string> args = {
      "check",     "--model", "external", "--catalog", "flexible",
      "--samples", "500",     "--seed",   "42"};
  std::vector<std::string> a1 = args;
  a1.push_back("--json");
  a1.push_back(p1);
  std::vector<std::string> a2 = args;
  a2.push_back("--json");
  a2.push_back(p2);
  CliRun r1 = run(a1);
  CliRun r2 = run(a2);
  EXPECT_EQ(r1.code, r2.code);

  std::ifstream f1(p1), f2(p2);
  ASSERT_TRUE(f1 && f2);
  nlohmann::json j1 = nlohmann::json::parse(f1);
  nlohmann::json j2 = nlohmann::json::parse(f2);

  ASSERT_TRUE(j1.contains("model"));
  ASSERT_TRUE(j1.contains("results"));
  ASSERT_TRUE(j1.contains("seed"));
  ASSERT_TRUE(j1.contains("timestamp"));
  EXPECT_EQ(j1["model"], "external");
  EXPECT_EQ(j1["seed"], 42);
  ASSERT_EQ(j1["results"].size(), 10u);
  for (const auto& e : j1["results"]) {
    ASSERT_TRUE(e.contains("law"));
    ASSERT_TRUE(e.contains("catalog"));
    ASSERT_TRUE(e.contains("status"));
    ASSERT_TRUE(e.contains("samples"));
    ASSERT_TRUE(e.contains("effective_samples"));
    ASSERT_TRUE(e.contains("counterexample"));
    EXPECT_EQ(e["catalog"], "flexible");
    std::string st = e["status"];
    EXPECT_TRUE(st == "pass" || st == "fail" || st == "error");
    if (st == "fail") {
      ASSERT_TRUE(e["counterexample"].is_object());
      ASSERT_TRUE(e["counterexample"].contains("bindings"));
      ASSERT_TRUE(e["counterexample"].contains("lhs"));
      ASSERT_TRUE(e["counterexample"].contains("rhs"));
    } else {
      EXPECT_TRUE(e["counterexample"].is_null());
    }
  }

  // identical up to the timestamp
  j1.erase("timestamp");
  j2.erase("timestamp");
  EXPECT_EQ(j1, j2);

  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST(Cli, JsonUnwritablePathIsUsageError) {
  CliRun r = run({"check", "--model", "ffp:5", "--catalog", "involutive",
                  "--exhaustive", "--json", "/nonexistent-dir/x.json"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ListAxioms) {
  CliRun r = run({"--list-axioms"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("catalog involutive:"), std::string::npos);
  EXPECT_NE(r.out.find("catalog flexible:"), std::string::npos);
  EXPECT_NE(r.out.find("FI7"), std::string::npos);
  EXPECT_NE(r.out.find("(1 + N(x)*x^-1)*x = x"), std::string::npos);
  EXPECT_NE(r.out.find("M13"), std::string::npos);
  EXPECT_NE(r.out.find("FIL"), std::string::npos);
}

TEST(Cli, HelpAndNoArgs) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"check", "--help"}).code, 0);
  CliRun none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

}  // namespace
}  // namespace flexmeadow
