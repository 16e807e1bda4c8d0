#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace padicq::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PADICQ_TEST_DATA) + "/" + name; }

TEST(Cli, BernoulliTableJson) {
  const auto r = run({"bernoulli", "--p", "3", "--q", "4", "--nmax", "6", "--prec", "12", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"].size(), 7u);
  EXPECT_EQ(j["kind"], "q_bernoulli");
}

TEST(Cli, ClassicalIntegralOfX) {
  const auto r = run({"integrate", "--p", "5", "--q", "1", "--f", "poly:0,1", "--prec", "6", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  // -1/2 mod 5^6.
  EXPECT_EQ(j["value"]["unit"], "7812");
  EXPECT_EQ(j["value"]["valuation"], 0);
  EXPECT_EQ(j["value"]["rel_precision"], 6);
}

TEST(Cli, FixedLevelSum) {
  const auto r = run({"integrate", "--p", "3", "--q", "4", "--f", "poly:1", "--N", "3", "--prec", "8"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("S_3 = 1 * 3^0 + O(3^8)"), std::string::npos) << r.out;
}

TEST(Cli, VerifyWittPasses) {
  const auto r = run({"verify", "witt", "--p", "3", "--q", "4", "--nmax", "4", "--threshold", "6"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("verdict pass"), std::string::npos);
}

TEST(Cli, VerifyWithCharacterFile) {
  const auto r = run({"verify", "witt", "--p", "3", "--q", "4", "--nmax", "3", "--kind", "fermionic", "--char",
                      data("quadratic_mod5.json"), "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["params"]["d"], 5);
}

TEST(Cli, VerifyShiftIdentitiesAndPrintedForm) {
  EXPECT_EQ(run({"verify", "theorem1", "--p", "5", "--q", "6", "--f", "expbase:6"}).code, kOk);
  EXPECT_EQ(run({"verify", "theorem3", "--p", "5", "--q", "6", "--f", "poly:0,0,1", "--d", "3", "--n", "1,2,3"}).code,
            kOk);
  const auto eq2 = run({"verify", "eq2", "--p", "3", "--q", "4"});
  EXPECT_EQ(eq2.code, kOk);
  EXPECT_NE(eq2.out.find("expected to miss"), std::string::npos);
}

TEST(Cli, VerdictSectionsAreByteIdentical) {
  const std::vector<std::string> args{"verify", "theorem3", "--p", "3", "--q", "4", "--f", "poly:0,1", "--format",
                                      "json"};
  auto a = nlohmann::json::parse(run(args).out);
  auto b = nlohmann::json::parse(run(args).out);
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"bernoulli"}).code, kUsage);
  EXPECT_EQ(run({"bernoulli", "--p", "4"}).code, kUsage);
  EXPECT_EQ(run({"bernoulli", "--p", "3", "--q", "5"}).code, kUsage);
  EXPECT_EQ(run({"bernoulli", "--p", "3", "--q", "x/y"}).code, kUsage);
  EXPECT_EQ(run({"integrate", "--p", "3", "--f", "nope:1"}).code, kUsage);
  EXPECT_EQ(run({"verify", "eq2", "--p", "3", "--q", "4", "--threshold", "3"}).code, kUsage);
  EXPECT_EQ(run({"gen-bernoulli", "--p", "5", "--q", "6", "--char", data("not_multiplicative_mod7.json")}).code,
            kUsage);
  EXPECT_EQ(run({"log", "--p", "5", "--x", "2"}).code, kUsage);
  const auto r = run({"verify", "witt", "--p", "3", "--q", "4", "--kind", "sideways"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kOk); }

TEST(Cli, ConvergenceFailureExitsThree) {
  const auto r = run({"integrate", "--p", "3", "--q", "4", "--f", "poly:0,0,1", "--prec", "10", "--max-level", "4"});
  EXPECT_EQ(r.code, kPrecision) << r.out << r.err;
}

TEST(Cli, LogAndTeichmuller) {
  const auto l = run({"log", "--p", "5", "--x", "6", "--prec", "8", "--format", "json"});
  ASSERT_EQ(l.code, kOk) << l.err;
  EXPECT_EQ(nlohmann::json::parse(l.out)["value"]["valuation"], 1);
  const auto t = run({"teichmuller", "--p", "7", "--a", "3", "--prec", "5"});
  ASSERT_EQ(t.code, kOk) << t.err;
  EXPECT_EQ(run({"teichmuller", "--p", "7", "--a", "14"}).code, kUsage);
}

TEST(Cli, SeriesTables) {
  EXPECT_EQ(run({"gen-bernoulli", "--p", "5", "--q", "6", "--d", "3", "--nmax", "4"}).code, kOk);
  EXPECT_EQ(run({"euler", "--p", "5", "--q", "6", "--nmax", "4"}).code, kOk);
  EXPECT_EQ(run({"euler", "--p", "5", "--u", "-1", "--nmax", "4"}).code, kOk);
  EXPECT_EQ(run({"gen-euler", "--p", "3", "--q", "4", "--char", data("quadratic_mod5.json")}).code, kOk);
  EXPECT_EQ(run({"bernoulli", "--p", "7", "--nmax", "4"}).code, kOk);
}

}  // namespace
}  // namespace padicq::cli
