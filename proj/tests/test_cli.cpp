#include <gtest/gtest.h>

#include <json.hpp>

#include "commands.hpp"
#include "grossone/reference.hpp"

using grossone::cli::run_command;
using grossone::cli::split_line;

TEST(Cli, EvalRendersReferenceNumber) {
  const auto r = run_command({"eval", "74.9*G1^42.3+5.1+13.8*G1^-25.6 * 1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, std::string(grossone::reference::kA) + "\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, BoundsWithFiniteCheck) {
  const auto r = run_command({"bounds", "--finite", "5"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "lower: 4*G1 + 1\n"
            "upper: (2*G1+1)*((2*G1+1)^G1*(2*G1^2-1)+1)/(2*G1)\n"
            "n=5: 2n*sum = formula = 8680650, OK\n");
}

TEST(Cli, BoundsWithPrimes) {
  const auto r = run_command({"bounds", "--primes", "13"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("primes: 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41\n"), std::string::npos);
  EXPECT_NE(r.out.find("improved lower: 4*G1 + 27\n"), std::string::npos);
}

TEST(Cli, InapplicableOracle) {
  const auto r = run_command({"catalog", "check", "evens", "--n", "7"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err, "InapplicableN: evens oracle requires even n\n");
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, CatalogCommands) {
  const auto list = run_command({"catalog", "list"});
  EXPECT_EQ(list.exit_code, 0);
  EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 19);
  EXPECT_EQ(list.out.rfind("naturals ", 0), 0u);

  const auto count = run_command({"catalog", "count", "rationals-q1", "--finite", "5"});
  EXPECT_EQ(count.exit_code, 0);
  EXPECT_EQ(count.out, "4*G1^2 + 2*G1\nn=5: oracle = 110, formula = 110, OK\n");

  const auto tuples = run_command({"catalog", "count", "tuples", "--m", "G1"});
  EXPECT_EQ(tuples.out, "G1^G1\n");

  const auto check = run_command({"catalog", "check", "squares", "--n", "10"});
  EXPECT_EQ(check.exit_code, 0);
  EXPECT_EQ(check.out, "squares n=10: oracle = 3, formula = 3, OK\n");

  const auto unknown = run_command({"catalog", "count", "reals"});
  EXPECT_EQ(unknown.exit_code, 1);
  EXPECT_EQ(unknown.err.rfind("UnknownEntry: ", 0), 0u);

  const auto no_oracle = run_command({"catalog", "check", "tuples", "--n", "3", "--m", "G1"});
  EXPECT_EQ(no_oracle.exit_code, 1);
  EXPECT_EQ(no_oracle.err.rfind("NoOracle: ", 0), 0u);
}

TEST(Cli, CompareAndSubst) {
  EXPECT_EQ(run_command({"compare", "4*G1+1", "(2*G1+1)^G1"}).out, "<\n");
  EXPECT_EQ(run_command({"compare", "G1", "G1"}).out, "=\n");
  EXPECT_EQ(run_command({"compare", "2^G1", "G1^G1"}).out, "unknown\n");
  EXPECT_EQ(run_command({"subst", "(2*G1+1)^G1", "--n", "2"}).out, "25\n");
  EXPECT_EQ(run_command({"subst", "G1^-1", "--n", "3"}).out, "1/3\n");

  const auto inexact = run_command({"subst", "74.9*G1^42.3", "--n", "10"});
  EXPECT_EQ(inexact.exit_code, 1);
  EXPECT_EQ(inexact.err.rfind("NonExactSubstitution: ", 0), 0u);
}

TEST(Cli, Sum) {
  const auto r = run_command({"sum", "--form", "kqk", "--q", "2*G1+1", "--hi", "G1", "--verify", "1..3"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "(2*G1+1)*((2*G1+1)^G1*(2*G1^2-1)+1)/(4*G1^2)\n"
            "n=1: direct = 3, formula = 3, OK\n"
            "n=2: direct = 55, formula = 55, OK\n"
            "n=3: direct = 1134, formula = 1134, OK\n");
  EXPECT_EQ(run_command({"sum", "--form", "geom", "--q", "2*G1+1", "--lo", "0", "--hi", "G1-1"}).out,
            "((2*G1+1)^G1-1)/(2*G1)\n");
  EXPECT_EQ(run_command({"sum", "--form", "geom", "--q", "2", "--lo", "4", "--hi", "3"}).exit_code, 1);
}

TEST(Cli, UsageErrors) {
  const auto none = run_command({});
  EXPECT_EQ(none.exit_code, 2);
  EXPECT_TRUE(none.out.empty());
  EXPECT_EQ(run_command({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run_command({"subst", "G1"}).exit_code, 2);
  EXPECT_EQ(run_command({"sum", "--form", "cubic", "--q", "2", "--hi", "3"}).exit_code, 2);
  const auto lex = run_command({"eval", "2*$"});
  EXPECT_EQ(lex.exit_code, 2);
  EXPECT_EQ(lex.err.rfind("LexError: ", 0), 0u);
  EXPECT_EQ(run_command({"eval", "(1+"}).exit_code, 2);
  EXPECT_EQ(run_command({"--help"}).exit_code, 0);
}

TEST(Cli, MachineOutput) {
  const auto r = run_command({"--machine", "bounds", "--finite", "5"});
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "bounds");
  EXPECT_EQ(doc["inputs"]["finite"], 5);
  EXPECT_EQ(doc["result"]["lower"], "4*G1 + 1");
  ASSERT_EQ(doc["checks"].size(), 1u);
  EXPECT_EQ(doc["checks"][0]["direct"], "8680650");
  EXPECT_EQ(doc["checks"][0]["ok"], true);

  const auto e = nlohmann::json::parse(run_command({"--machine", "eval", "G1+G1"}).out);
  EXPECT_EQ(e["result"], "2*G1");
  EXPECT_TRUE(e["checks"].empty());
}

TEST(Cli, Unicode) {
  EXPECT_EQ(run_command({"--unicode", "eval", "G1^G1"}).out, "\xE2\x91\xA0^\xE2\x91\xA0\n");
  EXPECT_EQ(run_command({"eval", "\xE2\x91\xA0+1"}).out, "G1 + 1\n");
}

TEST(Cli, VerifyAllSmall) {
  const auto r = run_command({"verify-all", "--max-n", "5"});
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("[summation] n=5: 2n*sum = formula = 8680650, OK\n"), std::string::npos);
  EXPECT_NE(r.out.find(" 0 failed\n"), std::string::npos);
}

TEST(Cli, ReplMatchesBatch) {
  const std::vector<std::vector<std::string>> commands = {
      {"eval", "(2*G1+1)^2"},
      {"compare", "G1", "G1+1"},
      {"subst", "2^G1", "--n", "20"},
      {"bounds", "--finite", "3"},
      {"catalog", "count", "integers", "--finite", "4"},
      {"catalog", "check", "evens", "--n", "7"},
      {"sum", "--form", "geom", "--q", "2", "--lo", "0", "--hi", "3"},
  };
  std::string script, batch_out, batch_err;
  for (const auto& c : commands) {
    std::string line;
    for (const auto& word : c) line += (line.empty() ? "" : " ") + ("'" + word + "'");
    script += line + "\n";
    const auto r = run_command(c);
    batch_out += r.out;
    batch_err += r.err;
  }
  script += "G1*G1\n";
  batch_out += run_command({"eval", "G1*G1"}).out;
  const auto repl = run_command({"repl"}, script + "quit\n");
  EXPECT_EQ(repl.exit_code, 0);
  EXPECT_EQ(repl.out, batch_out);
  EXPECT_EQ(repl.err, batch_err);

  const auto machine = run_command({"--machine", "repl"}, "eval G1\n");
  EXPECT_EQ(machine.out, run_command({"--machine", "eval", "G1"}).out);
}

TEST(Cli, SplitLine) {
  EXPECT_EQ(split_line("eval '2 * G1'  --n \"3\""), (std::vector<std::string>{"eval", "2 * G1", "--n", "3"}));
  EXPECT_TRUE(split_line("   ").empty());
}
