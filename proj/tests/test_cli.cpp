#include <gtest/gtest.h>

#include "hyperres/cli.hpp"
#include "hyperres/restriction.hpp"

using namespace hyperres::cli;

namespace {

ExperimentConfig config(const std::string& command) {
  ExperimentConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST(GreenCheck, NoTrialsIsAnEmptySuccess) {
  auto c = config("green-check");
  c.trials = 0;
  auto report = run_command(c);
  EXPECT_EQ(report.exit_status, kExitOk);
  EXPECT_TRUE(report.document["trials"].empty());
  EXPECT_EQ(report.document["summary"]["violations"], 0);
}

TEST(GreenCheck, RandomCorpusHasNoViolations) {
  auto c = config("green-check");
  c.trials = 100;
  auto report = run_command(c);
  EXPECT_EQ(report.exit_status, kExitOk);
  EXPECT_EQ(report.document["summary"]["violations"], 0);
  EXPECT_EQ(report.document["config"]["seed"], 1);
}

TEST(GreenCheck, ZeroFormIsAViolation) {
  auto c = config("green-check");
  c.vars = {"x", "y"};
  c.zero_form = true;
  c.trials = 1;
  c.max_degree = 1;
  auto report = run_command(c);
  EXPECT_EQ(report.exit_status, kExitViolation);
  EXPECT_EQ(report.document["summary"]["violations"], 1);
  EXPECT_EQ(report.document["trials"][0]["form"], "0");
}

TEST(GrdVerify, Examples) {
  auto c = config("grd-verify");
  c.vars = {"x", "y"};
  c.forms = "x, y";
  c.degree = 1;
  EXPECT_EQ(run_command(c).exit_status, kExitOk);

  auto two = config("grd-verify");
  two.field = "2";
  two.toric = "veronese:2,2";
  two.ideal = "Z1, Z3";
  two.random_forms = 1;
  two.structured = true;
  two.degree = 1;
  auto report = run_command(two);
  EXPECT_EQ(report.exit_status, kExitViolation);
  EXPECT_FALSE(report.document["trials"][0]["violations"].empty());

  auto big = config("grd-verify");
  big.vars = {"x", "y"};
  big.random_forms = 13;
  EXPECT_THROW(run_command(big), hyperres::BudgetError);
}

TEST(LexRestrict, Examples) {
  auto c = config("lex-restrict");
  c.hf = "1,2,1,1";
  c.nvars = 2;
  auto report = run_command(c);
  EXPECT_EQ(report.exit_status, kExitOk);
  EXPECT_EQ(report.document["trials"][0]["lex_ideal"], nlohmann::ordered_json({"x1^2", "x1*x2"}));

  auto zero = config("lex-restrict");
  zero.hf = "1,3,6,10";
  EXPECT_EQ(run_command(zero).exit_status, kExitOk);

  auto random = config("lex-restrict");
  random.trials = 100;
  auto many = run_command(random);
  EXPECT_EQ(many.exit_status, kExitOk);
  EXPECT_EQ(many.document["summary"]["mismatches"], 0);
}

TEST(EakinSathaye, Examples) {
  auto quadric = config("eakin-sathaye");
  quadric.vars = {"x", "y", "z"};
  quadric.random_gens = {2};
  quadric.power = 2;
  quadric.num_elements = 2;
  EXPECT_EQ(run_command(quadric).exit_status, kExitOk);

  auto s = config("eakin-sathaye");
  s.toric = "segre:2,2";
  s.power = 1;
  s.num_elements = 4;
  s.variant = "segre-product";
  EXPECT_EQ(run_command(s).exit_status, kExitOk);

  auto two = config("eakin-sathaye");
  two.field = "2";
  two.toric = "veronese:2,2";
  two.ideal = "Z1, Z3";
  two.variant = "veronese-power";
  two.exploratory = true;
  auto report = run_command(two);
  EXPECT_EQ(report.exit_status, kExitViolation);
  EXPECT_EQ(report.document["runs"][0]["trials_used"], 32);

  auto refused = config("eakin-sathaye");
  refused.vars = {"x", "y", "z"};
  refused.power = 2;
  refused.num_elements = 2;
  EXPECT_THROW(run_command(refused), std::invalid_argument);
}

TEST(ToricDemo, Examples) {
  auto c = config("toric-demo");
  c.toric = "segre:2,2";
  auto segre = run_command(c);
  EXPECT_EQ(segre.exit_status, kExitOk);
  EXPECT_EQ(segre.document["presentation"]["kernel"].size(), 1u);

  c.toric = "veronese:2,2";
  auto ver = run_command(c);
  EXPECT_EQ(ver.document["presentation"]["kernel"], nlohmann::ordered_json({"Z2^2 - Z1*Z3"}));
  EXPECT_EQ(ver.document["presentation"]["variables"][1]["image"], "X1*X2");

  c.toric = "chain:1,2";
  auto chain = run_command(c);
  EXPECT_TRUE(chain.document["presentation"]["kernel"].empty());

  c.toric = "fiber-cone:x^2;x*y;y^2";
  c.vars = {"x", "y"};
  EXPECT_EQ(run_command(c).document["presentation"]["kernel"], nlohmann::ordered_json({"Z2^2 - Z1*Z3"}));

  c.toric = "torus:3";
  EXPECT_THROW(run_command(c), std::invalid_argument);
}

TEST(Reports, ReplayIsIdenticalWithoutTiming) {
  auto c = config("green-check");
  c.trials = 5;
  c.seed = 77;
  auto a = run_command(c);
  auto b = run_command(c);
  EXPECT_EQ(without_timing(a.document).dump(), without_timing(b.document).dump());
  EXPECT_EQ(render_csv(a), render_csv(b));
  EXPECT_TRUE(a.document["trials"][0].contains("elapsed_ms"));
  EXPECT_FALSE(without_timing(a.document)["trials"][0].contains("elapsed_ms"));
}

TEST(Reports, Csv) {
  Report r;
  r.csv_header = {"a", "b"};
  r.csv_rows = {{"1", "x, y"}, {"2", "say \"hi\""}};
  EXPECT_EQ(render_csv(r), "a,b\n1,\"x, y\"\n2,\"say \"\"hi\"\"\"\n");
}

TEST(Reports, UnknownCommand) { EXPECT_THROW(run_command(config("fly")), std::invalid_argument); }
