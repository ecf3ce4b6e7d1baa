#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "schwarz/cli.hpp"
#include "schwarz/commands.hpp"
#include "schwarz/report.hpp"

using schwarz::Json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schwarz::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell.empty() ? NAN : std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Report, FormatNumber) {
  EXPECT_EQ(schwarz::format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(schwarz::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(schwarz::format_number(2.0), "2");
  EXPECT_EQ(schwarz::format_number(std::nan("")), "nan");
  EXPECT_EQ(schwarz::format_number(-INFINITY), "-inf");
}

TEST(Report, RoundNumbersKeepsDescriptors) {
  const Json j = {{"a", 0.1 + 0.2},
                  {"b", {1.0 / 3.0, INFINITY}},
                  {"descriptor", {{"c", 1.0 / 3.0}}},
                  {"n", 7},
                  {"s", "x"}};
  const Json r = schwarz::round_numbers(j);
  EXPECT_EQ(r["a"].get<double>(), 0.3);
  EXPECT_EQ(r["b"][0].get<double>(), 0.333333333333);
  EXPECT_TRUE(r["b"][1].is_null());
  EXPECT_EQ(r["descriptor"]["c"].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(r["n"], 7);
  EXPECT_EQ(r["s"], "x");
  EXPECT_EQ(schwarz::format_json(Json{{"k", 1}}).back(), '\n');
}

TEST(Report, OverallPassIsConjunction) {
  schwarz::VerificationReport rep;
  EXPECT_TRUE(rep.overall_pass());
  rep.results.push_back({Json::object(), true});
  EXPECT_TRUE(rep.overall_pass());
  rep.results.push_back({Json::object(), false});
  EXPECT_FALSE(rep.overall_pass());
  EXPECT_EQ(schwarz::to_json(rep)["overall_pass"], false);
}

TEST(Cli, NormExamples) {
  const CliRun mob = run({"norm", "--gallery", "mobius", "--which", "schwarzian"});
  ASSERT_EQ(mob.code, 0) << mob.err;
  const Json m = Json::parse(mob.out);
  ASSERT_EQ(m["results"].size(), 1u);
  EXPECT_EQ(m["results"][0]["value"].get<double>(), 0.0);

  const CliRun star = run({"norm", "--gallery", "fc_star", "--c", "2", "--which", "schwarzian"});
  ASSERT_EQ(star.code, 0) << star.err;
  EXPECT_NEAR(Json::parse(star.out)["results"][0]["value"].get<double>(), 2.0, 1e-4);

  const CliRun koebe = run({"norm", "--gallery", "koebe", "--which", "schwarzian", "--format", "csv"});
  ASSERT_EQ(koebe.code, 0) << koebe.err;
  EXPECT_EQ(koebe.out.rfind("which,value,", 0), 0u);
  const std::string row = koebe.out.substr(koebe.out.find('\n') + 1);
  EXPECT_EQ(row.rfind("schwarzian,", 0), 0u);
  EXPECT_NEAR(std::stod(row.substr(row.find(',') + 1)), 6.0, 1e-4);
}

TEST(Cli, NormSingularIsNumericalFailure) {
  const CliRun r = run({"norm", "--spec", R"({"kind":"polynomial","coeffs":[0.5]})", "--which", "pre"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ClassifyExamples) {
  const CliRun f2 = run({"classify", "--gallery", "f2", "--c", "2"});
  ASSERT_EQ(f2.code, 0) << f2.err;
  EXPECT_NE(Json::parse(f2.out)["results"][0]["status"], "violated");

  const CliRun id = run({"classify", "--gallery", "identity", "--c", "0.5"});
  const Json idj = Json::parse(id.out)["results"][0];
  EXPECT_NE(idj["status"], "violated");
  EXPECT_NEAR(idj["margin"].get<double>(), 0.25, 1e-12);

  const CliRun poly = run({"classify", "--spec", R"({"kind":"polynomial","coeffs":[0,1,1]})", "--c", "2"});
  const Json pj = Json::parse(poly.out)["results"][0];
  EXPECT_EQ(pj["status"], "violated");
  EXPECT_LT(std::abs(pj["witness"]["re"].get<double>() + 0.375), 0.13);
}

TEST(Cli, VerifySchwarzianBoundAtThree) {
  const CliRun r = run({"verify", "thm2.4", "--gallery", "fc_star", "--c", "3"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["results"][0]["bound"].get<double>(), 1.5);
  // The extremal's Schwarzian norm at c = 3 is 3, above the stated bound.
  EXPECT_NEAR(j["results"][0]["observed"].get<double>(), 3.0, 1e-4);
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, VerifySchurQuotientBoundOnRandomData) {
  const CliRun r = run({"verify", "lemmaA", "--random", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["overall_pass"].get<bool>());
  EXPECT_EQ(j["results"].size(), 50u);
}

TEST(Cli, GrowthExamples) {
  std::string header;
  const CliRun r = run({"growth", "--c", "2", "--grid", "10x1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out, &header);
  EXPECT_EQ(header, "r,distortion_low,distortion_high,growth_low,growth_high");
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0], (std::vector<double>{0.0, 1.0, 1.0, 0.0, 0.0}));
  EXPECT_EQ(rows[5][0], 0.5);
  EXPECT_NEAR(rows[5][3], 0.463648, 1e-6);
  EXPECT_NEAR(rows[5][4], 0.549306, 1e-6);
}

TEST(Cli, ProfileExamples) {
  const CliRun star2 = run({"profile", "--gallery", "fc_star", "--c", "2", "--theta", "0", "--samples", "40"});
  ASSERT_EQ(star2.code, 0) << star2.err;
  std::string header;
  const auto rows2 = csv_rows(star2.out, &header);
  EXPECT_EQ(header, "r,value");
  EXPECT_EQ(rows2.size(), 40u);
  for (const auto& row : rows2) EXPECT_NEAR(row[1], 2.0, 1e-9);

  for (const auto& row : csv_rows(run({"profile", "--gallery", "identity", "--samples", "20"}).out)) {
    EXPECT_EQ(row[1], 0.0);
  }

  const auto rows1 = csv_rows(run({"profile", "--gallery", "fc_star", "--c", "1", "--samples", "30"}).out);
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    EXPECT_NEAR(rows1[i][1], 1.0 + rows1[i][0] * rows1[i][0] / 2.0, 1e-9);
    if (i > 0) EXPECT_GT(rows1[i][1], rows1[i - 1][1]);
  }
  EXPECT_NEAR(rows1.back()[1], 1.5, 1e-5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"norm", "--gallery", "nope"}).code, 1);
  EXPECT_EQ(run({"norm", "--spec", "{not json"}).code, 1);
  EXPECT_EQ(run({"verify", "thm9.9"}).code, 1);
  EXPECT_EQ(run({"classify", "--gallery", "identity", "--c", "3.5"}).code, 1);
  EXPECT_EQ(run({"classify", "--gallery", "identity", "--c", "0"}).code, 1);
  EXPECT_EQ(run({"norm", "--grid", "12"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const CliRun bad = run({"norm", "--gallery", "nope"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, EchoesConfig) {
  const CliRun r = run({"classify", "--gallery", "identity", "--c", "1.5", "--seed", "3", "--samples", "200"});
  const Json cfg = Json::parse(r.out)["config_echo"];
  EXPECT_EQ(cfg["command"], "classify");
  EXPECT_EQ(cfg["function_spec"], "identity");
  EXPECT_EQ(cfg["c"].get<double>(), 1.5);
  EXPECT_EQ(cfg["seed"], 3);
  EXPECT_EQ(cfg["samples"], 200);
  EXPECT_EQ(cfg["grid"]["radial"], 256);
  EXPECT_EQ(cfg["grid"]["angular"], 256);
  EXPECT_EQ(cfg["format"], "json");
  EXPECT_EQ(Json::parse(r.out)["wall_time_ms"], 0);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "schwarz_cli_out.json";
  const CliRun r = run({"classify", "--gallery", "identity", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(Json::parse(text.str())["results"][0]["status"], "member_by_construction");
  std::remove(path.c_str());
}

TEST(Cli, ByteIdenticalAcrossWorkers) {
  const std::vector<std::string> base = {"verify", "all", "--c", "1.5", "--random", "3", "--seed", "4",
                                         "--grid", "32x32", "--samples", "200"};
  auto with_workers = [&](const char* w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run(args);
  };
  const CliRun a = with_workers("1");
  const CliRun b = with_workers("3");
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, with_workers("1").out);
}
