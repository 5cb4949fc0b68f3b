#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace diskmetrics;
using namespace diskmetrics::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(ParsePoint, AcceptedForms) {
  EXPECT_EQ(parse_point("0.3+0.6i"), Point(0.3, 0.6));
  EXPECT_EQ(parse_point("0.3-0.6i"), Point(0.3, -0.6));
  EXPECT_EQ(parse_point(" -0.25 + 0.5i "), Point(-0.25, 0.5));
  EXPECT_EQ(parse_point("0.7"), Point(0.7, 0));
  EXPECT_EQ(parse_point("0.7i"), Point(0, 0.7));
  EXPECT_EQ(parse_point("-0.7i"), Point(0, -0.7));
  EXPECT_EQ(parse_point("1e-3+2e-1i"), Point(1e-3, 0.2));
  EXPECT_EQ(parse_point("0.1−0.2i"), Point(0.1, -0.2));
  EXPECT_EQ(parse_point("0.3+0.6j"), Point(0.3, 0.6));
  EXPECT_EQ(parse_point("i"), Point(0, 1));
  EXPECT_EQ(parse_point("-i"), Point(0, -1));
}

TEST(ParsePoint, Rejected) {
  for (const char* bad : {"", "abc", "0.3+", "0.3+0.6", "0.3+0.6k", "1+2i+3i", "nan", "inf+1i"}) {
    try {
      parse_point(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorKind::ParseError), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::OutsideDisk), 3);
  EXPECT_EQ(exit_code_for(ErrorKind::DomainError), 3);
}

TEST(CmdEval, JsonDocument) {
  EvalRequest req;
  req.a = 0.3;
  req.b = Point(0, 0.6);
  req.format = "json";
  std::ostringstream out, err;
  ASSERT_EQ(cmd_eval(req, out, err), 0) << err.str();
  const auto doc = nlohmann::ordered_json::parse(out.str());
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"a", "b", "routes", "oracle", "max_discrepancy"}));
  for (const char* r : {"orthocircle", "via_rho", "hmid", "quadratic"}) {
    ASSERT_TRUE(doc["routes"].contains(r)) << r;
    EXPECT_NEAR(doc["routes"][r]["v"].get<double>(), 0.8991915871627825, 1e-12);
  }
  EXPECT_FALSE(doc["routes"].contains("radial"));
  EXPECT_NEAR(doc["oracle"]["v"].get<double>(), 0.8991915871627825, 1e-12);
  EXPECT_LT(doc["max_discrepancy"].get<double>(), 1e-12);
}

TEST(CmdEval, SingleRouteAndErrors) {
  EvalRequest req;
  req.a = 0.3;
  req.b = 0.6;
  req.routes = {"radial"};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval(req, out, err), 0);
  EXPECT_NE(out.str().find("radial"), std::string::npos);
  EXPECT_NE(out.str().find("0.3745498871260"), std::string::npos);

  req.routes = {"equal_modulus"};
  EXPECT_EQ(cmd_eval(req, out, err), 3);
  req.routes = {"nonsense"};
  EXPECT_EQ(cmd_eval(req, out, err), 2);
  req.routes = {"all"};
  req.b = 1.5;
  EXPECT_EQ(cmd_eval(req, out, err), 3);
}

TEST(CmdEval, CoincidentPair) {
  EvalRequest req;
  req.a = req.b = Point(0.1, 0.2);
  req.format = "json";
  std::ostringstream out, err;
  ASSERT_EQ(cmd_eval(req, out, err), 0);
  const auto doc = nlohmann::ordered_json::parse(out.str());
  EXPECT_EQ(doc["routes"]["coincident"]["v"].get<double>(), 0.0);
  EXPECT_TRUE(doc["oracle"].is_null());
}

TEST(Grid, PointsAndDeterminism) {
  const auto pts = grid_points(8);
  for (Point z : pts) EXPECT_LT(std::abs(z), 1.0);
  EXPECT_EQ(pts.front(), Point(-0.875, -0.375));

  const std::string one = render_grid_csv(Point(0.2, 0.1), 24);
  EXPECT_EQ(one.rfind("re,im,v\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(one.begin(), one.end(), '\n')), grid_points(24).size() + 1);
  ::setenv("DISKMETRICS_THREADS", "1", 1);
  const std::string serial = render_grid_csv(Point(0.2, 0.1), 24);
  ::setenv("DISKMETRICS_THREADS", "7", 1);
  const std::string seven = render_grid_csv(Point(0.2, 0.1), 24);
  ::unsetenv("DISKMETRICS_THREADS");
  EXPECT_EQ(one, serial);
  EXPECT_EQ(one, seven);
}

TEST(Grid, CommandWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "diskmetrics_grid_test.csv";
  GridRequest req{0, 10, path.string()};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_grid(req, out, err), 0) << err.str();
  EXPECT_EQ(slurp(path), render_grid_csv(0, 10));
  std::filesystem::remove(path);

  req.n = 1;
  EXPECT_EQ(cmd_grid(req, out, err), 2);
  req.n = 10;
  req.output_path = "/nonexistent-dir/x.csv";
  EXPECT_EQ(cmd_grid(req, out, err), 3);
}

TEST(Schwarz, NoViolationsAndValidation) {
  for (const auto& [K, map] : std::vector<std::pair<double, std::string>>{{1.0, "mobius"}, {2.0, "stretch"}}) {
    SchwarzRequest req{K, map, 200, 42};
    const SchwarzReport rep = run_schwarz(req);
    EXPECT_EQ(rep.samples, 200);
    EXPECT_EQ(rep.violations, 0);
    EXPECT_LE(rep.max_ratio, 1.0 + 1e-12);
    EXPECT_FALSE(rep.witnesses.empty());
    std::ostringstream out, err;
    EXPECT_EQ(cmd_schwarz(req, out, err), 0);
  }
  std::ostringstream out, err;
  EXPECT_EQ(cmd_schwarz({0.5, "stretch", 10, 1}, out, err), 2);
  EXPECT_EQ(cmd_schwarz({2.0, "shear", 10, 1}, out, err), 2);
}

TEST(Schwarz, ReproducibleForSeed) {
  const SchwarzReport a = run_schwarz({1.5, "stretch", 100, 9});
  const SchwarzReport b = run_schwarz({1.5, "stretch", 100, 9});
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  EXPECT_EQ(a.min_slack, b.min_slack);
}

TEST(SelfTest, PassesAndFailsOnImpossibleTolerance) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_selftest({200, 42, 1e-9}, out, err), 0) << out.str();
  EXPECT_NE(out.str().find("selftest passed"), std::string::npos);
  std::ostringstream out2;
  EXPECT_EQ(cmd_selftest({200, 42, 1e-18}, out2, err), 4);
  EXPECT_NE(out2.str().find("FAIL route_agreement"), std::string::npos);
  EXPECT_EQ(cmd_selftest({0, 42, 1e-9}, out2, err), 2);
}
