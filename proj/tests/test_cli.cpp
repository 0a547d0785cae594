#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "toricq/cli.hpp"
#include "toricq/json_io.hpp"

using toricq::json_io::json;

namespace {

const std::string kFixtures = TORICQ_FIXTURES_DIR;

struct Outcome {
  int status;
  std::string text;
  json value() const { return json::parse(text); }
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::istringstream in(stdin_text);
  const int status = toricq::cli::run(args, out, in);
  return {status, out.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST(Cli, ToricIdealTwoQubit) {
  const auto r = run({"toric-ideal", "--map", "[[0,0],[1,0],[0,1],[1,1]]", "--degree", "2", "--text"});
  ASSERT_EQ(r.status, 0) << r.text;
  const auto j = r.value();
  ASSERT_EQ(j.at("generators").size(), 1u);
  EXPECT_EQ(j.at("text")[0], "x1*x4 - x2*x3");
}

TEST(Cli, PolarCubeIsOctahedron) {
  const auto r = run({"polar", "--polytope", fixture("cube3.json")});
  ASSERT_EQ(r.status, 0) << r.text;
  EXPECT_EQ(r.text, R"({"dim":3,"vertices":[[-1,0,0],[0,-1,0],[0,0,-1],[0,0,1],[0,1,0],[1,0,0]]})"
                    "\n");
}

TEST(Cli, CheckSeparableBell) {
  const auto r = run({"check-separable", fixture("bell.json"), "--tol", "1e-10"});
  ASSERT_EQ(r.status, 0) << r.text;
  const auto j = r.value();
  EXPECT_FALSE(j.at("separable").get<bool>());
  EXPECT_NEAR(j.at("maxViolation").get<double>(), 0.5, 1e-12);
  EXPECT_TRUE(j.at("witness").is_null());
}

TEST(Cli, CheckSeparableProductHasWitness) {
  const auto r = run({"check-separable", fixture("product3.json")});
  ASSERT_EQ(r.status, 0) << r.text;
  const auto j = r.value();
  EXPECT_TRUE(j.at("separable").get<bool>());
  EXPECT_EQ(j.at("witness").size(), 3u);
}

TEST(Cli, ConcurrenceGhz) {
  const auto r = run({"concurrence", fixture("ghz3.json")});
  ASSERT_EQ(r.status, 0) << r.text;
  EXPECT_NEAR(r.value().at("concurrence").get<double>(), std::sqrt(3.0), 1e-12);
  const auto p = run({"concurrence", fixture("product3.json")});
  EXPECT_NEAR(p.value().at("concurrence").get<double>(), 0.0, 1e-12);
}

TEST(Cli, StdinInput) {
  const auto r = run({"dual", "-"}, R"({"dim":2,"generators":[[1,0],[1,2]]})");
  ASSERT_EQ(r.status, 0) << r.text;
  EXPECT_EQ(r.text, "{\"dim\":2,\"generators\":[[0,1],[2,-1]]}\n");
}

TEST(Cli, FacesAndNormalFan) {
  const auto f = run({"faces", "--polytope", fixture("cube3.json")});
  ASSERT_EQ(f.status, 0) << f.text;
  EXPECT_EQ(f.value().at("faces").size(), 27u);
  const auto n = run({"normal-fan", fixture("cube3.json")});
  ASSERT_EQ(n.status, 0) << n.text;
  EXPECT_EQ(n.text, run({"qubit-fan", "--m", "3"}).text);
}

TEST(Cli, HilbertBasis) {
  const auto r = run({"hilbert-basis", fixture("cone2.json")});
  ASSERT_EQ(r.status, 0) << r.text;
  EXPECT_EQ(r.value().at("generators"), json::parse("[[1,0],[1,1],[1,2],[1,3]]"));
}

TEST(Cli, ProjectiveRelations) {
  const auto r = run({"projective-relations", "--exponents", "[[0],[1],[2]]", "--degree", "2", "--text"});
  ASSERT_EQ(r.status, 0) << r.text;
  EXPECT_EQ(r.value().at("text"), json::parse(R"(["x1*x3 - x2*x2"])"));
}

TEST(Cli, SegreMinorsComparePrinted) {
  const auto r = run({"segre-minors", "--shape", "[2,2,2]", "--compare-printed"});
  ASSERT_EQ(r.status, 0) << r.text;
  const auto j = r.value();
  EXPECT_EQ(j.at("count"), 12);
  EXPECT_EQ(j.at("rawCount"), 18);
  EXPECT_EQ(j.at("printedList").at("printed")[2].at("status"), "discrepancy:not_a_minor");
  EXPECT_EQ(j.at("printedList").at("printed")[11].at("status"), "discrepancy:duplicate");
}

TEST(Cli, AtlasParamVerify) {
  const auto a = run({"atlas", "--projective", "1"});
  ASSERT_EQ(a.status, 0) << a.text;
  EXPECT_EQ(a.value().at("transitions")[0].at("exponents"), json::parse("[[-1]]"));
  const auto b = run({"atlas", fixture("p1xp1_fan.json")});
  ASSERT_EQ(b.status, 0) << b.text;
  EXPECT_EQ(b.value().at("charts").size(), 4u);
  const auto p = run({"param", "--m", "2"});
  EXPECT_EQ(p.text, "{\"exponents\":[[0,0],[0,1],[1,0],[1,1]],\"m\":2}\n");
  const auto v = run({"verify-param", "--z", fixture("z3.json")});
  ASSERT_EQ(v.status, 0) << v.text;
  EXPECT_TRUE(v.value().at("satisfiesMinors").get<bool>());
}

TEST(Cli, QubitPolytope) {
  EXPECT_EQ(run({"qubit-polytope", "--m", "2", "--cross"}).text, "{\"dim\":2,\"vertices\":[[-1,0],[0,-1],[0,1],[1,0]]}\n");
}

TEST(Cli, Errors) {
  auto expect_error = [](const Outcome& r, int status) {
    EXPECT_EQ(r.status, status) << r.text;
    EXPECT_TRUE(r.value().contains("error")) << r.text;
  };
  expect_error(run({"frobnicate"}), 2);
  expect_error(run({}), 2);
  expect_error(run({"dual", "{\"dim\":2,"}), 2);
  expect_error(run({"dual", "/no/such/file.json"}), 2);
  expect_error(run({"polar", "{\"dim\":2,\"vertices\":[[0,0],[1,0],[0,1]]}"}), 2);
  expect_error(run({"hilbert-basis", "{\"dim\":1,\"generators\":[[1],[-1]]}"}), 2);
  expect_error(run({"qubit-fan", "--m", "0"}), 2);
  expect_error(run({"check-separable", fixture("bell.json"), "--tol", "-1"}), 2);
  expect_error(run({"verify-param", "--z", "[0,1]"}), 2);
  expect_error(run({"toric-ideal", "--map", "[[0,0],[1,0,0]]"}), 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.text.find("check-separable"), std::string::npos);
}

TEST(Cli, OutputRoundTrips) {
  const auto cone = run({"dual", fixture("cone3.json")});
  EXPECT_EQ(run({"dual", run({"dual", cone.text}).text}).text, cone.text);
  const auto fan = run({"normal-fan", fixture("square.json")});
  EXPECT_EQ(toricq::json_io::to_json(toricq::json_io::fan_from_json(fan.value())).dump() + "\n", fan.text);
  const auto ideal = run({"toric-ideal", "--map", fixture("two_qubit_map.json")});
  EXPECT_EQ(toricq::json_io::to_json(toricq::json_io::ideal_from_json(ideal.value())).dump() + "\n", ideal.text);
}
