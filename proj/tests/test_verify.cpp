#include <gtest/gtest.h>

#include "json.hpp"
#include "tnnlab/catalog.hpp"
#include "tnnlab/export.hpp"
#include "tnnlab/verify.hpp"

using namespace tnnlab;

namespace {

SuiteOptions options(const std::string& type, std::uint64_t seed, std::optional<int> samples = std::nullopt) {
  SuiteOptions o;
  o.type = type;
  o.seed = seed;
  o.samples = samples;
  return o;
}

}  // namespace

TEST(Verify, SuiteNamesAndAnchors) {
  for (const auto& name : {"lemma53", "prop44", "prop35", "cube", "normalfan", "psi-strata", "splitting", "prop76",
                           "theorem59", "moment-cells", "all"}) {
    EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), name), suite_names().end()) << name;
    if (std::string(name) != "all") EXPECT_FALSE(suite_anchor(name).empty());
  }
  EXPECT_THROW(run_suite("nope", options("A2", 0)), std::invalid_argument);
  EXPECT_THROW(run_suite("cube", options("Q9", 0)), std::invalid_argument);
  EXPECT_THROW(run_suite("theorem59", options("A3", 0)), std::invalid_argument);  // rank-3 component
  auto bad = options("A2", 0);
  bad.lambda = RatVector{1};
  EXPECT_THROW(run_suite("cube", bad), std::invalid_argument);
}

TEST(Verify, ExamplesFromTheCliContract) {
  auto qp = run_suite("lemma53", options("B2", 7, 50));
  EXPECT_TRUE(qp.passed());
  EXPECT_EQ(qp.cases, 200);
  EXPECT_EQ(qp.seed, 7u);
  ASSERT_EQ(qp.anchors.size(), 1u);

  auto cube = run_suite("cube", options("G2", 0));
  EXPECT_TRUE(cube.passed());
  EXPECT_EQ(cube.notes.at("faces"), "9");

  auto all = run_suite("all", options("A1", 1));
  EXPECT_TRUE(all.passed()) << all.to_text();
  EXPECT_GT(all.cases, 0);
  EXPECT_EQ(all.notes.count("theorem59.cases"), 1u);
}

TEST(Verify, ReportsAreDeterministicJson) {
  auto a = run_suite("psi-strata", options("A2", 3, 5)).to_json();
  auto b = run_suite("psi-strata", options("A2", 3, 5)).to_json();
  EXPECT_EQ(a, b);
  auto c = run_suite("psi-strata", options("A2", 4, 5)).to_json();
  EXPECT_NE(a, c);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["suite"], "psi-strata");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["failures"].empty());
  // keys come out sorted
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_LT(a.find("\"anchors\""), a.find("\"cases\""));
}

TEST(Verify, ReducibleAndPolytopeSuites) {
  EXPECT_TRUE(run_suite("splitting", options("A2xA1", 5, 20)).passed());
  EXPECT_TRUE(run_suite("normalfan", options("B3", 5, 2)).passed());
  auto mc = run_suite("moment-cells", options("B2", 5, 30));
  EXPECT_TRUE(mc.passed()) << mc.to_text();
  EXPECT_EQ(mc.notes.at("dilation"), "2");
  auto weird = options("A2", 5, 20);
  weird.lambda = RatVector{Rational(1, 3), Rational(2)};
  EXPECT_TRUE(run_suite("moment-cells", weird).passed());
}

TEST(Export, FaceLatticeAndMatrices) {
  RootDatum a1(cartan_by_name("A1"));
  auto lattice = nlohmann::json::parse(face_lattice_json(a1, build_polytope(a1, {Rational(1)})));
  EXPECT_EQ(lattice["faces"].size(), 3u);
  EXPECT_EQ(lattice["faces"][0]["dim"], 0);

  RootDatum a2(cartan_by_name("A2"));
  auto p = build_polytope(a2, {Rational(1), Rational(1)});
  EXPECT_EQ(face_lattice_json(a2, p), face_lattice_json(a2, p));
  auto lat2 = nlohmann::json::parse(face_lattice_json(a2, p));
  EXPECT_EQ(lat2["faces"].size(), 9u);

  auto rd = nlohmann::json::parse(rootdata_json(RootDatum(cartan_by_name("B2"))));
  EXPECT_EQ(rd["cartan"], nlohmann::json::parse("[[2,-2],[-1,2]]"));
  EXPECT_EQ(rd["fundamental_exponents"], nlohmann::json::parse("[1,2]"));

  EXPECT_EQ(matrix_json(RatMatrix::from_int_rows({{1, 0}, {0, 2}})), "[[\"1\",\"0\"],[\"0\",\"2\"]]\n");
  EXPECT_THROW(write_text_file("/nonexistent-dir/x.txt", "x"), std::runtime_error);
}
