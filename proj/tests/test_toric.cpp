#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "tnnlab/catalog.hpp"
#include "tnnlab/toric.hpp"

using namespace tnnlab;

namespace {

RootDatum datum(const std::string& name) { return RootDatum(cartan_by_name(name)); }

CoxPoint cox(RealVector x, RealVector y) { return CoxPoint{std::move(x), std::move(y)}; }

StratumLabel random_label(int n, std::mt19937_64& rng) {
  // each node independently: in K (hence J), in J - K, or outside J
  StratumLabel s;
  for (int i = 0; i < n; ++i) {
    auto r = random_int(rng, 0, 2);
    if (r == 0) s.K = with(s.K, i);
    if (r <= 1) s.J = with(s.J, i);
  }
  return s;
}

RealVector random_torus(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  RealVector out;
  for (int i = 0; i < n; ++i) out.push_back(u(rng));
  return out;
}

}  // namespace

TEST(Toric, StrataFromZeroPatterns) {
  EXPECT_EQ(stratum_of(cox({1}, {0})), (StratumLabel{0, 0}));
  EXPECT_EQ(stratum_of(cox({0}, {1})), (StratumLabel{1, 1}));
  EXPECT_EQ(stratum_of(cox({0, 3}, {2, 5})), (StratumLabel{1, 3}));
  EXPECT_THROW(stratum_of(cox({0, 1}, {0, 1})), std::invalid_argument);
  EXPECT_THROW(stratum_of(cox({-1}, {1})), std::invalid_argument);
  EXPECT_THROW(stratum_of(cox({1, 1}, {1})), std::invalid_argument);
}

TEST(Toric, CanonicalForms) {
  auto a1 = cartan_by_name("A1");
  auto c = canonicalize(a1, cox({4}, {9}));
  EXPECT_EQ(c.label, (StratumLabel{0, 1}));
  ASSERT_EQ(c.free.size(), 1u);
  EXPECT_NEAR(static_cast<double>(c.free[0]), 4.0 / 3.0, 1e-15);

  auto a2 = cartan_by_name("A2");
  auto d = canonicalize(a2, cox({2, 3}, {1, 1}));
  EXPECT_EQ(d.label, (StratumLabel{0, 3}));
  EXPECT_NEAR(static_cast<double>(d.free[0]), 2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(d.free[1]), 3.0, 1e-15);

  auto e = canonicalize(a2, cox({0, 3}, {2, 5}));
  EXPECT_EQ(e.label, (StratumLabel{1, 3}));
  ASSERT_EQ(e.free.size(), 1u);
  // y -> 1 needs C u = -log(2,5); x_2 picks up exp(u_2) with u_2 = -(log 2 + 2 log 5) / 3
  EXPECT_NEAR(static_cast<double>(e.free[0]), 3.0 / std::cbrt(50.0), 1e-14);

  EXPECT_TRUE(equivalent(a1, cox({4}, {9}), cox({4.0L / 3}, {1})));
  EXPECT_FALSE(equivalent(a1, cox({1}, {0}), cox({0}, {1})));
  EXPECT_FALSE(equivalent(a1, cox({4}, {9}), cox({4.1L / 3}, {1})));
}

TEST(Toric, CanonicalFormIsTorusInvariant) {
  std::mt19937_64 rng(21);
  for (const auto& name : catalog_types()) {
    auto c = cartan_by_name(name);
    const int n = c.rank();
    std::set<StratumLabel> census;
    for (NodeSet J : all_subsets(n))
      for (NodeSet K : all_subsets(n)) {
        if (!is_subset(K, J)) continue;
        auto p = random_cox_point(n, {K, J}, rng);
        auto base = canonicalize(c, p);
        EXPECT_EQ(base.label, (StratumLabel{K, J}));
        // the representative is canonical and fixed by canonicalize
        auto rep = to_cox_point(base, n);
        EXPECT_TRUE(equivalent(c, rep, p)) << name;
        auto again = canonicalize(c, rep);
        for (std::size_t k = 0; k < base.free.size(); ++k)
          EXPECT_NEAR(static_cast<double>(again.free[k]), static_cast<double>(base.free[k]), 1e-12);
        for (int t = 0; t < 50; ++t) EXPECT_TRUE(equivalent(c, torus_act(c, p, random_torus(n, rng)), p)) << name;
        census.insert(base.label);
      }
    std::size_t three = 1;
    for (int i = 0; i < n; ++i) three *= 3;
    EXPECT_EQ(census.size(), three) << name;
  }
}

TEST(MomentMap, RankOne) {
  auto d = datum("A1");
  auto poly = build_polytope(d, {Rational(1)});
  MomentMap mu(d, poly);
  EXPECT_EQ(mu.dilation(), 2);
  EXPECT_EQ(mu.lattice_point_count(), 2u);
  for (long double a : {0.1L, 1.0L, 3.0L}) {
    auto v = mu(cox({a}, {1}));
    EXPECT_NEAR(static_cast<double>(v[0]), static_cast<double>(a * a / (a * a + 1)), 1e-15);
  }
  EXPECT_EQ(mu.exact({Rational(1)}, {Rational(0)}), RatVector{1});
  EXPECT_EQ(mu.exact({Rational(0)}, {Rational(1)}), RatVector{0});
  EXPECT_EQ(mu.exact({Rational(3)}, {Rational(1)}), RatVector{Rational(9, 10)});
}

TEST(MomentMap, VertexStrataHitVerticesExactly) {
  for (const auto& name : catalog_types()) {
    auto d = datum(name);
    const int n = d.rank();
    auto poly = build_polytope(d, RatVector(n, Rational(1)));
    MomentMap mu(d, poly);
    for (NodeSet J : all_subsets(n)) {
      RatVector x(n, Rational(1)), y(n, Rational(0));
      for (int i : members(J)) {
        x[i] = 0;
        y[i] = 1;
      }
      EXPECT_EQ(mu.exact(x, y), poly.vertex(J)) << name << " J=" << format_nodes(J);
    }
  }
}

TEST(MomentMap, FloatingMatchesExact) {
  std::mt19937_64 rng(31);
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    auto d = datum(name);
    const int n = d.rank();
    MomentMap mu(d, build_polytope(d, RatVector(n, Rational(1))));
    for (int k = 0; k < 10; ++k) {
      auto label = random_label(n, rng);
      RatVector x(n), y(n);
      for (int i = 0; i < n; ++i) {
        x[i] = contains(label.K, i) ? Rational(0) : random_positive_rational(rng, 5, 3);
        y[i] = contains(label.J, i) ? random_positive_rational(rng, 5, 3) : Rational(0);
      }
      auto e = mu.exact(x, y);
      auto f = mu(CoxPoint::from_rational(x, y));
      for (int i = 0; i < n; ++i) EXPECT_NEAR(static_cast<double>(f[i]), to_double(e[i]), 1e-13) << name;
    }
  }
}

TEST(MomentMap, CellsArePreserved) {
  std::mt19937_64 rng(41);
  for (const auto& name : catalog_types()) {
    auto d = datum(name);
    const int n = d.rank();
    MomentMap mu(d, build_polytope(d, RatVector(n, Rational(1))));
    for (int k = 0; k < 100; ++k) {
      auto label = random_label(n, rng);
      auto p = random_cox_point(n, label, rng);
      auto nu = mu(p);
      auto check = mu.check_cell(label, nu);
      EXPECT_TRUE(check.ok) << name << " K=" << format_nodes(label.K) << " J=" << format_nodes(label.J) << check.detail;
      // the map factors through the torus quotient
      auto moved = mu(torus_act(d.cartan(), p, random_torus(n, rng)));
      for (int i = 0; i < n; ++i) EXPECT_NEAR(static_cast<double>(moved[i]), static_cast<double>(nu[i]), 1e-12);
    }
  }
}

TEST(MomentMap, InjectiveOnStrata) {
  std::mt19937_64 rng(51);
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    auto d = datum(name);
    const int n = d.rank();
    MomentMap mu(d, build_polytope(d, RatVector(n, Rational(1))));
    for (int trial = 0; trial < 3; ++trial) {
      auto label = random_label(n, rng);
      std::vector<RealVector> images;
      for (int k = 0; k < 20; ++k) images.push_back(mu(random_cox_point(n, label, rng)));
      for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b) {
          long double dist = 0;
          for (int i = 0; i < n; ++i) dist = std::max(dist, std::fabs(images[a][i] - images[b][i]));
          if (popcount(label.J & ~label.K) > 0) EXPECT_GT(static_cast<double>(dist), 1e-9) << name;
        }
    }
  }
}

TEST(MomentMap, BoxCap) {
  auto d = datum("A4");
  auto poly = build_polytope(d, RatVector(4, Rational(50)));
  EXPECT_THROW(MomentMap(d, poly), std::length_error);
  EXPECT_THROW(MomentMap(datum("A2"), build_polytope(d, RatVector(4, Rational(1)))), std::invalid_argument);
}
