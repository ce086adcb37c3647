#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "tnnlab/catalog.hpp"
#include "tnnlab/peterson.hpp"

using namespace tnnlab;

namespace {

RootDatum datum(const std::string& name) { return RootDatum(cartan_by_name(name)); }

GroupElement x_part(const PetersonPoint& p) {
  return is_zero(p.lie) ? GroupElement() : gen(GroupToken::exp(p.lie));
}

}  // namespace

TEST(Peterson, Membership) {
  GroupContext a1(datum("A1"));
  EXPECT_TRUE(peterson_membership(a1, parse_group_word("x1(3) y1(-2) s1", 1)));

  GroupContext a2(datum("A2"));
  auto p = make_peterson_point(a2, a2.datum().all_nodes(), {Rational(2), Rational(-3, 4)});
  EXPECT_TRUE(peterson_membership(a2, p.element));
  auto w0 = wdot(a2.datum().longest_element(a2.datum().all_nodes()));
  EXPECT_FALSE(peterson_membership(a2, gen(GroupToken::x(0, Rational(1))) * w0));
}

TEST(Peterson, SampledPointsOnEveryStratumFamily) {
  std::mt19937_64 rng(2);
  for (const auto& name : catalog_types()) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    const auto& cb = ctx.chevalley();
    for (NodeSet J : all_subsets(d.rank())) {
      auto p = sample_peterson_point(ctx, J, rng);
      EXPECT_EQ(static_cast<int>(p.coords.size()), popcount(J)) << name;
      EXPECT_TRUE(is_zero(cb.bracket(p.lie, cb.regular_nilpotent(J)))) << name;
      EXPECT_TRUE(peterson_membership(ctx, p.element)) << name << " J=" << format_nodes(J);
      auto v = psi(ctx, p);
      for (int i = 0; i < d.rank(); ++i) {
        EXPECT_EQ(v.q[i], contains(J, i) ? 1 : 0) << name << " J=" << format_nodes(J);
        if (!contains(J, i)) EXPECT_EQ(v.delta[i], 1) << name;
      }
      EXPECT_NO_THROW(classify_stratum(ctx, p));
    }
  }
}

TEST(Peterson, ClassifyAndPsiExamples) {
  GroupContext a1(datum("A1"));
  Rational a(9, 4);
  auto p = make_peterson_point(a1, 1, {a});
  EXPECT_EQ(classify_stratum(a1, p).K, 0u);
  auto v = psi(a1, p);
  EXPECT_EQ(v.delta, RatVector{a});
  EXPECT_EQ(v.q, RatVector{1});

  for (const auto& name : {"A3", "B3", "G2"}) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    auto lowest = make_peterson_point(ctx, d.all_nodes(), RatVector(d.rank()));
    EXPECT_EQ(classify_stratum(ctx, lowest).K, d.all_nodes()) << name;
    auto base = make_peterson_point(ctx, 0, {});
    EXPECT_EQ(classify_stratum(ctx, base).K, 0u);
    auto bv = psi(ctx, base);
    EXPECT_EQ(bv.delta, RatVector(d.rank(), Rational(1)));
    EXPECT_EQ(bv.q, RatVector(d.rank(), Rational(0)));
  }

  // x = exp(e + e12) = [[1,1,3/2],[0,1,1],[0,0,1]] in the vector representation; first column of
  // w0-dot is e3 and the second is -e2, so Delta = (3/2, 1 - 3/2)
  GroupContext a2(datum("A2"));
  auto q = make_peterson_point(a2, 3, {Rational(1), Rational(1)});
  auto qv = psi(a2, q);
  EXPECT_EQ(qv.delta, (RatVector{Rational(3, 2), Rational(-1, 2)}));
  EXPECT_EQ(qv.q, (RatVector{1, 1}));
  EXPECT_THROW(classify_stratum(a2, q, true), std::logic_error);
  EXPECT_THROW(make_peterson_point(a2, 3, {Rational(1)}), std::invalid_argument);
}

TEST(Peterson, TypeAPaths) {
  auto a3 = cartan_by_name("A3");
  EXPECT_EQ(type_a_path(a3, 7).size(), 3u);
  EXPECT_TRUE(type_a_path(cartan_by_name("B2"), 3).empty());
  auto d4 = cartan_by_name("D4");
  EXPECT_TRUE(type_a_path(d4, 15).empty());
  auto path = type_a_path(d4, node_set({1, 2, 3}));
  ASSERT_EQ(path.size(), 3u);
  EXPECT_EQ(path[1], 1);
  EXPECT_EQ(type_a_path(d4, node_set({0, 1, 3})).size(), 3u);
}

TEST(Peterson, SplittingConcatenates) {
  std::mt19937_64 rng(4);
  GroupContext ab(datum("A1xA1"));
  Rational a(5, 2), b(7, 3);
  auto p = make_peterson_point(ab, 3, {a, b});
  auto pieces = split_components(ab, p, {1, 2});
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(psi(*pieces[0].context, pieces[0].point).delta, RatVector{a});
  EXPECT_EQ(psi(*pieces[1].context, pieces[1].point).delta, RatVector{b});

  GroupContext ctx(datum("A2xA1"));
  for (NodeSet J : all_subsets(3)) {
    auto pt = sample_peterson_point(ctx, J, rng);
    auto whole = psi(ctx, pt);
    for (const auto& partition : std::vector<std::vector<NodeSet>>{{3, 4}, {7}}) {
      auto split = split_components(ctx, pt, partition);
      RatVector delta(3), q(3);
      for (const auto& piece : split) {
        auto v = psi(*piece.context, piece.point);
        auto nodes = members(piece.nodes);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
          delta[nodes[k]] = v.delta[k];
          q[nodes[k]] = v.q[k];
        }
      }
      EXPECT_EQ(delta, whole.delta);
      EXPECT_EQ(q, whole.q);
    }
  }
  auto pt = sample_peterson_point(ctx, 7, rng);
  EXPECT_THROW(split_components(ctx, pt, {1, 6}), std::invalid_argument);
  EXPECT_THROW(split_components(ctx, pt, {3}), std::invalid_argument);
  EXPECT_THROW(split_components(ctx, pt, {3, 6}), std::invalid_argument);
}

TEST(Peterson, TypeANonnegativeSamplesAreCertified) {
  std::mt19937_64 rng(13);
  for (const auto& name : {"A2", "A3"}) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    std::set<std::pair<NodeSet, NodeSet>> seen;
    for (NodeSet J : all_subsets(d.rank())) {
      for (int k = 0; k < 80; ++k) {
        auto s = sample_tnn_point(ctx, J, rng);
        EXPECT_TRUE(s.certified);
        EXPECT_TRUE(tnn_membership_typeA(ctx.matrix(x_part(s.point), "fund:1"))) << name;
        auto label = classify_stratum(ctx, s.point, true);
        EXPECT_TRUE(is_subset(label.K, J));
        seen.insert({label.K, J});
      }
    }
    // every K subset of J is reached
    std::size_t strata = 1;
    for (int i = 0; i < d.rank(); ++i) strata *= 3;
    EXPECT_EQ(seen.size(), strata) << name;
  }
}

TEST(Peterson, OtherTypesSampleWithNonnegativeDeltas) {
  std::mt19937_64 rng(17);
  for (const auto& name : {"B2", "G2", "C3", "D4"}) {
    GroupContext ctx(datum(name));
    for (NodeSet J : all_subsets(ctx.datum().rank())) {
      auto s = sample_tnn_point(ctx, J, rng);
      EXPECT_NO_THROW(classify_stratum(ctx, s.point, true)) << name << " J=" << format_nodes(J);
    }
  }
}

TEST(Peterson, InversionLowRank) {
  GroupContext a1(datum("A1"));
  auto r = invert_delta(a1, {5.0}, 1);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.coords[0], 5.0, 1e-9);
  auto z = invert_delta(a1, {0.0}, 1);
  ASSERT_TRUE(z.converged);
  EXPECT_EQ(z.coords[0], 0.0);

  GroupContext a2(datum("A2"));
  auto base = invert_delta(a2, {1.0, 1.0}, 3);
  ASSERT_TRUE(base.converged) << base.residual;
  EXPECT_LT(base.residual, 1e-9);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int k = 0; k < 10; ++k) {
    InversionOptions opt;
    opt.start = std::vector<double>{std::fabs(uni(rng)), uni(rng)};
    auto again = invert_delta(a2, {1.0, 1.0}, 3, opt);
    ASSERT_TRUE(again.converged);
    EXPECT_NEAR(again.coords[0], base.coords[0], 1e-7);
    EXPECT_NEAR(again.coords[1], base.coords[1], 1e-7);
  }
  // Delta = (b + a^2/2, a^2/2 - b) gives a = sqrt(2), b = 0 at (1,1)
  EXPECT_NEAR(base.coords[0], std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(base.coords[1], 0.0, 1e-8);
  EXPECT_THROW(invert_delta(a2, {1.0, 2.0}, 1), std::invalid_argument);
  EXPECT_THROW(invert_delta(a2, {-1.0, 1.0}, 3), std::invalid_argument);
}
