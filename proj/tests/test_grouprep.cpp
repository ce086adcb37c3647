#include <gtest/gtest.h>

#include <random>

#include "tnnlab/catalog.hpp"
#include "tnnlab/grouprep.hpp"

using namespace tnnlab;

namespace {

RootDatum datum(const std::string& name) { return RootDatum(cartan_by_name(name)); }

// Independent model of SL_{n+1}: elementary matrices in the standard representation.
RatMatrix elementary(int size, int r, int c, const Rational& t) {
  RatMatrix m = RatMatrix::identity(size);
  m(r, c) += t;
  return m;
}

RatMatrix standard_token(int size, const GroupToken& tok) {
  const int i = tok.index;
  switch (tok.kind) {
    case GroupToken::Kind::X:
      return elementary(size, i, i + 1, tok.t);
    case GroupToken::Kind::Y:
      return elementary(size, i + 1, i, tok.t);
    case GroupToken::Kind::SDot:
    case GroupToken::Kind::SDotInv: {
      Rational sign = tok.kind == GroupToken::Kind::SDot ? 1 : -1;
      RatMatrix m = RatMatrix::identity(size);
      m(i, i) = 0;
      m(i + 1, i + 1) = 0;
      m(i, i + 1) = -sign;
      m(i + 1, i) = sign;
      return m;
    }
    default:
      throw std::logic_error("not modelled");
  }
}

RatMatrix standard_matrix(int size, const GroupElement& g) {
  RatMatrix m = RatMatrix::identity(size);
  for (const auto& tok : g.word()) m = m * standard_token(size, tok);
  return m;
}

Rational leading_minor(const RatMatrix& m, int k) {
  RatMatrix sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = m(r, c);
  return determinant(sub);
}

GroupElement random_word(int rank, int length, std::mt19937_64& rng) {
  std::vector<GroupToken> word;
  for (int k = 0; k < length; ++k) {
    int i = static_cast<int>(random_int(rng, 0, rank - 1));
    switch (random_int(rng, 0, 3)) {
      case 0:
        word.push_back(GroupToken::x(i, random_rational(rng, -5, 5, 3)));
        break;
      case 1:
        word.push_back(GroupToken::y(i, random_rational(rng, -5, 5, 3)));
        break;
      case 2:
        word.push_back(GroupToken::sdot(i));
        break;
      default:
        word.push_back(GroupToken::sdot_inv(i));
    }
  }
  return GroupElement(std::move(word));
}

}  // namespace

TEST(GroupWord, ParseAndFormatRoundTrip) {
  auto g = parse_group_word("x1(3) s2 y1(1/2) * s2^-1", 2);
  ASSERT_EQ(g.word().size(), 4u);
  EXPECT_EQ(g.word()[0], GroupToken::x(0, Rational(3)));
  EXPECT_EQ(g.word()[1], GroupToken::sdot(1));
  EXPECT_EQ(g.word()[2], GroupToken::y(0, Rational(1, 2)));
  EXPECT_EQ(g.word()[3], GroupToken::sdot_inv(1));
  EXPECT_EQ(format_group_word(g), "x1(3) s2 y1(1/2) s2^-1");
  EXPECT_TRUE(parse_group_word("e", 2).is_identity_word());
  EXPECT_THROW(parse_group_word("x3(1)", 2), std::invalid_argument);
  EXPECT_THROW(parse_group_word("z1(1)", 2), std::invalid_argument);
  EXPECT_THROW(parse_group_word("x1(1", 2), std::invalid_argument);
}

TEST(GroupContext, ModuleIdsAndCache) {
  GroupContext ctx(datum("B2"));
  EXPECT_EQ(ctx.module("fund:1")->dimension(), 5);
  EXPECT_EQ(ctx.module("fund:2")->dimension(), 4);
  EXPECT_EQ(ctx.module("adjoint")->dimension(), 10);
  EXPECT_EQ(ctx.module("hw:0,2")->dimension(), 10);
  EXPECT_EQ(ctx.module("fund:1").get(), ctx.fundamental(0).get());
  EXPECT_THROW(ctx.module("fund:3"), std::invalid_argument);
  EXPECT_THROW(ctx.module("spin"), std::invalid_argument);
  EXPECT_THROW(ctx.module("hw:1/2,0"), std::invalid_argument);
  GroupContext small(datum("A2"), 5);
  EXPECT_THROW(small.module("adjoint"), DimensionCapExceeded);
}

TEST(GroupRep, Sl2Matrices) {
  GroupContext ctx(datum("A1"));
  Rational a(7, 3), b(-2, 5);
  auto xy = ctx.matrix(gen(GroupToken::x(0, a)) * gen(GroupToken::y(0, b)), "fund:1");
  EXPECT_EQ(xy, RatMatrix::from_rows({{1 + a * b, a}, {b, 1}}));
  EXPECT_EQ(ctx.matrix(gen(GroupToken::sdot(0)), "fund:1"), RatMatrix::from_int_rows({{0, -1}, {1, 0}}));
  auto g = gen(GroupToken::x(0, a)) * gen(GroupToken::sdot(0));
  EXPECT_EQ(delta_varpi(ctx, 0, g), a);
  EXPECT_EQ(q_value(ctx, 0, g), 1);
  EXPECT_EQ(delta_varpi(ctx, 0, GroupElement()), 1);
}

TEST(GroupRep, TypeAAgreesWithElementaryMatrices) {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4}) {
    GroupContext ctx(datum("A" + std::to_string(n)));
    for (int trial = 0; trial < 15; ++trial) {
      auto g = random_word(n, 8, rng);
      RatMatrix oracle = standard_matrix(n + 1, g);
      EXPECT_EQ(ctx.matrix(g, "fund:1"), oracle);
      // Delta_{varpi_k} of SL_{n+1} is the leading k x k minor
      for (int k = 1; k <= n; ++k) EXPECT_EQ(delta_varpi(ctx, k - 1, g), leading_minor(oracle, k));
    }
  }
}

TEST(GroupRep, InversesAndBraidRelations) {
  for (const auto& name : catalog_types()) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    std::vector<std::string> ids{"adjoint"};
    for (int i = 1; i <= d.rank(); ++i) ids.push_back("fund:" + std::to_string(i));
    std::mt19937_64 rng(5);
    auto g = random_word(d.rank(), 6, rng);
    for (const auto& id : ids) {
      auto m = ctx.module(id);
      RatMatrix id_mat = RatMatrix::identity(m->dimension());
      EXPECT_EQ(ctx.matrix(g * g.inverse(), *m), id_mat) << name << " " << id;
      for (int i = 0; i < d.rank(); ++i) {
        // s-dot_i^2 acts by (-1)^{<mu, alpha_i^vee>} on the mu weight space
        RatMatrix sq = ctx.matrix(gen(GroupToken::sdot(i)) * gen(GroupToken::sdot(i)), *m);
        for (int b = 0; b < m->dimension(); ++b) EXPECT_EQ(sq(b, b), m->weights()[b][i] % 2 == 0 ? 1 : -1);
        for (int j = i + 1; j < d.rank(); ++j) {
          int cij = d.cartan()(i, j) * d.cartan()(j, i);
          int len = cij == 0 ? 2 : cij == 1 ? 3 : cij == 2 ? 4 : 6;
          std::vector<GroupToken> lhs, rhs;
          for (int k = 0; k < len; ++k) {
            lhs.push_back(GroupToken::sdot(k % 2 == 0 ? i : j));
            rhs.push_back(GroupToken::sdot(k % 2 == 0 ? j : i));
          }
          EXPECT_EQ(ctx.matrix(GroupElement(lhs), *m), ctx.matrix(GroupElement(rhs), *m)) << name << " " << id;
        }
      }
    }
  }
}

TEST(GroupRep, ExpTokens) {
  GroupContext ctx(datum("A2"));
  const auto& cb = ctx.chevalley();
  const auto& d = ctx.datum();
  Rational a(3, 2), b(-5, 7), t(4, 9);
  RatVector u(cb.dimension());
  u[cb.e_slot(0)] = t;
  EXPECT_EQ(ctx.matrix(gen(GroupToken::exp(u)), "adjoint"), ctx.matrix(gen(GroupToken::x(0, t)), "adjoint"));

  // exp(a e1 + a e2 + b e12), e12 = [e1, e2] = E13 in the standard representation
  RatVector v(cb.dimension());
  v[cb.e_slot(*d.root_index({1, 0}))] = a;
  v[cb.e_slot(*d.root_index({0, 1}))] = a;
  v[cb.e_slot(*d.root_index({1, 1}))] = b;
  Rational c = b + a * a / 2;
  EXPECT_EQ(ctx.matrix(gen(GroupToken::exp(v)), "fund:1"), RatMatrix::from_rows({{1, a, c}, {0, 1, a}, {0, 0, 1}}));
  auto g = gen(GroupToken::exp(v));
  EXPECT_EQ(ctx.matrix(g * g.inverse(), "adjoint"), RatMatrix::identity(8));

  RatVector bad(cb.dimension());
  bad[cb.h_slot(0)] = 1;
  EXPECT_THROW(ctx.matrix(gen(GroupToken::exp(bad)), "fund:1"), std::invalid_argument);
}

TEST(GroupRep, LongestElementConjugatesEToMinusF) {
  // Ad_{w0-dot^{-1}} e_i = -f_{i*}
  for (const auto& name : catalog_types()) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    const auto& cb = ctx.chevalley();
    auto w0 = d.longest_element(d.all_nodes());
    auto star = d.involution_star();
    for (int i = 0; i < d.rank(); ++i) {
      RatVector expected(cb.dimension());
      IntVector simple(d.rank(), 0);
      simple[star[i]] = 1;
      expected[cb.f_slot(*d.root_index(simple))] = -1;
      EXPECT_EQ(ad_inverse(ctx, wdot(w0), cb.basis_vector(cb.e_slot(i))), expected) << name << " node " << i;
    }
  }
}

TEST(GroupRep, ShapovalovFormIsWeylInvariant) {
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    for (int i = 0; i < d.rank(); ++i) {
      IntVector lambda(d.rank(), 0);
      lambda[i] = d.fundamental_exponents()[i];
      auto m = ctx.highest_weight(lambda);
      for (int j = 0; j < d.rank(); ++j) {
        RatMatrix s = ctx.matrix(gen(GroupToken::sdot(j)), *m);
        EXPECT_EQ(s.transpose() * m->gram() * s, m->gram()) << name;
      }
    }
  }
}

TEST(GroupRep, AdjointTypeMinorIsPowerOfFundamentalMinor) {
  std::mt19937_64 rng(3);
  {
    GroupContext ctx(datum("A1"));
    Rational a(5, 3);
    auto w0 = wdot(ctx.datum().longest_element(1));
    EXPECT_EQ(delta_adjoint_type(ctx, 0, w0.inverse() * gen(GroupToken::x(0, a)) * w0), a * a);
    EXPECT_EQ(delta_adjoint_type(ctx, 0, GroupElement()), 0);
  }
  for (const auto& name : {"A2", "B2", "A3"}) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    const auto& cb = ctx.chevalley();
    auto w0 = wdot(d.longest_element(d.all_nodes()));
    for (int trial = 0; trial < 4; ++trial) {
      RatVector u(cb.dimension());
      for (int r = 0; r < cb.num_roots(); ++r) u[cb.e_slot(r)] = random_rational(rng, -6, 6, 3);
      auto x = gen(GroupToken::exp(u));
      for (int i = 0; i < d.rank(); ++i) {
        Rational base = delta_varpi(ctx, i, x * w0);
        Rational power = 1;
        for (int k = 0; k < d.fundamental_exponents()[i]; ++k) power *= base;
        EXPECT_EQ(delta_adjoint_type(ctx, i, w0.inverse() * x * w0), power) << name << " " << i;
      }
    }
  }
}

TEST(GroupRep, TypeATotalPositivity) {
  GroupContext ctx(datum("A3"));
  const auto& d = ctx.datum();
  std::mt19937_64 rng(8);
  auto w0 = d.longest_element(d.all_nodes());
  for (int trial = 0; trial < 10; ++trial) {
    auto s = tnn_sample(w0, rng);
    EXPECT_EQ(s.params.size(), 6u);
    EXPECT_TRUE(tnn_membership_typeA(ctx.matrix(s.element, "fund:1")));
  }
  EXPECT_FALSE(tnn_membership_typeA(ctx.matrix(gen(GroupToken::x(1, Rational(-1))), "fund:1")));
  EXPECT_THROW(tnn_membership_typeA(RatMatrix::from_int_rows({{1, 0}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(tnn_sample(w0, RatVector{1, 1, 0, 1, 1, 1}), std::invalid_argument);
  EXPECT_EQ(min_minor(RatMatrix::from_int_rows({{1, 2}, {3, 4}})), -2);
  EXPECT_NEAR(static_cast<double>(min_minor(std::vector<std::vector<long double>>{{1, 2}, {3, 4}})), -2.0, 1e-15);
}

TEST(GroupRep, CentralizerBasis) {
  struct Case {
    const char* name;
    std::vector<int> heights;
    std::vector<int> first;  // nodes of the first Dynkin component
  };
  for (const auto& c : {Case{"A3", {1, 2, 3}, {0, 1, 2}}, Case{"B2", {1, 3}, {0, 1}}, Case{"G2", {1, 5}, {0, 1}},
                        Case{"D4", {1, 3, 3, 5}, {0, 1, 2, 3}}, Case{"A2xA1", {1, 2, 1}, {0, 1}}}) {
    ChevalleyBasis cb(datum(c.name));
    NodeSet all = cb.datum().all_nodes();
    auto basis = centralizer_basis(cb, all);
    ASSERT_EQ(basis.size(), c.heights.size()) << c.name;
    RatVector e = cb.regular_nilpotent(all);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      EXPECT_EQ(lie_height(cb, basis[k]), c.heights[k]) << c.name;
      EXPECT_TRUE(is_zero(cb.bracket(basis[k], e))) << c.name;
    }
    EXPECT_EQ(basis.front(), cb.regular_nilpotent(node_set(c.first))) << c.name;
  }
  ChevalleyBasis a3(datum("A3"));
  auto partial = centralizer_basis(a3, node_set({0, 2}));
  ASSERT_EQ(partial.size(), 2u);
  EXPECT_EQ(partial[0], a3.regular_nilpotent(node_set({0})));
  EXPECT_EQ(partial[1], a3.regular_nilpotent(node_set({2})));
  EXPECT_TRUE(centralizer_basis(a3, 0).empty());
}

TEST(GroupRep, LeviRestriction) {
  std::mt19937_64 rng(21);
  for (const auto& [name, J] : std::vector<std::pair<std::string, NodeSet>>{
           {"A3", node_set({0, 1})}, {"B3", node_set({1, 2})}, {"D4", node_set({0, 1, 3})}, {"G2", node_set({1})}}) {
    GroupContext ctx(datum(name));
    const auto& d = ctx.datum();
    GroupContext levi(RootDatum(d.cartan().restrict_to(J, "levi")));
    auto idx = members(J);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<GroupToken> word;
      for (int k = 0; k < 5; ++k) {
        int i = idx[random_int(rng, 0, static_cast<int>(idx.size()) - 1)];
        word.push_back(k % 2 ? GroupToken::y(i, random_rational(rng, -4, 4, 3)) : GroupToken::x(i, random_rational(rng, -4, 4, 3)));
      }
      word.push_back(GroupToken::sdot(idx.front()));
      GroupElement g(word);
      auto g_levi = restrict_to_levi(ctx.chevalley(), g, J, levi.chevalley());
      for (int i = 0; i < d.rank(); ++i) {
        if (contains(J, i)) {
          int local = static_cast<int>(std::find(idx.begin(), idx.end(), i) - idx.begin());
          EXPECT_EQ(delta_varpi(ctx, i, g), delta_varpi(levi, local, g_levi)) << name;
        } else {
          EXPECT_EQ(delta_varpi(ctx, i, g), 1) << name;
        }
      }
    }
    std::vector<GroupToken> outside;
    for (int i = 0; i < d.rank(); ++i)
      if (!contains(J, i)) outside.push_back(GroupToken::x(i, Rational(1)));
    EXPECT_THROW(restrict_to_levi(ctx.chevalley(), GroupElement(outside), J, levi.chevalley()), std::invalid_argument);
  }
}
