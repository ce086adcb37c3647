#include <gtest/gtest.h>

#include "tnnlab/catalog.hpp"
#include "tnnlab/liealg.hpp"

using namespace tnnlab;

namespace {

IntVector fundamental(int n, int i, int m = 1) {
  IntVector w(n, 0);
  w[i] = m;
  return w;
}

void expect_module_invariants(const RootDatum& d, const WeightModule& m, const std::string& tag) {
  const int n = d.rank();
  const int dim = m.dimension();
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(commutator(m.e(i), m.f(i)), m.h(i)) << tag;
    for (int j = 0; j < n; ++j) {
      if (i != j) EXPECT_TRUE(commutator(m.e(i), m.f(j)).is_zero()) << tag;
      // [h_i, e_j] = <alpha_j, alpha_i^vee> e_j
      EXPECT_EQ(commutator(m.h(i), m.e(j)), Rational(d.cartan()(j, i)) * m.e(j)) << tag;
    }
    for (int b = 0; b < dim; ++b) {
      for (int c = 0; c < dim; ++c) {
        if (b != c) EXPECT_EQ(m.h(i)(b, c), 0) << tag;
      }
      EXPECT_EQ(m.h(i)(b, b), m.weights()[b][i]) << tag;
    }
    // contravariance e_i^T G = G f_i
    EXPECT_EQ(m.e(i).transpose() * m.gram(), m.gram() * m.f(i)) << tag;
  }
  EXPECT_EQ(m.gram(), m.gram().transpose()) << tag;
  for (int b = 0; b < dim; ++b)
    for (int c = 0; c < dim; ++c)
      if (m.weights()[b] != m.weights()[c]) EXPECT_EQ(m.gram()(b, c), 0) << tag;
  for (int hw : m.highest_indices()) EXPECT_EQ(m.gram()(hw, hw), 1) << tag;
}

}  // namespace

TEST(WeylDimension, HandComputedValues) {
  RootDatum a1(cartan_by_name("A1")), a2(cartan_by_name("A2")), b2(cartan_by_name("B2")), g2(cartan_by_name("G2"));
  EXPECT_EQ(weyl_dimension(a2, {1, 0}), 3);
  for (int m = 0; m < 6; ++m) EXPECT_EQ(weyl_dimension(a1, {m}), m + 1);
  EXPECT_EQ(weyl_dimension(b2, {0, 1}), 4);
  EXPECT_EQ(weyl_dimension(b2, {1, 0}), 5);
  EXPECT_EQ(weyl_dimension(g2, {1, 0}), 7);
  EXPECT_EQ(weyl_dimension(g2, {0, 1}), 14);
  EXPECT_EQ(weyl_dimension(a2, {1, 1}), 8);
  EXPECT_EQ(weyl_dimension(RootDatum(cartan_by_name("D4")), {0, 1, 0, 0}), 28);
  EXPECT_THROW(weyl_dimension(a2, {-1, 0}), std::invalid_argument);
}

TEST(WeightModule, SmallExamples) {
  RootDatum a1(cartan_by_name("A1"));
  EXPECT_EQ(build_irreducible(a1, {1}).dimension(), 2);
  auto v2 = build_irreducible(a1, {2});
  ASSERT_EQ(v2.dimension(), 3);
  EXPECT_EQ(v2.weights(), (std::vector<IntVector>{{2}, {0}, {-2}}));
  RootDatum g2(cartan_by_name("G2"));
  EXPECT_EQ(build_irreducible(g2, {1, 0}).dimension(), 7);
}

TEST(WeightModule, FundamentalModulesSatisfyInvariants) {
  for (const auto& name : catalog_types()) {
    RootDatum d(cartan_by_name(name));
    for (int i = 0; i < d.rank(); ++i) {
      auto m = build_irreducible(d, fundamental(d.rank(), i));
      EXPECT_EQ(m.dimension(), weyl_dimension(d, fundamental(d.rank(), i))) << name;
      expect_module_invariants(d, m, name + " fund " + std::to_string(i + 1));
    }
  }
}

TEST(WeightModule, GramAgreesWithIndependentLinearSolve) {
  for (const auto& [name, lambda] : std::vector<std::pair<std::string, IntVector>>{
           {"A2", {1, 1}}, {"B2", {0, 2}}, {"G2", {1, 0}}, {"A3", {0, 2, 0}}}) {
    RootDatum d(cartan_by_name(name));
    auto m = build_irreducible(d, lambda);
    std::vector<RatMatrix> e, f;
    for (int i = 0; i < d.rank(); ++i) {
      e.push_back(m.e(i));
      f.push_back(m.f(i));
    }
    EXPECT_EQ(contravariant_form(e, f, m.weights(), {m.highest_index()}), m.gram()) << name;
  }
}

TEST(WeightModule, SerreRelationsHoldInModules) {
  for (const auto& name : {"B3", "G2", "C3"}) {
    RootDatum d(cartan_by_name(name));
    auto m = build_irreducible(d, fundamental(d.rank(), 0));
    for (int i = 0; i < d.rank(); ++i) {
      for (int j = 0; j < d.rank(); ++j) {
        if (i == j) continue;
        RatMatrix x = m.e(j);
        for (int k = 0; k < 1 - d.cartan()(j, i); ++k) x = commutator(m.e(i), x);
        EXPECT_TRUE(x.is_zero()) << name;
      }
    }
  }
}

TEST(WeightModule, RefusesModulesAboveTheCap) {
  RootDatum d4(cartan_by_name("D4"));
  try {
    build_irreducible(d4, {2, 2, 2, 2});
    FAIL() << "expected refusal";
  } catch (const DimensionCapExceeded& e) {
    EXPECT_EQ(e.dimension(), weyl_dimension(d4, {2, 2, 2, 2}));
    EXPECT_NE(std::string(e.what()).find(std::to_string(e.dimension())), std::string::npos);
  }
  EXPECT_THROW(build_irreducible(RootDatum(cartan_by_name("A1")), {5}, 3), DimensionCapExceeded);
}

TEST(Chevalley, Sl2Relations) {
  ChevalleyBasis b(RootDatum(cartan_by_name("A1")));
  ASSERT_EQ(b.dimension(), 3);
  EXPECT_EQ(b.bracket_basis(b.e_slot(0), b.f_slot(0)), b.basis_vector(b.h_slot(0)));
  EXPECT_EQ(b.bracket_basis(b.h_slot(0), b.e_slot(0)), scaled(2, b.basis_vector(b.e_slot(0))));
  EXPECT_EQ(b.bracket_basis(b.h_slot(0), b.f_slot(0)), scaled(-2, b.basis_vector(b.f_slot(0))));
}

TEST(Chevalley, RankTwoStructureConstants) {
  ChevalleyBasis a2(RootDatum(cartan_by_name("A2")));
  int top = *a2.datum().root_index({1, 1});
  EXPECT_EQ(abs(a2.structure_constant(a2.e_slot(0), a2.e_slot(1))), 1);
  EXPECT_TRUE(is_zero(a2.bracket_basis(a2.e_slot(0), a2.e_slot(top))));

  ChevalleyBasis g2(RootDatum(cartan_by_name("G2")));
  bool saw2 = false, saw3 = false;
  for (int a = 0; a < g2.num_roots(); ++a)
    for (int b = 0; b < g2.num_roots(); ++b) {
      Rational c = abs(g2.structure_constant(g2.e_slot(a), g2.e_slot(b)));
      saw2 = saw2 || c == 2;
      saw3 = saw3 || c == 3;
    }
  EXPECT_TRUE(saw2);
  EXPECT_TRUE(saw3);
}

TEST(Chevalley, StructureConstantsAreIntegralAndMatchRootStrings) {
  for (const auto& name : {"A3", "B3", "C3", "G2", "D4", "A2xA1"}) {
    ChevalleyBasis cb(RootDatum(cartan_by_name(name)));
    const auto& d = cb.datum();
    const int D = cb.dimension();
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b)
        for (const auto& q : cb.bracket_basis(a, b)) EXPECT_EQ(q.get_den(), 1) << name;
    // |N_{alpha,beta}| = p + 1 for root-vector slots with alpha + beta a root
    for (int a = 0; a < D; ++a) {
      if (cb.label(a).kind == ChevalleyLabel::Kind::H) continue;
      for (int b = 0; b < D; ++b) {
        if (cb.label(b).kind == ChevalleyLabel::Kind::H) continue;
        IntVector alpha = d.positive_roots()[cb.label(a).index];
        IntVector beta = d.positive_roots()[cb.label(b).index];
        if (cb.label(a).kind == ChevalleyLabel::Kind::F)
          for (int& x : alpha) x = -x;
        if (cb.label(b).kind == ChevalleyLabel::Kind::F)
          for (int& x : beta) x = -x;
        IntVector sum = alpha;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += beta[k];
        IntVector abs_sum = sum;
        if (is_negative(sum))
          for (int& x : abs_sum) x = -x;
        if (!d.root_index(abs_sum)) continue;
        int p = 0;
        IntVector down = beta;
        while (true) {
          for (std::size_t k = 0; k < down.size(); ++k) down[k] -= alpha[k];
          IntVector abs_down = down;
          if (is_negative(down))
            for (int& x : abs_down) x = -x;
          if (!d.root_index(abs_down) || !(is_positive(down) || is_negative(down))) break;
          ++p;
        }
        EXPECT_EQ(abs(cb.structure_constant(a, b)), p + 1) << name;
      }
    }
  }
}

TEST(Chevalley, RootVectorsBracketToCoroots) {
  for (const auto& name : {"B3", "G2", "C3"}) {
    ChevalleyBasis cb(RootDatum(cartan_by_name(name)));
    const auto& d = cb.datum();
    for (int r = 0; r < cb.num_roots(); ++r) {
      RatVector expected(cb.dimension());
      for (int k = 0; k < d.rank(); ++k) expected[cb.h_slot(k)] = d.coroot(r)[k];
      EXPECT_EQ(cb.bracket_basis(cb.e_slot(r), cb.f_slot(r)), expected) << name;
    }
  }
}

TEST(Chevalley, JacobiIdentityExhaustiveUpToRankThree) {
  for (const auto& name : {"A2", "B2", "G2", "A3", "B3", "C3", "A2xA1"}) {
    ChevalleyBasis cb(RootDatum(cartan_by_name(name)));
    const int D = cb.dimension();
    for (int a = 0; a < D; ++a)
      for (int b = a + 1; b < D; ++b)
        for (int c = b + 1; c < D; ++c) {
          auto x = cb.basis_vector(a), y = cb.basis_vector(b), z = cb.basis_vector(c);
          auto s = add(add(cb.bracket(x, cb.bracket(y, z)), cb.bracket(y, cb.bracket(z, x))),
                       cb.bracket(z, cb.bracket(x, y)));
          ASSERT_TRUE(is_zero(s)) << name << " " << a << "," << b << "," << c;
        }
  }
}

TEST(Adjoint, DimensionsAndIdentification) {
  ChevalleyBasis a1(RootDatum(cartan_by_name("A1")));
  auto ad1 = adjoint_module(a1);
  EXPECT_EQ(ad1.dimension(), 3);
  EXPECT_EQ(ad1.labels(), (std::vector<std::string>{"e1", "h1", "f1"}));
  EXPECT_EQ(adjoint_module(ChevalleyBasis(RootDatum(cartan_by_name("A2")))).dimension(), 8);
  EXPECT_EQ(adjoint_module(ChevalleyBasis(RootDatum(cartan_by_name("B2")))).dimension(), 10);
}

TEST(Adjoint, InvariantsAndSerreRelations) {
  for (const auto& name : {"A1", "A2", "B2", "G2", "B3", "C3", "A1xA1", "A2xA1"}) {
    ChevalleyBasis cb(RootDatum(cartan_by_name(name)));
    auto ad = adjoint_module(cb);
    expect_module_invariants(cb.datum(), ad, std::string("adjoint ") + name);
    const auto& d = cb.datum();
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) {
        if (i == j) continue;
        RatVector x = cb.basis_vector(cb.e_slot(j));
        for (int k = 0; k < 1 - d.cartan()(j, i); ++k) x = ad.e(i) * x;
        EXPECT_TRUE(is_zero(x)) << name;
      }
    // root-vector matrices of the adjoint module are ad of the basis elements
    for (int r = 0; r < cb.num_roots(); ++r) {
      for (int s = 0; s < cb.dimension(); ++s) {
        EXPECT_EQ(ad.root_e(r) * cb.basis_vector(s), cb.bracket_basis(cb.e_slot(r), s)) << name;
        EXPECT_EQ(ad.root_f(r) * cb.basis_vector(s), cb.bracket_basis(cb.f_slot(r), s)) << name;
      }
    }
  }
}
