#include <gtest/gtest.h>

#include "cellalg/hecke.hpp"

using namespace cellalg;

namespace {

Fraction F(const std::string& s) { return parse_fraction(s); }

// Content of the node holding label i.
int content(const StdTableau& t, int i) {
  Node nd = t.node_of(i);
  return nd.col - nd.row;
}

}  // namespace

TEST(Hecke, QuadraticAndBraidRelations) {
  auto H = HeckeAlgebra::get(4, true);
  Fraction qq = F("q-q^-1");
  SVec lhs = H->word({1, 1}), rhs = H->one();
  rhs.axpy(qq, H->word({1}));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(H->word({1, 2, 1}), H->word({2, 1, 2}));
  EXPECT_EQ(H->word({1, 3}), H->word({3, 1}));
  // X_{s1 s2} X_2 = X_{s1} + (q - q^-1) X_{s1 s2}
  SVec x = H->mul(H->word({1, 2}), H->word({2}));
  SVec want = H->word({1});
  want.axpy(qq, H->word({1, 2}));
  EXPECT_EQ(x, want);
}

TEST(Hecke, Associativity) {
  auto H = HeckeAlgebra::get(4, true);
  SVec a = H->word({1, 2});
  a.axpy(F("q^2"), H->word({3}));
  SVec b = H->word({2, 3, 2});
  b.axpy(F("-1"), H->one());
  SVec c = H->word({3, 1, 2, 1});
  EXPECT_EQ(H->mul(H->mul(a, b), c), H->mul(a, H->mul(b, c)));
}

TEST(Hecke, RowSymmetrizer) {
  // c_(3) = sum_w q^{l(w)} X_w, and X_i c_(3) = q c_(3)
  auto H = HeckeAlgebra::get(3, true);
  SVec c = H->c_mu(Partition{3});
  EXPECT_EQ(c.size(), 6u);
  for (auto& [w, coef] : c) EXPECT_EQ(coef, F("q").pow(H->length(w)));
  for (int i = 1; i < 3; ++i) {
    EXPECT_EQ(H->mul_gen(c, i, Side::Left), c.scaled(F("q")));
    EXPECT_EQ(H->mul_gen(c, i, Side::Right), c.scaled(F("q")));
  }
}

TEST(Hecke, MurphyBasisRoundTrip) {
  for (int m = 1; m <= 4; ++m) {
    auto H = HeckeAlgebra::get(m, true);
    ASSERT_EQ(H->murphy_size(), H->dim());
    for (std::size_t i = 0; i < H->murphy_size(); ++i) {
      SVec e = SVec::unit(int(i));
      EXPECT_EQ(H->to_murphy(H->from_murphy(e)), e);
    }
  }
}

TEST(Hecke, MurphyInvolution) {
  auto H = HeckeAlgebra::get(4, true);
  for (std::size_t i = 0; i < H->murphy_size(); ++i) {
    auto L = H->murphy_label(int(i));
    EXPECT_EQ(H->star(H->murphy_element(int(i))), H->murphy_element(H->murphy_index(L.shape, L.t, L.s)));
  }
}

TEST(Hecke, SpechtIsARepresentation) {
  auto H = HeckeAlgebra::get(4, true);
  for (std::size_t a = 0; a < H->shapes().size(); ++a) {
    int s = int(a);
    Matrix g1 = H->specht_action(s, H->word({1}));
    Matrix g2 = H->specht_action(s, H->word({2}));
    Matrix g12 = H->specht_action(s, H->word({1, 2}));
    // right action: v.(x y) = (v.x).y
    EXPECT_EQ(g12, g2 * g1);
    Matrix g121 = H->specht_action(s, H->word({1, 2, 1}));
    Matrix g212 = H->specht_action(s, H->word({2, 1, 2}));
    EXPECT_EQ(g121, g212);
    Matrix sq = H->specht_action(s, H->word({3, 3}));
    Matrix g3 = H->specht_action(s, H->word({3}));
    EXPECT_EQ(sq, identity_matrix(g3.size()) + scale(g3, F("q-q^-1")));
  }
}

TEST(Hecke, JucysMurphyTriangular) {
  auto H = HeckeAlgebra::get(4, true);
  for (std::size_t a = 0; a < H->shapes().size(); ++a) {
    auto& tabs = H->tableaux(int(a));
    for (int i = 1; i <= 4; ++i) {
      Matrix M = H->specht_action(int(a), H->jm(i));
      for (std::size_t r = 0; r < tabs.size(); ++r)
        for (std::size_t c = 0; c < tabs.size(); ++c) {
          if (r == c) {
            EXPECT_EQ(M[r][c], F("q").pow(2 * content(tabs[r], i)));
          } else if (!M[r][c].is_zero()) {
            EXPECT_EQ(tableau_dominance(tabs[r], tabs[c]), Order::Dominates);
          }
        }
    }
  }
}

TEST(Hecke, JucysMurphyCommute) {
  auto H = HeckeAlgebra::get(4, true);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) EXPECT_EQ(H->mul(H->jm(i), H->jm(j)), H->mul(H->jm(j), H->jm(i)));
}

TEST(Hecke, SymmetricGroupSpecialCase) {
  auto H = HeckeAlgebra::get(3, false);
  EXPECT_EQ(H->word({1, 1}), H->one());
  EXPECT_EQ(H->dim(), 6u);
  // the sign representation
  int sgn = H->shape_index(Partition{1, 1, 1});
  EXPECT_EQ(H->specht_action(sgn, H->word({1})), Matrix{{Fraction(-1)}});
}
