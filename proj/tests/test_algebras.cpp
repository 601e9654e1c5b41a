#include <gtest/gtest.h>

#include <random>

#include "cellalg/bmw.hpp"
#include "cellalg/brauer.hpp"
#include "cellalg/towers.hpp"

using namespace cellalg;

namespace {

Fraction F(const std::string& s) { return parse_fraction(s); }
Word W(const std::string& s, int n) { return parse_word(s, n); }

SVec comb(std::initializer_list<std::pair<const char*, SVec>> terms) {
  SVec out;
  for (auto& [c, v] : terms) out.axpy(F(c), v);
  return out;
}

}  // namespace

TEST(BrauerApi, Compose) {
  auto [d, loops] = br_compose(Diagram::e(1, 3), Diagram::e(1, 3));
  EXPECT_EQ(d, Diagram::e(1, 3));
  EXPECT_EQ(loops, 1);
  auto [d2, l2] = br_compose(Diagram::identity(3), Diagram::e(2, 3));
  EXPECT_EQ(d2, Diagram::e(2, 3));
  EXPECT_EQ(l2, 0);
}

TEST(BrauerApi, Products) {
  EXPECT_EQ(br_word(3, W("s1 s2 s1 s1 s2 s1", 3)), SVec::unit(0));
  EXPECT_EQ(br_word(3, W("s1 E1", 3)), br_word(3, W("E1", 3)));
  EXPECT_EQ(br_mul(4, br_word(4, W("E1 s2", 4)), br_word(4, W("s3 E2", 4))), br_word(4, W("E1 s2 s3 E2", 4)));
}

TEST(BrauerApi, MLambda) {
  EXPECT_EQ(br_m_lambda_element(Partition{1}, 3), br_word(3, W("E1", 3)));
  EXPECT_EQ(br_m_lambda_element(Partition{1, 1}, 4), br_word(4, W("E1", 4)));
  // the full symmetrizer: every permutation diagram once
  SVec x = br_m_lambda_element(Partition{4}, 4);
  EXPECT_EQ(x.size(), 24u);
  for (auto& [d, c] : x) {
    EXPECT_EQ(c, Fraction(1));
    EXPECT_EQ(TangleAlgebra::get(AlgebraKind::Brauer, 4)->arcs(d), 0);
  }
  EXPECT_THROW(br_m_lambda(Partition{2}, 3), std::invalid_argument);
}

TEST(BrauerApi, JmElements) {
  EXPECT_TRUE(br_jm(1).empty());
  EXPECT_EQ(br_jm_element(2, 3), comb({{"1", br_word(3, W("s1", 3))}, {"-1", br_word(3, W("E1", 3))}}));
  // E(f) L_k: 0 for odd k <= 2f+1, (1-z) E(f) for even k <= 2f
  for (int n = 2; n <= 6; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Brauer, n);
    for (int f = 1; 2 * f <= n; ++f) {
      SVec e = A->word(e_chain(f));
      for (int k = 1; k <= std::min(2 * f + 1, n); ++k) {
        SVec prod = A->apply(e, br_jm(k));
        if (k % 2) EXPECT_TRUE(prod.empty()) << "n=" << n << " f=" << f << " k=" << k;
        else EXPECT_EQ(prod, e.scaled(F("1-z"))) << "n=" << n << " f=" << f << " k=" << k;
      }
    }
  }
}

TEST(BrauerApi, CentralSum) {
  for (int n = 2; n <= 4; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Brauer, n);
    SVec c;
    for (int k = 2; k <= n; ++k) c.axpy(Fraction(1), br_jm_element(k, n));
    for (int i = 1; i < n; ++i)
      for (Letter g : {Letter::t(i), Letter::e(i)}) EXPECT_EQ(A->mul_right(c, g), A->mul_left(g, c));
  }
}

TEST(BrauerApi, CellularCoordinates) {
  auto C = CellularBasis::get(AlgebraKind::Brauer, 3);
  SVec x = br_word(3, W("E1 s2", 3));
  SVec c = br_to_cellular(3, x);
  EXPECT_EQ(br_from_cellular(3, c), x);
}

TEST(BmwApi, Words) {
  Fraction z = F("(q+r)*(q*r-1)/(r*(q+1)*(q-1))");
  EXPECT_EQ(bmw_word(3, W("E1 E1", 3)), bmw_word(3, W("E1", 3)).scaled(z));
  EXPECT_EQ(bmw_word(3, {}), SVec::unit(0));
  EXPECT_EQ(bmw_word(3, W("T1 E1", 3)), bmw_word(3, W("E1", 3)).scaled(F("r^-1")));
  EXPECT_THROW(W("T3", 3), std::invalid_argument);
}

TEST(BmwApi, RightMultiplication) {
  int n = 3;
  SVec x = bmw_mul_right_gen(n, bmw_word(n, W("E1 T2 T1", n)), Letter::t(1));
  // T_1^2 = 1 + (q-q^-1)(T_1 - r^-1 E_1) and E_1 T_2 E_1 = r E_1
  SVec want = comb({{"1", bmw_word(n, W("E1 T2", n))},
                    {"q-q^-1", bmw_word(n, W("E1 T2 T1", n))},
                    {"-(q-q^-1)", bmw_word(n, W("E1", n))}});
  EXPECT_EQ(x, want);
}

TEST(BmwApi, Star) {
  int n = 3;
  EXPECT_EQ(bmw_star(n, bmw_word(n, W("E1 T2", n))), bmw_word(n, W("T2 E1", n)));
  SVec m = bmw_m_lambda_element(Partition{1}, 3);
  EXPECT_EQ(bmw_star(n, m), m);
  // (E_1T_2)(E_1T_2)^* = E_1 T_2 T_2 E_1 gives the Gram entry <v_2, v_2> times E_1
  EXPECT_EQ(bmw_mul(n, bmw_word(n, W("E1 T2", n)), bmw_star(n, bmw_word(n, W("E1 T2", n)))),
            bmw_word(n, W("E1", n)).scaled(F("(q+r)*(q*r-1)/(r*(q+1)*(q-1)) + (q-q^-1)*(r-r^-1)")));
}

TEST(BmwApi, MLambda) {
  EXPECT_EQ(bmw_m_lambda_element(Partition{}, 2), bmw_word(2, W("E1", 2)));
  EXPECT_EQ(bmw_m_lambda_element(Partition{2}, 4),
            comb({{"1", bmw_word(4, W("E1", 4))}, {"q", bmw_word(4, W("E1 T3", 4))}}));
}

TEST(BmwApi, JmElements) {
  EXPECT_EQ(bmw_jm_element(1, 3), SVec::unit(0));
  // E_1 L_2 = r^-2 E_1
  auto A = TangleAlgebra::get(AlgebraKind::Bmw, 3);
  EXPECT_EQ(A->apply(A->word(W("E1", 3)), bmw_jm(2)), A->word(W("E1", 3)).scaled(F("r^-2")));
  for (int n = 2; n <= 4; ++n) {
    auto B = TangleAlgebra::get(AlgebraKind::Bmw, n);
    SVec c = B->one();
    for (int k = 2; k <= n; ++k) c = B->apply(c, bmw_jm(k));
    for (int i = 1; i < n; ++i)
      for (Letter g : {Letter::t(i), Letter::e(i)}) EXPECT_EQ(B->mul_right(c, g), B->mul_left(g, c));
    // the L_k commute
    for (int a = 2; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        EXPECT_EQ(B->mul(bmw_jm_element(a, n), bmw_jm_element(b, n)), B->mul(bmw_jm_element(b, n), bmw_jm_element(a, n)));
  }
}

// E(f) x_lambda T_u for u in the upper generators matches c_lambda X_u in H_m.
TEST(BmwApi, HeckeQuotientCompatible) {
  std::mt19937 g(4);
  for (auto kind : {AlgebraKind::Bmw, AlgebraKind::Brauer})
    for (int n = 2; n <= 4; ++n)
      for (int f = 0; 2 * f <= n - 2; ++f) {
        auto L = CellLayer::get(kind, n, f);
        const auto& H = L->hecke();
        int m = n - 2 * f;
        std::uniform_int_distribution<int> gi(1, m - 1);
        for (auto& lam : partitions_of(m)) {
          for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> u;
            for (int j = 0; j < 3; ++j) u.push_back(gi(g));
            CellLayer::Vec v = L->apply(L->unit(), hecke_words(H, H.c_mu(lam), 2 * f));
            v = L->apply(v, shift_word(u, 2 * f));
            CellLayer::Vec want(L->cosets().size());
            want[0] = H.mul(H.c_mu(lam), H.word(u));
            EXPECT_EQ(v, want);
          }
        }
      }
}

// E(f) b E_i lies in the next layer for b in the upper generators, 2f < i < n.
TEST(BmwApi, UpperEVanishes) {
  for (auto kind : {AlgebraKind::Bmw, AlgebraKind::Brauer})
    for (int n = 3; n <= 5; ++n) {
      if (kind == AlgebraKind::Bmw && n > 4) continue;
      auto A = TangleAlgebra::get(kind, n);
      for (int f = 1; 2 * f < n - 1; ++f)
        for (int i = 2 * f + 1; i < n; ++i)
          for (int j = 2 * f + 1; j < n; ++j) {
            Word w = e_chain(f);
            w.push_back(Letter::t(j));
            w.push_back(Letter::e(i));
            EXPECT_TRUE(A->truncate(A->word(w), f).empty());
            Word w2 = e_chain(f);
            w2.push_back(Letter::e(i));
            EXPECT_TRUE(A->truncate(A->word(w2), f).empty());
          }
    }
}

TEST(BmwApi, CellActionIdentityAndCellular) {
  Vector v = unit_vector(3, 1);
  EXPECT_EQ(bmw_cell_action(v, Partition{1}, 3, Letter::t(2, 1)), mat_vec(bmw_cell_action(Partition{1}, 3, Letter::t(2)), v));
  EXPECT_EQ(bmw_cell_action(Partition{1}, 3, Letter::t(1)) * bmw_cell_action(Partition{1}, 3, Letter::t(1, -1)),
            identity_matrix(3));
  SVec x = bmw_word(3, W("T1 E2 T1^-1", 3));
  EXPECT_EQ(bmw_from_cellular(3, bmw_to_cellular(3, x)), x);
  auto C = CellularBasis::get(AlgebraKind::Bmw, 3);
  // the cellular basis element of m_lambda itself has coordinates e_i
  for (int i = 0; i < int(C->size()); ++i) {
    const auto& L = C->label(i);
    if (L.f == 1 && L.s == 0 && L.t == 0 && L.u == 0 && L.v == 0)
      EXPECT_EQ(bmw_to_cellular(3, bmw_m_lambda_element(L.lambda, 3)), SVec::unit(i));
  }
}

TEST(BrauerApi, CellularSixStrands) {
  auto C = CellularBasis::get(AlgebraKind::Brauer, 6);
  EXPECT_EQ(C->size(), 10395u);
  std::mt19937 g(6);
  std::uniform_int_distribution<int> pick(0, 10394);
  for (int k = 0; k < 20; ++k) {
    SVec x = SVec::unit(pick(g));
    x.axpy(F("z-3"), SVec::unit(pick(g)));
    EXPECT_EQ(br_from_cellular(6, br_to_cellular(6, x)), x);
  }
}
