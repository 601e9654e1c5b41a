#include <gtest/gtest.h>

#include <random>

#include "cellalg/tangle.hpp"

using namespace cellalg;

namespace {

Fraction F(const std::string& s) { return parse_fraction(s); }

struct Alg {
  std::shared_ptr<const TangleAlgebra> A;
  SVec w(const Word& x) const { return A->word(x); }
  SVec w(const std::string& s) const { return A->word(parse_word(s, A->n())); }
};

Word T(int i, int e = 1) { return {Letter::t(i, e)}; }
Word E(int i) { return {Letter::e(i)}; }
Word cat(std::initializer_list<Word> ws) {
  Word r;
  for (auto& w : ws) r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word random_word(std::mt19937& g, int n, int len) {
  std::uniform_int_distribution<int> gi(1, n - 1), kind(0, 2);
  Word w;
  for (int k = 0; k < len; ++k) {
    int c = kind(g);
    w.push_back(c == 2 ? Letter::e(gi(g)) : Letter::t(gi(g), c ? -1 : 1));
  }
  return w;
}

}  // namespace

TEST(Diagrams, CompositionExamples) {
  int loops = -1;
  Diagram e1 = Diagram::e(1, 3), e2 = Diagram::e(2, 3);
  EXPECT_EQ(compose(e1, e1, &loops), e1);
  EXPECT_EQ(loops, 1);
  Diagram x = compose(compose(e1, e2, &loops), e1, &loops);
  EXPECT_EQ(x, e1);
  int l1 = 0, l2 = 0;
  compose(e1, e2, &l1);
  compose(compose(e1, e2, &l1), e1, &l2);
  EXPECT_EQ(l1 + l2, 0);
  auto id = Diagram::identity(3);
  EXPECT_EQ(compose(id, e2, &loops), e2);
  EXPECT_EQ(loops, 0);
  EXPECT_THROW(compose(id, Diagram::identity(2), &loops), std::invalid_argument);
}

TEST(Diagrams, Counts) {
  long expect[] = {1, 1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(long(all_diagrams(n).size()), expect[n]);
  EXPECT_EQ(all_diagrams(4).front(), Diagram::identity(4));
}

TEST(Brauer, DefiningRelations) {
  for (int n = 2; n <= 6; ++n) {
    Alg B{TangleAlgebra::get(AlgebraKind::Brauer, n)};
    Fraction z = F("z");
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(B.w(cat({T(i), T(i)})), B.A->one());
      EXPECT_EQ(B.w(cat({E(i), E(i)})), B.w(E(i)).scaled(z));
      EXPECT_EQ(B.w(cat({E(i), T(i)})), B.w(E(i)));
      EXPECT_EQ(B.w(cat({T(i), E(i)})), B.w(E(i)));
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          EXPECT_EQ(B.w(cat({T(i), T(j)})), B.w(cat({T(j), T(i)})));
          EXPECT_EQ(B.w(cat({T(i), E(j)})), B.w(cat({E(j), T(i)})));
          EXPECT_EQ(B.w(cat({E(i), E(j)})), B.w(cat({E(j), E(i)})));
        }
        if (std::abs(i - j) == 1) {
          EXPECT_EQ(B.w(cat({T(i), T(j), T(i)})), B.w(cat({T(j), T(i), T(j)})));
          EXPECT_EQ(B.w(cat({E(i), T(j), T(i)})), B.w(cat({E(i), E(j)})));
          EXPECT_EQ(B.w(cat({T(j), T(i), E(j)})), B.w(cat({E(i), E(j)})));
          EXPECT_EQ(B.w(cat({E(i), T(j), E(i)})), B.w(E(i)));
          EXPECT_EQ(B.w(cat({E(i), E(j), E(i)})), B.w(E(i)));
        }
      }
    }
  }
}

TEST(Brauer, StarAndAssociativity) {
  std::mt19937 g(3);
  for (int n = 2; n <= 5; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Brauer, n);
    std::uniform_int_distribution<int> pick(0, int(A->dim()) - 1);
    for (int k = 0; k < 100; ++k) {
      SVec a = SVec::unit(pick(g)), b = SVec::unit(pick(g)), c = SVec::unit(pick(g));
      EXPECT_EQ(A->mul(A->mul(a, b), c), A->mul(a, A->mul(b, c)));
      EXPECT_EQ(A->star(A->mul(a, b)), A->mul(A->star(b), A->star(a)));
    }
  }
}

TEST(Bmw, LoopValue) {
  auto A = TangleAlgebra::get(AlgebraKind::Bmw, 2);
  EXPECT_EQ(A->z(), F("(q+r)*(q*r-1)/(r*(q+1)*(q-1))"));
}

TEST(Bmw, DefiningAndDerivedRelations) {
  Fraction q = F("q"), r = F("r"), qq = F("q-q^-1"), z = F("(q+r)*(q*r-1)/(r*(q+1)*(q-1))");
  for (int n = 2; n <= 4; ++n) {
    Alg B{TangleAlgebra::get(AlgebraKind::Bmw, n)};
    SVec one = B.A->one();
    for (int i = 1; i < n; ++i) {
      SVec t = B.w(T(i)), ti = B.w(T(i, -1)), e = B.w(E(i));
      EXPECT_EQ(B.w(cat({T(i), T(i, -1)})), one);
      // (T - q)(T + q^-1)(T - r^-1) = 0
      SVec t2 = B.w(cat({T(i), T(i)})), t3 = B.w(cat({T(i), T(i), T(i)}));
      SVec cubic = t3;
      cubic.axpy(-(q - q.inverse() + r.inverse()), t2);
      cubic.axpy(-Fraction(1) + (q - q.inverse()) * r.inverse(), t);
      cubic.axpy(r.inverse(), one);
      EXPECT_TRUE(cubic.empty());
      // (q - q^-1)(1 - E) = T - T^-1
      SVec lhs = one;
      lhs.axpy(Fraction(-1), e);
      lhs = lhs.scaled(qq);
      SVec rhs = t;
      rhs.axpy(Fraction(-1), ti);
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(B.w(cat({E(i), E(i)})), e.scaled(z));
      EXPECT_EQ(B.w(cat({T(i), E(i)})), e.scaled(r.inverse()));
      EXPECT_EQ(B.w(cat({E(i), T(i)})), e.scaled(r.inverse()));
      EXPECT_EQ(B.w(cat({T(i, -1), E(i)})), e.scaled(r));
      EXPECT_EQ(B.w(cat({E(i), T(i, -1)})), e.scaled(r));
      SVec sq = one;
      sq.axpy(qq, t);
      sq.axpy(-qq * r.inverse(), e);
      EXPECT_EQ(t2, sq);
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) EXPECT_EQ(B.w(cat({T(i), T(j)})), B.w(cat({T(j), T(i)})));
        if (std::abs(i - j) != 1) continue;
        EXPECT_EQ(B.w(cat({T(i), T(j), T(i)})), B.w(cat({T(j), T(i), T(j)})));
        EXPECT_EQ(B.w(cat({E(i), T(j), E(i)})), e.scaled(r));
        EXPECT_EQ(B.w(cat({E(i), T(j, -1), E(i)})), e.scaled(r.inverse()));
        EXPECT_EQ(B.w(cat({E(j), T(i), T(j)})), B.w(cat({T(i), T(j), E(i)})));
        EXPECT_EQ(B.w(cat({E(i), E(j), E(i)})), e);
        SVec ee = B.w(cat({E(i), E(j)}));
        EXPECT_EQ(ee, B.w(cat({E(i), T(j), T(i)})));
        EXPECT_EQ(ee, B.w(cat({T(j), T(i), E(j)})));
      }
    }
  }
}

TEST(Bmw, DimensionAndBasis) {
  long expect[] = {1, 1, 3, 15, 105};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(long(TangleAlgebra::get(AlgebraKind::Bmw, n)->dim()), expect[n]);
  // each basis element is r^{-writhe} times its standard word
  auto A = TangleAlgebra::get(AlgebraKind::Bmw, 4);
  for (std::size_t d = 0; d < A->dim(); ++d)
    EXPECT_EQ(A->word(A->standard_word(int(d))), SVec::unit(int(d), F("r").pow(A->writhe(int(d)))));
}

TEST(Bmw, UnsimplifiedReductionAgrees) {
  std::mt19937 g(5);
  auto A = TangleAlgebra::get(AlgebraKind::Bmw, 3);
  for (int k = 0; k < 60; ++k) {
    Word w = random_word(g, 3, 1 + k % 6);
    EXPECT_EQ(A->reduce_plain(w), A->word(w)) << word_str(w, AlgebraKind::Bmw);
  }
}

TEST(Bmw, AssociativityAndStar) {
  std::mt19937 g(9);
  for (int n = 2; n <= 4; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Bmw, n);
    std::uniform_int_distribution<int> pick(0, int(A->dim()) - 1);
    for (int k = 0; k < 100; ++k) {
      SVec a = SVec::unit(pick(g)), b = SVec::unit(pick(g)), c = SVec::unit(pick(g));
      EXPECT_EQ(A->mul(A->mul(a, b), c), A->mul(a, A->mul(b, c)));
      if (k < 30) {
        EXPECT_EQ(A->star(A->star(a)), a);
        EXPECT_EQ(A->star(A->mul(a, b)), A->mul(A->star(b), A->star(a)));
      }
    }
  }
}

TEST(Bmw, LeftAndRightAgree) {
  auto A = TangleAlgebra::get(AlgebraKind::Bmw, 3);
  std::mt19937 g(1);
  for (int k = 0; k < 30; ++k) {
    Word w = random_word(g, 3, 4);
    SVec x = A->word(w);
    Letter l = w.front();
    Word rest(w.begin() + 1, w.end());
    EXPECT_EQ(A->mul_left(l, A->word(rest)), x);
  }
}
