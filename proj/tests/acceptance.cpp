// Acceptance checks. `acceptance K` runs criterion K and prints one
// PASS/FAIL line; with no argument every criterion runs.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cellalg/hecke.hpp"
#include "cellalg/specsim.hpp"
#include "cellalg/towers.hpp"

using namespace cellalg;

namespace {

Fraction F(const std::string& s) { return parse_fraction(s); }

Matrix M(std::vector<std::vector<std::string>> rows) {
  Matrix m;
  for (auto& r : rows) {
    m.emplace_back();
    for (auto& e : r) m.back().push_back(F(e));
  }
  return m;
}

// Collects mismatches; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> fails;
  void expect(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
  void same(const Matrix& got, const Matrix& want, const std::string& what) {
    if (got.size() != want.size()) return expect(false, what + ": size differs");
    for (std::size_t i = 0; i < got.size(); ++i)
      for (std::size_t j = 0; j < got[i].size(); ++j)
        if (got[i][j] != want[i][j])
          fails.push_back(what + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " +
                          got[i][j].str() + ", printed " + want[i][j].str());
  }
};

Word T(int i, int e = 1) { return {Letter::t(i, e)}; }
Word E(int i) { return {Letter::e(i)}; }
Word cat(std::initializer_list<Word> ws) {
  Word r;
  for (auto& w : ws) r.insert(r.end(), w.begin(), w.end());
  return r;
}

void c1(Check& c) {
  Fraction z = F("(q+r)*(q*r-1)/(r*(q+1)*(q-1))");
  Matrix want = {{z, F("r"), F("1")},
                 {F("r"), z + F("(q-q^-1)*(r-r^-1)"), F("r^-1")},
                 {F("1"), F("r^-1"), z}};
  Matrix g = CellModule::get(AlgebraKind::Bmw, Partition{1}, 3)->gram();
  c.same(g, want, "Gram");
  // (r-1)^2(r+1)^2(q^3+r)(q^3r-1) over the denominators r^3 (q-1)^3 (q+1)^3 of z^3
  Fraction det = determinant(g);
  c.expect(det == F("(r-1)^2*(r+1)^2*(q^3+r)*(q^3*r-1)/(r^3*(q-1)^3*(q+1)^3)"), "determinant " + det.str());
  c.expect(det.num() == F("(r-1)^2*(r+1)^2*(q^3+r)*(q^3*r-1)").num() ||
               det.num() == (-F("(r-1)^2*(r+1)^2*(q^3+r)*(q^3*r-1)")).num(),
           "determinant numerator " + det.num().str());
}

void c2(Check& c) {
  Matrix g = CellModule::get(AlgebraKind::Brauer, Partition{1}, 3)->gram();
  c.same(g, M({{"z", "1", "1"}, {"1", "z", "1"}, {"1", "1", "z"}}), "Gram");
  c.expect(determinant(g) == F("(z-1)^2*(z+2)"), "determinant " + determinant(g).str());
}

void c3(Check& c) {
  auto B = AlgebraKind::Bmw;
  c.same(build_path_basis(B, Partition{1}, 3)->transition, M({{"1", "1-q^2", "0"}, {"0", "q", "0"}, {"0", "q^2", "1"}}),
         "n=3 (1)");
  c.same(build_path_basis(B, Partition{2}, 4)->transition,
         M({{"1", "1-q^2", "0", "1-q^2", "0", "0"},
            {"0", "q", "0", "q*(1-q^2)", "0", "0"},
            {"0", "0", "0", "q^2", "0", "0"},
            {"0", "q^2", "1", "q^2*(1-q^2)", "0", "(1-q^2)/q"},
            {"0", "0", "0", "q^3", "0", "1"},
            {"0", "0", "0", "q^4", "1", "(q^2-1)/q"}}),
         "n=4 (2)");
  // as printed
  c.same(build_path_basis(B, Partition{1, 1}, 4)->transition,
         M({{"1", "1-q^2", "0", "q*(q^2-1)", "1-q^2", "0"},
            {"0", "q^2", "0", "1-q^2", "(q^2-1)/q", "0"},
            {"0", "0", "0", "q", "-1", "0"},
            {"0", "q^3", "1", "q*(1-q^2)", "(1-q^2)/(q*r)", "0"},
            {"0", "0", "0", "q^2", "0", "0"},
            {"0", "0", "0", "0", "q^2", "1"}}),
         "n=4 (1,1)");
}

void c4(Check& c) {
  long want[] = {0, 1, 3, 15, 105};
  for (int n = 2; n <= 4; ++n)
    for (auto kind : {AlgebraKind::Bmw, AlgebraKind::Brauer}) {
      long total = 0;
      for (auto& lam : shapes_at(n)) {
        int f = (n - lam.size()) / 2;
        long paths = long(enumerate_paths(lam, n).size());
        long product = long(enumerate_std(lam, n).size() * coset_reps(f, n).size());
        c.expect(paths == product, "n=" + std::to_string(n) + " " + lam.str() + ": paths " + std::to_string(paths) +
                                       " vs |Std||D| " + std::to_string(product));
        c.expect(CellModule::get(kind, lam, n)->dim() == paths, std::string(algebra_name(kind)) + " cell module dimension");
        total += paths * paths;
      }
      c.expect(total == want[n] && total == double_factorial_odd(n), "n=" + std::to_string(n) + " sum " + std::to_string(total));
      c.expect(long(TangleAlgebra::get(kind, n)->dim()) == want[n], "algebra dimension");
    }
}

void assoc(Check& c, AlgebraKind kind, int n, std::mt19937& g) {
  auto A = TangleAlgebra::get(kind, n);
  std::uniform_int_distribution<int> pick(0, int(A->dim()) - 1);
  for (int k = 0; k < 100; ++k) {
    SVec a = SVec::unit(pick(g)), b = SVec::unit(pick(g)), d = SVec::unit(pick(g));
    c.expect(A->mul(A->mul(a, b), d) == A->mul(a, A->mul(b, d)), std::string(algebra_name(kind)) + " associativity n=" + std::to_string(n));
  }
}

void c5(Check& c) {
  std::mt19937 g(2024);
  Fraction q = F("q"), r = F("r"), qq = F("q-q^-1"), z = F("(q+r)*(q*r-1)/(r*(q+1)*(q-1))");
  for (int n = 2; n <= 4; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Bmw, n);
    auto w = [&](const Word& x) { return A->word(x); };
    SVec one = A->one();
    std::string tag = "bmw n=" + std::to_string(n) + " ";
    for (int i = 1; i < n; ++i) {
      SVec t = w(T(i)), ti = w(T(i, -1)), e = w(E(i)), t2 = w(cat({T(i), T(i)}));
      c.expect(w(cat({T(i), T(i, -1)})) == one, tag + "invertible");
      SVec cubic = w(cat({T(i), T(i), T(i)}));
      cubic.axpy(-(q - q.inverse() + r.inverse()), t2);
      cubic.axpy(-Fraction(1) + (q - q.inverse()) * r.inverse(), t);
      cubic.axpy(r.inverse(), one);
      c.expect(cubic.empty(), tag + "cubic");
      SVec lhs = one;
      lhs.axpy(Fraction(-1), e);
      SVec rhs = t;
      rhs.axpy(Fraction(-1), ti);
      c.expect(lhs.scaled(qq) == rhs, tag + "T - T^-1");
      c.expect(w(cat({E(i), E(i)})) == e.scaled(z), tag + "E^2");
      c.expect(w(cat({T(i), E(i)})) == e.scaled(r.inverse()) && w(cat({E(i), T(i)})) == e.scaled(r.inverse()), tag + "TE");
      c.expect(w(cat({T(i, -1), E(i)})) == e.scaled(r) && w(cat({E(i), T(i, -1)})) == e.scaled(r), tag + "T^-1E");
      SVec sq = one;
      sq.axpy(qq, t);
      sq.axpy(-qq * r.inverse(), e);
      c.expect(t2 == sq, tag + "T^2");
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          c.expect(w(cat({T(i), T(j)})) == w(cat({T(j), T(i)})), tag + "far T");
          c.expect(w(cat({E(i), T(j)})) == w(cat({T(j), E(i)})), tag + "far TE");
          c.expect(w(cat({E(i), E(j)})) == w(cat({E(j), E(i)})), tag + "far E");
        }
        if (std::abs(i - j) != 1) continue;
        c.expect(w(cat({T(i), T(j), T(i)})) == w(cat({T(j), T(i), T(j)})), tag + "braid");
        c.expect(w(cat({E(i), T(j), E(i)})) == e.scaled(r), tag + "ETE");
        c.expect(w(cat({E(i), T(j, -1), E(i)})) == e.scaled(r.inverse()), tag + "ET^-1E");
        c.expect(w(cat({E(j), T(i), T(j)})) == w(cat({T(i), T(j), E(i)})), tag + "ETT");
        c.expect(w(cat({E(i), E(j), E(i)})) == e, tag + "EEE");
        SVec ee = w(cat({E(i), E(j)}));
        c.expect(ee == w(cat({E(i), T(j), T(i)})) && ee == w(cat({T(j), T(i), E(j)})), tag + "EE = ETT = TTE");
      }
    }
    assoc(c, AlgebraKind::Bmw, n, g);
  }
  for (int n = 2; n <= 6; ++n) {
    auto A = TangleAlgebra::get(AlgebraKind::Brauer, n);
    auto w = [&](const Word& x) { return A->word(x); };
    std::string tag = "brauer n=" + std::to_string(n) + " ";
    for (int i = 1; i < n; ++i) {
      c.expect(w(cat({T(i), T(i)})) == A->one(), tag + "s^2");
      c.expect(w(cat({E(i), E(i)})) == w(E(i)).scaled(F("z")), tag + "E^2");
      c.expect(w(cat({E(i), T(i)})) == w(E(i)) && w(cat({T(i), E(i)})) == w(E(i)), tag + "sE");
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          c.expect(w(cat({T(i), T(j)})) == w(cat({T(j), T(i)})), tag + "far s");
          c.expect(w(cat({T(i), E(j)})) == w(cat({E(j), T(i)})), tag + "far sE");
          c.expect(w(cat({E(i), E(j)})) == w(cat({E(j), E(i)})), tag + "far E");
        }
        if (std::abs(i - j) != 1) continue;
        c.expect(w(cat({T(i), T(j), T(i)})) == w(cat({T(j), T(i), T(j)})), tag + "braid");
        c.expect(w(cat({E(i), T(j), T(i)})) == w(cat({E(i), E(j)})), tag + "Ess");
        c.expect(w(cat({T(j), T(i), E(j)})) == w(cat({E(i), E(j)})), tag + "ssE");
        c.expect(w(cat({E(i), T(j), E(i)})) == w(E(i)), tag + "EsE");
        c.expect(w(cat({E(i), E(j), E(i)})) == w(E(i)), tag + "EEE");
      }
    }
    assoc(c, AlgebraKind::Brauer, n, g);
  }
}

void c6(Check& c) {
  for (auto kind : {AlgebraKind::Bmw, AlgebraKind::Brauer}) {
    int nmax = kind == AlgebraKind::Bmw ? 4 : 5;
    for (int n = 1; n <= nmax; ++n)
      for (auto& lam : shapes_at(n)) {
        auto rep = jm_triangularity(kind, lam, n);
        c.expect(rep.ok, std::string(algebra_name(kind)) + " " + lam.str() + " n=" + std::to_string(n) + ": " +
                             (rep.failures.empty() ? "" : rep.failures[0]));
      }
  }
}

void c7(Check& c) {
  for (auto kind : {AlgebraKind::Bmw, AlgebraKind::Brauer})
    for (int n = 1; n <= 4; ++n)
      for (auto& lam : shapes_at(n))
        c.expect(central_scalar(kind, lam, n).scalar, std::string(algebra_name(kind)) + " " + lam.str() + " n=" + std::to_string(n));
}

BrattePath P(std::vector<Partition> steps) { return BrattePath{std::move(steps)}; }

void c8(Check& c) {
  auto sb = Specialization::parse("r=-q^-3", AlgebraKind::Bmw);
  auto v = certify(AlgebraKind::Bmw, 3, sb);
  c.expect(v.outcome == Outcome::Inconclusive, "bmw verdict " + std::string(outcome_name(v.outcome)));
  c.expect(v.paths.size() == 1 && v.paths[0].s == P({Partition{}, Partition{1}, Partition{2}, Partition{1}}) &&
               v.paths[0].t == P({Partition{}, Partition{1}, Partition{2}, Partition{3}}) &&
               v.paths[0].content == std::vector<Fraction>{F("1"), F("q^2"), F("q^4")},
           "bmw witness");
  c.expect(gram_rank_certify(AlgebraKind::Bmw, 3, sb).outcome == Outcome::CertifiedSemisimple, "bmw Gram ranks");

  auto z4 = Specialization::parse("z=4", AlgebraKind::Brauer);
  auto w = certify(AlgebraKind::Brauer, 3, z4);
  c.expect(w.outcome == Outcome::Inconclusive, "brauer verdict " + std::string(outcome_name(w.outcome)));
  c.expect(w.paths.size() == 1 && w.paths[0].s == P({Partition{}, Partition{1}, Partition{1, 1}, Partition{1}}) &&
               w.paths[0].t == P({Partition{}, Partition{1}, Partition{1, 1}, Partition{1, 1, 1}}) &&
               w.paths[0].content == std::vector<Fraction>{F("0"), F("-1"), F("-2")},
           "brauer witness");
  c.expect(gram_rank_certify(AlgebraKind::Brauer, 3, z4).outcome == Outcome::CertifiedSemisimple, "brauer Gram ranks");

  auto x = gram_rank_certify(AlgebraKind::Brauer, 3, Specialization::parse("z=1", AlgebraKind::Brauer));
  std::vector<Partition> drops;
  for (auto& r : x.ranks)
    if (r.rank < r.dim) drops.push_back(r.lambda);
  c.expect(x.outcome == Outcome::CertifiedNotSemisimple && drops == std::vector<Partition>{Partition{1}}, "z=1 witness");
}

void c9(Check& c) {
  for (int n = 1; n <= 4; ++n)
    c.expect(certify(AlgebraKind::Bmw, n, Specialization::symbolic(AlgebraKind::Bmw)).outcome == Outcome::CertifiedSemisimple,
             "bmw n=" + std::to_string(n));
  for (int n = 1; n <= 5; ++n)
    c.expect(certify(AlgebraKind::Brauer, n, Specialization::symbolic(AlgebraKind::Brauer)).outcome ==
                 Outcome::CertifiedSemisimple,
             "brauer n=" + std::to_string(n));
}

void c10(Check& c) {
  for (int n : {3, 5}) {
    auto rep = conjecture_evidence(n);
    std::cout << rep.str() << "\n";
    c.expect(rep.agree, "n=" + std::to_string(n) + " discrepancy");
  }
}

void c11(Check& c) {
  std::mt19937 g(11);
  Fraction pool[] = {F("1"), F("-2"), F("q"), F("q^-1"), F("q^2-3"), F("1/(q+1)")};
  std::uniform_int_distribution<int> pc(0, 5);
  for (int m = 1; m <= 4; ++m) {
    auto H = HeckeAlgebra::get(m, true);
    std::uniform_int_distribution<int> pick(0, int(H->dim()) - 1), len(1, 5);
    for (int k = 0; k < 100; ++k) {
      SVec x;
      for (int j = len(g); j > 0; --j) x.axpy(pool[pc(g)], SVec::unit(pick(g)));
      c.expect(H->from_murphy(H->to_murphy(x)) == x, "Murphy round trip m=" + std::to_string(m));
    }
    for (std::size_t a = 0; a < H->shapes().size(); ++a) {
      auto& tabs = H->tableaux(int(a));
      for (int i = 1; i <= m; ++i) {
        Matrix D = H->specht_action(int(a), H->jm(i));
        for (std::size_t r = 0; r < tabs.size(); ++r)
          for (std::size_t col = 0; col < tabs.size(); ++col) {
            if (r == col) {
              Node nd = tabs[r].node_of(i);
              c.expect(D[r][col] == F("q").pow(2 * (nd.col - nd.row)), "D_k diagonal");
            } else if (!D[r][col].is_zero()) {
              c.expect(tableau_dominance(tabs[r], tabs[col]) == Order::Dominates, "D_k triangular");
            }
          }
      }
    }
  }
}

struct Criterion {
  const char* title;
  double limit;  // seconds
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {"Gram matrix and determinant, B-M-W n=3, lambda=(1)", 10, c1},
      {"Gram matrix and determinant, Brauer n=3, lambda=(1)", 5, c2},
      {"transition matrices n=3 (1), n=4 (2), n=4 (1,1)", 60, c3},
      {"dimension counts n=2,3,4", 5, c4},
      {"relation suite and associativity", 600, c5},
      {"Jucys-Murphy triangularity", 600, c6},
      {"central elements act as scalars", 300, c7},
      {"semisimplicity examples", 60, c8},
      {"generic certification", 300, c9},
      {"conjecture evidence n=3, n=5", 900, c10},
      {"Hecke layer: Murphy round trip and D_k triangularity", 120, c11},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;
  for (int k = 1; k <= int(all.size()); ++k) {
    if (only && k != only) continue;
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      all[k - 1].run(c);
    } catch (const std::exception& e) {
      c.fails.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > all[k - 1].limit) c.fails.push_back("runtime " + std::to_string(secs) + " s over the limit");
    std::ostringstream line;
    line << (c.fails.empty() ? "PASS" : "FAIL") << " criterion " << k << ": " << all[k - 1].title << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (auto& f : c.fails) std::cout << "    " << f << "\n";
    ok = ok && c.fails.empty();
  }
  return ok ? 0 : 1;
}
