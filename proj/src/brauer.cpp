#include "cellalg/brauer.hpp"

namespace cellalg {

namespace {
std::shared_ptr<const TangleAlgebra> alg(int n) { return TangleAlgebra::get(AlgebraKind::Brauer, n); }
}  // namespace

std::pair<Diagram, int> br_compose(const Diagram& a, const Diagram& b) {
  int loops = 0;
  Diagram d = compose(a, b, &loops);
  return {d, loops};
}

SVec br_word(int n, const Word& w) { return alg(n)->word(w); }
SVec br_mul(int n, const SVec& a, const SVec& b) { return alg(n)->mul(a, b); }
SVec br_star(int n, const SVec& e) { return alg(n)->star(e); }

WordSum br_m_lambda(const Partition& lambda, int n) { return m_lambda_words(AlgebraKind::Brauer, lambda, n); }
SVec br_m_lambda_element(const Partition& lambda, int n) {
  auto A = alg(n);
  return A->apply(A->one(), br_m_lambda(lambda, n));
}

const Matrix& br_cell_action(const Partition& lambda, int n, const Letter& g) {
  return CellModule::get(AlgebraKind::Brauer, lambda, n)->action_matrix(g);
}
Vector br_cell_action(const Vector& v, const Partition& lambda, int n, const Letter& g) {
  return mat_vec(br_cell_action(lambda, n, g), v);
}
Matrix br_gram(const Partition& lambda, int n) { return CellModule::get(AlgebraKind::Brauer, lambda, n)->gram(); }

WordSum br_jm(int i) {
  WordSum L;  // L_1 = 0
  for (int k = 2; k <= i; ++k) {
    Letter s = Letter::t(k - 1);
    WordSum next{{Fraction(1), {s}}, {Fraction(-1), {Letter::e(k - 1)}}};
    for (auto& [c, w] : L) {
      Word x{s};
      x.insert(x.end(), w.begin(), w.end());
      x.push_back(s);
      next.emplace_back(c, x);
    }
    L = std::move(next);
  }
  return L;
}
SVec br_jm_element(int i, int n) {
  auto A = alg(n);
  return A->apply(A->one(), br_jm(i));
}

SVec br_to_cellular(int n, const SVec& e) { return CellularBasis::get(AlgebraKind::Brauer, n)->to_cellular(e); }
SVec br_from_cellular(int n, const SVec& c) { return CellularBasis::get(AlgebraKind::Brauer, n)->from_cellular(c); }

}  // namespace cellalg
