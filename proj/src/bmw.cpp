#include "cellalg/bmw.hpp"

namespace cellalg {

namespace {
std::shared_ptr<const TangleAlgebra> alg(int n) { return TangleAlgebra::get(AlgebraKind::Bmw, n); }
}  // namespace

SVec bmw_word(int n, const Word& w) { return alg(n)->word(w); }
SVec bmw_mul_right_gen(int n, const SVec& e, const Letter& g) { return alg(n)->mul_right(e, g); }
SVec bmw_mul(int n, const SVec& a, const SVec& b) { return alg(n)->mul(a, b); }
SVec bmw_star(int n, const SVec& e) { return alg(n)->star(e); }

WordSum bmw_m_lambda(const Partition& lambda, int n) { return m_lambda_words(AlgebraKind::Bmw, lambda, n); }
SVec bmw_m_lambda_element(const Partition& lambda, int n) {
  auto A = alg(n);
  return A->apply(A->one(), bmw_m_lambda(lambda, n));
}

const Matrix& bmw_cell_action(const Partition& lambda, int n, const Letter& g) {
  return CellModule::get(AlgebraKind::Bmw, lambda, n)->action_matrix(g);
}
Vector bmw_cell_action(const Vector& v, const Partition& lambda, int n, const Letter& g) {
  return mat_vec(bmw_cell_action(lambda, n, g), v);
}
Matrix bmw_gram(const Partition& lambda, int n) { return CellModule::get(AlgebraKind::Bmw, lambda, n)->gram(); }

WordSum bmw_jm(int i) {
  Word w;
  for (int j = i - 1; j >= 1; --j) w.push_back(Letter::t(j));
  for (int j = 1; j <= i - 1; ++j) w.push_back(Letter::t(j));
  return {{Fraction(1), w}};
}
SVec bmw_jm_element(int i, int n) {
  auto A = alg(n);
  return A->apply(A->one(), bmw_jm(i));
}

SVec bmw_to_cellular(int n, const SVec& e) { return CellularBasis::get(AlgebraKind::Bmw, n)->to_cellular(e); }
SVec bmw_from_cellular(int n, const SVec& c) { return CellularBasis::get(AlgebraKind::Bmw, n)->from_cellular(c); }

}  // namespace cellalg
