#include "cellalg/cellmod.hpp"

#include <stdexcept>

namespace cellalg {

WordSum hecke_words(const HeckeAlgebra& H, const SVec& h, int offset) {
  WordSum out;
  for (auto& [w, c] : h) out.emplace_back(c, shift_word(H.perm(w).reduced_word(), offset));
  return out;
}

Word e_chain(int f) {
  Word w;
  for (int j = 0; j < f; ++j) w.push_back(Letter::e(2 * j + 1));
  return w;
}

WordSum m_lambda_words(AlgebraKind kind, const Partition& lambda, int n) {
  int m = lambda.size();
  if (m > n || (n - m) % 2) throw std::invalid_argument("shape " + lambda.str() + " does not occur at level " + std::to_string(n));
  int f = (n - m) / 2;
  auto H = HeckeAlgebra::get(std::max(m, 1), kind == AlgebraKind::Bmw);
  WordSum out;
  for (auto& [c, w] : hecke_words(*H, H->c_mu(m == 0 ? Partition{1} : lambda), 2 * f)) {
    Word x = e_chain(f);
    x.insert(x.end(), w.begin(), w.end());
    out.emplace_back(c, x);
  }
  return out;
}

namespace {

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int letter_key(const Letter& g, AlgebraKind kind) {
  if (g.kind == Letter::E) return 3 * g.i + 2;
  return 3 * g.i + (kind == AlgebraKind::Brauer || g.eps > 0 ? 0 : 1);
}

}  // namespace

// ---------------------------------------------------------------- CellLayer

CellLayer::CellLayer(AlgebraKind kind, int n, int f) : kind_(kind), n_(n), f_(f) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("layer out of range");
  cosets_ = coset_reps(f, n);
  hecke_ = HeckeAlgebra::get(std::max(m(), 1), kind == AlgebraKind::Bmw);
  tangle_ = TangleAlgebra::get(kind, n);
  std::vector<SVec> cols;
  int hd = int(hecke_->dim());
  for (std::size_t u = 0; u < cosets_.size(); ++u)
    for (int w = 0; w < hd; ++w) {
      Word word = cat(cat(e_chain(f), shift_word(hecke_->perm(w).reduced_word(), 2 * f)), coset_word(int(u)));
      cols.push_back(tangle_->truncate(tangle_->word(word), f));
    }
  auto T = tangle_;
  solver_ = std::make_unique<LeadSolver>(std::move(cols), [T](int d) { return long(T->crossings(d)); });
  if (!solver_->complete()) throw std::logic_error("layer basis is dependent");
}

std::shared_ptr<const CellLayer> CellLayer::get(AlgebraKind kind, int n, int f) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CellLayer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[{int(kind), n, f}];
  if (!p) p = std::make_shared<CellLayer>(kind, n, f);
  return p;
}

Word CellLayer::coset_word(int u) const { return shift_word(cosets_[u].reduced_word(), 0); }

CellLayer::Vec CellLayer::unit() const {
  Vec v(cosets_.size());
  v[0] = hecke_->one();  // D_{f,n} starts with the identity
  return v;
}

const CellLayer::Vec& CellLayer::k(int u, const Letter& g) const {
  std::pair<int, int> key{u, letter_key(g, kind_)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Word word = cat(e_chain(f_), coset_word(u));
  word.push_back(g);
  auto c = solver_->solve(tangle_->truncate(tangle_->word(word), f_));
  if (!c) throw std::logic_error("product left the layer");
  int hd = int(hecke_->dim());
  Vec out(cosets_.size());
  for (auto& [col, x] : *c) out[col / hd].add(col % hd, x);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key, std::move(out)).first->second;
}

CellLayer::Vec CellLayer::apply(const Vec& v, const Letter& g) const {
  Vec out(cosets_.size());
  for (std::size_t u = 0; u < v.size(); ++u) {
    if (v[u].empty()) continue;
    const Vec& K = k(int(u), g);
    for (std::size_t u2 = 0; u2 < K.size(); ++u2)
      if (!K[u2].empty()) out[u2].axpy(Fraction(1), hecke_->mul(v[u], K[u2]));
  }
  return out;
}

CellLayer::Vec CellLayer::apply(const Vec& v, const Word& w) const {
  Vec x = v;
  for (auto& g : w) x = apply(x, g);
  return x;
}

CellLayer::Vec CellLayer::apply(const Vec& v, const WordSum& s) const {
  Vec out(cosets_.size());
  for (auto& [c, w] : s) {
    Vec x = apply(v, w);
    for (std::size_t u = 0; u < x.size(); ++u) out[u].axpy(c, x[u]);
  }
  return out;
}

SVec CellLayer::to_tangle(const Vec& v) const {
  SVec out;
  for (std::size_t u = 0; u < v.size(); ++u)
    for (auto& [c, w] : hecke_words(*hecke_, v[u], 2 * f_))
      out.axpy(c, tangle_->word(cat(cat(e_chain(f_), w), coset_word(int(u)))));
  return tangle_->truncate(out, f_);
}

// --------------------------------------------------------------- CellModule

CellModule::CellModule(AlgebraKind kind, const Partition& lambda, int n) : kind_(kind), lambda_(lambda), n_(n) {
  int m = lambda.size();
  if (m > n || (n - m) % 2) throw std::invalid_argument("shape " + lambda.str() + " does not occur at level " + std::to_string(n));
  f_ = (n - m) / 2;
  layer_ = CellLayer::get(kind, n, f_);
  const auto& H = layer_->hecke();
  shape_ = H.shape_index(m == 0 ? Partition{1} : lambda);
  ntab_ = H.tableaux(shape_).size();
  tabs_ = enumerate_std(lambda, n);
  if (tabs_.size() != ntab_) throw std::logic_error("tableau count mismatch");
}

std::shared_ptr<const CellModule> CellModule::get(AlgebraKind kind, const Partition& lambda, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::vector<int>, int>, std::shared_ptr<const CellModule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[{int(kind), lambda.parts, n}];
  if (!p) p = std::make_shared<CellModule>(kind, lambda, n);
  return p;
}

Word CellModule::basis_word(int idx) const {
  auto [t, u] = label(idx);
  return cat(shift_word(tab_perm(tabs_[t]).reduced_word(), 0), layer_->coset_word(u));
}

WordSum CellModule::m_lambda() const { return m_lambda_words(kind_, lambda_, n_); }

CellLayer::Vec CellModule::to_vf(const Vector& v) const {
  const auto& H = layer_->hecke();
  CellLayer::Vec x(cosets().size());
  for (int idx = 0; idx < dim(); ++idx) {
    if (v[idx].is_zero()) continue;
    auto [t, u] = label(idx);
    x[u].axpy(v[idx], H.murphy_element(H.murphy_index(shape_, 0, t)));
  }
  return x;
}

Vector CellModule::from_vf(const CellLayer::Vec& x, bool strict) const {
  const auto& H = layer_->hecke();
  Vector out(dim());
  const Partition& me = H.shapes()[shape_];
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (x[u].empty()) continue;
    for (auto& [idx, c] : H.to_murphy(x[u])) {
      MurphyLabel L = H.murphy_label(idx);
      if (L.shape == shape_ && L.s == 0) {
        out[index(L.t, int(u))] += c;
      } else if (dominance(H.shapes()[L.shape], me) == Order::Dominates) {
        continue;  // lies in the ideal above lambda
      } else if (strict) {
        throw std::logic_error("vector is not in the cell module " + lambda_.str());
      }
    }
  }
  return out;
}

const Matrix& CellModule::action_matrix(const Letter& g) const {
  if (g.i < 1 || g.i >= n_) throw std::out_of_range("generator index out of range");
  std::pair<int, int> key{letter_key(g, kind_), 0};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mats_.find(key);
    if (it != mats_.end()) return it->second;
  }
  Matrix a = zero_matrix(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Vector col = from_vf(layer_->apply(to_vf(unit_vector(dim(), j)), g));
    for (int i = 0; i < dim(); ++i) a[i][j] = col[i];
  }
  std::lock_guard<std::mutex> lock(mu_);
  return mats_.emplace(key, std::move(a)).first->second;
}

void CellModule::preload(const Letter& g, Matrix a) const {
  if (a.size() != std::size_t(dim())) throw std::invalid_argument("preloaded matrix has the wrong size");
  std::lock_guard<std::mutex> lock(mu_);
  mats_[{letter_key(g, kind_), 0}] = std::move(a);
}

Matrix CellModule::action_matrix(const Word& w) const {
  Matrix a = identity_matrix(dim());
  for (auto& g : w) a = action_matrix(g) * a;
  return a;
}

Matrix CellModule::action_matrix(const WordSum& s) const {
  Matrix a = zero_matrix(dim(), dim());
  for (auto& [c, w] : s) a = a + scale(action_matrix(w), c);
  return a;
}

Vector CellModule::act(const Vector& v, const Word& w) const {
  Vector x = v;
  for (auto& g : w) x = mat_vec(action_matrix(g), x);
  return x;
}

Vector CellModule::act(const Vector& v, const WordSum& s) const {
  Vector out(dim());
  for (auto& [c, w] : s) {
    Vector x = act(v, w);
    for (int i = 0; i < dim(); ++i) out[i] += c * x[i];
  }
  return out;
}

Vector CellModule::m_lambda_functional() const {
  Vector phi(dim());
  WordSum ml = m_lambda();
  for (int j = 0; j < dim(); ++j) {
    Vector y = from_vf(layer_->apply(to_vf(unit_vector(dim(), j)), ml));
    for (int i = 1; i < dim(); ++i)
      if (!y[i].is_zero()) throw std::logic_error("v m_lambda is not a multiple of m_lambda");
    phi[j] = y[0];
  }
  return phi;
}

Matrix CellModule::gram() const {
  Vector phi = m_lambda_functional();
  Matrix g = zero_matrix(dim(), dim());
  for (int b = 0; b < dim(); ++b) {
    // psi(v) = phi(v b^*); b^* is basis_word(b) reversed, so letters are
    // folded in from the front
    Vector psi = phi;
    for (auto& l : basis_word(b)) psi = vec_mat(psi, action_matrix(l));
    for (int a = 0; a < dim(); ++a) g[a][b] = psi[a];
  }
  return g;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

Vector vec_mat(const Vector& v, const Matrix& a) {
  Vector out(a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!a[i][j].is_zero()) out[j] += v[i] * a[i][j];
  }
  return out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Fraction(1);
  return v;
}

// ----------------------------------------------------------- CellularBasis

CellularBasis::CellularBasis(AlgebraKind kind, int n) : kind_(kind), n_(n) {
  auto A = TangleAlgebra::get(kind, n);
  std::map<std::tuple<int, std::vector<int>, int, int, int, int>, int> where;
  for (int f = 0; 2 * f <= n; ++f) {
    int m = n - 2 * f;
    for (auto& lam : partitions_of(m)) {
      auto M = CellModule::get(kind, lam, n);
      int d = M->dim();
      std::vector<SVec> left(d);
      for (int a = 0; a < d; ++a) left[a] = A->word(reversed_word(M->basis_word(a)));
      WordSum ml = M->m_lambda();
      for (int b = 0; b < d; ++b) {
        WordSum right;
        Word bw = M->basis_word(b);
        for (auto& [c, w] : ml) right.emplace_back(c, cat(w, bw));
        for (int a = 0; a < d; ++a) {
          auto [s, v] = M->label(a);
          auto [t, u] = M->label(b);
          where[{f, lam.parts, s, v, t, u}] = int(labels_.size());
          labels_.push_back({f, lam, s, v, t, u});
          elems_.push_back(A->apply(left[a], right));
        }
      }
    }
  }
  for (auto& L : labels_) star_.push_back(where.at({L.f, L.lambda.parts, L.t, L.u, L.s, L.v}));
  solver_ = std::make_unique<LeadSolver>(elems_, [A](int d) { return long(A->crossings(d)); });
}

std::shared_ptr<const CellularBasis> CellularBasis::get(AlgebraKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CellularBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[{int(kind), n}];
  if (!p) p = std::make_shared<CellularBasis>(kind, n);
  return p;
}

SVec CellularBasis::to_cellular(const SVec& x) const {
  auto c = solver_->solve(x);
  if (!c) throw std::logic_error("element outside the span of the cellular basis");
  return *c;
}

SVec CellularBasis::from_cellular(const SVec& c) const {
  SVec out;
  for (auto& [i, x] : c) out.axpy(x, elems_[i]);
  return out;
}

}  // namespace cellalg
