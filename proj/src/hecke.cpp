#include "cellalg/hecke.hpp"

#include <map>
#include <stdexcept>

namespace cellalg {

namespace {

class Accum {
 public:
  void add(int i, const Fraction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(i, c);
    if (!fresh) it->second += c;
  }
  SVec done() const {
    SVec v;
    for (auto& [i, c] : m_)
      if (!c.is_zero()) v.push_back(i, c);
    return v;
  }

 private:
  std::map<int, Fraction> m_;
};

}  // namespace

HeckeAlgebra::HeckeAlgebra(int m, Fraction q) : m_(m), q_(std::move(q)) {
  if (m < 1 || m > 8) throw std::invalid_argument("Hecke algebra rank out of range");
  qq_ = q_ - q_.inverse();
  perms_ = all_perms(m);
  for (auto& w : perms_) {
    len_.push_back(w.length());
    words_.push_back(w.reduced_word());
  }
  rmul_.assign(perms_.size(), std::vector<int>(m, -1));
  lmul_ = rmul_;
  for (std::size_t k = 0; k < perms_.size(); ++k)
    for (int i = 1; i < m; ++i) {
      Perm s = Perm::simple(i, m);
      rmul_[k][i] = index(perms_[k] * s);
      lmul_[k][i] = index(s * perms_[k]);
    }
  shapes_ = partitions_of(m);
  for (std::size_t a = 0; a < shapes_.size(); ++a) {
    tabs_.push_back(enumerate_std(shapes_[a], m));
    std::size_t d = tabs_.back().size();
    label_index_.emplace_back(d * d);
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        label_index_.back()[s * d + t] = int(labels_.size());
        labels_.push_back({int(a), int(s), int(t)});
      }
  }
}

std::shared_ptr<const HeckeAlgebra> HeckeAlgebra::get(int m, bool generic_q) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::shared_ptr<const HeckeAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, generic_q}];
  if (!slot) slot = std::make_shared<HeckeAlgebra>(m, generic_q ? Fraction::var(Var::q) : Fraction(1));
  return slot;
}

SVec HeckeAlgebra::mul_gen(const SVec& h, int i, Side side) const {
  if (i < 1 || i >= m_) throw std::out_of_range("Hecke generator index out of range");
  Accum acc;
  for (auto& [w, c] : h) {
    int ws = side == Side::Right ? rmul_[w][i] : lmul_[w][i];
    acc.add(ws, c);
    if (len_[ws] < len_[w]) acc.add(w, c * qq_);
  }
  return acc.done();
}

SVec HeckeAlgebra::word(const std::vector<int>& gens) const {
  SVec h = one();
  for (int i : gens) h = mul_gen(h, i, Side::Right);
  return h;
}

SVec HeckeAlgebra::basis_mul(int x, int w) const {
  long key = long(x) * long(perms_.size()) + w;
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  SVec h = SVec::unit(x);
  for (int i : words_[w]) h = mul_gen(h, i, Side::Right);
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(key, h);
  return h;
}

SVec HeckeAlgebra::mul(const SVec& a, const SVec& b) const {
  Accum acc;
  for (auto& [x, cx] : a)
    for (auto& [w, cw] : b) {
      Fraction c = cx * cw;
      for (auto& [y, cy] : basis_mul(x, w)) acc.add(y, c * cy);
    }
  return acc.done();
}

SVec HeckeAlgebra::star(const SVec& h) const {
  Accum acc;
  for (auto& [w, c] : h) acc.add(index(perms_[w].inverse()), c);
  return acc.done();
}

SVec HeckeAlgebra::c_mu(const Partition& mu) const {
  if (mu.size() != m_) throw std::invalid_argument("c_mu: partition of the wrong size");
  // product over rows of the row sums, each built by coset recursion
  SVec h = one();
  int start = 1;
  for (int p : mu.parts) {
    // sum over the symmetric group on {start..start+p-1}
    SVec row = one();
    for (int k = 1; k < p; ++k) {
      // multiply by 1 + q X_{a} + q^2 X_a X_{a-1} + ... ending at start
      SVec factor = one(), chain = one();
      Fraction qp(1);
      for (int j = start + k - 1; j >= start; --j) {
        chain = mul_gen(chain, j, Side::Right);
        qp *= q_;
        factor.axpy(qp, chain);
      }
      row = mul(row, factor);
    }
    h = mul(h, row);
    start += p;
  }
  return h;
}

SVec HeckeAlgebra::jm(int i) const {
  if (i < 1 || i > m_) throw std::out_of_range("JM index out of range");
  SVec d = one();
  for (int k = 2; k <= i; ++k) d = mul_gen(mul_gen(d, k - 1, Side::Left), k - 1, Side::Right);
  return d;
}

int HeckeAlgebra::shape_index(const Partition& p) const {
  for (std::size_t a = 0; a < shapes_.size(); ++a)
    if (shapes_[a] == p) return int(a);
  throw std::invalid_argument("shape " + p.str() + " is not a partition of " + std::to_string(m_));
}

int HeckeAlgebra::murphy_index(int shape, int s, int t) const {
  std::size_t d = tabs_[shape].size();
  return label_index_[shape][std::size_t(s) * d + std::size_t(t)];
}

MurphyLabel HeckeAlgebra::murphy_label(int idx) const { return labels_[idx]; }

void HeckeAlgebra::build_murphy() const {
  std::call_once(murphy_once_, [this] {
    std::vector<SVec> els;
    els.reserve(labels_.size());
    for (std::size_t a = 0; a < shapes_.size(); ++a) {
      SVec c = c_mu(shapes_[a]);
      std::vector<SVec> right;  // c_lambda X_{d(t)}
      std::vector<std::vector<int>> dword;
      for (auto& t : tabs_[a]) {
        auto w = tab_perm(t).reduced_word();
        SVec h = c;
        for (int i : w) h = mul_gen(h, i, Side::Right);
        right.push_back(h);
        dword.push_back(w);
      }
      for (std::size_t s = 0; s < tabs_[a].size(); ++s)
        for (std::size_t t = 0; t < tabs_[a].size(); ++t) {
          // X_{d(s)}^* = X_{d(s)^{-1}}: left-multiply by the letters of d(s) in order
          SVec h = right[t];
          for (int i : dword[s]) h = mul_gen(h, i, Side::Left);
          els.push_back(std::move(h));
        }
    }
    murphy_ = els;
    solver_ = std::make_unique<LeadSolver>(std::move(els), [this](int i) { return long(len_[i]); });
    if (!solver_->triangular() && !solver_->complete())
      throw std::logic_error("Murphy elements are not a basis");
  });
}

bool HeckeAlgebra::murphy_triangular() const {
  build_murphy();
  return solver_->triangular();
}

const SVec& HeckeAlgebra::murphy_element(int idx) const {
  build_murphy();
  return murphy_[idx];
}

SVec HeckeAlgebra::to_murphy(const SVec& h) const {
  build_murphy();
  auto r = solver_->solve(h);
  if (!r) throw std::logic_error("element outside the span of the Murphy basis");
  return *r;
}

SVec HeckeAlgebra::from_murphy(const SVec& coords) const {
  build_murphy();
  SVec h;
  for (auto& [i, c] : coords) h.axpy(c, murphy_[i]);
  return h;
}

SVec HeckeAlgebra::semistd_element(const SemiStdTableau& S, int t) const {
  int a = shape_index(S.shape);
  SVec h;
  for (std::size_t s = 0; s < tabs_[a].size(); ++s) {
    if (!(type_map(tabs_[a][s], S.type) == S)) continue;
    h.axpy(q_.pow(tab_perm(tabs_[a][s]).length()), murphy_element(murphy_index(a, int(s), t)));
  }
  return h;
}

Matrix HeckeAlgebra::specht_action(int shape, const SVec& h) const {
  std::size_t d = tabs_[shape].size();
  Matrix M = zero_matrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    SVec v = to_murphy(mul(murphy_element(murphy_index(shape, 0, int(j))), h));
    for (auto& [idx, c] : v) {
      MurphyLabel L = labels_[idx];
      if (L.shape == shape) {
        if (L.s != 0) throw std::logic_error("Specht action left the superstandard row");
        M[L.t][j] += c;
      } else if (dominance(shapes_[L.shape], shapes_[shape]) != Order::Dominates) {
        throw std::logic_error("Specht action produced a non-dominant shape");
      }
    }
  }
  return M;
}

}  // namespace cellalg
