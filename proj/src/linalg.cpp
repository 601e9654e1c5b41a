#include "cellalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellalg {

SVec SVec::unit(int i, Fraction c) {
  SVec v;
  if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
  return v;
}

const Fraction* SVec::find(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& a, int k) { return a.first < k; });
  if (it == e_.end() || it->first != i) return nullptr;
  return &it->second;
}

Fraction SVec::get(int i) const {
  const Fraction* f = find(i);
  return f ? *f : Fraction();
}

void SVec::axpy(const Fraction& c, const SVec& o) {
  if (c.is_zero() || o.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      out.push_back(std::move(e_[i++]));
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      out.emplace_back(o.e_[j].first, c * o.e_[j].second);
      ++j;
    } else {
      Fraction s = e_[i].second + c * o.e_[j].second;
      if (!s.is_zero()) out.emplace_back(e_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  e_ = std::move(out);
}

SVec SVec::scaled(const Fraction& c) const {
  SVec v;
  if (c.is_zero()) return v;
  v.e_.reserve(e_.size());
  for (auto& [i, x] : e_) v.e_.emplace_back(i, x * c);
  return v;
}

void SVec::push_back(int i, Fraction c) {
  if (!e_.empty() && e_.back().first >= i) throw std::logic_error("SVec::push_back out of order");
  if (!c.is_zero()) e_.emplace_back(i, std::move(c));
}

void SVec::add(int i, const Fraction& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) e_.erase(it);
  } else {
    e_.insert(it, Entry(i, c));
  }
}

SVec SVec::filtered(const std::function<bool(int)>& keep) const {
  SVec v;
  for (auto& [i, x] : e_)
    if (keep(i)) v.e_.emplace_back(i, x);
  return v;
}

// ---------------------------------------------------------------- dense

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<Fraction>(cols));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Fraction(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

Matrix scale(const Matrix& a, const Fraction& s) {
  return map_entries(a, [&](const Fraction& x) { return x * s; });
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix t = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix map_entries(const Matrix& a, const std::function<Fraction(const Fraction&)>& f) {
  Matrix c = a;
  for (auto& row : c)
    for (auto& x : row) x = f(x);
  return c;
}

bool is_scalar_matrix(const Matrix& a, Fraction* scalar) {
  if (a.empty()) return true;
  Fraction s = a[0][0];
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? s : Fraction())) return false;
  if (scalar) *scalar = s;
  return true;
}

namespace {

// Gaussian elimination; returns rank, accumulates determinant sign/product.
std::size_t eliminate(Matrix& a, const Normalizer& norm, Fraction* det) {
  auto N = [&](Fraction x) { return norm ? norm(x) : x; };
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rk = 0;
  Fraction d(1);
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = rk; r < rows; ++r)
      if (!a[r][c].is_zero() && (best == rows || a[r][c].weight() < a[best][c].weight())) best = r;
    if (best == rows) {
      d = Fraction();
      continue;
    }
    if (best != rk) {
      std::swap(a[best], a[rk]);
      d = -d;
    }
    const Fraction piv = a[rk][c];
    d = N(d * piv);
    Fraction inv = N(piv.inverse());
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      Fraction f = N(a[r][c] * inv);
      for (std::size_t j = c; j < cols; ++j)
        if (!a[rk][j].is_zero()) a[r][j] = N(a[r][j] - f * a[rk][j]);
    }
    ++rk;
  }
  if (rk < rows) d = Fraction();
  if (det) *det = d;
  return rk;
}

}  // namespace

Fraction determinant(Matrix a, const Normalizer& norm) {
  if (a.empty()) return Fraction(1);
  if (a.size() != a[0].size()) throw std::invalid_argument("determinant of non-square matrix");
  Fraction d;
  eliminate(a, norm, &d);
  return d;
}

std::size_t rank(Matrix a, const Normalizer& norm) { return eliminate(a, norm, nullptr); }

Matrix solve(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  Matrix aug = zero_matrix(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    for (std::size_t j = 0; j < m; ++j) aug[i][n + j] = b[i][j];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r)
      if (!aug[r][c].is_zero() && (best == n || aug[r][c].weight() < aug[best][c].weight()))
        best = r;
    if (best == n) throw DivisionError("singular matrix");
    std::swap(aug[best], aug[c]);
    Fraction inv = aug[c][c].inverse();
    for (std::size_t j = c; j < n + m; ++j) aug[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      Fraction f = aug[r][c];
      for (std::size_t j = c; j < n + m; ++j)
        if (!aug[c][j].is_zero()) aug[r][j] -= f * aug[c][j];
    }
  }
  Matrix x = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x[i][j] = aug[i][n + j];
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  try {
    return solve(a, identity_matrix(a.size()));
  } catch (const DivisionError&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- EchelonSolver

bool EchelonSolver::add_column(const SVec& col) {
  SVec v = col, comb = SVec::unit(int(ncols_));
  for (auto& p : piv_) {
    const Fraction* x = v.find(p.row);
    if (!x) continue;
    Fraction c = -*x;
    v.axpy(c, p.vec);
    comb.axpy(c, p.comb);
  }
  if (v.empty()) return false;
  // choose the simplest entry as pivot
  const SVec::Entry* best = nullptr;
  for (auto& e : v)
    if (!best || e.second.weight() < best->second.weight()) best = &e;
  int row = best->first;
  Fraction inv = best->second.inverse();
  piv_.push_back({row, v.scaled(inv), comb.scaled(inv)});
  ++ncols_;
  return true;
}

std::optional<SVec> EchelonSolver::solve(const SVec& target) const {
  SVec v = target, result;
  for (auto& p : piv_) {
    const Fraction* x = v.find(p.row);
    if (!x) continue;
    Fraction c = *x;
    v.axpy(-c, p.vec);
    result.axpy(c, p.comb);
  }
  if (!v.empty()) return std::nullopt;
  return result;
}

// ---------------------------------------------------------------- LeadSolver

LeadSolver::LeadSolver(std::vector<SVec> cols, const std::function<long(int)>& weight)
    : cols_(std::move(cols)), weight_(weight) {
  triangular_ = true;
  for (std::size_t j = 0; j < cols_.size() && triangular_; ++j) {
    long best = 0;
    int row = -1, count = 0;
    for (auto& [i, x] : cols_[j]) {
      long w = weight_(i);
      if (row < 0 || w > best) best = w, row = i, count = 1;
      else if (w == best) ++count;
    }
    if (row < 0 || count != 1) triangular_ = false;
    lead_row_.push_back(row);
    lead_index_.emplace_back(row, int(j));
  }
  if (triangular_) {
    std::sort(lead_index_.begin(), lead_index_.end());
    for (std::size_t k = 1; k < lead_index_.size(); ++k)
      if (lead_index_[k].first == lead_index_[k - 1].first) triangular_ = false;
  }
  if (!triangular_) {
    for (auto& c : cols_)
      if (!fallback_.add_column(c)) complete_ = false;
  }
}

std::optional<SVec> LeadSolver::solve(const SVec& target) const {
  if (!triangular_) {
    if (!complete_) throw std::logic_error("LeadSolver: dependent columns");
    return fallback_.solve(target);
  }
  SVec r = target;
  std::vector<std::pair<int, Fraction>> coef;
  while (!r.empty()) {
    const SVec::Entry* top = nullptr;
    long tw = 0;
    for (auto& e : r) {
      long w = weight_(e.first);
      if (!top || w > tw) top = &e, tw = w;
    }
    auto it = std::lower_bound(lead_index_.begin(), lead_index_.end(),
                               std::make_pair(top->first, -1));
    if (it == lead_index_.end() || it->first != top->first) return std::nullopt;
    int j = it->second;
    Fraction c = top->second / *cols_[j].find(top->first);
    r.axpy(-c, cols_[j]);
    coef.emplace_back(j, c);
  }
  SVec out;
  for (auto& [j, c] : coef) out.add(j, c);
  return out;
}

}  // namespace cellalg
