#include "cellalg/towers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cellalg/bmw.hpp"
#include "cellalg/brauer.hpp"

namespace cellalg {

namespace {

bool is_neighbour(const Partition& lambda, const Partition& mu, int n) {
  if (mu.size() > n - 1 || (n - 1 - mu.size()) % 2) return false;
  for (auto& p : neighbours(lambda))
    if (p == mu) return true;
  return false;
}

// Tableau of shape lambda whose restriction to n-1 is the superstandard mu.
StdTableau extend_superstandard(const Partition& mu, const Partition& lambda, int n) {
  StdTableau t = superstandard(mu, n - 1);
  t.shape = lambda;
  for (int i = 0; i < lambda.rows(); ++i)
    if (lambda.row(i) != mu.row(i)) {
      if (i == int(t.rows.size())) t.rows.emplace_back();
      t.rows[i].push_back(n);
      return t;
    }
  throw std::logic_error("not a removal");
}

}  // namespace

int PathBasis::index(const BrattePath& t) const {
  auto it = std::find(paths.begin(), paths.end(), t);
  if (it == paths.end()) throw std::invalid_argument("path " + t.str() + " not in basis");
  return int(it - paths.begin());
}

Matrix PathBasis::path_action(const Matrix& a) const { return inverse * a * transition; }

WordSum y_words(AlgebraKind kind, const Partition& lambda, const Partition& mu, int n) {
  if (!is_neighbour(lambda, mu, n))
    throw std::invalid_argument(mu.str() + " is not a neighbour of " + lambda.str() + " at level " + std::to_string(n - 1));
  int f = (n - lambda.size()) / 2;
  WordSum out;
  if (mu.size() < lambda.size()) {
    // m_lambda T_{d(s)}, s|_{n-1} the superstandard tableau of mu
    Word ds = shift_word(tab_perm(extend_superstandard(mu, lambda, n)).reduced_word(), 0);
    for (auto [c, w] : m_lambda_words(kind, lambda, n)) {
      w.insert(w.end(), ds.begin(), ds.end());
      out.emplace_back(c, w);
    }
    return out;
  }
  // E(f) T_{w_k}^{-1} x_mu, x_mu on the generators 2f-1, ..., n-2
  const UpStep* step = nullptr;
  Distinguished dp = distinguished_perms(lambda, n);
  for (auto& s : dp.up)
    if (s.mu == mu) step = &s;
  if (!step) throw std::logic_error("no distinguished permutation for " + mu.str());
  Word head = e_chain(f);
  for (auto it = step->wk.rbegin(); it != step->wk.rend(); ++it) head.push_back(Letter::t(*it, -1));
  auto H = HeckeAlgebra::get(mu.size(), kind == AlgebraKind::Bmw);
  for (auto& [c, w] : hecke_words(*H, H->c_mu(mu), 2 * f - 2)) {
    Word x = head;
    x.insert(x.end(), w.begin(), w.end());
    out.emplace_back(c, x);
  }
  return out;
}

Vector y_element(AlgebraKind kind, const Partition& lambda, const Partition& mu, int n) {
  WordSum ws = y_words(kind, lambda, mu, n);
  auto S = CellModule::get(kind, lambda, n);
  const CellLayer& L = S->layer();
  // every word starts with E(f), which is the layer's unit
  for (auto& [c, w] : ws) w.erase(w.begin(), w.begin() + S->f());
  return S->from_vf(L.apply(L.unit(), ws));
}

std::shared_ptr<const PathBasis> build_path_basis(AlgebraKind kind, const Partition& lambda, int n) {
  static std::recursive_mutex mu;
  static std::map<std::tuple<int, std::vector<int>, int>, std::shared_ptr<const PathBasis>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_tuple(int(kind), lambda.parts, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto S = CellModule::get(kind, lambda, n);
  auto pb = std::make_shared<PathBasis>();
  pb->kind = kind, pb->n = n, pb->lambda = lambda;
  pb->paths = enumerate_paths(lambda, n);
  std::sort(pb->paths.begin(), pb->paths.end(), path_before);
  int d = S->dim();
  if (int(pb->paths.size()) != d) throw std::logic_error("path count differs from the cell module dimension");
  pb->transition = zero_matrix(d, d);
  std::map<std::vector<int>, Vector> ys;
  for (int j = 0; j < d; ++j) {
    const BrattePath& t = pb->paths[j];
    Vector m;
    if (n == 1) {
      m = unit_vector(1, 0);
    } else {
      const Partition& nu = t.steps[n - 1];
      auto below = build_path_basis(kind, nu, n - 1);
      auto& y = ys[nu.parts];
      if (y.empty()) y = y_element(kind, lambda, nu, n);
      m = S->act(y, below->b[below->index(t.restrict_to(n - 1))]);
    }
    WordSum b;
    for (int i = 0; i < d; ++i) {
      pb->transition[i][j] = m[i];
      if (!m[i].is_zero()) b.emplace_back(m[i], S->basis_word(i));
    }
    pb->b.push_back(std::move(b));
  }
  auto inv = inverse(pb->transition);
  if (!inv) throw std::logic_error("path basis of " + lambda.str() + " is not a basis");
  pb->inverse = std::move(*inv);
  cache[key] = pb;
  return pb;
}

Fraction jm_content(AlgebraKind kind, const BrattePath& t, int k) {
  bool added = false;
  Node x = t.step_node(k, &added);
  int c = x.col - x.row;
  if (kind == AlgebraKind::Bmw) {
    Fraction q = Fraction::var(Var::q), r = Fraction::var(Var::r);
    return added ? q.pow(2 * c) : q.pow(-2 * c) * r.pow(-2);
  }
  return added ? Fraction(c) : Fraction(-c + 1) - Fraction::var(Var::z);
}

WordSum jm_words(AlgebraKind kind, int k) { return kind == AlgebraKind::Bmw ? bmw_jm(k) : br_jm(k); }

FiltrationReport restriction_filtration_check(AlgebraKind kind, const Partition& lambda, int n) {
  FiltrationReport rep;
  if (n < 2) return rep;
  auto pb = build_path_basis(kind, lambda, n);
  auto S = CellModule::get(kind, lambda, n);
  int d = S->dim();
  // blocks of consecutive paths with the same shape at level n-1
  std::vector<int> start, block(d);
  for (int j = 0; j < d; ++j) {
    if (j == 0 || pb->paths[j].steps[n - 1] != pb->paths[j - 1].steps[n - 1]) {
      start.push_back(j);
      rep.blocks.push_back({pb->paths[j].steps[n - 1], 0});
    }
    block[j] = int(start.size()) - 1;
    rep.blocks.back().second++;
  }
  for (std::size_t a = 1; a < rep.blocks.size(); ++a)
    if (!linear_before(rep.blocks[a - 1].first, rep.blocks[a].first)) {
      rep.ok = false;
      rep.failures.push_back("neighbours out of order: " + rep.blocks[a - 1].first.str() + ", " + rep.blocks[a].first.str());
    }
  std::vector<Letter> gens;
  for (int i = 1; i <= n - 2; ++i) {
    gens.push_back(Letter::t(i));
    if (kind == AlgebraKind::Bmw) gens.push_back(Letter::t(i, -1));
    gens.push_back(Letter::e(i));
  }
  for (auto& g : gens) {
    Matrix p = pb->path_action(S->action_matrix(g));
    for (int u = 0; u < d; ++u)
      for (int t = 0; t < d; ++t)
        if (block[u] > block[t] && !p[u][t].is_zero()) {
          rep.ok = false;
          rep.failures.push_back(g.str(kind) + ": m_" + pb->paths[t].str() + " leaves N^" + rep.blocks[block[t]].first.str());
        }
    for (std::size_t a = 0; a < rep.blocks.size(); ++a) {
      const Partition& nu = rep.blocks[a].first;
      auto below = build_path_basis(kind, nu, n - 1);
      Matrix q = below->path_action(CellModule::get(kind, nu, n - 1)->action_matrix(g));
      int s0 = start[a];
      for (int u = 0; u < rep.blocks[a].second; ++u)
        for (int t = 0; t < rep.blocks[a].second; ++t) {
          // the quotient N^mu / N^{mu-} is S^mu via m_t -> m_{t|n-1}
          int bu = below->index(pb->paths[s0 + u].restrict_to(n - 1));
          int bt = below->index(pb->paths[s0 + t].restrict_to(n - 1));
          if (p[s0 + u][s0 + t] != q[bu][bt]) {
            rep.ok = false;
            rep.failures.push_back(g.str(kind) + ": quotient at " + nu.str() + " differs from S^" + nu.str());
            t = u = rep.blocks[a].second;
          }
        }
    }
  }
  return rep;
}

JmReport jm_triangularity(AlgebraKind kind, const Partition& lambda, int n) {
  JmReport rep;
  auto pb = build_path_basis(kind, lambda, n);
  auto S = CellModule::get(kind, lambda, n);
  int d = S->dim();
  for (int k = 1; k <= n; ++k) {
    Matrix p = pb->path_action(S->action_matrix(jm_words(kind, k)));
    std::vector<Fraction> diag;
    for (int t = 0; t < d; ++t) {
      diag.push_back(p[t][t]);
      Fraction want = jm_content(kind, pb->paths[t], k);
      if (p[t][t] != want) {
        rep.ok = false;
        rep.failures.push_back("L_" + std::to_string(k) + " at " + pb->paths[t].str() + ": diagonal " + p[t][t].str() +
                               ", expected " + want.str());
      }
      for (int u = 0; u < d; ++u)
        if (u != t && !p[u][t].is_zero() && path_dominance(pb->paths[u], pb->paths[t]) != Order::Dominates) {
          rep.ok = false;
          rep.failures.push_back("L_" + std::to_string(k) + ": m_" + pb->paths[t].str() + " has a term at " +
                                 pb->paths[u].str());
        }
    }
    rep.diagonal.push_back(std::move(diag));
  }
  return rep;
}

CentralReport central_scalar(AlgebraKind kind, const Partition& lambda, int n) {
  auto S = CellModule::get(kind, lambda, n);
  BrattePath top = maximal_path(lambda, n);
  CentralReport rep;
  Matrix a;
  if (kind == AlgebraKind::Bmw) {
    rep.alpha = Fraction(1);
    a = identity_matrix(S->dim());
    for (int k = 2; k <= n; ++k) {
      rep.alpha *= jm_content(kind, top, k);
      a = S->action_matrix(jm_words(kind, k)) * a;
    }
  } else {
    rep.alpha = Fraction(0);
    a = zero_matrix(S->dim(), S->dim());
    for (int k = 2; k <= n; ++k) {
      rep.alpha += jm_content(kind, top, k);
      a = a + S->action_matrix(jm_words(kind, k));
    }
  }
  rep.scalar = a == scale(identity_matrix(S->dim()), rep.alpha);
  return rep;
}

}  // namespace cellalg
