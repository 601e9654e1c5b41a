#include "cellalg/tangle.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace cellalg {

std::string Letter::str(AlgebraKind k) const {
  if (kind == E) return "E" + std::to_string(i);
  if (k == AlgebraKind::Brauer) return "s" + std::to_string(i);
  return "T" + std::to_string(i) + (eps < 0 ? "^-1" : "");
}

std::string word_str(const Word& w, AlgebraKind k) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? " " : "") + w[j].str(k);
  return s;
}

Word parse_word(const std::string& s, int n) {
  Word w;
  std::size_t p = 0;
  auto fail = [&](const std::string& m) { throw std::invalid_argument("bad word \"" + s + "\": " + m); };
  while (p < s.size()) {
    char c = s[p];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ',') {
      ++p;
      continue;
    }
    if (c == '1' && (p + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[p + 1])))) {
      ++p;
      continue;
    }
    if (c != 'T' && c != 'E' && c != 's') fail("expected T, E or s");
    ++p;
    std::size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (st == p) fail("missing index");
    int i = std::stoi(s.substr(st, p - st));
    if (i < 1 || i >= n) fail("index out of range");
    int eps = 1;
    if (p < s.size() && s[p] == '^') {
      if (s.compare(p, 3, "^-1") != 0 || c != 'T') fail("only T_i^-1 is allowed");
      eps = -1;
      p += 3;
    }
    w.push_back(c == 'E' ? Letter::e(i) : Letter::t(i, eps));
  }
  return w;
}

Word shift_word(const std::vector<int>& gens, int offset, int eps) {
  Word w;
  for (int i : gens) w.push_back(Letter::t(i + offset, eps));
  return w;
}

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r)
    if (l.kind == Letter::T) l.eps = std::int8_t(-l.eps);
  return r;
}

Word reversed_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

namespace {

std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (auto& l : w) s.push_back(char(l.kind == Letter::E ? 0x40 + l.i : (l.eps > 0 ? l.i : 0x20 + l.i)));
  return s;
}

class Accum {
 public:
  void add(int i, const Fraction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(i, c);
    if (!fresh) it->second += c;
  }
  void add(const SVec& v, const Fraction& c) {
    for (auto& [i, x] : v) add(i, c * x);
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

struct TangleAlgebra::Trace {
  Diagram diagram;
  int loops = 0;
  int bad = -1;  // first crossing met along its under strand
  int writhe = 0;
};

TangleAlgebra::TangleAlgebra(AlgebraKind kind, int n) : kind_(kind), n_(n), index_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("n out of range (1..8)");
  Fraction q = Fraction::var(Var::q);
  r_ = Fraction::var(Var::r);
  rinv_ = r_.inverse();
  qq_ = q - q.inverse();
  z_ = kind == AlgebraKind::Brauer ? Fraction::var(Var::z) : Fraction(1) + (r_ - rinv_) / qq_;
  zpow_.push_back(Fraction(1));
  for (int k = 1; k <= n; ++k) zpow_.push_back(zpow_.back() * z_);

  std::size_t N = index_.size();
  arcs_.resize(N), cross_.resize(N), writhe_.assign(N, 0), words_.resize(N);
  for (std::size_t d = 0; d < N; ++d) {
    const Diagram& D = index_.at(int(d));
    arcs_[d] = D.arcs();
    int f = arcs_[d];
    std::vector<std::pair<int, int>> top, bot;
    std::vector<std::pair<int, int>> through;  // (top, bottom) 0-based
    for (int p = 0; p < n; ++p) {
      int m = D.mate(p);
      if (m < n) {
        if (m > p) top.emplace_back(p, m);
      } else {
        through.emplace_back(p, m - n);
      }
    }
    for (int p = n; p < 2 * n; ++p) {
      int m = D.mate(p);
      if (m >= n && m > p) bot.emplace_back(p - n, m - n);
    }
    std::vector<int> sig(n), tau(n);
    for (int i = 0; i < f; ++i) {
      sig[top[i].first] = 2 * i + 1, sig[top[i].second] = 2 * i + 2;
      tau[2 * i] = bot[i].first + 1, tau[2 * i + 1] = bot[i].second + 1;
    }
    for (std::size_t k = 0; k < through.size(); ++k) {
      sig[through[k].first] = 2 * f + int(k) + 1;
      tau[2 * f + k] = through[k].second + 1;
    }
    Word w = shift_word(Perm::from_images(sig).reduced_word(), 0);
    for (int i = 0; i < f; ++i) w.push_back(Letter::e(2 * i + 1));
    Word t = shift_word(Perm::from_images(tau).reduced_word(), 0);
    w.insert(w.end(), t.begin(), t.end());
    cross_[d] = int(w.size()) - f;
    if (kind == AlgebraKind::Bmw) {
      // choose each crossing so that it is first met along its over strand
      for (int pass = 0; pass < 64; ++pass) {
        Trace tr = trace(w);
        if (tr.bad < 0) {
          if (!(tr.diagram == D) || tr.loops) throw std::logic_error("standard word has wrong connectivity");
          writhe_[d] = tr.writhe;
          break;
        }
        w[tr.bad].eps = std::int8_t(-w[tr.bad].eps);
      }
    }
    words_[d] = std::move(w);
  }
}

std::shared_ptr<const TangleAlgebra> TangleAlgebra::get(AlgebraKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const TangleAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{int(kind), n}];
  if (!slot) slot = std::make_shared<TangleAlgebra>(kind, n);
  return slot;
}

void TangleAlgebra::check(const Letter& g) const {
  if (g.i < 1 || g.i >= n_) throw std::out_of_range("generator index out of range");
}

TangleAlgebra::Trace TangleAlgebra::trace(const Word& w) const {
  const int L = int(w.size()), n = n_;
  std::vector<char> seen((L + 1) * n, 0);
  auto node = [n](int lvl, int pos) { return lvl * n + pos; };
  struct Cross {
    int first = 0;  // 1 = P, 2 = Q
    int compP = -1, compQ = -1, dP = 0, dQ = 0;
  };
  std::vector<Cross> cr(L);
  Trace out;
  std::vector<std::uint8_t> mate(2 * n, 0);
  int comp = 0;

  auto visit = [&](int k, int edge, int d) {
    Cross& c = cr[k];
    if (edge == 1) c.compP = comp, c.dP = d;
    else c.compQ = comp, c.dQ = d;
    if (c.first == 0) {
      c.first = edge;
      int under = w[k].eps > 0 ? 2 : 1;
      if (edge == under && out.bad < 0) out.bad = k;
    }
  };
  // Walks from (lvl,pos); returns the endpoint reached (0..2n-1) or -1 on closing a loop.
  auto walk = [&](int lvl, int pos, bool down, bool loop) -> int {
    const int sl = lvl, sp = pos;
    seen[node(lvl, pos)] = 1;
    for (;;) {
      if (down) {
        if (lvl == L) return n + pos;
        const Letter& g = w[lvl];
        int a = g.i - 1;
        if (g.kind == Letter::T && (pos == a || pos == a + 1)) {
          visit(lvl, pos == a ? 1 : 2, +1);
          pos = pos == a ? a + 1 : a;
          ++lvl;
        } else if (g.kind == Letter::E && (pos == a || pos == a + 1)) {
          pos = pos == a ? a + 1 : a;
          down = false;
        } else {
          ++lvl;
        }
      } else {
        if (lvl == 0) return pos;
        const Letter& g = w[lvl - 1];
        int a = g.i - 1;
        if (g.kind == Letter::T && (pos == a || pos == a + 1)) {
          visit(lvl - 1, pos == a + 1 ? 1 : 2, -1);
          pos = pos == a ? a + 1 : a;
          --lvl;
        } else if (g.kind == Letter::E && (pos == a || pos == a + 1)) {
          pos = pos == a ? a + 1 : a;
          down = true;
        } else {
          --lvl;
        }
      }
      if (loop && lvl == sl && pos == sp) return -1;
      seen[node(lvl, pos)] = 1;
    }
  };

  for (int j = 0; j < n; ++j) {
    if (seen[node(0, j)]) continue;
    int e = walk(0, j, true, false);
    mate[j] = std::uint8_t(e), mate[e] = std::uint8_t(j);
    ++comp;
  }
  for (int j = 0; j < n; ++j) {
    if (seen[node(L, j)]) continue;
    int e = walk(L, j, false, false);
    mate[n + j] = std::uint8_t(e), mate[e] = std::uint8_t(n + j);
    ++comp;
  }
  for (int lvl = 0; lvl <= L; ++lvl)
    for (int j = 0; j < n; ++j) {
      if (seen[node(lvl, j)]) continue;
      walk(lvl, j, true, true);
      ++out.loops;
      ++comp;
    }
  for (int k = 0; k < L; ++k)
    if (w[k].kind == Letter::T && cr[k].compP == cr[k].compQ) out.writhe += w[k].eps * cr[k].dP * cr[k].dQ;
  out.diagram = Diagram(std::move(mate));
  return out;
}

namespace {

// Relations of the algebra used to shorten words before reduction.
Word simplify(Word w, Fraction& coef, const Fraction& z, const Fraction& r, const Fraction& rinv) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      Letter &a = w[k], &b = w[k + 1];
      if (a.i == b.i) {
        if (a.kind == Letter::T && b.kind == Letter::T && a.eps == -b.eps) {
          w.erase(w.begin() + long(k), w.begin() + long(k) + 2);
        } else if (a.kind == Letter::T && b.kind == Letter::E) {
          coef *= a.eps > 0 ? rinv : r;
          w.erase(w.begin() + long(k));
        } else if (a.kind == Letter::E && b.kind == Letter::T) {
          coef *= b.eps > 0 ? rinv : r;
          w.erase(w.begin() + long(k) + 1);
        } else if (a.kind == Letter::E && b.kind == Letter::E) {
          coef *= z;
          w.erase(w.begin() + long(k) + 1);
        } else {
          continue;
        }
        changed = true;
        break;
      }
      if (a.i > b.i + 1) {
        std::swap(a, b);
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace

SVec TangleAlgebra::reduce(Word w, bool simp) const {
  Fraction coef(1);
  if (simp) w = simplify(std::move(w), coef, z_, r_, rinv_);
  std::string key = encode(w) + (simp ? "" : "#");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reduce_memo_.find(key);
    if (it != reduce_memo_.end()) return coef.is_one() ? it->second : it->second.scaled(coef);
  }
  Trace tr = trace(w);
  SVec res;
  if (tr.bad < 0) {
    int d = index_.index(tr.diagram);
    res = SVec::unit(d, zpow_.at(tr.loops) * r_.pow(tr.writhe - writhe_[d]));
  } else {
    // T^e = T^{-e} + e (q - q^{-1}) (1 - E)
    int k = tr.bad;
    int eps = w[k].eps;
    Word flip = w, drop = w, cup = w;
    flip[k].eps = std::int8_t(-eps);
    drop.erase(drop.begin() + k);
    cup[k] = Letter::e(w[k].i);
    Fraction c = eps > 0 ? qq_ : -qq_;
    res = reduce(std::move(flip), simp);
    res.axpy(c, reduce(std::move(drop), simp));
    res.axpy(-c, reduce(std::move(cup), simp));
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    reduce_memo_.emplace(key, res);
  }
  return coef.is_one() ? res : res.scaled(coef);
}

SVec TangleAlgebra::reduce_plain(const Word& w) const {
  for (auto& g : w) check(g);
  if (kind_ == AlgebraKind::Brauer) return word(w);
  return reduce(w, false);
}

SVec TangleAlgebra::basis_mul_right(int d, const Letter& g) const {
  long key = long(d) * 4 * n_ + (g.kind == Letter::E ? 2 : g.eps > 0 ? 0 : 1) * n_ + g.i;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = right_memo_.find(key);
    if (it != right_memo_.end()) return it->second;
  }
  SVec res;
  if (kind_ == AlgebraKind::Brauer) {
    Diagram gd = g.kind == Letter::E ? Diagram::e(g.i, n_) : Diagram::from_perm(Perm::simple(g.i, n_));
    int loops = 0;
    Diagram c = compose(index_.at(d), gd, &loops);
    res = SVec::unit(index_.index(c), zpow_[loops]);
  } else {
    Word w = words_[d];
    w.push_back(g);
    res = reduce(std::move(w), true);
    if (writhe_[d]) res = res.scaled(r_.pow(-writhe_[d]));
  }
  std::lock_guard<std::mutex> lock(mu_);
  right_memo_.emplace(key, res);
  return res;
}

SVec TangleAlgebra::basis_mul_left(const Letter& g, int d) const {
  long key = long(d) * 4 * n_ + (g.kind == Letter::E ? 2 : g.eps > 0 ? 0 : 1) * n_ + g.i;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = left_memo_.find(key);
    if (it != left_memo_.end()) return it->second;
  }
  SVec res;
  if (kind_ == AlgebraKind::Brauer) {
    Diagram gd = g.kind == Letter::E ? Diagram::e(g.i, n_) : Diagram::from_perm(Perm::simple(g.i, n_));
    int loops = 0;
    Diagram c = compose(gd, index_.at(d), &loops);
    res = SVec::unit(index_.index(c), zpow_[loops]);
  } else {
    Word w{g};
    w.insert(w.end(), words_[d].begin(), words_[d].end());
    res = reduce(std::move(w), true);
    if (writhe_[d]) res = res.scaled(r_.pow(-writhe_[d]));
  }
  std::lock_guard<std::mutex> lock(mu_);
  left_memo_.emplace(key, res);
  return res;
}

SVec TangleAlgebra::mul_right(const SVec& x, const Letter& g) const {
  check(g);
  Accum acc;
  for (auto& [d, c] : x) acc.add(basis_mul_right(d, g), c);
  return acc.done();
}

SVec TangleAlgebra::mul_left(const Letter& g, const SVec& x) const {
  check(g);
  Accum acc;
  for (auto& [d, c] : x) acc.add(basis_mul_left(g, d), c);
  return acc.done();
}

SVec TangleAlgebra::apply(const SVec& x, const Word& w) const {
  SVec v = x;
  for (auto& g : w) v = mul_right(v, g);
  return v;
}

SVec TangleAlgebra::apply(const SVec& x, const WordSum& ws) const {
  SVec v;
  for (auto& [c, w] : ws) v.axpy(c, apply(x, w));
  return v;
}

SVec TangleAlgebra::mul(const SVec& a, const SVec& b) const {
  if (kind_ == AlgebraKind::Brauer) {
    Accum acc;
    for (auto& [x, cx] : a)
      for (auto& [y, cy] : b) {
        int loops = 0;
        Diagram c = compose(index_.at(x), index_.at(y), &loops);
        acc.add(index_.index(c), cx * cy * zpow_[loops]);
      }
    return acc.done();
  }
  SVec out;
  for (auto& [y, cy] : b) {
    Fraction c = writhe_[y] ? cy * r_.pow(-writhe_[y]) : cy;
    out.axpy(c, apply(a, words_[y]));
  }
  return out;
}

SVec TangleAlgebra::star(const SVec& x) const {
  Accum acc;
  for (auto& [d, c] : x) {
    if (kind_ == AlgebraKind::Brauer) {
      acc.add(index_.index(index_.at(d).flipped()), c);
    } else {
      SVec s = word(reversed_word(words_[d]));
      acc.add(s, writhe_[d] ? c * r_.pow(-writhe_[d]) : c);
    }
  }
  return acc.done();
}

SVec TangleAlgebra::truncate(const SVec& x, int f) const {
  return x.filtered([&](int d) { return arcs_[d] <= f; });
}

}  // namespace cellalg
