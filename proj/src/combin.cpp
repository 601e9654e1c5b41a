#include "cellalg/combin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cellalg {

// ---------------------------------------------------------------- Partition

void Partition::validate() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') t += c;
  if (t.empty() || t == "0" || t == "-" || t == "empty") return Partition();
  std::vector<int> p;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition \"" + s + "\"");
    p.push_back(std::stoi(item));
  }
  return Partition(std::move(p));
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::string Partition::compact() const {
  if (parts.empty()) return "0";
  bool small = std::all_of(parts.begin(), parts.end(), [](int x) { return x < 10; });
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!small && i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

Order dominance(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa < sb) return Order::Dominates;
  if (sa > sb) return Order::Dominated;
  if (a == b) return Order::Equal;
  bool ge = true, le = true;
  int pa = 0, pb = 0;
  for (int i = 0; i < std::max(a.rows(), b.rows()); ++i) {
    pa += a.row(i);
    pb += b.row(i);
    if (pa < pb) ge = false;
    if (pa > pb) le = false;
  }
  if (ge) return Order::Dominates;
  if (le) return Order::Dominated;
  return Order::Incomparable;
}

bool dominates_eq(const Partition& a, const Partition& b) {
  Order o = dominance(a, b);
  return o == Order::Dominates || o == Order::Equal;
}

bool linear_before(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return b.parts < a.parts;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  std::sort(out.begin(), out.end(), linear_before);
  return out;
}

BoxSteps box_steps(const Partition& p) {
  BoxSteps b;
  for (int i = 0; i < p.rows(); ++i)
    if (p.row(i) > p.row(i + 1)) b.removable.push_back({i + 1, p.row(i)});
  for (int i = 0; i <= p.rows(); ++i)
    if (i == 0 || p.row(i - 1) > p.row(i)) b.addable.push_back({i + 1, p.row(i) + 1});
  return b;
}

Partition add_node(const Partition& p, int row) {
  std::vector<int> v = p.parts;
  if (row == int(v.size()) + 1)
    v.push_back(1);
  else if (row >= 1 && row <= int(v.size()))
    ++v[row - 1];
  else
    throw std::invalid_argument("add_node: bad row");
  return Partition(std::move(v));
}

Partition remove_node(const Partition& p, int row) {
  std::vector<int> v = p.parts;
  if (row < 1 || row > int(v.size())) throw std::invalid_argument("remove_node: bad row");
  if (--v[row - 1] == 0) v.erase(v.begin() + (row - 1));
  return Partition(std::move(v));
}

std::vector<Partition> neighbours(const Partition& p) {
  BoxSteps b = box_steps(p);
  std::vector<Partition> down, up;
  for (auto& n : b.removable) down.push_back(remove_node(p, n.row));
  for (auto& n : b.addable) up.push_back(add_node(p, n.row));
  std::sort(down.begin(), down.end(), linear_before);
  std::sort(up.begin(), up.end(), linear_before);
  down.insert(down.end(), up.begin(), up.end());
  return down;
}

// ---------------------------------------------------------------- Perm

Perm Perm::identity(int n) {
  Perm p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) p.img_[i] = std::uint8_t(i);
  return p;
}

Perm Perm::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::from_images(const std::vector<int>& one_based) {
  Perm p;
  int n = int(one_based.size());
  std::vector<bool> seen(n);
  for (int x : one_based) {
    if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("not a permutation");
    seen[x - 1] = true;
    p.img_.push_back(std::uint8_t(x - 1));
  }
  return p;
}

Perm Perm::from_word(const std::vector<int>& word, int n) {
  Perm p = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    // p * s_i: swap the values i, i+1 in the image array
    for (auto& x : p.img_) {
      if (x == i - 1)
        x = std::uint8_t(i);
      else if (x == i)
        x = std::uint8_t(i - 1);
    }
  }
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[k] = o.img_[img_[k]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[img_[k]] = std::uint8_t(k);
  return p;
}

int Perm::length() const {
  int l = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

int Perm::preimage(int k) const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == k - 1) return int(i) + 1;
  throw std::out_of_range("preimage");
}

std::vector<int> Perm::reduced_word() const {
  Perm w = *this;
  std::vector<int> rec;
  for (;;) {
    int found = 0;
    for (int i = 1; i < n(); ++i)
      if (!w.right_ascent(i)) {
        found = i;
        break;
      }
    if (!found) break;
    rec.push_back(found);
    w = w * simple(found, n());
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

std::vector<int> Perm::images() const {
  std::vector<int> v;
  for (auto x : img_) v.push_back(x + 1);
  return v;
}

Perm Perm::extended(int n) const {
  Perm p = *this;
  for (int k = int(img_.size()); k < n; ++k) p.img_.push_back(std::uint8_t(k));
  return p;
}

std::string Perm::cycles() const {
  std::string s;
  std::vector<bool> seen(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) {
    if (seen[k] || img_[k] == k) continue;
    s += "(";
    std::size_t j = k;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      s += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    s += ")";
  }
  return s.empty() ? "1" : s;
}

std::size_t Perm::rank() const {
  std::size_t r = 0;
  int n = int(img_.size());
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    r = r * std::size_t(n - i) + std::size_t(smaller);
  }
  return r;
}

Perm Perm::unrank(std::size_t idx, int n) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = int(idx % std::size_t(n - i));
    idx /= std::size_t(n - i);
  }
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  Perm p;
  for (int i = 0; i < n; ++i) {
    p.img_.push_back(std::uint8_t(avail[digits[i]]));
    avail.erase(avail.begin() + digits[i]);
  }
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> v;
  long N = factorial(n);
  v.reserve(N);
  for (long i = 0; i < N; ++i) v.push_back(Perm::unrank(std::size_t(i), n));
  return v;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long double_factorial_odd(int n) {
  long f = 1;
  for (int i = 1; i <= 2 * n - 1; i += 2) f *= i;
  return f;
}

// ---------------------------------------------------------------- tableaux

Node StdTableau::node_of(int label) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == label) return {int(i) + 1, int(j) + 1};
  throw std::out_of_range("label not in tableau");
}

StdTableau StdTableau::hat() const {
  StdTableau t = *this;
  for (auto& r : t.rows)
    for (auto& x : r) x -= 2 * f;
  t.f = 0;
  return t;
}

StdTableau StdTableau::restrict_to(int i) const {
  StdTableau t;
  t.f = f;
  std::vector<int> parts;
  for (auto& r : rows) {
    std::vector<int> kept;
    for (int x : r)
      if (x <= i) kept.push_back(x);
    if (kept.empty()) break;
    parts.push_back(int(kept.size()));
    t.rows.push_back(kept);
  }
  t.shape = Partition(parts);
  return t;
}

std::string StdTableau::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
  }
  return s.empty() ? "-" : s;
}

namespace {
int offset_of(const Partition& shape, int n) {
  int d = n - shape.size();
  if (d < 0 || d % 2) throw std::invalid_argument("n - |shape| must be even and non-negative");
  return d / 2;
}
}  // namespace

StdTableau superstandard(const Partition& shape, int n) {
  StdTableau t;
  t.shape = shape;
  t.f = offset_of(shape, n);
  int lab = 2 * t.f + 1;
  for (int p : shape.parts) {
    std::vector<int> r;
    for (int j = 0; j < p; ++j) r.push_back(lab++);
    t.rows.push_back(r);
  }
  return t;
}

std::vector<StdTableau> enumerate_std(const Partition& shape, int n) {
  int f = offset_of(shape, n);
  std::vector<StdTableau> out;
  StdTableau cur;
  cur.shape = shape;
  cur.f = f;
  cur.rows.assign(shape.rows(), {});
  std::function<void(int)> rec = [&](int lab) {
    if (lab > n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
      int len = int(cur.rows[i].size());
      if (len < shape.row(i) && (i == 0 || int(cur.rows[i - 1].size()) > len)) {
        cur.rows[i].push_back(lab);
        rec(lab + 1);
        cur.rows[i].pop_back();
      }
    }
  };
  rec(2 * f + 1);
  return out;
}

Perm tab_perm(const StdTableau& t) {
  StdTableau s = superstandard(t.shape, t.n());
  std::vector<int> img(t.n());
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (std::size_t j = 0; j < s.rows[i].size(); ++j) img[s.rows[i][j] - 1] = t.rows[i][j];
  return Perm::from_images(img);
}

StdTableau act(const StdTableau& t, const Perm& d) {
  StdTableau u = t;
  for (auto& r : u.rows)
    for (auto& x : r) x = d(x);
  return u;
}

Order tableau_dominance(const StdTableau& s, const StdTableau& t) {
  if (s == t) return Order::Equal;
  bool ge = true, le = true;
  for (int i = 2 * s.f + 1; i <= s.n(); ++i) {
    Order o = dominance(s.restrict_to(i).shape, t.restrict_to(i).shape);
    if (o == Order::Incomparable) return o;
    if (o == Order::Dominated) ge = false;
    if (o == Order::Dominates) le = false;
  }
  if (ge) return Order::Dominates;
  if (le) return Order::Dominated;
  return Order::Incomparable;
}

// ---------------------------------------------------------------- D_{f,n}

std::vector<Perm> coset_reps(int f, int n) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("coset_reps: need 0 <= 2f <= n");
  std::vector<Perm> out;
  std::vector<int> mate(n + 1, 0);  // 0 free, -1 through, else partner
  std::function<void(int, int)> rec = [&](int k, int arcs) {
    if (k > n) {
      if (arcs != f) return;
      std::vector<int> img;
      for (int i = 1; i <= n; ++i)
        if (mate[i] > i) img.push_back(i), img.push_back(mate[i]);
      for (int i = 1; i <= n; ++i)
        if (mate[i] == -1) img.push_back(i);
      out.push_back(Perm::from_images(img));
      return;
    }
    if (mate[k] != 0) {
      rec(k + 1, arcs);
      return;
    }
    mate[k] = -1;
    rec(k + 1, arcs);
    mate[k] = 0;
    if (arcs < f)
      for (int j = k + 1; j <= n; ++j)
        if (mate[j] == 0) {
          mate[k] = j, mate[j] = k;
          rec(k + 1, arcs + 1);
          mate[k] = 0, mate[j] = 0;
        }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- paths

BrattePath BrattePath::restrict_to(int k) const {
  BrattePath p;
  p.steps.assign(steps.begin(), steps.begin() + k + 1);
  return p;
}

std::string BrattePath::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + steps[i].compact();
  return s + ")";
}

Node BrattePath::step_node(int k, bool* added) const {
  const Partition &a = steps[k - 1], &b = steps[k];
  bool add = b.size() > a.size();
  const Partition &big = add ? b : a, &small = add ? a : b;
  for (int i = 0; i < big.rows(); ++i)
    if (big.row(i) != small.row(i)) {
      if (added) *added = add;
      return {i + 1, big.row(i)};
    }
  throw std::logic_error("malformed path");
}

bool path_before(const BrattePath& s, const BrattePath& t) {
  for (int k = s.n() - 1; k >= 1; --k)
    if (s.steps[k] != t.steps[k]) return linear_before(s.steps[k], t.steps[k]);
  return false;
}

std::vector<BrattePath> enumerate_paths(const Partition& shape, int n) {
  if (shape.size() > n || (n - shape.size()) % 2) throw std::invalid_argument("parity violation");
  std::map<std::pair<Partition, int>, std::vector<BrattePath>> memo;
  std::function<const std::vector<BrattePath>&(const Partition&, int)> rec =
      [&](const Partition& p, int level) -> const std::vector<BrattePath>& {
    auto key = std::make_pair(p, level);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<BrattePath> res;
    if (level == 0) {
      if (p.empty()) res.push_back(BrattePath{{Partition()}});
    } else {
      for (auto& mu : neighbours(p)) {
        if (mu.size() > level - 1) continue;
        for (auto& path : rec(mu, level - 1)) {
          BrattePath q = path;
          q.steps.push_back(p);
          res.push_back(std::move(q));
        }
      }
    }
    return memo.emplace(key, std::move(res)).first->second;
  };
  std::vector<BrattePath> out = rec(shape, n);
  std::sort(out.begin(), out.end(), path_before);
  return out;
}

BrattePath maximal_path(const Partition& shape, int n) {
  int f = offset_of(shape, n);
  BrattePath p;
  p.steps.push_back(Partition());
  for (int i = 0; i < f; ++i) {
    p.steps.push_back(Partition{1});
    p.steps.push_back(Partition());
  }
  Partition cur;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.row(i); ++j) {
      cur = add_node(cur, i + 1);
      p.steps.push_back(cur);
    }
  return p;
}

Order path_dominance(const BrattePath& s, const BrattePath& t) {
  if (s == t) return Order::Equal;
  bool ge = true, le = true;
  for (int k = 0; k <= s.n(); ++k) {
    Order o = dominance(s.steps[k], t.steps[k]);
    if (o == Order::Incomparable) return o;
    if (o == Order::Dominated) ge = false;
    if (o == Order::Dominates) le = false;
  }
  if (ge) return Order::Dominates;
  if (le) return Order::Dominated;
  return Order::Incomparable;
}

std::vector<Partition> shapes_at(int n) {
  std::vector<Partition> out;
  for (int f = n / 2; f >= 0; --f)
    for (auto& p : partitions_of(n - 2 * f)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------- semistandard

std::string SemiStdTableau::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
  }
  return s;
}

std::vector<SemiStdTableau> semistandard_set(const Partition& shape, const Partition& type) {
  if (shape.size() != type.size()) throw std::invalid_argument("semistandard_set: size mismatch");
  std::vector<SemiStdTableau> out;
  SemiStdTableau cur{shape, type, std::vector<std::vector<int>>(shape.rows())};
  std::function<void(int)> place = [&](int v) {
    if (v > type.rows()) {
      out.push_back(cur);
      return;
    }
    // choose a horizontal strip of size type_v
    std::vector<int> old(shape.rows());
    for (int i = 0; i < shape.rows(); ++i) old[i] = int(cur.rows[i].size());
    std::function<void(int, int)> strip = [&](int row, int left) {
      if (row == shape.rows()) {
        if (left == 0) place(v + 1);
        return;
      }
      int cap = shape.row(row) - old[row];
      if (row > 0) cap = std::min(cap, old[row - 1] - old[row]);
      for (int a = std::min(cap, left); a >= 0; --a) {
        for (int j = 0; j < a; ++j) cur.rows[row].push_back(v);
        strip(row + 1, left - a);
        for (int j = 0; j < a; ++j) cur.rows[row].pop_back();
      }
    };
    strip(0, type.row(v - 1));
  };
  place(1);
  return out;
}

SemiStdTableau type_map(const StdTableau& t, const Partition& type) {
  StdTableau h = t.hat();
  if (h.shape.size() != type.size()) throw std::invalid_argument("type_map: size mismatch");
  std::vector<int> row_of(type.size() + 1);
  int lab = 1;
  for (int i = 0; i < type.rows(); ++i)
    for (int j = 0; j < type.row(i); ++j) row_of[lab++] = i + 1;
  SemiStdTableau s{h.shape, type, {}};
  for (auto& r : h.rows) {
    std::vector<int> x;
    for (int l : r) x.push_back(row_of[l]);
    s.rows.push_back(x);
  }
  return s;
}

// ---------------------------------------------------------------- w_p, w_k

Distinguished distinguished_perms(const Partition& shape, int n) {
  int f = offset_of(shape, n);
  if (f == 0) throw std::invalid_argument("distinguished_perms requires f > 0");
  Distinguished d;
  for (int i = n - 2; i >= 2 * f - 1; --i) d.wp.push_back(i);
  std::vector<int> tail;
  for (int i = n - 1; i >= 2 * f; --i) tail.push_back(i);
  d.wp.insert(d.wp.end(), tail.begin(), tail.end());
  BoxSteps b = box_steps(shape);
  int t = int(b.removable.size());
  std::vector<std::pair<Partition, int>> ups;
  for (auto& nd : b.addable) ups.emplace_back(add_node(shape, nd.row), nd.row);
  std::sort(ups.begin(), ups.end(),
            [](auto& x, auto& y) { return linear_before(x.first, y.first); });
  for (std::size_t idx = 0; idx < ups.size(); ++idx) {
    UpStep u;
    u.k = t + int(idx) + 1;
    u.mu = ups[idx].first;
    int j = ups[idx].second;
    u.a = 2 * (f - 1);
    for (int i = 0; i < j; ++i) u.a += u.mu.row(i);
    std::vector<int> ds;
    for (int i = u.a; i <= n - 2; ++i) ds.push_back(i);
    u.ds = Perm::from_word(ds, n);
    for (int i = u.a - 1; i >= 2 * f - 1; --i) u.wk.push_back(i);
    u.wk.insert(u.wk.end(), tail.begin(), tail.end());
    d.up.push_back(u);
  }
  return d;
}

}  // namespace cellalg
