#include "cellalg/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cellalg {

Diagram::Diagram(std::vector<std::uint8_t> mate) : mate_(std::move(mate)) {
  if (mate_.size() % 2) throw std::invalid_argument("diagram needs an even number of points");
  for (std::size_t p = 0; p < mate_.size(); ++p)
    if (mate_[p] >= mate_.size() || mate_[p] == p || mate_[mate_[p]] != p)
      throw std::invalid_argument("not a perfect matching");
}

Diagram Diagram::identity(int n) { return from_perm(Perm::identity(n)); }

Diagram Diagram::from_perm(const Perm& w) {
  int n = w.n();
  std::vector<std::uint8_t> m(2 * n);
  for (int k = 1; k <= n; ++k) {
    int b = n + w(k) - 1;
    m[k - 1] = std::uint8_t(b);
    m[b] = std::uint8_t(k - 1);
  }
  return Diagram(std::move(m));
}

Diagram Diagram::e(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("E_i index out of range");
  std::vector<std::uint8_t> m(2 * n);
  for (int k = 0; k < n; ++k) {
    m[k] = std::uint8_t(n + k);
    m[n + k] = std::uint8_t(k);
  }
  int a = i - 1;
  m[a] = std::uint8_t(a + 1), m[a + 1] = std::uint8_t(a);
  m[n + a] = std::uint8_t(n + a + 1), m[n + a + 1] = std::uint8_t(n + a);
  return Diagram(std::move(m));
}

int Diagram::arcs() const {
  int c = 0, n = this->n();
  for (int p = 0; p < n; ++p)
    if (mate_[p] < n) ++c;
  return c / 2;
}

Diagram Diagram::flipped() const {
  int n = this->n();
  std::vector<std::uint8_t> m(2 * n);
  auto sw = [n](int p) { return p < n ? p + n : p - n; };
  for (int p = 0; p < 2 * n; ++p) m[sw(p)] = std::uint8_t(sw(mate_[p]));
  return Diagram(std::move(m));
}

std::string Diagram::str() const {
  int n = this->n();
  auto name = [n](int p) { return p < n ? std::to_string(p + 1) : std::to_string(p - n + 1) + "'"; };
  std::string s = "{";
  bool first = true;
  for (int p = 0; p < 2 * n; ++p)
    if (mate_[p] > p) {
      s += (first ? "" : ",") + name(p) + "-" + name(mate_[p]);
      first = false;
    }
  return s + "}";
}

Diagram compose(const Diagram& a, const Diagram& b, int* loops) {
  int n = a.n();
  if (b.n() != n) throw std::invalid_argument("compose: size mismatch");
  // middle points m in 0..n-1: a's bottom n+m, b's top m
  std::vector<std::uint8_t> out(2 * n);
  std::vector<char> seen(n, 0);
  // follow from an outer point; returns the outer point reached
  auto follow = [&](int p, bool in_a) {
    for (;;) {
      if (in_a) {
        int q = a.mate(p);
        if (q < n) return q;  // a's top
        seen[q - n] = 1;
        p = q - n, in_a = false;  // enter b at top
      } else {
        int q = b.mate(p);
        if (q >= n) return q;  // b's bottom, same numbering as result
        seen[q] = 1;
        p = n + q, in_a = true;  // enter a at bottom
      }
    }
  };
  for (int p = 0; p < n; ++p) out[p] = std::uint8_t(follow(p, true));
  for (int p = n; p < 2 * n; ++p) out[p] = std::uint8_t(follow(p, false));
  int c = 0;
  for (int m = 0; m < n; ++m) {
    if (seen[m]) continue;
    ++c;
    int p = m;  // walk the loop through b then a
    do {
      seen[p] = 1;
      int q = b.mate(p);  // b top -> b top
      seen[q] = 1;
      int r = a.mate(n + q) - n;  // a bottom -> a bottom
      p = r;
    } while (!seen[p]);
  }
  if (loops) *loops = c;
  return Diagram(std::move(out));
}

std::vector<Diagram> all_diagrams(int n) {
  std::vector<Diagram> out;
  std::vector<std::uint8_t> m(2 * n, 0xff);
  std::function<void()> rec = [&] {
    int p = 0;
    while (p < 2 * n && m[p] != 0xff) ++p;
    if (p == 2 * n) {
      out.emplace_back(m);
      return;
    }
    for (int q = p + 1; q < 2 * n; ++q)
      if (m[q] == 0xff) {
        m[p] = std::uint8_t(q), m[q] = std::uint8_t(p);
        rec();
        m[p] = m[q] = 0xff;
      }
  };
  if (n > 0) rec();
  std::sort(out.begin(), out.end(), [](const Diagram& x, const Diagram& y) {
    int ax = x.arcs(), ay = y.arcs();
    return ax != ay ? ax < ay : x.mates() < y.mates();
  });
  return out;
}

std::size_t DiagramHash::operator()(const Diagram& d) const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : d.mates()) h = (h ^ c) * 1099511628211ull;
  return h;
}

DiagramIndex::DiagramIndex(int n) : n_(n), list_(all_diagrams(n)) {
  idx_.reserve(list_.size());
  for (std::size_t i = 0; i < list_.size(); ++i) idx_.emplace(list_[i], int(i));
}

int DiagramIndex::index(const Diagram& d) const {
  auto it = idx_.find(d);
  if (it == idx_.end()) throw std::invalid_argument("diagram of the wrong size");
  return it->second;
}

}  // namespace cellalg
