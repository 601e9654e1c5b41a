#include "cellalg/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

namespace cellalg {

const char* var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::r: return "r";
    case Var::z: return "z";
  }
  return "?";
}

bool Mono::divides(Mono o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp(Var(i)) > o.exp(Var(i))) return false;
  return true;
}

Mono Mono::min(Mono a, Mono b) {
  Mono m;
  for (int i = 0; i < kNumVars; ++i)
    m = m * Mono::var(Var(i), std::min(a.exp(Var(i)), b.exp(Var(i))));
  return m;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Mono{}, mpz_class(c)});
}
Poly::Poly(const mpz_class& c) {
  if (c != 0) t_.push_back({Mono{}, c});
}
Poly Poly::var(Var v, unsigned e) { return monomial(1, Mono::var(v, e)); }
Poly Poly::monomial(const mpz_class& c, Mono m) {
  Poly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

mpz_class Poly::constant_value() const { return t_.empty() ? mpz_class(0) : t_[0].c; }

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (auto& t : t_) d = std::max(d, t.m.exp(v));
  return d;
}
bool Poly::uses(Var v) const { return degree(v) > 0; }
unsigned Poly::used_vars() const {
  unsigned mask = 0;
  for (auto& t : t_)
    for (int i = 0; i < kNumVars; ++i)
      if (t.m.exp(Var(i))) mask |= 1u << i;
  return mask;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

namespace {
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].m < a[i].m)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || a[i].m < b[j].m) {
      out.push_back({b[j].m, subtract ? mpz_class(-b[j].c) : b[j].c});
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, false);
  return *this;
}
Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, true);
  return *this;
}

Poly Poly::mul_term(const mpz_class& c, Mono m) const {
  Poly p;
  if (c == 0) return p;
  p.t_.reserve(t_.size());
  for (auto& t : t_) p.t_.push_back({t.m * m, t.c * c});
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (a.t_.size() == 1) return b.mul_term(a.t_[0].c, a.t_[0].m);
  if (b.t_.size() == 1) return a.mul_term(b.t_[0].c, b.t_[0].m);
  std::vector<Term> all;
  all.reserve(a.t_.size() * b.t_.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) all.push_back({x.m * y.m, x.c * y.c});
  std::sort(all.begin(), all.end(), [](const Term& x, const Term& y) { return y.m < x.m; });
  Poly p;
  for (auto& t : all) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
    } else {
      if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionError("division by zero polynomial");
  if (b.is_one()) return a;
  if (b.t_.size() == 1) {
    Poly p;
    p.t_.reserve(a.t_.size());
    const Term& d = b.t_[0];
    for (auto& t : a.t_) {
      if (!d.m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), d.c.get_mpz_t()))
        throw DivisionError("inexact polynomial division");
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), d.c.get_mpz_t());
      p.t_.push_back({t.m / d.m, std::move(c)});
    }
    return p;
  }
  Poly r = a, q;
  while (!r.is_zero()) {
    const Term& lt = r.t_[0];
    if (!b.lm().divides(lt.m) || !mpz_divisible_p(lt.c.get_mpz_t(), b.lc().get_mpz_t()))
      throw DivisionError("inexact polynomial division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lt.c.get_mpz_t(), b.lc().get_mpz_t());
    Mono m = lt.m / b.lm();
    r -= b.mul_term(c, m);
    q.t_.push_back({m, std::move(c)});  // quotient terms arrive in decreasing order
  }
  return q;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Mono Poly::mono_content() const {
  if (t_.empty()) return Mono{};
  Mono m = t_[0].m;
  for (auto& t : t_) m = Mono::min(m, t.m);
  return m;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Poly> Poly::coeffs_in(Var v) const {
  std::vector<Poly> cs(degree(v) + 1);
  Mono unit = Mono::var(v);
  for (auto& t : t_) {
    unsigned e = t.m.exp(v);
    Mono rest{t.m.bits - e * unit.bits};
    cs[e].t_.push_back({rest, t.c});
  }
  return cs;
}

Poly Poly::from_coeffs(Var v, const std::vector<Poly>& cs) {
  Poly p;
  for (std::size_t e = 0; e < cs.size(); ++e)
    if (!cs[e].is_zero()) p += cs[e].mul_term(1, Mono::var(v, unsigned(e)));
  return p;
}

namespace {

Poly positive(Poly p) {
  if (!p.is_zero() && p.lc() < 0) p = -p;
  return p;
}

Poly gcd_general(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_general(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly prem(Poly a, const Poly& b, Var v) {
  auto bc = b.coeffs_in(v);
  unsigned db = unsigned(bc.size() - 1);
  const Poly& lcb = bc.back();
  while (!a.is_zero()) {
    unsigned da = a.degree(v);
    if (da < db) break;
    Poly lca = a.coeffs_in(v)[da];
    a = lcb * a - (lca * b).mul_term(1, Mono::var(v, da - db));
  }
  return a;
}

// a, b: integer content 1, no monomial factor, both nonconstant.
Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a == b || a == -b) return positive(a);
  unsigned ua = a.used_vars(), ub = b.used_vars();
  for (int i = 0; i < kNumVars; ++i) {
    Var v = Var(i);
    bool ina = ua >> i & 1, inb = ub >> i & 1;
    if (ina && !inb) return gcd_general(content_in(a, v), b);
    if (inb && !ina) return gcd_general(a, content_in(b, v));
  }
  // Same variable set: choose main variable of least degree.
  Var v = Var::q;
  unsigned best = ~0u;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(ua >> i & 1)) continue;
    unsigned d = std::max(a.degree(Var(i)), b.degree(Var(i)));
    if (d < best) best = d, v = Var(i);
  }
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly cg = gcd_general(ca, cb);
  Poly A = Poly::divexact(a, ca), B = Poly::divexact(b, cb);
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  Poly g;
  for (;;) {
    Poly R = prem(A, B, v);
    if (R.is_zero()) {
      g = B;
      break;
    }
    if (R.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    A = std::move(B);
    B = Poly::divexact(R, content_in(R, v));
  }
  g = Poly::divexact(g, content_in(g, v));
  return positive(cg * positive(g));
}

Poly gcd_general(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly(g);
  }
  Mono ma = a.mono_content(), mb = b.mono_content();
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly A = Poly::divexact(a, Poly::monomial(ca, ma));
  Poly B = Poly::divexact(b, Poly::monomial(cb, mb));
  Poly g = (A.is_constant() || B.is_constant()) ? Poly(1) : gcd_primitive(A, B);
  return positive(g.mul_term(cg, Mono::min(ma, mb)));
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) { return gcd_general(a, b); }

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : t_) {
    bool neg = t.c < 0;
    mpz_class a = abs(t.c);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? "-" : "+";
    first = false;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.m.exp(Var(i));
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(Var(i));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

std::size_t Poly::hash() const {
  std::size_t h = t_.size();
  for (auto& t : t_) {
    h = h * 1315423911u ^ std::hash<uint64_t>()(t.m.bits);
    h = h * 2654435761u ^ std::size_t(mpz_get_si(t.c.get_mpz_t()));
  }
  return h;
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

Fraction::Fraction(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw DivisionError("zero denominator");
  canonicalize();
}

void Fraction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_one()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::divexact(num_, g);
      den_ = Poly::divexact(den_, g);
    }
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class Fraction::to_mpq() const {
  mpq_class q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_, NoReduce{}); }

Fraction& Fraction::operator+=(const Fraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  Poly g = Poly::gcd(den_, o.den_);
  Poly d1 = Poly::divexact(den_, g), d2 = Poly::divexact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  if (!g.is_one()) {
    Poly h = Poly::gcd(num_, g);
    if (!h.is_one()) {
      num_ = Poly::divexact(num_, h);
      den_ = Poly::divexact(den_, h);
    }
  }
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  if (is_zero() || o.is_zero()) return *this = Fraction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = Poly::gcd(num_, o.den_), g2 = Poly::gcd(o.num_, den_);
  num_ = Poly::divexact(num_, g1) * Poly::divexact(o.num_, g2);
  den_ = Poly::divexact(den_, g2) * Poly::divexact(o.den_, g1);
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Fraction Fraction::inverse() const {
  if (is_zero()) throw DivisionError("division by zero");
  Fraction f(den_, num_, NoReduce{});
  if (f.den_.lc() < 0) {
    f.num_ = -f.num_;
    f.den_ = -f.den_;
  }
  return f;
}

Fraction& Fraction::operator/=(const Fraction& o) { return *this *= o.inverse(); }

Fraction Fraction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return Fraction(num_.pow(unsigned(e)), den_.pow(unsigned(e)), NoReduce{});
}

std::string Fraction::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  bool bare = den_.size() == 1 &&
              (den_.is_constant() ||
               (den_.lc() == 1 && std::has_single_bit(den_.used_vars())));
  std::string d = bare ? den_.str() : "(" + den_.str() + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}
  Fraction parse() {
    Fraction f = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return f;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  [[noreturn]] void fail(const std::string& m) {
    throw ParseError("cannot parse \"" + s_ + "\": " + m);
  }
  Fraction expr() {
    Fraction acc;
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++p_;
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      c = peek();
      if (c == '+') {
        ++p_;
        acc += term();
      } else if (c == '-') {
        ++p_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q' || c == 'r' ||
           c == 'z';
  }
  Fraction term() {
    Fraction acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++p_;
        acc *= factor();
      } else if (c == '/') {
        ++p_;
        Fraction d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }
  Fraction factor() {
    char c = peek();
    if (c == '-') {
      ++p_;
      return -factor();
    }
    Fraction b = base();
    if (peek() == '^') {
      ++p_;
      char s = peek();
      bool neg = false;
      if (s == '-' || s == '+') {
        neg = s == '-';
        ++p_;
      }
      long e = integer();
      if (neg) e = -e;
      if (e < 0 && b.is_zero()) fail("zero to a negative power");
      b = b.pow(e);
    }
    return b;
  }
  long integer() {
    skip();
    std::size_t st = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (st == p_) fail("expected integer exponent");
    if (p_ - st > 6) fail("exponent too large");
    return std::stol(s_.substr(st, p_ - st));
  }
  Fraction base() {
    char c = peek();
    if (c == '(') {
      ++p_;
      Fraction f = expr();
      if (peek() != ')') fail("missing ')'");
      ++p_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return Fraction(mpz_class(s_.substr(st, p_ - st)));
    }
    if (c == 'q' || c == 'r' || c == 'z') {
      ++p_;
      if (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_])))
        fail("unknown identifier");
      return Fraction::var(c == 'q' ? Var::q : c == 'r' ? Var::r : Var::z);
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  const std::string& s_;
  std::size_t p_ = 0;
};

}  // namespace

Fraction parse_fraction(const std::string& s) { return Parser(s).parse(); }

}  // namespace cellalg
