#pragma once
// Sparse multivariate polynomials over Z in the fixed variables q, r, z,
// and reduced fractions of them.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <ostream>

namespace cellalg {

enum class Var : int { q = 0, r = 1, z = 2 };
constexpr int kNumVars = 3;
const char* var_name(Var v);

// Exponent vector packed into 16-bit fields, q in the high bits, so that
// integer comparison of the packed word is lex order q > r > z.
struct Mono {
  uint64_t bits = 0;
  static Mono var(Var v, unsigned e = 1) { return Mono{uint64_t(e) << shift(v)}; }
  static constexpr int shift(Var v) { return 32 - 16 * int(v); }
  unsigned exp(Var v) const { return unsigned((bits >> shift(v)) & 0xffffu); }
  bool divides(Mono o) const;
  Mono operator*(Mono o) const { return Mono{bits + o.bits}; }
  Mono operator/(Mono o) const { return Mono{bits - o.bits}; }  // requires divides
  bool operator==(Mono o) const { return bits == o.bits; }
  bool operator<(Mono o) const { return bits < o.bits; }
  static Mono min(Mono a, Mono b);
  bool is_one() const { return bits == 0; }
};

struct Term {
  Mono m;
  mpz_class c;
};

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const mpz_class& c);
  static Poly var(Var v, unsigned e = 1);
  static Poly monomial(const mpz_class& c, Mono m);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }
  bool is_monomial() const { return t_.size() == 1; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const mpz_class& lc() const { return t_.front().c; }
  Mono lm() const { return t_.front().m; }
  mpz_class constant_value() const;  // requires is_constant
  unsigned degree(Var v) const;
  bool uses(Var v) const;
  unsigned used_vars() const;  // bitmask

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mul_term(const mpz_class& c, Mono m) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact division; throws DivisionError if b does not divide a.
  static Poly divexact(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);
  mpz_class content() const;
  Mono mono_content() const;
  Poly pow(unsigned e) const;

  std::string str() const;
  std::size_t hash() const;

  // Coefficients as a polynomial in v: index = exponent.
  std::vector<Poly> coeffs_in(Var v) const;
  static Poly from_coeffs(Var v, const std::vector<Poly>& cs);

 private:
  friend class PolyBuilder;
  std::vector<Term> t_;  // strictly decreasing monomials, nonzero coefficients
};

class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long c) : num_(c), den_(1) {}
  Fraction(const mpz_class& c) : num_(c), den_(1) {}
  Fraction(const mpq_class& c);
  Fraction(const Poly& p) : num_(p), den_(1) {}
  Fraction(const Poly& n, const Poly& d);  // reduces
  static Fraction var(Var v) { return Fraction(Poly::var(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_poly() const { return den_.is_one(); }
  mpq_class to_mpq() const;  // requires is_constant
  unsigned used_vars() const { return num_.used_vars() | den_.used_vars(); }
  // Rough size measure used for pivot selection.
  std::size_t weight() const { return num_.size() + den_.size(); }

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  Fraction inverse() const;
  Fraction pow(long e) const;
  bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }

  std::string str() const;
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  struct NoReduce {};
  Fraction(Poly n, Poly d, NoReduce) : num_(std::move(n)), den_(std::move(d)) {}
  void canonicalize();
  Poly num_, den_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts integers, rationals, q/r/z, + - * / ^ (integer exponents, possibly
// negative), parentheses and implicit multiplication such as "2q".
Fraction parse_fraction(const std::string& s);

// Used by test frameworks and logging.
inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

}  // namespace cellalg

template <>
struct std::hash<cellalg::Fraction> {
  std::size_t operator()(const cellalg::Fraction& f) const { return f.hash(); }
};
