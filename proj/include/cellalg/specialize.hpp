#pragma once
// Univariate rational polynomials and parameter specializations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellalg/poly.hpp"

namespace cellalg {

enum class AlgebraKind { Bmw, Brauer };
const char* algebra_name(AlgebraKind k);

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
  static QPoly constant(const mpq_class& a) { return QPoly({a}); }
  static QPoly x() { return QPoly({0, 1}); }
  // Requires p to involve only variable v.
  static QPoly from_poly(const Poly& p, Var v);
  Poly to_poly(Var v, mpz_class* denom) const;  // integer poly, common denominator

  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lc() const { return c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  QPoly operator%(const QPoly& b) const;
  QPoly monic() const;
  static QPoly gcd(const QPoly& a, const QPoly& b);
  // Inverse of a modulo m (requires gcd 1).
  static QPoly invmod(const QPoly& a, const QPoly& m);
  QPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  std::string str(const char* var = "z") const;

  static QPoly cyclotomic(int m);

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Rational roots with multiplicity, plus the cofactor free of rational roots.
struct RationalRoots {
  std::vector<std::pair<mpq_class, int>> roots;  // increasing
  QPoly remainder;                                // monic
  mpq_class leading;                              // leading coefficient of the input
};
RationalRoots rational_roots(const QPoly& p);

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class SpecializationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A homomorphism from the coefficient ring into a field: either the identity
// (symbolic), a substitution of variables by fractions in the remaining
// variables, or in addition q mapped to a primitive m-th root of unity.
class Specialization {
 public:
  static Specialization symbolic(AlgebraKind k);
  // Comma separated assignments such as "z=4", "r=-q^-3", "q=3/2,r=2" or
  // "q=zeta5" (q a primitive fifth root of unity).
  static Specialization parse(const std::string& spec, AlgebraKind k);
  static Specialization from_map(std::map<Var, Fraction> images, AlgebraKind k,
                                 int root_order = 0);

  AlgebraKind kind() const { return kind_; }
  bool is_symbolic() const { return images_.empty() && root_order_ == 0; }
  int root_of_unity_order() const { return root_order_; }
  const std::map<Var, Fraction>& images() const { return images_; }
  std::string str() const;

  // Image of x; throws PoleError when a denominator vanishes.
  Fraction apply(const Fraction& x) const;
  // Canonical form of a value already in the target field (cyclotomic reduction).
  Fraction normalize(const Fraction& x) const;
  Fraction image(Var v) const { return apply(Fraction::var(v)); }

 private:
  Fraction eval_poly(const Poly& p) const;
  void check_units() const;

  AlgebraKind kind_ = AlgebraKind::Bmw;
  std::map<Var, Fraction> images_;
  int root_order_ = 0;
  QPoly cyclo_;
};

}  // namespace cellalg
