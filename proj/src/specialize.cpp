#include "cellalg/specialize.hpp"

#include <algorithm>
#include <sstream>

namespace cellalg {

const char* algebra_name(AlgebraKind k) { return k == AlgebraKind::Bmw ? "bmw" : "brauer"; }

// ---------------------------------------------------------------- QPoly

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_poly(const Poly& p, Var v) {
  std::vector<mpq_class> c(p.degree(v) + 1);
  for (auto& t : p.terms()) {
    if (t.m.bits != Mono::var(v, t.m.exp(v)).bits)
      throw SpecializationError("polynomial involves more than one variable");
    c[t.m.exp(v)] = t.c;
  }
  return QPoly(std::move(c));
}

Poly QPoly::to_poly(Var v, mpz_class* denom) const {
  mpz_class l = 1;
  for (auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  Poly p;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class num = c_[i].get_num() * (l / c_[i].get_den());
    p += Poly::monomial(num, Mono::var(v, unsigned(i)));
  }
  if (denom) *denom = l;
  return p;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPoly(std::move(c));
}
QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& a : p.c_) a = -a;
  return p;
}
QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }
QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw DivisionError("polynomial division by zero");
  r = a;
  std::vector<mpq_class> qc(std::max(0, a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int sh = r.degree() - b.degree();
    mpq_class f = r.lc() / b.lc();
    qc[sh] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + sh] -= f * b.c_[i];
    r.trim();
  }
  q = QPoly(std::move(qc));
}

QPoly QPoly::operator%(const QPoly& b) const {
  QPoly q, r;
  divmod(*this, b, q, r);
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly p = *this;
  mpq_class l = lc();
  for (auto& a : p.c_) a /= l;
  return p;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly QPoly::invmod(const QPoly& a, const QPoly& m) {
  // Extended Euclid keeping only the coefficient of a.
  QPoly r0 = m, r1 = a % m, s0, s1 = constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DivisionError("not invertible modulo");
  QPoly inv = s0 * constant(1 / r0.lc());
  return inv % m;
}

QPoly QPoly::derivative() const {
  std::vector<mpq_class> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * int(i));
  return QPoly(std::move(c));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

std::string QPoly::str(const char* var) const {
  mpz_class d;
  Poly p = to_poly(Var::z, &d);
  std::string s = p.str();
  if (std::string(var) != "z") std::replace(s.begin(), s.end(), 'z', var[0]);
  if (d != 1) s = "(" + s + ")/" + d.get_str();
  return s;
}

QPoly QPoly::cyclotomic(int m) {
  std::vector<mpq_class> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  QPoly p(std::move(c));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) {
      QPoly q, r;
      divmod(p, cyclotomic(d), q, r);
      p = q;
    }
  return p;
}

namespace {

int sign_of(const mpq_class& a) { return sgn(a); }

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (auto& p : seq) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RationalRoots rational_roots(const QPoly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  RationalRoots out;
  out.leading = p0.lc();
  QPoly p = p0.monic();
  std::vector<mpq_class> candidates;
  int zero_mult = 0;
  while (p.degree() > 0 && p.coeffs()[0] == 0) {
    ++zero_mult;
    std::vector<mpq_class> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = QPoly(std::move(c));
  }
  if (zero_mult) candidates.push_back(0);
  if (p.degree() > 0) {
    QPoly s = p;
    QPoly g = QPoly::gcd(p, p.derivative());
    if (g.degree() > 0) {
      QPoly q, r;
      QPoly::divmod(p, g, q, r);
      s = q.monic();
    }
    // integer scaling: rational roots of s have denominators dividing L
    mpz_class den;
    Poly sp = s.to_poly(Var::z, &den);
    mpz_class L = abs(sp.lc());
    std::vector<QPoly> sturm{s, s.derivative()};
    while (sturm.back().degree() > 0) {
      QPoly r = sturm[sturm.size() - 2] % sturm.back();
      if (r.is_zero()) break;
      sturm.push_back(-r);
    }
    mpq_class bound = 0;
    for (int i = 0; i < s.degree(); ++i) bound = std::max(bound, mpq_class(abs(s.coeffs()[i])));
    bound += 1;
    struct Iv {
      mpq_class lo, hi;
    };
    std::vector<Iv> work{{-bound, bound}};
    mpq_class width_goal(1, L * 2);
    while (!work.empty()) {
      Iv iv = work.back();
      work.pop_back();
      int cnt = sign_changes(sturm, iv.lo) - sign_changes(sturm, iv.hi);
      if (cnt == 0) continue;
      if (cnt == 1 && iv.hi - iv.lo < width_goal) {
        // at most one multiple of 1/L in (lo, hi]
        mpq_class t = iv.lo * L;
        mpz_class k = t.get_num() / t.get_den();  // truncation
        for (mpz_class j = k - 1; j <= k + 2; ++j) {
          mpq_class c(j, L);
          c.canonicalize();
          if (c > iv.lo && c <= iv.hi && s.eval(c) == 0) candidates.push_back(c);
        }
        continue;
      }
      mpq_class mid = (iv.lo + iv.hi) / 2;
      work.push_back({iv.lo, mid});
      work.push_back({mid, iv.hi});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  QPoly rest = p0.monic();
  for (auto& c : candidates) {
    QPoly lin({-c, 1});
    int mult = 0;
    for (;;) {
      QPoly q, r;
      QPoly::divmod(rest, lin, q, r);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    out.roots.push_back({c, mult});
  }
  out.remainder = rest.monic();
  return out;
}

// ---------------------------------------------------------------- Specialization

Specialization Specialization::symbolic(AlgebraKind k) {
  Specialization s;
  s.kind_ = k;
  return s;
}

Specialization Specialization::from_map(std::map<Var, Fraction> images, AlgebraKind k,
                                        int root_order) {
  Specialization s;
  s.kind_ = k;
  for (auto& [v, f] : images) {
    if (k == AlgebraKind::Brauer && v != Var::z)
      throw SpecializationError("the Brauer algebra has the single parameter z");
    if (k == AlgebraKind::Bmw && v == Var::z)
      throw SpecializationError("z is not a parameter of the B-M-W algebra");
    unsigned allowed = k == AlgebraKind::Bmw ? 0b011u : 0b100u;
    if (f.used_vars() & ~allowed) throw SpecializationError("image uses a foreign variable");
  }
  if (root_order) {
    if (k != AlgebraKind::Bmw) throw SpecializationError("roots of unity apply to q only");
    if (root_order < 1 || root_order > 200) throw SpecializationError("root order out of range");
    images.erase(Var::q);
    s.root_order_ = root_order;
    s.cyclo_ = QPoly::cyclotomic(root_order);
  }
  // Resolve images that mention other substituted variables.
  s.images_ = images;
  for (int round = 0; round < kNumVars + 1; ++round) {
    bool changed = false;
    for (auto& [v, f] : s.images_) {
      unsigned mask = 0;
      for (auto& [w, g] : s.images_) mask |= 1u << int(w);
      if (f.used_vars() & mask) {
        Specialization t = s;
        Fraction g = t.apply(f);
        if (g != f) f = g, changed = true;
      }
    }
    if (!changed) break;
    if (round == kNumVars) throw SpecializationError("cyclic substitution");
  }
  if (s.root_order_) {
    for (auto& [v, f] : s.images_)
      if (f.used_vars() & ~1u)
        throw SpecializationError("with q a root of unity every other parameter must be given in q");
    if (!s.images_.count(Var::r))
      throw SpecializationError("with q a root of unity r must be assigned as well");
    for (auto& [v, f] : s.images_) f = s.normalize(f);
  }
  s.check_units();
  return s;
}

Specialization Specialization::parse(const std::string& spec, AlgebraKind k) {
  std::map<Var, Fraction> images;
  int root = 0;
  std::stringstream ss(spec);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto trim = [](std::string x) {
      x.erase(0, x.find_first_not_of(" \t"));
      x.erase(x.find_last_not_of(" \t") + 1);
      return x;
    };
    item = trim(item);
    if (item.empty()) continue;
    any = true;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw SpecializationError("expected var=value in \"" + item + "\"");
    std::string name = trim(item.substr(0, eq)), rhs = trim(item.substr(eq + 1));
    Var v;
    if (name == "q")
      v = Var::q;
    else if (name == "r")
      v = Var::r;
    else if (name == "z")
      v = Var::z;
    else
      throw SpecializationError("unknown parameter \"" + name + "\"");
    if (images.count(v) || (v == Var::q && root)) throw SpecializationError("parameter assigned twice");
    if (rhs.rfind("zeta", 0) == 0) {
      if (v != Var::q) throw SpecializationError("only q may be a root of unity");
      try {
        root = std::stoi(rhs.substr(4));
      } catch (const std::exception&) {
        throw SpecializationError("malformed root of unity \"" + rhs + "\"");
      }
      continue;
    }
    try {
      images[v] = parse_fraction(rhs);
    } catch (const ParseError& e) {
      throw SpecializationError(e.what());
    }
  }
  if (!any) return symbolic(k);
  return from_map(std::move(images), k, root);
}

Fraction Specialization::eval_poly(const Poly& p) const {
  std::map<std::pair<int, unsigned>, Fraction> powers;
  auto power = [&](Var v, unsigned e) -> Fraction {
    auto key = std::make_pair(int(v), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto im = images_.find(v);
    Fraction base = im == images_.end() ? Fraction::var(v) : im->second;
    Fraction val = base.pow(long(e));
    powers.emplace(key, val);
    return val;
  };
  Fraction sum;
  for (auto& t : p.terms()) {
    Fraction term(t.c);
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.m.exp(Var(i));
      if (e) term *= power(Var(i), e);
    }
    sum += term;
  }
  return sum;
}

Fraction Specialization::normalize(const Fraction& x) const {
  if (!root_order_) return x;
  if (x.used_vars() & ~1u) throw SpecializationError("value outside the cyclotomic field");
  if (x.is_constant()) return x;
  QPoly n = QPoly::from_poly(x.num(), Var::q) % cyclo_;
  QPoly d = QPoly::from_poly(x.den(), Var::q) % cyclo_;
  if (d.is_zero()) throw PoleError("pole at specialization");
  QPoly v = (n * QPoly::invmod(d, cyclo_)) % cyclo_;
  mpz_class den;
  Poly num = v.to_poly(Var::q, &den);
  return Fraction(num, Poly(den));
}

Fraction Specialization::apply(const Fraction& x) const {
  if (is_symbolic()) return x;
  Fraction n = normalize(eval_poly(x.num()));
  Fraction d = normalize(eval_poly(x.den()));
  if (d.is_zero()) throw PoleError("pole at specialization");
  return normalize(n / d);
}

void Specialization::check_units() const {
  if (kind_ != AlgebraKind::Bmw) return;
  try {
    Fraction q = image(Var::q), r = image(Var::r);
    if (q.is_zero()) throw SpecializationError("q must map to a unit");
    if (r.is_zero()) throw SpecializationError("r must map to a unit");
    if (normalize(q - normalize(q.inverse())).is_zero())
      throw SpecializationError("q - q^-1 must map to a unit");
  } catch (const PoleError&) {
    throw SpecializationError("parameter image has a pole");
  }
}

std::string Specialization::str() const {
  if (is_symbolic()) return "symbolic";
  std::string s;
  if (root_order_) s = "q=zeta" + std::to_string(root_order_);
  for (auto& [v, f] : images_) {
    if (!s.empty()) s += ",";
    s += std::string(var_name(v)) + "=" + f.str();
  }
  return s;
}

}  // namespace cellalg
