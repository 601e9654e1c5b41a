#include "cellalg/specsim.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cellalg/towers.hpp"

namespace cellalg {

namespace {

int content_sum(const Partition& p) {
  int s = 0;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.row(i); ++j) s += j - i;
  return s;
}

Normalizer normalizer(const Specialization& s) {
  if (s.root_of_unity_order() == 0) return {};
  return [&s](const Fraction& x) { return s.normalize(x); };
}

QPoly linear(long a) { return QPoly({mpq_class(a), mpq_class(1)}); }  // z + a

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::CertifiedSemisimple: return "CertifiedSemisimple";
    case Outcome::Inconclusive: return "Inconclusive";
    case Outcome::CertifiedNotSemisimple: return "CertifiedNotSemisimple";
  }
  return "?";
}

ContentVector content_vector(AlgebraKind kind, const BrattePath& t, const Specialization& s) {
  ContentVector cv{t, {}};
  for (int k = 1; k <= t.n(); ++k) cv.values.push_back(s.normalize(s.apply(jm_content(kind, t, k))));
  return cv;
}

Verdict certify(AlgebraKind kind, int n, const Specialization& s) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<ContentVector> all;
  for (auto& lam : shapes_at(n)) {
    auto paths = enumerate_paths(lam, n);
    std::sort(paths.begin(), paths.end(), path_before);
    for (auto& t : paths) all.push_back(content_vector(kind, t, s));
  }
  // exact comparison through the canonical string of each entry
  std::map<std::vector<std::string>, std::vector<int>> groups;
  for (int i = 0; i < int(all.size()); ++i) {
    std::vector<std::string> key;
    for (auto& v : all[i].values) key.push_back(v.str());
    groups[key].push_back(i);
  }
  std::vector<std::pair<int, int>> bad;
  for (auto& [key, idx] : groups)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (all[idx[a]].path.shape() != all[idx[b]].path.shape()) bad.emplace_back(idx[a], idx[b]);
  std::sort(bad.begin(), bad.end());
  Verdict v;
  for (auto [a, b] : bad) v.paths.push_back({all[a].path, all[b].path, all[a].values});
  v.outcome = bad.empty() ? Outcome::CertifiedSemisimple : Outcome::Inconclusive;
  return v;
}

Verdict gram_rank_certify(AlgebraKind kind, int n, const Specialization& s) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Verdict v;
  auto norm = normalizer(s);
  for (auto& lam : shapes_at(n)) {
    auto S = CellModule::get(kind, lam, n);
    Matrix g = map_entries(S->gram(), [&](const Fraction& x) { return s.apply(x); });
    int r = int(rank(g, norm));
    v.ranks.push_back({lam, r, S->dim()});
    if (r < S->dim()) v.outcome = Outcome::CertifiedNotSemisimple;
  }
  return v;
}

bool hom_obstruction(AlgebraKind kind, const Partition& lambda, const Partition& mu, const Specialization& s) {
  int a = lambda.size(), b = mu.size();
  if (a < b || (a - b) % 2) throw std::invalid_argument("need |lambda| >= |mu| with equal parity");
  int d = (a - b) / 2;
  int cl = content_sum(lambda), cm = content_sum(mu);
  if (kind == AlgebraKind::Bmw) {
    Fraction q = Fraction::var(Var::q), r = Fraction::var(Var::r);
    return s.normalize(s.apply(r.pow(2 * d) * q.pow(2 * cl))) == s.normalize(s.apply(q.pow(2 * cm)));
  }
  return s.normalize(s.apply(Fraction(cl - cm))) == s.normalize(s.apply(Fraction(d) * (Fraction(1) - Fraction::var(Var::z))));
}

std::string ConditionNote::str() const {
  std::ostringstream os;
  if (root_of_unity) os << "q is a root of unity of order " << order;
  if (r_power) {
    if (root_of_unity) os << "; ";
    os << "r = " << (sign < 0 ? "-" : "") << "q^" << k;
  }
  if (!root_of_unity && !r_power) os << "no condition matched";
  return os.str();
}

ConditionNote necessary_condition_note(const Specialization& s, int bound) {
  if (s.kind() != AlgebraKind::Bmw) throw std::invalid_argument("the condition concerns the B-M-W parameters");
  ConditionNote note;
  Fraction q = s.image(Var::q), r = s.image(Var::r);
  auto eq = [&](const Fraction& x, const Fraction& y) { return s.normalize(x) == s.normalize(y); };
  if (s.root_of_unity_order() > 0) {
    note.root_of_unity = true;
    note.order = s.root_of_unity_order();
  } else if (q.is_constant()) {
    Fraction p(1);
    for (int m = 1; m <= bound && !note.root_of_unity; ++m) {
      p *= q;
      if (p == Fraction(1)) note.root_of_unity = true, note.order = m;
    }
  }
  for (int a = 0; a <= bound && !note.r_power; ++a)
    for (int k : {-a, a})
      for (int sign : {1, -1})
        if (!note.r_power && eq(r, Fraction(sign) * q.pow(k))) note.r_power = true, note.sign = sign, note.k = k;
  return note;
}

QPoly conjecture_poly(int i) {
  if (i < 1) throw std::invalid_argument("p_i needs i >= 1");
  QPoly p = linear(2) * linear(-1);
  for (int j = 2; j <= i; ++j) {
    p = linear(2 * j) * linear(-j) * p;
    if (j % 2) p = linear(j - 2) * p;
  }
  return p;
}

std::string ConjectureReport::str() const {
  std::ostringstream os;
  os << "n=" << n << " S^" << lambda.str() << " det = " << det.str() << "\n  rational roots:";
  for (auto& [x, m] : roots) os << " " << x.get_str() << (m > 1 ? "^" + std::to_string(m) : "");
  if (remainder.degree() > 0) os << "\n  remaining factor: " << remainder.str();
  os << "\n  predicted (p_" << k << (n % 2 ? "" : ", z") << "):";
  for (auto& x : predicted) os << " " << x.get_str();
  os << "\n  " << (agree ? "agreement" : "DISCREPANCY");
  return os.str();
}

ConjectureReport conjecture_evidence(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  ConjectureReport rep;
  rep.n = n, rep.k = n / 2;
  rep.lambda = n % 2 ? Partition{1} : Partition{};
  rep.det = determinant(CellModule::get(AlgebraKind::Brauer, rep.lambda, n)->gram());
  if (!rep.det.den().is_constant()) throw std::logic_error("Gram determinant is not a polynomial");
  QPoly p = QPoly::from_poly(rep.det.num(), Var::z) * QPoly::constant(mpq_class(1) / mpq_class(rep.det.den().constant_value()));
  RationalRoots rr = rational_roots(p);
  rep.roots = rr.roots;
  rep.remainder = rr.remainder;
  for (auto& [x, m] : rational_roots(conjecture_poly(rep.k)).roots) rep.predicted.push_back(x);
  if (n % 2 == 0) rep.predicted.push_back(0);
  std::sort(rep.predicted.begin(), rep.predicted.end());
  rep.predicted.erase(std::unique(rep.predicted.begin(), rep.predicted.end()), rep.predicted.end());
  std::vector<mpq_class> got;
  for (auto& [x, m] : rep.roots) got.push_back(x);
  rep.agree = got == rep.predicted && rep.remainder.degree() <= 0;
  return rep;
}

}  // namespace cellalg
