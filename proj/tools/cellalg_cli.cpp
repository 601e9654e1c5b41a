// cellalg: command-line front end for the cell module computations.
// Exit codes: 0 ok, 2 bad input, 3 pole at the specialization.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cellalg/cache.hpp"
#include "cellalg/specsim.hpp"
#include "cellalg/towers.hpp"
#include "json.hpp"

using namespace cellalg;
using nlohmann::json;

namespace {

struct Options {
  std::string algebra, lambda, mu, spec, cache_dir;
  int n = -1;
  bool json = false;
};

AlgebraKind kind_of(const Options& o) {
  if (o.algebra == "bmw") return AlgebraKind::Bmw;
  if (o.algebra == "brauer") return AlgebraKind::Brauer;
  if (o.algebra.empty()) throw std::invalid_argument("--algebra is required");
  throw std::invalid_argument("unknown algebra '" + o.algebra + "' (bmw or brauer)");
}

int need_n(const Options& o) {
  if (o.n < 0) throw std::invalid_argument("--n is required");
  return o.n;
}

// "2,1"; "", "0" and "()" give the empty partition.
Partition parse_partition(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), s.end());
  std::vector<int> parts;
  if (s.empty() || s == "0") return Partition{};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int p = 0;
    try {
      p = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || p <= 0) throw std::invalid_argument("malformed partition '" + s + "'");
    parts.push_back(p);
  }
  return Partition(parts);
}

Partition need_lambda(const Options& o, const std::string& flag, const std::string& text, int n) {
  if (text.empty()) throw std::invalid_argument(flag + " is required");
  Partition p = parse_partition(text);
  if (n >= 0 && (p.size() > n || (n - p.size()) % 2))
    throw std::invalid_argument(p.str() + " does not label a cell module at n=" + std::to_string(n) +
                                " (need |lambda| <= n with n - |lambda| even)");
  (void)o;
  return p;
}

Specialization spec_of(const Options& o, AlgebraKind k) {
  return o.spec.empty() ? Specialization::symbolic(k) : Specialization::parse(o.spec, k);
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& x : row) r.push_back(x.str());
    a.push_back(std::move(r));
  }
  return a;
}

json to_json(const std::vector<Fraction>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.str());
  return a;
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  for (auto& row : m) {
    os << " ";
    for (auto& x : row) os << " " << x.str();
    os << "\n";
  }
  return os.str();
}

long hook_count(const Partition& p) {
  // |Std(p)| by the hook length formula
  mpz_class num = 1, den = 1;
  int m = p.size();
  for (int k = 2; k <= m; ++k) num *= k;
  std::vector<int> conj;
  for (int j = 0; j < p.row(0); ++j) {
    int c = 0;
    while (p.row(c) > j) ++c;
    conj.push_back(c);
  }
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.row(i); ++j) den *= (p.row(i) - j - 1) + (conj[j] - i - 1) + 1;
  return mpz_class(num / den).get_si();
}

long coset_count(int f, int n) {
  // n! / (2^f f! (n-2f)!)
  mpz_class r = 1;
  for (int k = n - 2 * f + 1; k <= n; ++k) r *= k;
  for (int k = 1; k <= f; ++k) r /= 2 * k;
  return r.get_si();
}

void preload(const Options& o, AlgebraKind k, const Partition& lam, int n, bool lower) {
  if (o.cache_dir.empty()) return;
  load_or_compute(o.cache_dir, k, lam, n, nullptr, &std::cerr);
  if (lower && n > 1)
    for (auto& mu : shapes_at(n - 1)) load_or_compute(o.cache_dir, k, mu, n - 1, nullptr, &std::cerr);
}

json cmd_dim(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  json cells = json::array();
  long total = 0;
  std::vector<Partition> shapes = o.lambda.empty() ? shapes_at(n) : std::vector<Partition>{need_lambda(o, "--lambda", o.lambda, n)};
  for (auto& lam : shapes) {
    long d = hook_count(lam) * coset_count((n - lam.size()) / 2, n);
    total += d * d;
    cells.push_back({{"lambda", lam.parts}, {"dim", d}});
    out << lam.str() << " " << d << "\n";
  }
  json r{{"cells", cells}, {"algebra", algebra_name(k)}};
  if (o.lambda.empty()) {
    r["sum_of_squares"] = total;
    r["double_factorial"] = double_factorial_odd(n);
    out << "sum of squares " << total << " = (2n-1)!! = " << double_factorial_odd(n) << "\n";
  }
  return r;
}

json cmd_basis(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, n);
  preload(o, k, lam, n, false);
  auto pb = build_path_basis(k, lam, n);
  json paths = json::array();
  for (std::size_t t = 0; t < pb->paths.size(); ++t) {
    json terms = json::array();
    std::string line;
    for (auto& [c, w] : pb->b[t]) {
      terms.push_back({{"coeff", c.str()}, {"word", word_str(w, k)}});
      line += (line.empty() ? "" : " + ") + ("(" + c.str() + ")") + (w.empty() ? "" : " " + word_str(w, k));
    }
    paths.push_back({{"path", pb->paths[t].str()}, {"b", terms}});
    out << pb->paths[t].str() << "  m_lambda * [" << line << "]\n";
  }
  return {{"paths", paths}, {"dim", pb->paths.size()}};
}

json cmd_gram(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, n);
  Specialization s = spec_of(o, k);
  Matrix g = CellModule::get(k, lam, n)->gram();
  Normalizer norm;
  if (!s.is_symbolic()) {
    g = map_entries(g, [&](const Fraction& x) { return s.apply(x); });
    if (s.root_of_unity_order()) norm = [&s](const Fraction& x) { return s.normalize(x); };
  }
  Fraction det = determinant(g, norm);
  out << "Gram matrix of S^" << lam.str() << ":\n" << matrix_text(g) << "det = " << det.str() << "\n";
  return {{"matrix", to_json(g)}, {"det", det.str()}, {"rank", rank(g, norm)}};
}

json cmd_transition(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, n);
  preload(o, k, lam, n, false);
  auto pb = build_path_basis(k, lam, n);
  json paths = json::array();
  for (auto& t : pb->paths) paths.push_back(t.str());
  out << "columns:";
  for (auto& t : pb->paths) out << " " << t.str();
  out << "\n" << matrix_text(pb->transition);
  return {{"paths", paths}, {"matrix", to_json(pb->transition)}};
}

json cmd_jm(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, n);
  preload(o, k, lam, n, false);
  auto rep = jm_triangularity(k, lam, n);
  auto pb = build_path_basis(k, lam, n);
  json diag = json::array();
  for (std::size_t t = 0; t < pb->paths.size(); ++t) {
    std::vector<Fraction> col;
    for (auto& d : rep.diagonal) col.push_back(d[t]);
    diag.push_back({{"path", pb->paths[t].str()}, {"contents", to_json(col)}});
    out << pb->paths[t].str() << ":";
    for (auto& x : col) out << " " << x.str();
    out << "\n";
  }
  out << (rep.ok ? "triangular" : "NOT triangular") << "\n";
  for (auto& f : rep.failures) out << "  " << f << "\n";
  return {{"ok", rep.ok}, {"diagonal", diag}, {"failures", rep.failures}};
}

json cmd_filtration(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, n);
  preload(o, k, lam, n, true);
  auto rep = restriction_filtration_check(k, lam, n);
  json blocks = json::array();
  for (auto& [mu, d] : rep.blocks) {
    blocks.push_back({{"mu", mu.parts}, {"dim", d}});
    out << "N^" << mu.str() << " / N^" << mu.str() << "- : dim " << d << "\n";
  }
  out << (rep.ok ? "filtration verified" : "filtration FAILED") << "\n";
  for (auto& f : rep.failures) out << "  " << f << "\n";
  return {{"ok", rep.ok}, {"blocks", blocks}, {"failures", rep.failures}};
}

json verdict_json(const Verdict& v, std::ostream& out) {
  json w = json::array();
  out << outcome_name(v.outcome) << "\n";
  for (auto& p : v.paths) {
    w.push_back({{"s", p.s.str()}, {"t", p.t.str()}, {"content", to_json(p.content)}});
    out << "  " << p.s.str() << " ~ " << p.t.str() << " :";
    for (auto& x : p.content) out << " " << x.str();
    out << "\n";
  }
  json r = json::array();
  for (auto& x : v.ranks) {
    r.push_back({{"lambda", x.lambda.parts}, {"rank", x.rank}, {"dim", x.dim}, {"radical_dim", x.dim - x.rank}});
    out << "  S^" << x.lambda.str() << ": rank " << x.rank << " of " << x.dim << "\n";
  }
  return {{"outcome", outcome_name(v.outcome)}, {"path_witnesses", w}, {"gram_ranks", r}};
}

json cmd_certify(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  Specialization s = spec_of(o, k);
  json r = verdict_json(certify(k, need_n(o), s), out);
  if (k == AlgebraKind::Bmw) {
    auto note = necessary_condition_note(s);
    r["necessary_condition"] = note.str();
    out << "parameters: " << note.str() << "\n";
  }
  return r;
}

json cmd_gram_certify(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  return verdict_json(gram_rank_certify(k, need_n(o), spec_of(o, k)), out);
}

json cmd_hom(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  Partition lam = need_lambda(o, "--lambda", o.lambda, -1);
  Partition mu = need_lambda(o, "--mu", o.mu, -1);
  bool holds = hom_obstruction(k, lam, mu, spec_of(o, k));
  out << (holds ? "identity holds: Hom may be nonzero" : "identity fails: Hom(S^" + lam.str() + ", S^" + mu.str() + ") = 0")
      << "\n";
  return {{"identity_holds", holds}, {"hom_vanishes", !holds}};
}

json cmd_conjecture(const Options& o, std::ostream& out) {
  auto rep = conjecture_evidence(need_n(o));
  out << rep.str() << "\n";
  json roots = json::array();
  for (auto& [x, m] : rep.roots) roots.push_back({{"root", x.get_str()}, {"multiplicity", m}});
  json pred = json::array();
  for (auto& x : rep.predicted) pred.push_back(x.get_str());
  return {{"lambda", rep.lambda.parts}, {"det", rep.det.str()},       {"roots", roots},
          {"remainder", rep.remainder.str()}, {"predicted_roots", pred}, {"k", rep.k},
          {"agree", rep.agree}};
}

json cmd_cache(const Options& o, std::ostream& out) {
  AlgebraKind k = kind_of(o);
  int n = need_n(o);
  if (o.cache_dir.empty()) throw std::invalid_argument("--cache-dir is required");
  std::vector<Partition> shapes = o.lambda.empty() ? shapes_at(n) : std::vector<Partition>{need_lambda(o, "--lambda", o.lambda, n)};
  json files = json::array();
  for (auto& lam : shapes) {
    CacheStatus st;
    load_or_compute(o.cache_dir, k, lam, n, &st, &std::cerr);
    std::string name = cache_file_name(k, lam, n);
    files.push_back({{"lambda", lam.parts}, {"file", name}, {"status", cache_status_name(st)}});
    out << name << " " << cache_status_name(st) << "\n";
  }
  return {{"files", files}, {"version", kCacheVersion}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell modules, Gram matrices and semisimplicity checks for B-M-W and Brauer algebras"};
  app.require_subcommand(1);
  Options o;
  using Handler = json (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> cmds;
  auto add = [&](const char* name, const char* help, Handler h, bool lambda, bool spec) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--algebra", o.algebra, "bmw or brauer");
    s->add_option("--n", o.n, "number of strands");
    if (lambda) s->add_option("--lambda", o.lambda, "partition, comma separated parts");
    if (spec) s->add_option("--spec", o.spec, "specialization, e.g. z=4 or r=-q^-3");
    s->add_flag("--json", o.json, "print a JSON report");
    s->add_option("--cache-dir", o.cache_dir, "directory for cached action matrices");
    cmds.emplace_back(s, h);
    return s;
  };
  add("dim", "cell module dimensions and the (2n-1)!! check", cmd_dim, true, false);
  add("basis", "path basis m_t = m_lambda b_t", cmd_basis, true, false);
  add("gram", "Gram matrix and determinant", cmd_gram, true, true);
  add("transition", "cell module coordinates of the path basis", cmd_transition, true, false);
  add("jm", "Jucys-Murphy triangularity in the path basis", cmd_jm, true, false);
  add("filtration", "restriction filtration check", cmd_filtration, true, false);
  add("certify", "content criterion for semisimplicity", cmd_certify, false, true);
  add("gram-certify", "Gram rank criterion for semisimplicity", cmd_gram_certify, false, true);
  add("hom", "Hom obstruction between cell modules", cmd_hom, true, true)
      ->add_option("--mu", o.mu, "second partition");
  add("conjecture", "Brauer Gram determinant against p_k(z)", cmd_conjecture, false, false);
  add("cache", "build or verify cached action matrices", cmd_cache, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto& [sub, handler] : cmds) {
    if (!sub->parsed()) continue;
    auto start = std::chrono::steady_clock::now();
    std::ostringstream text;
    try {
      json result = handler(o, text);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (o.json) {
        json params{{"algebra", o.algebra}, {"n", o.n}, {"lambda", o.lambda}, {"mu", o.mu}, {"spec", o.spec}};
        json report{{"command", sub->get_name()}, {"parameters", params}, {"result", result}, {"seconds", secs}};
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << text.str();
      }
    } catch (const PoleError& e) {
      std::cerr << "error: pole at the specialization: " << e.what() << "\n";
      return 3;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}
