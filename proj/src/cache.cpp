#include "cellalg/cache.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cellalg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kFormat = "cellalg-actions";

std::vector<std::string> variables(AlgebraKind kind) {
  if (kind == AlgebraKind::Bmw) return {"q", "r"};
  return {"z"};
}

AlgebraKind parse_kind(const std::string& s) {
  if (s == "bmw") return AlgebraKind::Bmw;
  if (s == "brauer") return AlgebraKind::Brauer;
  throw std::invalid_argument("unknown algebra " + s);
}

}  // namespace

std::vector<Letter> cache_generators(AlgebraKind kind, int n) {
  std::vector<Letter> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(Letter::t(i));
    if (kind == AlgebraKind::Bmw) out.push_back(Letter::t(i, -1));
    out.push_back(Letter::e(i));
  }
  return out;
}

ActionCache compute_actions(AlgebraKind kind, const Partition& lambda, int n) {
  auto S = CellModule::get(kind, lambda, n);
  ActionCache c{kind, n, lambda, {}};
  for (auto& g : cache_generators(kind, n)) c.generators[g.str(kind)] = S->action_matrix(g);
  return c;
}

std::string serialize(const ActionCache& c) {
  json j;
  j["format"] = kFormat;
  j["version"] = kCacheVersion;
  j["algebra"] = algebra_name(c.kind);
  j["n"] = c.n;
  j["lambda"] = c.lambda.parts;
  j["variables"] = variables(c.kind);
  json gens = json::object();
  for (auto& [name, m] : c.generators) {
    json rows = json::array();
    for (auto& row : m) {
      json r = json::array();
      for (auto& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    gens[name] = std::move(rows);
  }
  j["generators"] = std::move(gens);
  return j.dump(1) + "\n";
}

std::optional<ActionCache> deserialize(const std::string& text, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<ActionCache> {
    if (why) *why = msg;
    return std::nullopt;
  };
  try {
    json j = json::parse(text);
    if (j.value("format", "") != kFormat) return fail("not a cellalg action cache");
    if (j.at("version").get<int>() != kCacheVersion)
      return fail("cache version " + j.at("version").dump() + ", expected " + std::to_string(kCacheVersion));
    ActionCache c;
    c.kind = parse_kind(j.at("algebra").get<std::string>());
    c.n = j.at("n").get<int>();
    c.lambda = Partition(j.at("lambda").get<std::vector<int>>());
    if (j.at("variables").get<std::vector<std::string>>() != variables(c.kind)) return fail("variable set mismatch");
    auto S = CellModule::get(c.kind, c.lambda, c.n);
    std::size_t d = S->dim();
    std::set<std::string> expected;
    for (auto& g : cache_generators(c.kind, c.n)) expected.insert(g.str(c.kind));
    for (auto& [name, rows] : j.at("generators").items()) {
      if (!expected.count(name)) return fail("unexpected generator " + name);
      Matrix m;
      for (auto& row : rows) {
        m.emplace_back();
        for (auto& x : row) m.back().push_back(parse_fraction(x.get<std::string>()));
        if (m.back().size() != d) return fail("matrix for " + name + " has the wrong width");
      }
      if (m.size() != d) return fail("matrix for " + name + " has the wrong height");
      c.generators[name] = std::move(m);
    }
    if (c.generators.size() != expected.size()) return fail("missing generators");
    return c;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

std::string cache_file_name(AlgebraKind kind, const Partition& lambda, int n) {
  std::string l;
  for (int p : lambda.parts) l += (l.empty() ? "" : "-") + std::to_string(p);
  if (l.empty()) l = "0";
  return std::string(algebra_name(kind)) + "_n" + std::to_string(n) + "_l" + l + ".json";
}

void write_cache(const std::string& dir, const ActionCache& c) {
  fs::create_directories(dir);
  fs::path target = fs::path(dir) / cache_file_name(c.kind, c.lambda, c.n);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << serialize(c);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

const char* cache_status_name(CacheStatus s) {
  switch (s) {
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Recomputed: return "recomputed";
  }
  return "?";
}

ActionCache load_or_compute(const std::string& dir, AlgebraKind kind, const Partition& lambda, int n,
                            CacheStatus* status, std::ostream* warn) {
  fs::path p = fs::path(dir) / cache_file_name(kind, lambda, n);
  CacheStatus st = CacheStatus::Miss;
  std::optional<ActionCache> c;
  if (fs::exists(p)) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string why;
    c = deserialize(ss.str(), &why);
    if (c && (c->kind != kind || c->n != n || c->lambda != lambda)) c.reset(), why = "header does not match the request";
    if (c) {
      st = CacheStatus::Hit;
    } else {
      st = CacheStatus::Recomputed;
      if (warn) *warn << "warning: ignoring cache " << p.string() << ": " << why << "; recomputing\n";
    }
  }
  if (!c) {
    c = compute_actions(kind, lambda, n);
    write_cache(dir, *c);
  } else {
    auto S = CellModule::get(kind, lambda, n);
    for (auto& g : cache_generators(kind, n)) S->preload(g, c->generators.at(g.str(kind)));
  }
  if (status) *status = st;
  return *c;
}

}  // namespace cellalg
