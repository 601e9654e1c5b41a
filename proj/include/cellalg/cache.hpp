#pragma once
// On-disk cache of generator action matrices on a cell module.
// One JSON file per (algebra, n, lambda); coefficients are canonical
// fraction strings so a write-read-write cycle is byte-identical.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "cellalg/cellmod.hpp"

namespace cellalg {

inline constexpr int kCacheVersion = 1;

struct ActionCache {
  AlgebraKind kind = AlgebraKind::Bmw;
  int n = 0;
  Partition lambda;
  std::map<std::string, Matrix> generators;  // keyed by letter, e.g. "T1^-1"
};

// Generators T_i, T_i^-1, E_i (B-M-W) or s_i, E_i (Brauer).
std::vector<Letter> cache_generators(AlgebraKind kind, int n);
ActionCache compute_actions(AlgebraKind kind, const Partition& lambda, int n);

std::string serialize(const ActionCache& c);
// Empty on any malformed, stale or inconsistent input; *why says which.
std::optional<ActionCache> deserialize(const std::string& text, std::string* why = nullptr);

std::string cache_file_name(AlgebraKind kind, const Partition& lambda, int n);
// Writes to a temporary file in dir and renames it into place.
void write_cache(const std::string& dir, const ActionCache& c);

enum class CacheStatus { Hit, Miss, Recomputed };
const char* cache_status_name(CacheStatus s);

// Reads the cache file, or computes and writes it. A stale or corrupt file
// is replaced, with a warning on *warn. The matrices are also handed to the
// cell module so later action_matrix calls reuse them.
ActionCache load_or_compute(const std::string& dir, AlgebraKind kind, const Partition& lambda, int n,
                            CacheStatus* status = nullptr, std::ostream* warn = nullptr);

}  // namespace cellalg
