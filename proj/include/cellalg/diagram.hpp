#pragma once
// Brauer diagrams: perfect matchings of n top and n bottom points.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellalg/combin.hpp"

namespace cellalg {

// Points 0..n-1 are the top row, n..2n-1 the bottom row.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<std::uint8_t> mate);
  static Diagram identity(int n);
  static Diagram from_perm(const Perm& w);  // top k joined to bottom (k)w
  static Diagram e(int i, int n);           // E_i

  int n() const { return int(mate_.size()) / 2; }
  int mate(int p) const { return mate_[p]; }
  const std::vector<std::uint8_t>& mates() const { return mate_; }
  int arcs() const;  // number of top arcs (= bottom arcs)
  Diagram flipped() const;  // top <-> bottom, realizes *
  bool operator==(const Diagram& o) const { return mate_ == o.mate_; }
  bool operator<(const Diagram& o) const { return mate_ < o.mate_; }
  std::string str() const;  // "{1-2,3-1'}" style

 private:
  std::vector<std::uint8_t> mate_;
};

// a on top of b; returns the composite and the number of closed loops.
Diagram compose(const Diagram& a, const Diagram& b, int* loops);

// All (2n-1)!! diagrams, sorted by (arcs, mates); identity first.
std::vector<Diagram> all_diagrams(int n);

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const;
};

class DiagramIndex {
 public:
  explicit DiagramIndex(int n);
  int n() const { return n_; }
  std::size_t size() const { return list_.size(); }
  const Diagram& at(int i) const { return list_[i]; }
  int index(const Diagram& d) const;
  const std::vector<Diagram>& all() const { return list_; }

 private:
  int n_;
  std::vector<Diagram> list_;
  std::unordered_map<Diagram, int, DiagramHash> idx_;
};

}  // namespace cellalg
