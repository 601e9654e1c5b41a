#pragma once
// Partitions, tableaux, permutations, coset representatives and up-down paths.

#include <cstdint>
#include <string>
#include <vector>

namespace cellalg {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }
  // "3,2,1"; "" or "0" or "-" gives the empty partition.
  static Partition parse(const std::string& s);

  int size() const;
  int rows() const { return int(parts.size()); }
  int row(int i) const { return i < rows() ? parts[i] : 0; }  // 0-based
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;  // "(3,2,1)", "()" for the empty partition
  std::string compact() const;  // "321" style for small parts, "∅" spelled "0"

 private:
  void validate() const;
};

enum class Order { Dominates, Dominated, Equal, Incomparable };

// The order in which fewer boxes dominates more boxes; equal sizes compare by partial sums.
Order dominance(const Partition& a, const Partition& b);
bool dominates_eq(const Partition& a, const Partition& b);
// Linear extension of dominance: true if a strictly precedes b (a more dominant).
bool linear_before(const Partition& a, const Partition& b);

std::vector<Partition> partitions_of(int m);  // sorted by linear_before

struct Node {
  int row, col;  // 1-based
  bool operator==(const Node& o) const { return row == o.row && col == o.col; }
};
struct BoxSteps {
  std::vector<Node> addable, removable;
};
BoxSteps box_steps(const Partition& p);
Partition add_node(const Partition& p, int row);     // row 1-based
Partition remove_node(const Partition& p, int row);  // row 1-based
// Up and down neighbours ordered by dominance (removals first).
std::vector<Partition> neighbours(const Partition& p);

// Permutations act on the right: (k)(xy) = ((k)x)y.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  static Perm simple(int i, int n);  // s_i, 1 <= i < n
  static Perm from_images(const std::vector<int>& one_based);
  static Perm from_word(const std::vector<int>& word, int n);

  int n() const { return int(img_.size()); }
  int operator()(int k) const { return img_[k - 1] + 1; }  // (k)w, 1-based
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  int length() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }
  // l(w s_i) > l(w)
  bool right_ascent(int i) const { return preimage(i) < preimage(i + 1); }
  // l(s_i w) > l(w)
  bool left_ascent(int i) const { return img_[i - 1] < img_[i]; }
  int preimage(int k) const;
  // Canonical reduced word i_1..i_k with w = s_{i_1}...s_{i_k}.
  std::vector<int> reduced_word() const;
  std::vector<int> images() const;  // 1-based
  Perm extended(int n) const;       // embed into S_n fixing the new points
  std::string cycles() const;       // "(6,8)(7,10,9)"; "1" for the identity
  std::size_t rank() const;         // lexicographic index among S_n
  static Perm unrank(std::size_t idx, int n);

 private:
  std::vector<std::uint8_t> img_;
};

std::vector<Perm> all_perms(int n);  // ordered by rank
long factorial(int n);
long double_factorial_odd(int n);    // (2n-1)!!

// Standard tableau with labels 2f+1..n.
struct StdTableau {
  Partition shape;
  int f = 0;
  std::vector<std::vector<int>> rows;

  int n() const { return 2 * f + shape.size(); }
  bool operator==(const StdTableau& o) const { return f == o.f && rows == o.rows; }
  bool operator<(const StdTableau& o) const { return rows < o.rows; }
  Node node_of(int label) const;
  StdTableau hat() const;             // labels shifted to 1..|shape|
  StdTableau restrict_to(int i) const;  // drop labels > i
  std::string str() const;            // rows separated by '/'
};

StdTableau superstandard(const Partition& shape, int n);
std::vector<StdTableau> enumerate_std(const Partition& shape, int n);  // superstandard first
Perm tab_perm(const StdTableau& t);  // d(t) as an element of S_n
Order tableau_dominance(const StdTableau& s, const StdTableau& t);
// Tableau obtained from shape's superstandard tableau acted on by d (labels permuted).
StdTableau act(const StdTableau& t, const Perm& d);

// D_{f,n}, sorted lexicographically by ((1)v, ..., (2f)v).
std::vector<Perm> coset_reps(int f, int n);

struct BrattePath {
  std::vector<Partition> steps;  // steps[0] = empty, steps[k] = shape after k steps

  int n() const { return int(steps.size()) - 1; }
  const Partition& shape() const { return steps.back(); }
  BrattePath restrict_to(int k) const;
  bool operator==(const BrattePath& o) const { return steps == o.steps; }
  std::string str() const;  // "(0,1,2,1)"
  // Node added or removed at step k (1-based) and whether it was added.
  Node step_node(int k, bool* added) const;
};

std::vector<BrattePath> enumerate_paths(const Partition& shape, int n);  // sorted
BrattePath maximal_path(const Partition& shape, int n);
Order path_dominance(const BrattePath& s, const BrattePath& t);
// Total order used for path bases: compares shapes at k = n-1 down to 1.
bool path_before(const BrattePath& s, const BrattePath& t);
// All shapes at level n: |shape| = n - 2f.
std::vector<Partition> shapes_at(int n);

struct SemiStdTableau {
  Partition shape, type;
  std::vector<std::vector<int>> rows;  // entries are row indices of the type, 1-based
  bool operator==(const SemiStdTableau& o) const { return shape == o.shape && type == o.type && rows == o.rows; }
  std::string str() const;
};
std::vector<SemiStdTableau> semistandard_set(const Partition& shape, const Partition& type);
SemiStdTableau type_map(const StdTableau& t, const Partition& type);

struct UpStep {
  int k;            // index in the dominance-ordered neighbour list (1-based)
  Partition mu;     // the up-neighbour
  int a;            // a_k
  Perm ds;          // d(s_k) = s_{a_k} ... s_{n-2}
  std::vector<int> wk;  // word of w_k = d(s_k)^{-1} w_p
};
struct Distinguished {
  std::vector<int> wp;  // word of w_p
  std::vector<UpStep> up;
};
Distinguished distinguished_perms(const Partition& shape, int n);

}  // namespace cellalg
