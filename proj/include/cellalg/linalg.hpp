#pragma once
// Exact linear algebra over fraction fields.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cellalg/poly.hpp"

namespace cellalg {

class Specialization;

// Sparse vector: sorted (index, nonzero coefficient) pairs.
class SVec {
 public:
  using Entry = std::pair<int, Fraction>;
  SVec() = default;
  static SVec unit(int i, Fraction c = Fraction(1));

  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  Fraction get(int i) const;
  const Fraction* find(int i) const;

  // this += c * o
  void axpy(const Fraction& c, const SVec& o);
  SVec scaled(const Fraction& c) const;
  // Appends an entry with index larger than all present ones.
  void push_back(int i, Fraction c);
  void add(int i, const Fraction& c);
  bool operator==(const SVec& o) const { return e_ == o.e_; }
  bool operator!=(const SVec& o) const { return !(*this == o); }
  // Keeps only entries whose index satisfies keep.
  SVec filtered(const std::function<bool(int)>& keep) const;

 private:
  std::vector<Entry> e_;
};

using Matrix = std::vector<std::vector<Fraction>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Fraction& c);
Matrix transpose(const Matrix& a);
Matrix map_entries(const Matrix& a, const std::function<Fraction(const Fraction&)>& f);
bool is_scalar_matrix(const Matrix& a, Fraction* scalar);

// Field hook: canonicalizes values (identity unless a cyclotomic specialization).
using Normalizer = std::function<Fraction(const Fraction&)>;

Fraction determinant(Matrix a, const Normalizer& norm = {});
std::size_t rank(Matrix a, const Normalizer& norm = {});
std::optional<Matrix> inverse(const Matrix& a);
// Solves a x = b for square invertible a; columns of b are right-hand sides.
Matrix solve(const Matrix& a, const Matrix& b);

// Incremental column echelon form: feed columns, then express targets in them.
class EchelonSolver {
 public:
  explicit EchelonSolver(std::size_t ncols_hint = 0) { piv_.reserve(ncols_hint); }
  // Returns false (and stores nothing) if the column is dependent on earlier ones.
  bool add_column(const SVec& col);
  std::size_t rank() const { return piv_.size(); }
  std::size_t columns() const { return ncols_; }
  // Coefficients w.r.t. the added columns; nullopt if target not in the span.
  std::optional<SVec> solve(const SVec& target) const;

 private:
  struct Pivot {
    int row;
    SVec vec;   // reduced column, vec[row] == 1
    SVec comb;  // vec as combination of original columns
  };
  std::vector<Pivot> piv_;
  std::size_t ncols_ = 0;
};

// Expresses targets in columns whose supports have distinct leading rows under
// a weight: each column must have a unique maximal-weight support row, and
// these rows must differ between columns. Falls back to EchelonSolver otherwise.
class LeadSolver {
 public:
  LeadSolver(std::vector<SVec> cols, const std::function<long(int)>& weight);
  bool triangular() const { return triangular_; }
  std::size_t size() const { return cols_.size(); }
  std::optional<SVec> solve(const SVec& target) const;
  bool complete() const { return complete_; }  // columns independent

 private:
  std::vector<SVec> cols_;
  std::function<long(int)> weight_;
  bool triangular_ = false;
  bool complete_ = true;
  std::vector<int> lead_row_;
  std::vector<std::pair<int, int>> lead_index_;  // sorted (row, column)
  EchelonSolver fallback_;
};

}  // namespace cellalg
