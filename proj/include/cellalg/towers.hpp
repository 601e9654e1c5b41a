#pragma once
// Restriction S^lambda -> B_{n-1}: y-elements, the path basis {m_t},
// filtration checks and Jucys-Murphy triangularity.

#include "cellalg/cellmod.hpp"

namespace cellalg {

struct PathBasis {
  AlgebraKind kind;
  int n;
  Partition lambda;
  std::vector<BrattePath> paths;  // in path_before order
  std::vector<WordSum> b;         // m_t = m_lambda b_t
  // Column t holds the cell-module coordinates of m_t.
  Matrix transition;
  Matrix inverse;

  int index(const BrattePath& t) const;
  // Matrix of a word (sum) in the path basis.
  Matrix path_action(const Matrix& cell_matrix) const;
};

// y^lambda_mu in S^lambda; mu must be a neighbour of lambda at level n-1.
Vector y_element(AlgebraKind kind, const Partition& lambda, const Partition& mu, int n);
// The same element as a word sum acting on the generator m_lambda's layer,
// e.g. "E1 T2^-1 T1^-1 (1 + q T1)".
WordSum y_words(AlgebraKind kind, const Partition& lambda, const Partition& mu, int n);

std::shared_ptr<const PathBasis> build_path_basis(AlgebraKind kind, const Partition& lambda, int n);

// Contents along a path: P_t(k).
Fraction jm_content(AlgebraKind kind, const BrattePath& t, int k);
WordSum jm_words(AlgebraKind kind, int k);

struct FiltrationReport {
  bool ok = true;
  std::vector<std::pair<Partition, int>> blocks;  // neighbour mu and dim N^mu / N^{mu-}
  std::vector<std::string> failures;
};
FiltrationReport restriction_filtration_check(AlgebraKind kind, const Partition& lambda, int n);

struct JmReport {
  bool ok = true;
  std::vector<std::vector<Fraction>> diagonal;  // [k-1][t]
  std::vector<std::string> failures;
};
JmReport jm_triangularity(AlgebraKind kind, const Partition& lambda, int n);

struct CentralReport {
  Fraction alpha;  // from contents of the maximal path
  bool scalar = false;  // matrix equals alpha * identity
};
CentralReport central_scalar(AlgebraKind kind, const Partition& lambda, int n);

}  // namespace cellalg
