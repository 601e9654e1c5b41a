#pragma once
// Cell modules of B_n (either algebra) realized inside the layer
// V_f = E(f) B_n / B_n^{f+1}, E(f) = E_1 E_3 ... E_{2f-1}.
//
// V_f is free over H_m (m = n-2f, generators T_{2f+1}, ..., T_{n-1}) with
// basis E(f) T_u, u in D_{f,n}; the cell module S^lambda is the image of
// E(f) x_lambda H_m T_u modulo Murphy elements of shape strictly above lambda.

#include <map>
#include <memory>
#include <mutex>

#include "cellalg/hecke.hpp"
#include "cellalg/tangle.hpp"

namespace cellalg {

using Vector = std::vector<Fraction>;

// Words for an H_m element, X_w -> T_{i+offset} letters.
WordSum hecke_words(const HeckeAlgebra& H, const SVec& h, int offset);
// E(f) as a word.
Word e_chain(int f);
// m_lambda = E(f) x_lambda as a sum of words (needs only H_m).
WordSum m_lambda_words(AlgebraKind kind, const Partition& lambda, int n);

class CellLayer {
 public:
  using Vec = std::vector<SVec>;  // H_m coefficient of E(f) T_u, one per u

  CellLayer(AlgebraKind kind, int n, int f);
  static std::shared_ptr<const CellLayer> get(AlgebraKind kind, int n, int f);

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }
  int f() const { return f_; }
  int m() const { return n_ - 2 * f_; }
  const std::vector<Perm>& cosets() const { return cosets_; }
  const HeckeAlgebra& hecke() const { return *hecke_; }  // H_max(m,1)

  Vec unit() const;  // E(f)
  Vec apply(const Vec& v, const Letter& g) const;
  Vec apply(const Vec& v, const Word& w) const;
  Vec apply(const Vec& v, const WordSum& s) const;
  SVec to_tangle(const Vec& v) const;  // diagram-basis coordinates
  Word coset_word(int u) const;

 private:
  const Vec& k(int u, const Letter& g) const;

  AlgebraKind kind_;
  int n_, f_;
  std::vector<Perm> cosets_;
  std::shared_ptr<const HeckeAlgebra> hecke_;
  std::shared_ptr<const TangleAlgebra> tangle_;
  std::unique_ptr<LeadSolver> solver_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Vec> memo_;
};

class CellModule {
 public:
  CellModule(AlgebraKind kind, const Partition& lambda, int n);
  static std::shared_ptr<const CellModule> get(AlgebraKind kind, const Partition& lambda, int n);

  AlgebraKind kind() const { return kind_; }
  const Partition& lambda() const { return lambda_; }
  int n() const { return n_; }
  int f() const { return f_; }
  int dim() const { return int(ntab_ * layer_->cosets().size()); }
  const CellLayer& layer() const { return *layer_; }
  // Standard tableaux with labels 2f+1..n, superstandard first.
  const std::vector<StdTableau>& tableaux() const { return tabs_; }
  const std::vector<Perm>& cosets() const { return layer_->cosets(); }
  int index(int t, int u) const { return u * int(ntab_) + t; }
  std::pair<int, int> label(int idx) const { return {idx % int(ntab_), idx / int(ntab_)}; }
  // T_{d(t)} T_u
  Word basis_word(int idx) const;
  // m_lambda = E(f) x_lambda
  WordSum m_lambda() const;

  CellLayer::Vec to_vf(const Vector& v) const;
  // Projects onto S^lambda; throws if a coordinate outside the module
  // survives and strict is set.
  Vector from_vf(const CellLayer::Vec& x, bool strict = true) const;

  // Column j is the image of basis vector j.
  const Matrix& action_matrix(const Letter& g) const;
  Matrix action_matrix(const Word& w) const;
  Matrix action_matrix(const WordSum& s) const;
  Vector act(const Vector& v, const Word& w) const;
  Vector act(const Vector& v, const WordSum& s) const;
  void preload(const Letter& g, Matrix a) const;

  // Linear functional v -> coefficient of m_lambda in v m_lambda.
  Vector m_lambda_functional() const;
  Matrix gram() const;

 private:
  AlgebraKind kind_;
  Partition lambda_;
  int n_, f_;
  std::shared_ptr<const CellLayer> layer_;
  int shape_;  // index in hecke shapes
  std::size_t ntab_;
  std::vector<StdTableau> tabs_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Matrix> mats_;
};

Vector mat_vec(const Matrix& a, const Vector& v);
Vector vec_mat(const Vector& v, const Matrix& a);
Vector unit_vector(std::size_t n, std::size_t i);

// Cellular basis T_v^* T_{d(s)}^* m_lambda T_{d(t)} T_u of the whole algebra.
struct CellularLabel {
  int f;
  Partition lambda;
  int s, v, t, u;  // tableau / coset indices as in CellModule
};

class CellularBasis {
 public:
  CellularBasis(AlgebraKind kind, int n);
  static std::shared_ptr<const CellularBasis> get(AlgebraKind kind, int n);
  std::size_t size() const { return labels_.size(); }
  const CellularLabel& label(int i) const { return labels_[i]; }
  const SVec& element(int i) const { return elems_[i]; }  // diagram coordinates
  bool independent() const { return solver_->complete(); }
  SVec to_cellular(const SVec& x) const;
  SVec from_cellular(const SVec& c) const;
  // Swaps (s,v) and (t,u).
  int star_index(int i) const { return star_[i]; }

 private:
  AlgebraKind kind_;
  int n_;
  std::vector<CellularLabel> labels_;
  std::vector<SVec> elems_;
  std::vector<int> star_;
  std::unique_ptr<LeadSolver> solver_;
};

}  // namespace cellalg
