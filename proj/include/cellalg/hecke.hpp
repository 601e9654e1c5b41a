#pragma once
// Iwahori-Hecke algebra H_m(q^2) on the basis X_w, with the Murphy basis,
// Specht modules C^lambda and Jucys-Murphy elements. With q = 1 this is the
// group algebra of S_m.

#include <memory>
#include <mutex>
#include <unordered_map>

#include "cellalg/combin.hpp"
#include "cellalg/linalg.hpp"

namespace cellalg {

enum class Side { Left, Right };

struct MurphyLabel {
  int shape;  // index into HeckeAlgebra::shapes()
  int s, t;   // indices into tableaux(shape)
};

// Elements are SVec over permutation ranks.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int m, Fraction q);
  static std::shared_ptr<const HeckeAlgebra> get(int m, bool generic_q);

  int m() const { return m_; }
  const Fraction& q() const { return q_; }
  std::size_t dim() const { return perms_.size(); }
  const Perm& perm(int idx) const { return perms_[idx]; }
  int index(const Perm& w) const { return int(w.rank()); }
  int length(int idx) const { return len_[idx]; }

  SVec one() const { return SVec::unit(0); }
  SVec basis(const Perm& w) const { return SVec::unit(index(w)); }
  SVec word(const std::vector<int>& gens) const;  // X_{i1}...X_{ik}
  SVec mul_gen(const SVec& h, int i, Side side) const;
  SVec mul(const SVec& a, const SVec& b) const;
  SVec star(const SVec& h) const;
  SVec c_mu(const Partition& mu) const;
  SVec jm(int i) const;  // D_i

  // Murphy basis
  const std::vector<Partition>& shapes() const { return shapes_; }
  const std::vector<StdTableau>& tableaux(int shape) const { return tabs_[shape]; }
  int shape_index(const Partition& p) const;
  int murphy_index(int shape, int s, int t) const;
  MurphyLabel murphy_label(int idx) const;
  std::size_t murphy_size() const { return labels_.size(); }
  const SVec& murphy_element(int idx) const;  // c_st in X coordinates
  SVec to_murphy(const SVec& h) const;
  SVec from_murphy(const SVec& coords) const;
  bool murphy_triangular() const;

  // c_{S t} for a semistandard S of shape nu and type mu, t in Std(nu).
  SVec semistd_element(const SemiStdTableau& S, int t) const;

  // Specht module C^shape: coordinates over tableaux(shape).
  // Column j of the result holds the image of basis vector j.
  Matrix specht_action(int shape, const SVec& h) const;

 private:
  SVec basis_mul(int x, int w) const;  // X_x X_w
  void build_murphy() const;

  int m_;
  Fraction q_, qq_;  // qq_ = q - q^{-1}
  std::vector<Perm> perms_;
  std::vector<int> len_;
  std::vector<std::vector<int>> rmul_, lmul_;  // index of w s_i and s_i w
  std::vector<std::vector<int>> words_;
  std::vector<Partition> shapes_;
  std::vector<std::vector<StdTableau>> tabs_;
  std::vector<MurphyLabel> labels_;
  std::vector<std::vector<int>> label_index_;

  mutable std::once_flag murphy_once_;
  mutable std::vector<SVec> murphy_;
  mutable std::unique_ptr<LeadSolver> solver_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<long, SVec> memo_;
};

}  // namespace cellalg
