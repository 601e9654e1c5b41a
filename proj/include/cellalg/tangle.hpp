#pragma once
// Diagram-basis models of B_n(z) and B_n(q,r).
//
// Brauer: the basis is the set of Brauer diagrams, multiplied by stacking.
// B-M-W: the basis is one descending tangle per Brauer diagram (each
// component lies above the later ones and descends from its start point),
// normalized to zero self-writhe. Words in T_i^{+-1}, E_i are reduced to
// this basis with the skein relation T - T^{-1} = (q-q^{-1})(1-E), the kink
// factor r^{-1} of T_i E_i, and the loop value z.

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "cellalg/diagram.hpp"
#include "cellalg/linalg.hpp"
#include "cellalg/specialize.hpp"

namespace cellalg {

struct Letter {
  enum Kind : std::int8_t { T, E } kind = T;
  std::int8_t i = 1;    // generator index, 1 <= i < n
  std::int8_t eps = 1;  // T_i^{eps}; Brauer s_i ignores the sign
  static Letter t(int i, int eps = 1) { return {T, std::int8_t(i), std::int8_t(eps)}; }
  static Letter e(int i) { return {E, std::int8_t(i), 1}; }
  bool operator==(const Letter& o) const { return kind == o.kind && i == o.i && (kind == E || eps == o.eps); }
  std::string str(AlgebraKind k) const;  // "T2", "T2^-1", "E1", "s2"
};
using Word = std::vector<Letter>;

std::string word_str(const Word& w, AlgebraKind k);
// "T1 T2^-1 E1" or "s1 E2" (spaces or '*' separate letters; "1" is empty).
Word parse_word(const std::string& s, int n);
Word shift_word(const std::vector<int>& gens, int offset, int eps = 1);
Word inverse_word(const Word& w);  // letters reversed and inverted (E stays)
Word reversed_word(const Word& w);  // the * anti-involution on words

// Linear combination of words.
using WordSum = std::vector<std::pair<Fraction, Word>>;

class TangleAlgebra {
 public:
  TangleAlgebra(AlgebraKind kind, int n);
  static std::shared_ptr<const TangleAlgebra> get(AlgebraKind kind, int n);

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }
  std::size_t dim() const { return index_.size(); }
  const Diagram& diagram(int d) const { return index_.at(d); }
  int index(const Diagram& d) const { return index_.index(d); }
  int arcs(int d) const { return arcs_[d]; }
  int crossings(int d) const { return cross_[d]; }  // length of the standard word
  const Fraction& z() const { return z_; }
  // Standard word of basis element d (descending for B-M-W); basis element
  // equals r^{-writhe(d)} times this word.
  const Word& standard_word(int d) const { return words_[d]; }
  int writhe(int d) const { return writhe_[d]; }

  SVec one() const { return SVec::unit(0); }
  SVec mul_right(const SVec& x, const Letter& g) const;
  SVec mul_left(const Letter& g, const SVec& x) const;
  SVec apply(const SVec& x, const Word& w) const;
  SVec apply(const SVec& x, const WordSum& w) const;
  SVec word(const Word& w) const { return apply(one(), w); }
  SVec mul(const SVec& a, const SVec& b) const;
  SVec star(const SVec& x) const;
  // Drops basis elements with more than f arcs.
  SVec truncate(const SVec& x, int f) const;
  // Direct reduction of a word without the simplifier (cross-check path).
  SVec reduce_plain(const Word& w) const;

 private:
  struct Trace;
  SVec basis_mul_right(int d, const Letter& g) const;
  SVec basis_mul_left(const Letter& g, int d) const;
  SVec reduce(Word w, bool simplify) const;
  Trace trace(const Word& w) const;
  void check(const Letter& g) const;

  AlgebraKind kind_;
  int n_;
  DiagramIndex index_;
  std::vector<int> arcs_, cross_, writhe_;
  std::vector<Word> words_;
  Fraction z_, qq_, r_, rinv_;
  std::vector<Fraction> zpow_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, SVec> reduce_memo_;
  mutable std::unordered_map<long, SVec> right_memo_, left_memo_;
};

}  // namespace cellalg
