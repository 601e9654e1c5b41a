#pragma once
// Semisimplicity at a specialization: content vectors of up-down paths,
// the content criterion, Gram ranks, Hom obstructions and the evidence
// harness for the conjectured Gram determinants of the Brauer algebra.

#include "cellalg/combin.hpp"
#include "cellalg/specialize.hpp"

namespace cellalg {

struct ContentVector {
  BrattePath path;
  std::vector<Fraction> values;  // P(t)(1..n) under the specialization
};

// Throws PoleError if an entry has a pole.
ContentVector content_vector(AlgebraKind kind, const BrattePath& t, const Specialization& s);

enum class Outcome { CertifiedSemisimple, Inconclusive, CertifiedNotSemisimple };
const char* outcome_name(Outcome o);

// A pair of paths with different shapes and equal content vectors.
struct PathWitness {
  BrattePath s, t;
  std::vector<Fraction> content;
};
struct RankWitness {
  Partition lambda;
  int rank, dim;
};
struct Verdict {
  Outcome outcome = Outcome::CertifiedSemisimple;
  std::vector<PathWitness> paths;
  std::vector<RankWitness> ranks;  // gram_rank_certify reports every lambda
};

// Content criterion; never answers CertifiedNotSemisimple.
Verdict certify(AlgebraKind kind, int n, const Specialization& s);
// Ranks of the specialized Gram matrices of all cell modules.
Verdict gram_rank_certify(AlgebraKind kind, int n, const Specialization& s);

// Necessary condition for Hom(S^lambda, S^mu) != 0 with |lambda| >= |mu|.
// false certifies Hom = 0.
bool hom_obstruction(AlgebraKind kind, const Partition& lambda, const Partition& mu, const Specialization& s);

struct ConditionNote {
  bool root_of_unity = false;
  int order = 0;         // of q, when detected
  bool r_power = false;  // r = sign * q^k
  int sign = 0, k = 0;
  std::string str() const;
};
ConditionNote necessary_condition_note(const Specialization& s, int bound = 24);

QPoly conjecture_poly(int i);

struct ConjectureReport {
  int n = 0, k = 0;
  Partition lambda;
  Fraction det;
  std::vector<std::pair<mpq_class, int>> roots;  // rational roots of det
  QPoly remainder;                               // det with the linear factors removed
  std::vector<mpq_class> predicted;              // roots of p_k (and 0 for even n)
  bool agree = false;
  std::string str() const;
};
ConjectureReport conjecture_evidence(int n);

}  // namespace cellalg
