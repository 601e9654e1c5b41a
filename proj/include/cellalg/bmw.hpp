#pragma once
// B-M-W algebra B_n(q,r): elements, cell modules, forms, Jucys-Murphy elements.
//
// Elements are stored on the descending-tangle basis (see tangle.hpp);
// bmw_to_cellular gives their coordinates on the cellular basis.

#include "cellalg/cellmod.hpp"

namespace cellalg {

// Product of generators T_i, T_i^{-1}, E_i.
SVec bmw_word(int n, const Word& w);
SVec bmw_mul_right_gen(int n, const SVec& e, const Letter& g);
SVec bmw_mul(int n, const SVec& a, const SVec& b);
SVec bmw_star(int n, const SVec& e);
// E_1 E_3 ... E_{2f-1} x_lambda
WordSum bmw_m_lambda(const Partition& lambda, int n);
SVec bmw_m_lambda_element(const Partition& lambda, int n);
// Matrix of g on S^lambda (column j = image of basis vector j).
const Matrix& bmw_cell_action(const Partition& lambda, int n, const Letter& g);
Vector bmw_cell_action(const Vector& v, const Partition& lambda, int n, const Letter& g);
Matrix bmw_gram(const Partition& lambda, int n);
// L_1 = 1, L_i = T_{i-1} L_{i-1} T_{i-1}
WordSum bmw_jm(int i);
SVec bmw_jm_element(int i, int n);
// Coordinates on T_v^* T_{d(s)}^* m_lambda T_{d(t)} T_u (labels in CellularBasis).
SVec bmw_to_cellular(int n, const SVec& e);
SVec bmw_from_cellular(int n, const SVec& c);

}  // namespace cellalg
