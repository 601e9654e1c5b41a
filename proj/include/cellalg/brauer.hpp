#pragma once
// Brauer algebra B_n(z) on the diagram basis.

#include "cellalg/cellmod.hpp"

namespace cellalg {

std::pair<Diagram, int> br_compose(const Diagram& a, const Diagram& b);
SVec br_word(int n, const Word& w);  // letters s_i (T) and E_i
SVec br_mul(int n, const SVec& a, const SVec& b);
SVec br_star(int n, const SVec& e);
// E_1 E_3 ... E_{2f-1} x_lambda, x_lambda the row-stabilizer sum
WordSum br_m_lambda(const Partition& lambda, int n);
SVec br_m_lambda_element(const Partition& lambda, int n);
const Matrix& br_cell_action(const Partition& lambda, int n, const Letter& g);
Vector br_cell_action(const Vector& v, const Partition& lambda, int n, const Letter& g);
Matrix br_gram(const Partition& lambda, int n);
// L_1 = 0, L_i = s_{i-1} - E_{i-1} + s_{i-1} L_{i-1} s_{i-1}
WordSum br_jm(int i);
SVec br_jm_element(int i, int n);
SVec br_to_cellular(int n, const SVec& e);
SVec br_from_cellular(int n, const SVec& c);

}  // namespace cellalg
