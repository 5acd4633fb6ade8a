#ifndef EFFORGE_UNION_EXTENSION_HPP
#define EFFORGE_UNION_EXTENSION_HPP

#include <vector>

#include "efforge/polyhedra.hpp"

namespace efforge {

// Disjunctive-union extension of conv(p_1(Q_1) u ... u p_q(Q_q)): disjoint
// block copies y_i plus multipliers lambda_i with the homogenized systems
//   A_i y_i <= lambda_i b_i,  B_i y_i = lambda_i c_i,  lambda_i >= 0,
//   sum lambda_i = 1,   projection  sum_i (T_i y_i + lambda_i t_i).
// Size is exactly sum_i (size(Q_i) + 1). Strict about its preconditions:
// every block must be feasible and bounded (an unbounded block would make
// the homogenization unsound), and callers drop infeasible blocks themselves.
ExtendedFormulation union_extension(const std::vector<ExtendedFormulation>& blocks);

// Boundedness probe used by union_extension: max and min of every coordinate.
bool is_bounded_polyhedron(const ExtendedFormulation& block);

}  // namespace efforge

#endif
