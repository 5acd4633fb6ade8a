#ifndef EFFORGE_LINALG_HPP
#define EFFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "efforge/rational.hpp"

namespace efforge {

// Reduces mat to reduced row echelon form in place. Returns the pivot column
// of each nonzero row, in order; rank = returned size.
std::vector<int> rref(RatMat& mat);

// One solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

// Basis of the kernel {x : A x = 0}, one vector per free column.
RatMat nullspace_basis(const RatMat& a, int cols);

RatMat transpose(const RatMat& a, int cols);

RatVec mat_vec(const RatMat& a, const RatVec& x);

int rank(RatMat mat);

}  // namespace efforge

#endif
