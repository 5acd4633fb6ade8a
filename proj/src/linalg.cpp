#include "efforge/linalg.hpp"

#include <cassert>

namespace efforge {

std::vector<int> rref(RatMat& mat) {
  std::vector<int> pivot_cols;
  if (mat.empty()) return pivot_cols;
  const int rows = static_cast<int>(mat.size());
  const int cols = static_cast<int>(mat[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (sgn(mat[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    mat[row].swap(mat[pivot]);
    Rational inv = 1 / mat[row][col];
    for (int c = col; c < cols; ++c) mat[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(mat[r][col]) == 0) continue;
      Rational factor = mat[r][col];
      for (int c = col; c < cols; ++c) mat[r][c] -= factor * mat[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  const int rows = static_cast<int>(a.size());
  assert(b.size() == a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RatMat aug(a);
  for (int r = 0; r < rows; ++r) aug[r].push_back(b[r]);
  std::vector<int> pivots = rref(aug);
  // A pivot in the augmented column means 0 = 1 somewhere.
  for (int p : pivots)
    if (p == cols) return std::nullopt;
  RatVec x = zeros(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

RatMat nullspace_basis(const RatMat& a, int cols) {
  RatMat reduced(a);
  for (auto& row : reduced) assert(static_cast<int>(row.size()) == cols);
  std::vector<int> pivots = rref(reduced);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v = zeros(cols);
    v[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -reduced[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat transpose(const RatMat& a, int cols) {
  RatMat t(static_cast<size_t>(cols), RatVec(a.size(), Rational(0)));
  for (size_t r = 0; r < a.size(); ++r)
    for (int c = 0; c < cols; ++c) t[c][r] = a[r][c];
  return t;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y;
  y.reserve(a.size());
  for (const auto& row : a) y.push_back(dot(row, x));
  return y;
}

int rank(RatMat mat) { return static_cast<int>(rref(mat).size()); }

}  // namespace efforge
