#include "efforge/union_extension.hpp"

#include <stdexcept>

namespace efforge {

bool is_bounded_polyhedron(const ExtendedFormulation& block) {
  LinearProgram lp = ef_constraints_lp(block, true);
  SimplexSolver solver(lp);
  if (!solver.feasible()) return true;  // empty set is bounded
  for (int j = 0; j < block.dim; ++j) {
    RatVec obj = zeros(block.dim);
    obj[static_cast<size_t>(j)] = 1;
    if (solver.optimize(obj).status == LPStatus::Unbounded) return false;
    obj[static_cast<size_t>(j)] = -1;
    if (solver.optimize(obj).status == LPStatus::Unbounded) return false;
  }
  return true;
}

ExtendedFormulation union_extension(const std::vector<ExtendedFormulation>& blocks) {
  if (blocks.empty()) throw std::domain_error("union of zero blocks");
  const int m = blocks.front().ambient_dim();
  for (const auto& block : blocks) {
    block.validate();
    if (block.ambient_dim() != m)
      throw std::domain_error("blocks must share the ambient dimension");
    if (!is_feasible(ef_constraints_lp(block, true)))
      throw std::domain_error(
          "infeasible block passed to union_extension: drop it first");
    if (!is_bounded_polyhedron(block))
      throw std::domain_error("unbounded block: homogenization would be unsound");
  }

  const int q = static_cast<int>(blocks.size());
  std::vector<int> offset(static_cast<size_t>(q));
  int total = 0;
  for (int i = 0; i < q; ++i) {
    offset[static_cast<size_t>(i)] = total;
    total += blocks[static_cast<size_t>(i)].dim;
  }
  const int lambda_base = total;
  const int dim = total + q;

  ExtendedFormulation out;
  out.dim = dim;

  auto homogenize = [&](const LinearRow& src, int block_index) {
    LinearRow row;
    row.coeffs = zeros(dim);
    for (int j = 0; j < blocks[static_cast<size_t>(block_index)].dim; ++j)
      row.coeffs[static_cast<size_t>(offset[static_cast<size_t>(block_index)] + j)] =
          src.coeffs[static_cast<size_t>(j)];
    // A_i y_i <= lambda_i b_i  becomes  A_i y_i - b_i lambda_i <= 0
    row.coeffs[static_cast<size_t>(lambda_base + block_index)] = -src.rhs;
    row.rhs = 0;
    return row;
  };

  for (int i = 0; i < q; ++i) {
    for (const auto& eq : blocks[static_cast<size_t>(i)].equations)
      out.equations.push_back(homogenize(eq, i));
    for (const auto& ineq : blocks[static_cast<size_t>(i)].inequalities)
      out.inequalities.push_back(homogenize(ineq, i));
    LinearRow lam_nonneg;
    lam_nonneg.coeffs = zeros(dim);
    lam_nonneg.coeffs[static_cast<size_t>(lambda_base + i)] = -1;
    lam_nonneg.rhs = 0;
    out.inequalities.push_back(std::move(lam_nonneg));
  }
  LinearRow convexity;
  convexity.coeffs = zeros(dim);
  for (int i = 0; i < q; ++i)
    convexity.coeffs[static_cast<size_t>(lambda_base + i)] = 1;
  convexity.rhs = 1;
  out.equations.push_back(std::move(convexity));

  out.projection_matrix.assign(static_cast<size_t>(m), RatVec());
  out.projection_offset = zeros(m);
  for (int r = 0; r < m; ++r) {
    RatVec row = zeros(dim);
    for (int i = 0; i < q; ++i) {
      const auto& block = blocks[static_cast<size_t>(i)];
      for (int j = 0; j < block.dim; ++j)
        row[static_cast<size_t>(offset[static_cast<size_t>(i)] + j)] =
            block.projection_matrix[static_cast<size_t>(r)][static_cast<size_t>(j)];
      row[static_cast<size_t>(lambda_base + i)] =
          block.projection_offset[static_cast<size_t>(r)];
    }
    out.projection_matrix[static_cast<size_t>(r)] = std::move(row);
  }
  return out;
}

}  // namespace efforge
