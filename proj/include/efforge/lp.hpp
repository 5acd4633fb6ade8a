#ifndef EFFORGE_LP_HPP
#define EFFORGE_LP_HPP

#include <optional>
#include <vector>

#include "efforge/rational.hpp"

namespace efforge {

enum class Sense { Maximize, Minimize };

struct LinearRow {
  RatVec coeffs;
  Rational rhs;
};

// Exact-arithmetic LP in the form
//   opt  objective . y
//   s.t. equations:    row . y == rhs
//        inequalities: row . y <= rhs
//        y_j >= lower_bounds[j]   (where present; absent entry = free var)
struct LinearProgram {
  int num_vars = 0;
  Sense sense = Sense::Maximize;
  RatVec objective;  // empty means all-zero
  std::vector<LinearRow> equations;
  std::vector<LinearRow> inequalities;
  std::vector<std::optional<Rational>> lower_bounds;  // empty means all free

  static LinearProgram with_nonnegative_vars(int num_vars);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Dual certificate for the maximization form: u >= 0 per inequality, v free
// per equation, w >= 0 per bounded variable, satisfying
//   A_le^T u + A_eq^T v - w = c   and   u.b_le + v.b_eq - w.lb = value.
struct DualCertificate {
  RatVec ineq_duals;
  RatVec eq_duals;
  RatVec bound_duals;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  RatVec point;
  DualCertificate dual;
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule. Deterministic: identical inputs give bit-identical results. A solver
// instance carries the factored feasible basis, so a sequence of objectives
// over one feasible set pays for phase 1 only once.
class SimplexSolver {
 public:
  static constexpr int kMaxVariables = 5000;

  explicit SimplexSolver(const LinearProgram& lp);

  bool feasible() const { return feasible_; }

  // Phase 2 from the current basis; respects lp.sense.
  LPResult optimize(const RatVec& objective);

  // Feasibility witness (any point of the feasible set).
  RatVec witness() const;

 private:
  struct RowInfo {
    int slack_col = -1;
    int art_col = -1;
    int flip = 1;        // row was negated to make the rhs nonnegative
    bool disabled = false;  // redundant row detected after phase 1
    bool is_equation = false;
  };

  void pivot(int row, int col);
  bool phase(bool stop_at_zero);
  void rebuild_objective(const RatVec& cost);
  RatVec unshift(const RatVec& tableau_point) const;

  int num_orig_vars_;
  Sense sense_;
  std::vector<std::optional<Rational>> lower_bounds_;
  std::vector<int> var_col_;      // structural column of each original var
  std::vector<int> neg_col_;      // second column for free vars, else -1
  int struct_cols_ = 0;
  int total_cols_ = 0;
  int num_eq_ = 0;
  int num_ineq_ = 0;
  std::vector<RowInfo> row_info_;
  RatMat tab_;                    // rows x total_cols_
  RatVec rhs_;
  RatVec obj_row_;                // reduced costs z_j - c_j
  Rational obj_value_;
  std::vector<int> basis_;        // basic column per row
  RatVec shifted_cost_;           // cost in tableau variables
  Rational cost_offset_;
  bool feasible_ = false;
  bool unbounded_ = false;
};

LPResult solve(const LinearProgram& lp);

// Feasibility with witness point on success.
std::optional<RatVec> is_feasible(const LinearProgram& lp);

struct AffineHull {
  RatVec point;
  RatMat directions;  // maximal independent direction set of the solution set
  int dimension() const { return static_cast<int>(directions.size()); }
};

// Affine hull of the feasible region: implicit equalities are detected by LP,
// then the hull is the solution set of all equations. Throws on infeasible
// input.
AffineHull affine_hull(const LinearProgram& lp);

// Irredundant description: implicit equalities move into the equation list,
// then every inequality whose removal does not enlarge the feasible set is
// dropped (certified row by row via LP). Throws on infeasible input.
LinearProgram remove_redundant(const LinearProgram& lp);

}  // namespace efforge

#endif
