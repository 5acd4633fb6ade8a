#include "efforge/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "efforge/linalg.hpp"

namespace efforge {

LinearProgram LinearProgram::with_nonnegative_vars(int num_vars) {
  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.lower_bounds.assign(static_cast<size_t>(num_vars), Rational(0));
  return lp;
}

namespace {

void validate(const LinearProgram& lp) {
  if (lp.num_vars < 0) throw std::domain_error("negative variable count");
  if (lp.num_vars > SimplexSolver::kMaxVariables)
    throw std::length_error("LP exceeds the dense-representation variable guard");
  auto check_rows = [&](const std::vector<LinearRow>& rows) {
    for (const auto& row : rows)
      if (static_cast<int>(row.coeffs.size()) != lp.num_vars)
        throw std::domain_error("constraint row length mismatch");
  };
  check_rows(lp.equations);
  check_rows(lp.inequalities);
  if (!lp.objective.empty() && static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::domain_error("objective length mismatch");
  if (!lp.lower_bounds.empty() &&
      static_cast<int>(lp.lower_bounds.size()) != lp.num_vars)
    throw std::domain_error("lower bound list length mismatch");
}

}  // namespace

SimplexSolver::SimplexSolver(const LinearProgram& lp) {
  validate(lp);
  num_orig_vars_ = lp.num_vars;
  sense_ = lp.sense;
  lower_bounds_ = lp.lower_bounds;
  if (lower_bounds_.empty())
    lower_bounds_.assign(static_cast<size_t>(num_orig_vars_), std::nullopt);

  // Column layout: bounded vars shift to x = y - lb >= 0, free vars split
  // into a difference of two nonnegative columns.
  var_col_.assign(static_cast<size_t>(num_orig_vars_), -1);
  neg_col_.assign(static_cast<size_t>(num_orig_vars_), -1);
  int col = 0;
  for (int j = 0; j < num_orig_vars_; ++j) {
    var_col_[static_cast<size_t>(j)] = col++;
    if (!lower_bounds_[static_cast<size_t>(j)].has_value())
      neg_col_[static_cast<size_t>(j)] = col++;
  }
  struct_cols_ = col;

  num_eq_ = static_cast<int>(lp.equations.size());
  num_ineq_ = static_cast<int>(lp.inequalities.size());
  const int rows = num_eq_ + num_ineq_;
  row_info_.assign(static_cast<size_t>(rows), RowInfo{});

  int slack_count = num_ineq_;
  // Artificial columns: one per equation; flipped inequalities get one too,
  // assigned after the flip pass, so first lay rows out and count.
  tab_.assign(static_cast<size_t>(rows), RatVec());
  rhs_.assign(static_cast<size_t>(rows), Rational(0));

  auto fill_row = [&](int r, const LinearRow& src, bool is_eq, int ineq_index) {
    RatVec dense = zeros(struct_cols_);
    Rational rhs = src.rhs;
    for (int j = 0; j < num_orig_vars_; ++j) {
      const Rational& a = src.coeffs[static_cast<size_t>(j)];
      if (sgn(a) == 0) continue;
      dense[static_cast<size_t>(var_col_[static_cast<size_t>(j)])] = a;
      if (neg_col_[static_cast<size_t>(j)] >= 0)
        dense[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])] = -a;
      else
        rhs -= a * *lower_bounds_[static_cast<size_t>(j)];
    }
    tab_[static_cast<size_t>(r)] = std::move(dense);
    rhs_[static_cast<size_t>(r)] = rhs;
    row_info_[static_cast<size_t>(r)].is_equation = is_eq;
    if (!is_eq) row_info_[static_cast<size_t>(r)].slack_col = struct_cols_ + ineq_index;
  };
  for (int i = 0; i < num_eq_; ++i) fill_row(i, lp.equations[static_cast<size_t>(i)], true, -1);
  for (int i = 0; i < num_ineq_; ++i)
    fill_row(num_eq_ + i, lp.inequalities[static_cast<size_t>(i)], false, i);

  // Slack columns, then flips, then artificials.
  int art_count = 0;
  for (int r = 0; r < rows; ++r) {
    auto& info = row_info_[static_cast<size_t>(r)];
    if (sgn(rhs_[static_cast<size_t>(r)]) < 0) info.flip = -1;
    bool needs_art = info.is_equation || info.flip < 0;
    if (needs_art) ++art_count;
  }
  total_cols_ = struct_cols_ + slack_count + art_count;
  int next_art = struct_cols_ + slack_count;
  basis_.assign(static_cast<size_t>(rows), -1);
  for (int r = 0; r < rows; ++r) {
    auto& info = row_info_[static_cast<size_t>(r)];
    auto& row = tab_[static_cast<size_t>(r)];
    row.resize(static_cast<size_t>(total_cols_), Rational(0));
    if (info.slack_col >= 0) row[static_cast<size_t>(info.slack_col)] = 1;
    if (info.flip < 0) {
      for (auto& v : row) v = -v;
      rhs_[static_cast<size_t>(r)] = -rhs_[static_cast<size_t>(r)];
    }
    if (info.is_equation || info.flip < 0) {
      info.art_col = next_art++;
      row[static_cast<size_t>(info.art_col)] = 1;
      basis_[static_cast<size_t>(r)] = info.art_col;
    } else {
      basis_[static_cast<size_t>(r)] = info.slack_col;
    }
  }

  // Phase 1: maximize minus the sum of the artificials.
  RatVec phase1_cost = zeros(total_cols_);
  bool any_art = false;
  for (const auto& info : row_info_) {
    if (info.art_col >= 0) {
      phase1_cost[static_cast<size_t>(info.art_col)] = -1;
      any_art = true;
    }
  }
  if (any_art) {
    rebuild_objective(phase1_cost);
    phase(true);
    if (sgn(obj_value_) != 0) {
      feasible_ = false;
      return;
    }
    // Pivot basic artificials out wherever a nonzero real entry exists; rows
    // where none exists are implied by the rest and keep a zero artificial.
    for (int r = 0; r < rows; ++r) {
      int b = basis_[static_cast<size_t>(r)];
      if (b < struct_cols_ + slack_count) continue;
      for (int c = 0; c < struct_cols_ + slack_count; ++c) {
        if (sgn(tab_[static_cast<size_t>(r)][static_cast<size_t>(c)]) != 0) {
          pivot(r, c);
          break;
        }
      }
    }
  }
  feasible_ = true;
}

void SimplexSolver::pivot(int row, int col) {
  auto& prow = tab_[static_cast<size_t>(row)];
  Rational inv = 1 / prow[static_cast<size_t>(col)];
  if (inv != 1) {
    for (auto& v : prow)
      if (sgn(v) != 0) v *= inv;
    rhs_[static_cast<size_t>(row)] *= inv;
  }
  prow[static_cast<size_t>(col)] = 1;  // guard against residue
  for (size_t r = 0; r < tab_.size(); ++r) {
    if (static_cast<int>(r) == row) continue;
    Rational factor = tab_[r][static_cast<size_t>(col)];
    if (sgn(factor) == 0) continue;
    auto& target = tab_[r];
    for (size_t c = 0; c < prow.size(); ++c)
      if (sgn(prow[c]) != 0) target[c] -= factor * prow[c];
    target[static_cast<size_t>(col)] = 0;
    rhs_[r] -= factor * rhs_[static_cast<size_t>(row)];
  }
  Rational ofactor = obj_row_[static_cast<size_t>(col)];
  if (sgn(ofactor) != 0) {
    for (size_t c = 0; c < prow.size(); ++c)
      if (sgn(prow[c]) != 0) obj_row_[c] -= ofactor * prow[c];
    obj_row_[static_cast<size_t>(col)] = 0;
    obj_value_ -= ofactor * rhs_[static_cast<size_t>(row)];
  }
  basis_[static_cast<size_t>(row)] = col;
}

void SimplexSolver::rebuild_objective(const RatVec& cost) {
  obj_row_ = cost;
  for (auto& v : obj_row_) v = -v;
  obj_value_ = 0;
  for (size_t r = 0; r < tab_.size(); ++r) {
    const Rational& cb = cost[static_cast<size_t>(basis_[r])];
    if (sgn(cb) == 0) continue;
    for (size_t c = 0; c < obj_row_.size(); ++c)
      if (sgn(tab_[r][c]) != 0) obj_row_[c] += cb * tab_[r][c];
    obj_value_ += cb * rhs_[r];
  }
}

bool SimplexSolver::phase(bool stop_at_zero) {
  const int real_cols = struct_cols_ + num_ineq_;
  unbounded_ = false;
  while (true) {
    // Phase 1 maximizes -sum(artificials), bounded above by 0: once the value
    // hits 0 a feasible basis is at hand, no need to chase reduced costs.
    if (stop_at_zero && sgn(obj_value_) == 0) return true;
    // Bland: lowest-index improving column; artificials never re-enter.
    int enter = -1;
    for (int c = 0; c < real_cols; ++c) {
      if (sgn(obj_row_[static_cast<size_t>(c)]) < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    Rational best_ratio;
    for (size_t r = 0; r < tab_.size(); ++r) {
      const Rational& a = tab_[r][static_cast<size_t>(enter)];
      if (sgn(a) <= 0) continue;
      Rational ratio = rhs_[r] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[static_cast<size_t>(leave)])) {
        leave = static_cast<int>(r);
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      unbounded_ = true;
      return false;
    }
    pivot(leave, enter);
  }
}

RatVec SimplexSolver::unshift(const RatVec& tableau_point) const {
  RatVec y = zeros(num_orig_vars_);
  for (int j = 0; j < num_orig_vars_; ++j) {
    Rational v = tableau_point[static_cast<size_t>(var_col_[static_cast<size_t>(j)])];
    if (neg_col_[static_cast<size_t>(j)] >= 0)
      v -= tableau_point[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])];
    else
      v += *lower_bounds_[static_cast<size_t>(j)];
    y[static_cast<size_t>(j)] = v;
  }
  return y;
}

RatVec SimplexSolver::witness() const {
  assert(feasible_);
  RatVec point = zeros(total_cols_);
  for (size_t r = 0; r < tab_.size(); ++r)
    point[static_cast<size_t>(basis_[r])] = rhs_[r];
  return unshift(point);
}

LPResult SimplexSolver::optimize(const RatVec& objective) {
  LPResult result;
  if (!feasible_) {
    result.status = LPStatus::Infeasible;
    return result;
  }
  RatVec c = objective.empty() ? zeros(num_orig_vars_) : objective;
  if (static_cast<int>(c.size()) != num_orig_vars_)
    throw std::domain_error("objective length mismatch");
  const bool minimize = sense_ == Sense::Minimize;

  shifted_cost_ = zeros(total_cols_);
  cost_offset_ = 0;
  for (int j = 0; j < num_orig_vars_; ++j) {
    Rational cj = minimize ? -c[static_cast<size_t>(j)] : c[static_cast<size_t>(j)];
    if (sgn(cj) == 0) continue;
    shifted_cost_[static_cast<size_t>(var_col_[static_cast<size_t>(j)])] = cj;
    if (neg_col_[static_cast<size_t>(j)] >= 0)
      shifted_cost_[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])] = -cj;
    else
      cost_offset_ += cj * *lower_bounds_[static_cast<size_t>(j)];
  }
  rebuild_objective(shifted_cost_);
  if (!phase(false)) {
    result.status = LPStatus::Unbounded;
    return result;
  }

  result.status = LPStatus::Optimal;
  Rational value = obj_value_ + cost_offset_;
  result.value = minimize ? Rational(-value) : value;

  RatVec tableau_point = zeros(total_cols_);
  for (size_t r = 0; r < tab_.size(); ++r)
    tableau_point[static_cast<size_t>(basis_[r])] = rhs_[r];
  result.point = unshift(tableau_point);

  // Duals: the reduced cost of a row's seed column (its unit column in the
  // starting tableau) is the row multiplier, up to the rhs-sign flip.
  result.dual.eq_duals = zeros(num_eq_);
  result.dual.ineq_duals = zeros(num_ineq_);
  for (size_t r = 0; r < row_info_.size(); ++r) {
    const auto& info = row_info_[r];
    int seed = info.art_col >= 0 ? info.art_col : info.slack_col;
    Rational y = obj_row_[static_cast<size_t>(seed)];
    if (info.flip < 0) y = -y;
    if (info.is_equation)
      result.dual.eq_duals[r] = y;
    else
      result.dual.ineq_duals[r - static_cast<size_t>(num_eq_)] = y;
  }
  result.dual.bound_duals = zeros(num_orig_vars_);
  for (int j = 0; j < num_orig_vars_; ++j)
    if (neg_col_[static_cast<size_t>(j)] < 0)
      result.dual.bound_duals[static_cast<size_t>(j)] =
          obj_row_[static_cast<size_t>(var_col_[static_cast<size_t>(j)])];
  return result;
}

LPResult solve(const LinearProgram& lp) {
  SimplexSolver solver(lp);
  return solver.optimize(lp.objective);
}

std::optional<RatVec> is_feasible(const LinearProgram& lp) {
  SimplexSolver solver(lp);
  if (!solver.feasible()) return std::nullopt;
  return solver.witness();
}

namespace {

Rational row_activity(const LinearRow& row, const RatVec& y) {
  return dot(row.coeffs, y);
}

// Implicit-equality scan shared by affine_hull and remove_redundant: returns
// which inequality rows (and which variable lower bounds) hold with equality
// over the whole feasible set. interior accumulates a point that is slack in
// every non-implicit constraint.
struct ImplicitScan {
  std::vector<bool> row_implicit;
  std::vector<bool> bound_implicit;
  RatVec interior;
};

ImplicitScan scan_implicit(const LinearProgram& lp) {
  auto witness = is_feasible(lp);
  if (!witness) throw std::domain_error("infeasible system");
  RatVec point = *witness;

  ImplicitScan scan;
  scan.row_implicit.assign(lp.inequalities.size(), false);
  scan.bound_implicit.assign(static_cast<size_t>(lp.num_vars), false);

  LinearProgram probe = lp;
  probe.sense = Sense::Minimize;

  auto blend = [&](const RatVec& other) {
    for (size_t j = 0; j < point.size(); ++j)
      point[j] = (point[j] + other[j]) / 2;
  };

  for (size_t i = 0; i < lp.inequalities.size(); ++i) {
    const auto& row = lp.inequalities[i];
    if (row_activity(row, point) < row.rhs) continue;
    probe.objective = row.coeffs;
    LPResult res = solve(probe);
    if (res.status == LPStatus::Optimal && res.value == row.rhs) {
      scan.row_implicit[i] = true;
    } else if (res.status == LPStatus::Optimal) {
      blend(res.point);
    }
    // Unbounded below: certainly not implicit, but no finite point returned.
  }
  // A bound is implicit when the variable cannot rise above it.
  probe.sense = Sense::Maximize;
  for (int j = 0; j < lp.num_vars && !lp.lower_bounds.empty(); ++j) {
    const auto& lb = lp.lower_bounds[static_cast<size_t>(j)];
    if (!lb.has_value()) continue;
    if (point[static_cast<size_t>(j)] > *lb) continue;
    probe.objective = zeros(lp.num_vars);
    probe.objective[static_cast<size_t>(j)] = 1;
    LPResult res = solve(probe);
    if (res.status == LPStatus::Optimal && res.value == *lb)
      scan.bound_implicit[static_cast<size_t>(j)] = true;
    else if (res.status == LPStatus::Optimal)
      blend(res.point);
  }
  scan.interior = std::move(point);
  return scan;
}

}  // namespace

AffineHull affine_hull(const LinearProgram& lp) {
  ImplicitScan scan = scan_implicit(lp);
  RatMat eqs;
  for (const auto& row : lp.equations) eqs.push_back(row.coeffs);
  for (size_t i = 0; i < lp.inequalities.size(); ++i)
    if (scan.row_implicit[i]) eqs.push_back(lp.inequalities[i].coeffs);
  for (int j = 0; j < lp.num_vars; ++j) {
    if (j < static_cast<int>(scan.bound_implicit.size()) &&
        scan.bound_implicit[static_cast<size_t>(j)]) {
      RatVec unit = zeros(lp.num_vars);
      unit[static_cast<size_t>(j)] = 1;
      eqs.push_back(std::move(unit));
    }
  }
  AffineHull hull;
  hull.point = scan.interior;
  hull.directions = nullspace_basis(eqs, lp.num_vars);
  return hull;
}

LinearProgram remove_redundant(const LinearProgram& lp) {
  ImplicitScan scan = scan_implicit(lp);

  LinearProgram out;
  out.num_vars = lp.num_vars;
  out.sense = lp.sense;
  out.objective = lp.objective;
  out.lower_bounds = lp.lower_bounds;
  out.equations = lp.equations;

  std::vector<LinearRow> candidates;
  for (size_t i = 0; i < lp.inequalities.size(); ++i) {
    if (scan.row_implicit[i])
      out.equations.push_back(lp.inequalities[i]);
    else
      candidates.push_back(lp.inequalities[i]);
  }

  // Normalize and deduplicate equations (implicit pairs like x<=1, -x<=-1
  // produce the same hyperplane twice).
  std::vector<LinearRow> unique_eqs;
  for (auto& eq : out.equations) {
    LinearRow norm = eq;
    const Rational* lead = nullptr;
    for (const auto& v : norm.coeffs)
      if (sgn(v) != 0) {
        lead = &v;
        break;
      }
    if (lead != nullptr) {
      Rational inv = 1 / *lead;
      for (auto& v : norm.coeffs) v *= inv;
      norm.rhs *= inv;
    }
    bool seen = false;
    for (const auto& kept : unique_eqs)
      if (kept.coeffs == norm.coeffs && kept.rhs == norm.rhs) {
        seen = true;
        break;
      }
    if (!seen) unique_eqs.push_back(std::move(norm));
  }
  out.equations = std::move(unique_eqs);

  // Row-by-row redundancy certification: a row is dropped iff maximizing it
  // over the remaining system cannot exceed its rhs.
  std::vector<bool> kept(candidates.size(), true);
  for (size_t i = 0; i < candidates.size(); ++i) {
    LinearProgram probe;
    probe.num_vars = lp.num_vars;
    probe.sense = Sense::Maximize;
    probe.lower_bounds = lp.lower_bounds;
    probe.equations = out.equations;
    for (size_t j = 0; j < candidates.size(); ++j)
      if (j != i && kept[j]) probe.inequalities.push_back(candidates[j]);
    probe.objective = candidates[i].coeffs;
    LPResult res = solve(probe);
    if (res.status == LPStatus::Optimal && res.value <= candidates[i].rhs)
      kept[i] = false;
  }
  for (size_t i = 0; i < candidates.size(); ++i)
    if (kept[i]) out.inequalities.push_back(candidates[i]);
  return out;
}

}  // namespace efforge
