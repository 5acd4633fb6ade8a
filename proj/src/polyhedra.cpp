#include "efforge/polyhedra.hpp"

#include <sstream>
#include <stdexcept>

#include "efforge/linalg.hpp"

namespace efforge {

RatVec ExtendedFormulation::project(const RatVec& y) const {
  RatVec x = mat_vec(projection_matrix, y);
  for (size_t r = 0; r < x.size(); ++r) x[r] += projection_offset[r];
  return x;
}

bool ExtendedFormulation::is_subspace_extension() const {
  if (static_cast<int>(inequalities.size()) != dim) return false;
  std::vector<bool> seen(static_cast<size_t>(dim), false);
  for (const auto& row : inequalities) {
    if (sgn(row.rhs) != 0) return false;
    int var = -1;
    for (int j = 0; j < dim; ++j) {
      if (sgn(row.coeffs[static_cast<size_t>(j)]) == 0) continue;
      if (var >= 0) return false;
      var = j;
    }
    if (var < 0 || row.coeffs[static_cast<size_t>(var)] != -1) return false;
    if (seen[static_cast<size_t>(var)]) return false;
    seen[static_cast<size_t>(var)] = true;
  }
  return true;
}

void ExtendedFormulation::validate() const {
  for (const auto& row : equations)
    if (static_cast<int>(row.coeffs.size()) != dim)
      throw std::domain_error("equation row length mismatch");
  for (const auto& row : inequalities)
    if (static_cast<int>(row.coeffs.size()) != dim)
      throw std::domain_error("inequality row length mismatch");
  if (projection_matrix.size() != projection_offset.size())
    throw std::domain_error("projection offset length mismatch");
  for (const auto& row : projection_matrix)
    if (static_cast<int>(row.size()) != dim)
      throw std::domain_error("projection row length mismatch");
}

LinearProgram ef_constraints_lp(const ExtendedFormulation& ef, bool extract_bounds) {
  LinearProgram lp;
  lp.num_vars = ef.dim;
  lp.equations = ef.equations;
  lp.lower_bounds.assign(static_cast<size_t>(ef.dim), std::nullopt);
  for (const auto& row : ef.inequalities) {
    if (extract_bounds) {
      int var = -1;
      bool singleton = true;
      for (int j = 0; j < ef.dim; ++j) {
        if (sgn(row.coeffs[static_cast<size_t>(j)]) == 0) continue;
        if (var >= 0) {
          singleton = false;
          break;
        }
        var = j;
      }
      if (singleton && var >= 0 && sgn(row.coeffs[static_cast<size_t>(var)]) < 0) {
        Rational bound = row.rhs / row.coeffs[static_cast<size_t>(var)];
        auto& lb = lp.lower_bounds[static_cast<size_t>(var)];
        if (!lb.has_value() || bound > *lb) lb = bound;
        continue;
      }
    }
    lp.inequalities.push_back(row);
  }
  return lp;
}

namespace {

RatVec pullback_objective(const ExtendedFormulation& ef, const RatVec& c) {
  if (static_cast<int>(c.size()) != ef.ambient_dim())
    throw std::domain_error("objective length does not match ambient dimension");
  RatVec obj = zeros(ef.dim);
  for (int r = 0; r < ef.ambient_dim(); ++r) {
    if (sgn(c[static_cast<size_t>(r)]) == 0) continue;
    const auto& row = ef.projection_matrix[static_cast<size_t>(r)];
    for (int j = 0; j < ef.dim; ++j)
      if (sgn(row[static_cast<size_t>(j)]) != 0)
        obj[static_cast<size_t>(j)] += c[static_cast<size_t>(r)] * row[static_cast<size_t>(j)];
  }
  return obj;
}

}  // namespace

OptimizeSession::OptimizeSession(const ExtendedFormulation& ef)
    : ef_(ef), lp_(ef_constraints_lp(ef, true)), solver_(lp_) {
  if (!solver_.feasible())
    throw std::domain_error("extension is empty: no point satisfies the formulation");
}

std::optional<AmbientOptimum> OptimizeSession::try_optimize(const RatVec& c) {
  LPResult res = solver_.optimize(pullback_objective(ef_, c));
  if (res.status == LPStatus::Unbounded) return std::nullopt;
  AmbientOptimum out;
  out.value = res.value + dot(c, ef_.projection_offset);
  out.point = ef_.project(res.point);
  return out;
}

AmbientOptimum OptimizeSession::optimize(const RatVec& c) {
  auto out = try_optimize(c);
  if (!out)
    throw std::domain_error("extension is unbounded in the objective direction");
  return *out;
}

AmbientOptimum optimize(const ExtendedFormulation& ef, const RatVec& c) {
  OptimizeSession session(ef);
  return session.optimize(c);
}

bool contains_in_fiber(const ExtendedFormulation& ef, const RatVec& x) {
  if (static_cast<int>(x.size()) != ef.ambient_dim())
    throw std::domain_error("point length does not match ambient dimension");
  LinearProgram lp = ef_constraints_lp(ef, true);
  for (int r = 0; r < ef.ambient_dim(); ++r) {
    LinearRow row;
    row.coeffs = ef.projection_matrix[static_cast<size_t>(r)];
    row.rhs = x[static_cast<size_t>(r)] - ef.projection_offset[static_cast<size_t>(r)];
    lp.equations.push_back(std::move(row));
  }
  return is_feasible(lp).has_value();
}

ExtendedFormulation slack_representation(const ExtendedFormulation& ef) {
  ef.validate();
  LinearProgram rows = ef_constraints_lp(ef, false);
  LinearProgram irredundant = remove_redundant(rows);  // throws when infeasible

  auto witness = is_feasible(irredundant);
  RatVec y0 = *witness;

  RatMat eq_matrix;
  for (const auto& row : irredundant.equations) eq_matrix.push_back(row.coeffs);
  RatMat directions = nullspace_basis(eq_matrix, ef.dim);
  const int p = static_cast<int>(directions.size());
  const int f = static_cast<int>(irredundant.inequalities.size());
  const int m = ef.ambient_dim();

  // Slack coordinates z = b - A y; on aff(Q) they sweep z0 + col(D).
  RatVec z0(static_cast<size_t>(f));
  RatMat d_mat(static_cast<size_t>(f), RatVec(static_cast<size_t>(p)));
  for (int i = 0; i < f; ++i) {
    const auto& row = irredundant.inequalities[static_cast<size_t>(i)];
    z0[static_cast<size_t>(i)] = row.rhs - dot(row.coeffs, y0);
    for (int k = 0; k < p; ++k)
      d_mat[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          dot(row.coeffs, directions[static_cast<size_t>(k)]);
  }

  ExtendedFormulation out;
  out.dim = f;

  // Equations cutting out the affine subspace spanned by the slack image.
  RatMat d_t = transpose(d_mat, p);  // p x f
  for (const auto& g : nullspace_basis(d_t, f)) {
    LinearRow eq;
    eq.coeffs = g;
    eq.rhs = dot(g, z0);
    out.equations.push_back(std::move(eq));
  }

  for (int i = 0; i < f; ++i) {
    LinearRow nonneg;
    nonneg.coeffs = zeros(f);
    nonneg.coeffs[static_cast<size_t>(i)] = -1;
    nonneg.rhs = 0;
    out.inequalities.push_back(std::move(nonneg));
  }

  // Projection through the inverse of the slack map: solve T~ D = -T K, which
  // is solvable because directions collapsed by the slack map are lineality
  // directions of Q, along which the projection of a polytope is constant.
  RatMat tk(static_cast<size_t>(m), RatVec(static_cast<size_t>(p)));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < p; ++k)
      tk[static_cast<size_t>(r)][static_cast<size_t>(k)] =
          dot(ef.projection_matrix[static_cast<size_t>(r)], directions[static_cast<size_t>(k)]);
  out.projection_matrix.assign(static_cast<size_t>(m), RatVec());
  out.projection_offset = zeros(m);
  RatVec x0 = ef.project(y0);
  for (int r = 0; r < m; ++r) {
    RatVec rhs(static_cast<size_t>(p));
    for (int k = 0; k < p; ++k) rhs[static_cast<size_t>(k)] = -tk[static_cast<size_t>(r)][static_cast<size_t>(k)];
    auto tau = solve_linear(d_t, rhs);
    if (!tau)
      throw std::runtime_error(
          "slack map not invertible over the projection: nontrivial lineality");
    out.projection_matrix[static_cast<size_t>(r)] = std::move(*tau);
    out.projection_offset[static_cast<size_t>(r)] =
        x0[static_cast<size_t>(r)] - dot(out.projection_matrix[static_cast<size_t>(r)], z0);
  }
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "all checks passed";
    return os.str();
  }
  for (size_t v : vertex_failures) os << "vertex " << v << " not in projection image; ";
  for (const auto& fail : objective_failures) {
    os << "objective " << fail.index << ": formulation ";
    if (fail.unbounded)
      os << "unbounded";
    else
      os << rational_to_string(fail.ef_value);
    os << " vs brute force " << rational_to_string(fail.brute_value) << "; ";
  }
  return os.str();
}

VerificationReport verify_projection_equals(const ExtendedFormulation& ef,
                                            const std::vector<RatVec>& vertices,
                                            const std::vector<RatVec>& objectives) {
  if (vertices.empty()) throw std::domain_error("vertex list must be non-empty");
  VerificationReport report;
  for (size_t i = 0; i < vertices.size(); ++i)
    if (!contains_in_fiber(ef, vertices[i])) report.vertex_failures.push_back(i);

  OptimizeSession session(ef);
  for (size_t i = 0; i < objectives.size(); ++i) {
    const RatVec& c = objectives[i];
    Rational brute = dot(c, vertices.front());
    for (size_t v = 1; v < vertices.size(); ++v) {
      Rational value = dot(c, vertices[v]);
      if (value > brute) brute = value;
    }
    auto opt = session.try_optimize(c);
    if (!opt)
      report.objective_failures.push_back({i, Rational(0), brute, true});
    else if (opt->value != brute)
      report.objective_failures.push_back({i, opt->value, brute, false});
  }
  return report;
}

}  // namespace efforge
