#ifndef EFFORGE_POLYHEDRA_HPP
#define EFFORGE_POLYHEDRA_HPP

#include <string>
#include <vector>

#include "efforge/lp.hpp"
#include "efforge/rational.hpp"

namespace efforge {

// An extended formulation: a polyhedron Q = {y : A= y = b=, A<= y <= b<=} in
// R^dim together with an affine projection p(y) = projection_matrix y +
// projection_offset into the ambient space. Nonnegativity constraints are
// ordinary inequality rows, so size() counts them.
struct ExtendedFormulation {
  int dim = 0;
  std::vector<LinearRow> equations;
  std::vector<LinearRow> inequalities;
  RatMat projection_matrix;  // ambient_dim x dim
  RatVec projection_offset;

  int ambient_dim() const { return static_cast<int>(projection_matrix.size()); }
  int size() const { return static_cast<int>(inequalities.size()); }
  RatVec project(const RatVec& y) const;

  // True iff the inequality system is exactly one y_j >= 0 row per variable.
  bool is_subspace_extension() const;

  void validate() const;
};

// Constraint system of Q as a LinearProgram. With extract_bounds, negative
// singleton rows (alpha y_j <= beta, alpha < 0) become variable lower bounds,
// which keeps the simplex tableau small; the feasible set is unchanged.
LinearProgram ef_constraints_lp(const ExtendedFormulation& ef, bool extract_bounds);

struct AmbientOptimum {
  Rational value;
  RatVec point;  // ambient witness p(y*)
};

// max { c.x : x in p(Q) }. Throws on an empty or unbounded extension.
AmbientOptimum optimize(const ExtendedFormulation& ef, const RatVec& c);

// Reusable solver for many objectives over one formulation: phase 1 runs
// once, later objectives restart phase 2 from the previous basis.
class OptimizeSession {
 public:
  explicit OptimizeSession(const ExtendedFormulation& ef);
  AmbientOptimum optimize(const RatVec& c);
  // nullopt when the formulation is unbounded in the direction of c.
  std::optional<AmbientOptimum> try_optimize(const RatVec& c);

 private:
  const ExtendedFormulation& ef_;
  LinearProgram lp_;
  SimplexSolver solver_;
};

// True iff Q intersects the fiber p^{-1}(x).
bool contains_in_fiber(const ExtendedFormulation& ef, const RatVec& x);

// Lemma-style slack transform: the image of Q under y -> b - Ay for its
// irredundant facet description, a subspace extension of the same size with
// the projection composed through the slack map's inverse.
ExtendedFormulation slack_representation(const ExtendedFormulation& ef);

struct VerificationReport {
  std::vector<size_t> vertex_failures;  // vertices not in p(Q)
  struct ObjectiveMismatch {
    size_t index;
    Rational ef_value;  // meaningless when unbounded
    Rational brute_value;
    bool unbounded = false;
  };
  std::vector<ObjectiveMismatch> objective_failures;
  bool ok() const { return vertex_failures.empty() && objective_failures.empty(); }
  std::string summary() const;
};

// (a) every vertex lies in p(Q): conv(vertices) <= p(Q) exactly;
// (b) optimize(ef,c) matches the brute-force maximum over the vertex list for
//     every objective in the suite: evidence for p(Q) <= conv(vertices).
VerificationReport verify_projection_equals(const ExtendedFormulation& ef,
                                            const std::vector<RatVec>& vertices,
                                            const std::vector<RatVec>& objectives);

}  // namespace efforge

#endif
