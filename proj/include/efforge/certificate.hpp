#ifndef EFFORGE_CERTIFICATE_HPP
#define EFFORGE_CERTIFICATE_HPP

#include <vector>

#include "efforge/rational.hpp"

namespace efforge {

// Interpolation weights at zero: gamma with sum_i f(i) gamma_i = f(0) for
// every polynomial f of degree < |points|. Points must be pairwise distinct;
// if 0 is among them the weights are the trivial indicator.
RatVec lagrange_at_zero(const std::vector<Rational>& points);

// Number of perfect matchings on two labelled (2k+1)-node sides with exactly
// i crossing edges (i odd): C(2k+1,i)^2 * i! * ((2k-i)!!)^2.
Rational count_cross_class(int k, int i);

// Edge counts of a partial matching on the two sides: inside the lower side,
// crossing, inside the upper side.
struct PatternTriple {
  int lower = 0;
  int crossing = 0;
  int upper = 0;
  int total() const { return lower + crossing + upper; }
};

// Number of matchings realizing the pattern on two (2k+1)-node sides.
Rational pattern_class_size(int k, const PatternTriple& pattern);

// g_A(i): how many cross-class-i perfect matchings contain one fixed partial
// matching with this pattern. Symmetry-averaged closed form
//   |M*_i| / |class of A| * C((2k+1-i)/2, lower) C(i, crossing)
//                          * C((2k+1-i)/2, upper).
Rational count_containing(int k, int i, const PatternTriple& pattern);

struct CrossClass {
  int i = 0;
  Rational count;
  Rational lambda;
};

struct PatternCheck {
  PatternTriple pattern;
  Rational value;
  bool pass = false;
};

struct SymmetryCertificate {
  int k = 0;
  int n = 0;
  std::vector<CrossClass> classes;
  std::vector<PatternCheck> patterns;
  Rational slack_equation;          // must come out as exactly -1
  bool enumeration_checked = false; // concrete-matching oracle ran (k <= 2)
  bool verdict = false;
};

// The certificate refuting small coordinate-symmetric subspace extensions:
// lambda_i = rho * gamma_i / |M*_i| with gamma the interpolation weights on
// the odd classes and rho = 2 normalizing the slack combination to -1. All
// pattern combinations must be nonnegative. For k <= 2 every value is also
// cross-checked against exhaustive enumeration of the perfect matchings.
SymmetryCertificate build_certificate(int k, int n);

struct FarkasOutcome {
  bool found = false;
  RatVec lambda;
};

// Generic check: does lambda exist with section_values . lambda >= 0 row-wise
// and slacks . lambda == -1? A witness refutes the section matrix; infeasible
// means the matrix is consistent.
FarkasOutcome farkas_check(const RatMat& section_values, const RatVec& slacks);

}  // namespace efforge

#endif
