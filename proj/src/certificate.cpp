#include "efforge/certificate.hpp"

#include <stdexcept>

#include "efforge/graph.hpp"
#include "efforge/lp.hpp"

namespace efforge {

RatVec lagrange_at_zero(const std::vector<Rational>& points) {
  const size_t k1 = points.size();
  for (size_t i = 0; i < k1; ++i)
    for (size_t j = i + 1; j < k1; ++j)
      if (points[i] == points[j])
        throw std::domain_error("interpolation points must be distinct");
  for (size_t i = 0; i < k1; ++i) {
    if (sgn(points[i]) == 0) {
      RatVec gamma = zeros(static_cast<int>(k1));
      gamma[i] = 1;
      return gamma;
    }
  }
  RatVec gamma(k1);
  for (size_t i = 0; i < k1; ++i) {
    Rational value = 1;
    for (size_t j = 0; j < k1; ++j) {
      if (j == i) continue;
      value *= -points[j] / (points[i] - points[j]);
    }
    gamma[i] = value;
  }
  return gamma;
}

Rational count_cross_class(int k, int i) {
  if (k < 1) throw std::domain_error("need k >= 1");
  if (i % 2 == 0 || i < 1 || i > 2 * k + 1)
    throw std::domain_error("cross count must be odd in 1..2k+1");
  Rational side = binomial(static_cast<unsigned>(2 * k + 1), static_cast<unsigned>(i));
  Rational internal = double_factorial(2 * k - i);
  return side * side * factorial(static_cast<unsigned>(i)) * internal * internal;
}

Rational pattern_class_size(int k, const PatternTriple& pattern) {
  const int side = 2 * k + 1;
  // gmpxx expression templates must not escape the full expression, hence the
  // explicit Rational return type.
  auto matchings_in_side = [&](int edges) -> Rational {
    // matchings of a given size within one side of 2k+1 labelled nodes
    return binomial(static_cast<unsigned>(side), static_cast<unsigned>(2 * edges)) *
           double_factorial(2 * edges - 1);
  };
  Rational lower = matchings_in_side(pattern.lower);
  Rational upper = matchings_in_side(pattern.upper);
  Rational cross =
      binomial(static_cast<unsigned>(side - 2 * pattern.lower),
               static_cast<unsigned>(pattern.crossing)) *
      binomial(static_cast<unsigned>(side - 2 * pattern.upper),
               static_cast<unsigned>(pattern.crossing)) *
      factorial(static_cast<unsigned>(pattern.crossing));
  return lower * upper * cross;
}

Rational count_containing(int k, int i, const PatternTriple& pattern) {
  if (pattern.lower < 0 || pattern.crossing < 0 || pattern.upper < 0 ||
      pattern.total() > k)
    throw std::domain_error("pattern must be nonnegative with at most k edges");
  if (i % 2 == 0 || i < 1 || i > 2 * k + 1)
    throw std::domain_error("cross count must be odd in 1..2k+1");
  Rational internal_pairs = Rational(2 * k + 1 - i) / 2;
  Rational product =
      binomial_general(internal_pairs, static_cast<unsigned>(pattern.lower)) *
      binomial_general(Rational(i), static_cast<unsigned>(pattern.crossing)) *
      binomial_general(internal_pairs, static_cast<unsigned>(pattern.upper));
  return count_cross_class(k, i) * product / pattern_class_size(k, pattern);
}

namespace {

struct Enumeration {
  std::vector<EdgeSubset> perfect_matchings;
  std::vector<int> cross_count;  // per matching
};

// Perfect matchings on the two (2k+1)-node sides: nodes 1..2k+1 on the lower
// side, 2k+2..4k+2 on the upper side.
Enumeration enumerate_star_matchings(int k) {
  CompleteGraphContext ctx(4 * k + 2);
  Enumeration out;
  out.perfect_matchings = enumerate_matchings(ctx, 2 * k + 1);
  out.cross_count.reserve(out.perfect_matchings.size());
  for (const auto& m : out.perfect_matchings) {
    int cross = 0;
    for (int e : m.edges()) {
      auto [v, w] = ctx.edge_nodes(e);
      if (v <= 2 * k + 1 && w > 2 * k + 1) ++cross;
    }
    out.cross_count.push_back(cross);
  }
  return out;
}

PatternTriple pattern_of(const CompleteGraphContext& ctx, const EdgeSubset& partial, int k) {
  PatternTriple pattern;
  for (int e : partial.edges()) {
    auto [v, w] = ctx.edge_nodes(e);
    bool v_low = v <= 2 * k + 1;
    bool w_low = w <= 2 * k + 1;
    if (v_low && w_low)
      ++pattern.lower;
    else if (!v_low && !w_low)
      ++pattern.upper;
    else
      ++pattern.crossing;
  }
  return pattern;
}

}  // namespace

SymmetryCertificate build_certificate(int k, int n) {
  if (k < 1) throw std::domain_error("need k >= 1");
  if (n < 4 * k + 2) throw std::domain_error("need n >= 4k+2");

  SymmetryCertificate cert;
  cert.k = k;
  cert.n = n;

  std::vector<Rational> odd_points;
  for (int i = 1; i <= 2 * k + 1; i += 2) odd_points.emplace_back(i);
  RatVec gamma = lagrange_at_zero(odd_points);

  // The slack polynomial (i-1)/2 evaluates to -1/2 at zero; rho = 2 rescales
  // the combination to the required -1 without touching any sign.
  const Rational rho = 2;
  for (size_t idx = 0; idx < odd_points.size(); ++idx) {
    CrossClass cls;
    cls.i = 1 + 2 * static_cast<int>(idx);
    cls.count = count_cross_class(k, cls.i);
    cls.lambda = rho * gamma[idx] / cls.count;
    cert.classes.push_back(std::move(cls));
  }

  cert.slack_equation = 0;
  for (const auto& cls : cert.classes)
    cert.slack_equation += Rational(cls.i - 1) / 2 * cls.count * cls.lambda;
  bool ok = cert.slack_equation == -1;

  for (int lower = 0; lower <= k; ++lower) {
    for (int crossing = 0; lower + crossing <= k; ++crossing) {
      for (int upper = 0; lower + crossing + upper <= k; ++upper) {
        PatternCheck check;
        check.pattern = {lower, crossing, upper};
        check.value = 0;
        for (const auto& cls : cert.classes)
          check.value += count_containing(k, cls.i, check.pattern) * cls.lambda;
        check.pass = sgn(check.value) >= 0;
        ok = ok && check.pass;
        cert.patterns.push_back(std::move(check));
      }
    }
  }

  if (k <= 2) {
    // Independent oracle: count containments by enumerating the perfect
    // matchings, guarding the symmetry-averaged formula and the sign of the
    // combination for every concrete partial matching.
    CompleteGraphContext ctx(4 * k + 2);
    Enumeration enumeration = enumerate_star_matchings(k);
    for (int size = 0; size <= k; ++size) {
      for (const auto& partial : enumerate_matchings(ctx, size)) {
        std::vector<Rational> counts(static_cast<size_t>(k) + 1, Rational(0));
        for (size_t m = 0; m < enumeration.perfect_matchings.size(); ++m) {
          bool contains = true;
          for (int e : partial.edges())
            if (!enumeration.perfect_matchings[m].contains(e)) {
              contains = false;
              break;
            }
          if (contains)
            counts[static_cast<size_t>((enumeration.cross_count[m] - 1) / 2)] += 1;
        }
        PatternTriple pattern = pattern_of(ctx, partial, k);
        Rational combination = 0;
        for (const auto& cls : cert.classes) {
          const Rational& brute = counts[static_cast<size_t>((cls.i - 1) / 2)];
          if (brute != count_containing(k, cls.i, pattern)) ok = false;
          combination += brute * cls.lambda;
        }
        if (sgn(combination) < 0) ok = false;
      }
    }
    cert.enumeration_checked = true;
  }

  cert.verdict = ok;
  return cert;
}

FarkasOutcome farkas_check(const RatMat& section_values, const RatVec& slacks) {
  const size_t cols = slacks.size();
  for (const auto& row : section_values)
    if (row.size() != cols)
      throw std::domain_error("section matrix and slack vector sizes differ");
  for (const auto& s : slacks)
    if (sgn(s) < 0)
      throw std::domain_error("slack covector of a valid inequality is nonnegative");

  // lambda = pos - neg with pos, neg >= 0; minimizing their sum picks the
  // L1-smallest certificate, which makes the returned witness canonical.
  const int n = static_cast<int>(cols);
  LinearProgram lp = LinearProgram::with_nonnegative_vars(2 * n);
  lp.sense = Sense::Minimize;
  lp.objective = RatVec(static_cast<size_t>(2 * n), Rational(1));
  auto split = [&](const RatVec& row) {
    RatVec coeffs(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
      coeffs[static_cast<size_t>(j)] = row[static_cast<size_t>(j)];
      coeffs[static_cast<size_t>(n + j)] = -row[static_cast<size_t>(j)];
    }
    return coeffs;
  };
  for (const auto& row : section_values) {
    LinearRow constraint;
    constraint.coeffs = split(row);
    for (auto& c : constraint.coeffs) c = -c;  // row . lambda >= 0
    constraint.rhs = 0;
    lp.inequalities.push_back(std::move(constraint));
  }
  LinearRow eq;
  eq.coeffs = split(slacks);
  eq.rhs = -1;
  lp.equations.push_back(std::move(eq));

  FarkasOutcome outcome;
  LPResult res = solve(lp);
  if (res.status == LPStatus::Optimal) {
    outcome.found = true;
    outcome.lambda = zeros(n);
    for (int j = 0; j < n; ++j)
      outcome.lambda[static_cast<size_t>(j)] =
          res.point[static_cast<size_t>(j)] - res.point[static_cast<size_t>(n + j)];
  }
  return outcome;
}

}  // namespace efforge
