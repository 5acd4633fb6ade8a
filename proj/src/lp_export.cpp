#include "efforge/lp_export.hpp"

#include <sstream>

namespace efforge {

namespace {

std::string render_value(const Rational& value, bool& saw_fraction) {
  if (has_finite_decimal(value)) return rational_to_decimal(value);
  saw_fraction = true;
  return rational_to_string(value);
}

std::string render_terms(const RatVec& coeffs, bool& saw_fraction) {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    if (any) {
      if (sgn(coeffs[j]) < 0)
        os << " - " << render_value(-coeffs[j], saw_fraction);
      else
        os << " + " << render_value(coeffs[j], saw_fraction);
    } else {
      os << render_value(coeffs[j], saw_fraction);
    }
    os << " y" << j;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace

std::string export_lp_text(const ExtendedFormulation& ef, const RatVec& ambient_objective) {
  bool saw_fraction = false;
  std::ostringstream body;

  // Ambient objective c pulls back to (T^t c) y; LP text carries no constant
  // term, so the c.t shift stays out of the file.
  RatVec pullback = zeros(ef.dim);
  for (int r = 0; r < ef.ambient_dim(); ++r) {
    if (sgn(ambient_objective[static_cast<size_t>(r)]) == 0) continue;
    for (int j = 0; j < ef.dim; ++j)
      pullback[static_cast<size_t>(j)] +=
          ambient_objective[static_cast<size_t>(r)] *
          ef.projection_matrix[static_cast<size_t>(r)][static_cast<size_t>(j)];
  }
  body << "max: " << render_terms(pullback, saw_fraction) << "\n";
  for (const auto& row : ef.equations)
    body << render_terms(row.coeffs, saw_fraction) << " = "
         << render_value(row.rhs, saw_fraction) << "\n";
  for (const auto& row : ef.inequalities)
    body << render_terms(row.coeffs, saw_fraction) << " <= "
         << render_value(row.rhs, saw_fraction) << "\n";

  std::string text = body.str();
  if (saw_fraction) text = "\\ fraction-extended\n" + text;
  return text;
}

}  // namespace efforge
