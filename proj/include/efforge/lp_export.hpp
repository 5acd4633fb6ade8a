#ifndef EFFORGE_LP_EXPORT_HPP
#define EFFORGE_LP_EXPORT_HPP

#include <string>

#include "efforge/polyhedra.hpp"

namespace efforge {

// Plain-text model over the formulation's variables y0..y{d-1}: one objective
// line (the ambient objective pulled back through the projection), then one
// line per equation and per inequality. Coefficients print as exact decimals
// when the denominator allows it, otherwise as p/q fractions, in which case a
// leading comment line flags the file as fraction-extended. Output is
// byte-stable.
std::string export_lp_text(const ExtendedFormulation& ef, const RatVec& ambient_objective);

}  // namespace efforge

#endif
