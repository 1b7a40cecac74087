#pragma once

#include <span>

namespace pqf::numerics {

/// True when every root of 1 + c[0] z + c[1] z^2 + ... lies strictly outside
/// the circle |z| = radius. An AR polynomial 1 - phi_1 z - ... is checked by
/// passing the negated coefficients.
bool roots_outside(std::span<const double> coefficients, double radius);

} // namespace pqf::numerics
