#pragma once

#include <string>
#include <string_view>

#include "etale/kaehler.hpp"

namespace etale {

/// Reads the line-based presentation format:
///
///   field Q            # or: field GF(5)
///   vars X, Y
///   relations:
///     X^2 + Y^2 - 1
///     X*Y
///
/// Throws ParseError carrying a 1-based line and column.
AlgebraPresentation parse_input(std::string_view text, MonomialOrder order = MonomialOrder::GrevLex);

/// One polynomial over an existing ring, e.g. "3/2*X^2*Y - (Y + 1)^3".
MultiPoly parse_polynomial(std::string_view text, const PolyRing& ring);

}  // namespace etale
