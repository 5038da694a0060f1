#pragma once

#include <string_view>

#include "koszul/poly.hpp"

namespace koszul {

/// Grammar: sums and differences of products of powers of atoms; an atom
/// is an integer, a rational a/b, a variable or a parenthesised
/// expression. Multiplication is always explicit ("x*y", never "xy").
/// Throws ParseError on malformed input or unknown identifiers.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace koszul
