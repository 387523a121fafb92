#pragma once

// Generator for the standard three-pretzel diagrams with odd parameters,
// used as CLI input format and test fixture source.

#include <string_view>

#include "knotcalc/codec.hpp"

namespace knotcalc {

// The standard pretzel diagram with three twist regions of |p|, |q|, |r|
// crossings, as a signed Gauss code. All three parameters must be odd (the
// generator only routes the all-odd closure); NotAKnot otherwise. The sign
// convention is pinned so that (3,-5,-7) has writhe +9.
SignedGaussCode make_pretzel(int p, int q, int r);

// Parses "p,q,r" and generates the diagram.
SignedGaussCode parse_pretzel(std::string_view text);

}  // namespace knotcalc
