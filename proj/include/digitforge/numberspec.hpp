#pragma once

#include "digitforge/algebraic.hpp"
#include "digitforge/polynomial.hpp"

#include <string>

namespace digitforge {

// Parsed number specification text. Two forms:
//   rational:   "7/16", "3", "-2/5"
//   polynomial: "x^2+2x-1" with a root-isolating interval "lo,hi"
//               (rational endpoints), either passed separately or embedded
//               as "x^2+2x-1@0,1"
// canonical is the normal form used for cache keys and stream-file
// headers: "rat:p/q" or "poly:c0,c1,...,ck@lo,hi" (+";unit" when the
// normalize flag shifted the value into (0,1)), so spellings of the same
// number share one cache entry.
struct NumberSpec {
    AlgebraicNumber number;
    std::string canonical;
};

// Parse integer-coefficient polynomial text in the variable x:
// terms like "3x^2", "-x", "+7", "2*x^3". Throws parse_error.
IntPolynomial parse_polynomial(const std::string& text);

// Parse a single rational "p/q" or integer "p". Throws parse_error.
Rat parse_rational(const std::string& text);

// interval may be empty when the spec is rational or carries "@lo,hi".
// normalize replaces the value by value - floor(value) (rationals reduce
// mod 1, roots get the shifted polynomial).
NumberSpec parse_number_spec(const std::string& spec,
                             const std::string& interval = "",
                             bool normalize = false);

} // namespace digitforge
