#pragma once

#include "digitforge/rational.hpp"

#include <vector>

namespace digitforge {

// Univariate polynomial with integer coefficients, constant term first.
// Trailing zero coefficients are trimmed on construction; the zero
// polynomial is represented by an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(size_t i) const { return c_[i]; }

    IntPolynomial derivative() const;

    // Sign of p(x) at a rational point, by homogeneous integer evaluation
    // (no rational arithmetic in the inner loop).
    int sign_at(const Rat& x) const;

    // Exact value p(x) as a rational.
    Rat value_at(const Rat& x) const;

    // p(x + shift): integer Taylor shift by synthetic division.
    IntPolynomial shifted(const Int& shift) const;

    // gcd of the coefficients, positive; content of the zero polynomial is 0.
    Int content() const;

    // p / content(p), keeping the sign of the leading coefficient.
    IntPolynomial primitive_part() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<Int> c_;
};

// gcd(p, p') is constant, i.e. p has no repeated roots.
bool is_square_free(const IntPolynomial& p);

// Number of distinct real roots in the open interval (lo, hi) via the Sturm
// chain. Requires p square-free and p(lo), p(hi) both nonzero.
int sturm_root_count(const IntPolynomial& p, const Rat& lo, const Rat& hi);

// Primitive gcd of two integer polynomials (sign-normalized to positive
// leading coefficient).
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

} // namespace digitforge
