#pragma once

#include "digitforge/polynomial.hpp"
#include "digitforge/rational.hpp"
#include "digitforge/words.hpp"

#include <cstdint>
#include <utility>
#include <variant>

namespace digitforge {

// An exact real number: either an explicit rational, or the unique root of
// a square-free integer polynomial inside a rational isolating interval.
// Root-kind numbers are certified irrational at validation time (the
// isolated root is checked against the one rational candidate the interval
// can hold), so every floor below is exact and every scaled value is
// guaranteed to miss the integers.
//
// The isolating interval is mutable state: refine() and the floor
// operations shrink it and keep the tighter bounds. Copies are independent.
// One instance must not be refined from two threads at once.
class AlgebraicNumber {
public:
    static AlgebraicNumber rational(Rat value);

    // Checks, in order: square-freeness of p, endpoints are not roots,
    // Sturm root count on (lo, hi) equals one, and the isolated root is not
    // rational. Throws not_square_free / endpoint_is_root /
    // root_count_not_one / rational_root.
    static AlgebraicNumber validate(IntPolynomial p, Rat lo, Rat hi);

    bool is_rational() const { return std::holds_alternative<Rat>(state_); }
    const Rat& rational_value() const { return std::get<Rat>(state_); }
    const IntPolynomial& polynomial() const;
    std::pair<Rat, Rat> interval() const;

    // Bisect the isolating interval until its width is <= width; nested,
    // monotone across calls. Root kind only.
    std::pair<Rat, Rat> refine(const Rat& width);

    // Exact [value * b^d]. Rational kind divides exactly; root kind refines
    // until the scaled interval contains no integer (budget-capped: a
    // rational smuggled in as a root would refine forever, and the cap
    // converts that into refinement_budget_exceeded).
    Int floor_scaled(uint32_t base, unsigned long d);

    // Exact [value * factor] for an arbitrary integer factor; the engine
    // behind floor_scaled and the nested-floor experiments.
    Int floor_times(const Int& factor);

    // value - [value], represented by the shifted polynomial; result lies
    // strictly in (0,1). Root kind only (rationals reduce mod 1 trivially
    // and the caller does that itself).
    AlgebraicNumber normalized_unit() const;

    // First `count` expansion digits a_1 ... a_count, base b. Requires the
    // value to lie in (0,1). Rational values use exact long division, which
    // realizes the terminating-form convention (never trailing b-1s).
    DigitWord digits(uint32_t base, size_t count) const;

private:
    struct Root {
        IntPolynomial p;
        Rat lo, hi;
        int sign_lo = 0; // sign of p at lo, cached
    };

    AlgebraicNumber() = default;

    Root& root() { return std::get<Root>(state_); }
    const Root& root() const { return std::get<Root>(state_); }
    void bisect_once();

    std::variant<Rat, Root> state_;
};

// Append-only cached prefix of the b-ary expansion of a number in (0,1).
// extend_to() is incremental: digit n+1 costs one more floor, not a
// recomputation of the first n.
class DigitStream {
public:
    DigitStream(AlgebraicNumber number, uint32_t base);

    uint32_t base() const { return base_; }
    const DigitWord& prefix() const { return word_; }
    const AlgebraicNumber& number() const { return num_; }

    void extend_to(size_t count);

private:
    AlgebraicNumber num_;
    uint32_t base_;
    DigitWord word_;
    Int last_floor_ = 0; // [value * b^n] for n = word_.size()
    Int scale_ = 1;      // b^n
    Int remainder_ = 0;  // rational kind: numerator state of the long division
    Int denominator_ = 1;
};

// Convenience wrapper: digits of a copy of `number`.
DigitWord digits(const AlgebraicNumber& number, uint32_t base, size_t count);

} // namespace digitforge
