#include "digitforge/algebraic.hpp"

#include "digitforge/error.hpp"

#include <utility>

namespace digitforge {

AlgebraicNumber AlgebraicNumber::rational(Rat value) {
    value.canonicalize();
    AlgebraicNumber n;
    n.state_ = std::move(value);
    return n;
}

AlgebraicNumber AlgebraicNumber::validate(IntPolynomial p, Rat lo, Rat hi) {
    if (!(lo < hi)) fail(errc::domain_error, "isolating interval needs lo < hi");
    if (!is_square_free(p))
        fail(errc::not_square_free, "polynomial is not square-free");
    int sign_lo = p.sign_at(lo);
    int sign_hi = p.sign_at(hi);
    if (sign_lo == 0 || sign_hi == 0)
        fail(errc::endpoint_is_root, "interval endpoint is a root");
    int count = sturm_root_count(p, lo, hi);
    if (count != 1)
        fail(errc::root_count_not_one,
             "interval isolates " + std::to_string(count) + " roots, need 1");

    // Certify the isolated root irrational. Any rational root u/v in lowest
    // terms has v | leading coefficient, and two distinct rationals with
    // denominators <= L are at least 1/L^2 apart, so once the interval is
    // narrower than 1/lc^2 it holds at most one candidate: the simplest
    // rational inside it.
    Int lc = abs(p.leading());
    Rat target = make_rat(1, lc * lc);
    while (hi - lo >= target) {
        Rat mid = (lo + hi) / 2;
        int s = p.sign_at(mid);
        if (s == 0)
            fail(errc::rational_root,
                 "isolated root is the rational " + mid.get_str());
        if (s == sign_lo) lo = mid; else hi = mid;
    }
    Rat candidate = simplest_rational_between(lo, hi);
    if (candidate.get_den() <= lc && p.sign_at(candidate) == 0)
        fail(errc::rational_root,
             "isolated root is the rational " + candidate.get_str());

    AlgebraicNumber n;
    n.state_ = Root{std::move(p), std::move(lo), std::move(hi), sign_lo};
    return n;
}

const IntPolynomial& AlgebraicNumber::polynomial() const {
    if (is_rational())
        fail(errc::domain_error, "rational-kind number has no polynomial");
    return root().p;
}

std::pair<Rat, Rat> AlgebraicNumber::interval() const {
    if (is_rational())
        fail(errc::domain_error, "rational-kind number has no interval");
    return {root().lo, root().hi};
}

void AlgebraicNumber::bisect_once() {
    Root& r = root();
    Rat mid = (r.lo + r.hi) / 2;
    int s = r.p.sign_at(mid);
    if (s == 0)
        fail(errc::rational_root, "refinement landed on an exact root");
    if (s == r.sign_lo) r.lo = mid; else r.hi = mid;
}

std::pair<Rat, Rat> AlgebraicNumber::refine(const Rat& width) {
    if (is_rational())
        fail(errc::domain_error, "refine applies to root-kind numbers only");
    while (root().hi - root().lo > width) bisect_once();
    return {root().lo, root().hi};
}

Int AlgebraicNumber::floor_times(const Int& factor) {
    if (is_rational()) return floor_rat(rational_value() * Rat(factor));
    if (sgn(factor) == 0) return 0;

    Root& r = root();
    unsigned long bits = mpz_sizeinbase(factor.get_mpz_t(), 2);
    unsigned long budget = 64 + 4 * bits;
    Rat f(factor);
    for (unsigned long used = 0;; ++used) {
        Rat a = r.lo * f;
        Rat b = r.hi * f;
        if (b < a) std::swap(a, b);
        Int fa = floor_rat(a);
        // No integer lies strictly inside (a, b): the whole interval shares
        // one floor, and the value is irrational so it never sits on the
        // boundary itself.
        if (Rat(fa + 1) >= b) return fa;
        if (used >= budget)
            fail(errc::refinement_budget_exceeded,
                 "floor did not stabilize within " + std::to_string(budget) +
                     " bisections");
        bisect_once();
    }
}

Int AlgebraicNumber::floor_scaled(uint32_t base, unsigned long d) {
    if (base < 2) fail(errc::domain_error, "base must be at least 2");
    return floor_times(pow_uint(base, d));
}

AlgebraicNumber AlgebraicNumber::normalized_unit() const {
    if (is_rational())
        fail(errc::domain_error,
             "normalized_unit applies to root-kind numbers only");
    AlgebraicNumber copy = *this;
    Int m = copy.floor_times(1);
    if (sgn(m) == 0) return copy;
    Root& r = copy.root();
    AlgebraicNumber out;
    out.state_ = Root{r.p.shifted(m), r.lo - Rat(m), r.hi - Rat(m), r.sign_lo};
    return out;
}

DigitWord AlgebraicNumber::digits(uint32_t base, size_t count) const {
    DigitStream stream(*this, base);
    stream.extend_to(count);
    return stream.prefix();
}

DigitWord digits(const AlgebraicNumber& number, uint32_t base, size_t count) {
    DigitStream stream(number, base);
    stream.extend_to(count);
    return stream.prefix();
}

DigitStream::DigitStream(AlgebraicNumber number, uint32_t base)
    : num_(std::move(number)), base_(base), word_(base) {
    if (base < 2) fail(errc::domain_error, "base must be at least 2");
    if (num_.is_rational()) {
        const Rat& v = num_.rational_value();
        if (sgn(v) <= 0 || v >= 1)
            fail(errc::domain_error, "expansion needs a value in (0,1)");
        remainder_ = v.get_num();
        denominator_ = v.get_den();
    } else {
        if (sgn(num_.floor_times(1)) != 0)
            fail(errc::domain_error, "expansion needs a value in (0,1)");
    }
}

void DigitStream::extend_to(size_t count) {
    while (word_.size() < count) {
        if (num_.is_rational()) {
            remainder_ *= base_;
            Int digit = remainder_ / denominator_;
            remainder_ -= digit * denominator_;
            word_.push_back(uint32_t(digit.get_ui()));
        } else {
            scale_ *= base_;
            Int next = num_.floor_times(scale_);
            Int digit = next - last_floor_ * base_;
            last_floor_ = std::move(next);
            word_.push_back(uint32_t(digit.get_ui()));
        }
    }
}

} // namespace digitforge
