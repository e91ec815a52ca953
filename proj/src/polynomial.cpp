#include "digitforge/polynomial.hpp"

#include "digitforge/error.hpp"

namespace digitforge {

const char* errc_name(errc code) {
    switch (code) {
    case errc::not_square_free: return "NotSquareFree";
    case errc::root_count_not_one: return "RootCountNotOne";
    case errc::endpoint_is_root: return "EndpointIsRoot";
    case errc::rational_root: return "RationalRoot";
    case errc::refinement_budget_exceeded: return "RefinementBudgetExceeded";
    case errc::domain_error: return "DomainError";
    case errc::empty_word: return "EmptyWord";
    case errc::block_too_long: return "BlockTooLong";
    case errc::insufficient_digits: return "InsufficientDigits";
    case errc::shape_budget_exceeded: return "ShapeBudgetExceeded";
    case errc::word_too_short: return "WordTooShort";
    case errc::zero_multiplier: return "ZeroMultiplier";
    case errc::ledger_mismatch: return "LedgerMismatch";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::range_error: return "RangeError";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_array: return "EmptyArray";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

std::string to_decimal_string(const Int& n) {
    return n.get_str(10);
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    // Continued-fraction descent; open interval, lo < hi.
    Rat x = lo, y = hi;
    // Iterative to dodge deep recursion for skewed endpoints.
    std::vector<Int> whole;
    for (;;) {
        Int a = floor_rat(x);
        if (Rat(a + 1) < y) {
            whole.push_back(a + 1);
            break;
        }
        Rat fx = x - Rat(a);
        Rat fy = y - Rat(a);
        if (sgn(fx) == 0) {
            Int r = floor_rat(1 / fy) + 1;
            whole.push_back(a);
            whole.push_back(r);
            break;
        }
        whole.push_back(a);
        Rat nx = 1 / fy, ny = 1 / fx;
        x = nx;
        y = ny;
    }
    // Fold the partial quotients back up.
    Rat r(whole.back());
    for (size_t i = whole.size() - 1; i-- > 0;) {
        r = Rat(whole[i]) + 1 / r;
    }
    return r;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial{};
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * (unsigned long)i;
    return IntPolynomial(std::move(d));
}

int IntPolynomial::sign_at(const Rat& x) const {
    if (c_.empty()) return 0;
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int acc = c_.back();
    Int vp = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) {
        vp *= v;
        acc = acc * u + c_[i] * vp;
    }
    return sgn(acc);
}

Rat IntPolynomial::value_at(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

IntPolynomial IntPolynomial::shifted(const Int& shift) const {
    std::vector<Int> c = c_;
    if (c.size() >= 2) {
        for (size_t i = 0; i + 1 < c.size(); ++i)
            for (size_t j = c.size() - 1; j-- > i;)
                c[j] += shift * c[j + 1];
    }
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return *this;
    Int g = content();
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return IntPolynomial(std::move(c));
}

namespace {

// Pseudo-remainder with an effectively positive multiplier: returns R with
// m*f = q*g + R for some m > 0, so the sign of R is usable in Sturm chains.
IntPolynomial pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Int> r = f.coeffs();
    const auto& gc = g.coeffs();
    const Int& gl = g.leading();
    int steps = 0;
    while (r.size() >= gc.size() && !r.empty()) {
        Int rl = r.back();
        size_t shift = r.size() - gc.size();
        for (size_t i = 0; i < r.size(); ++i) r[i] *= gl;
        for (size_t i = 0; i < gc.size(); ++i) r[i + shift] -= rl * gc[i];
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        ++steps;
    }
    if (sgn(gl) < 0 && (steps & 1)) {
        for (Int& c : r) c = -c;
    }
    return IntPolynomial(std::move(r));
}

int sign_changes(const std::vector<IntPolynomial>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> chain;
    chain.push_back(p.primitive_part());
    IntPolynomial d = p.derivative().primitive_part();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        IntPolynomial r = pseudo_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        r = r.primitive_part();
        std::vector<Int> neg(r.coeffs());
        for (Int& c : neg) c = -c;
        chain.emplace_back(std::move(neg));
    }
    return chain;
}

} // namespace

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a.primitive_part(), g = b.primitive_part();
    if (f.is_zero()) std::swap(f, g);
    while (!g.is_zero()) {
        if (f.degree() < g.degree()) std::swap(f, g);
        IntPolynomial r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero() && sgn(f.leading()) < 0) {
        std::vector<Int> neg(f.coeffs());
        for (Int& c : neg) c = -c;
        f = IntPolynomial(std::move(neg));
    }
    return f;
}

bool is_square_free(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1) return false;
    return polynomial_gcd(p, p.derivative()).degree() == 0;
}

int sturm_root_count(const IntPolynomial& p, const Rat& lo, const Rat& hi) {
    auto chain = sturm_chain(p);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

} // namespace digitforge
