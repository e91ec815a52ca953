#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitforge/error.hpp"
#include "digitforge/polynomial.hpp"

using namespace digitforge;

namespace {

IntPolynomial poly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPolynomial(std::move(v));
}

} // namespace

TEST_CASE("construction trims trailing zeros") {
    IntPolynomial p = poly({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({}).is_zero());
}

TEST_CASE("derivative") {
    // 1 + 2x + 3x^2 -> 2 + 6x
    IntPolynomial d = poly({1, 2, 3}).derivative();
    CHECK(d == poly({2, 6}));
    CHECK(poly({5}).derivative().is_zero());
    CHECK(poly({}).derivative().is_zero());
}

TEST_CASE("sign_at and value_at agree") {
    IntPolynomial p = poly({-1, 2, 1}); // x^2 + 2x - 1, roots -1 +- sqrt 2
    Rat pts[] = {Rat(0), Rat(1), Rat(1, 2), Rat(-3), Rat(2, 5)};
    for (const Rat& x : pts) {
        Rat v = p.value_at(x);
        CHECK(p.sign_at(x) == sgn(v));
    }
    CHECK(p.value_at(Rat(1, 2)) == Rat(1, 4));  // 1/4 + 1 - 1
    CHECK(p.sign_at(Rat(2, 5)) == -1);          // 4/25 + 4/5 - 1 < 0
}

TEST_CASE("shifted is p(x + shift)") {
    IntPolynomial p = poly({-2, 0, 1}); // x^2 - 2
    IntPolynomial q = p.shifted(1);     // (x+1)^2 - 2 = x^2 + 2x - 1
    CHECK(q == poly({-1, 2, 1}));
    CHECK(p.shifted(0) == p);
    CHECK(p.shifted(-3) == poly({7, -6, 1})); // (x-3)^2 - 2
}

TEST_CASE("content and primitive part") {
    CHECK(poly({6, -9, 12}).content() == 3);
    CHECK(poly({6, -9, 12}).primitive_part() == poly({2, -3, 4}));
    CHECK(poly({-4, -6}).primitive_part() == poly({-2, -3}));
    CHECK(poly({}).content() == 0);
}

TEST_CASE("is_square_free") {
    CHECK(is_square_free(poly({-2, 0, 1})));      // x^2 - 2
    CHECK(is_square_free(poly({-1, 0, 1})));      // (x-1)(x+1)
    CHECK_FALSE(is_square_free(poly({1, -2, 1}))); // (x-1)^2
    CHECK_FALSE(is_square_free(poly({0, 0, 1})));  // x^2
    CHECK_FALSE(is_square_free(poly({7})));        // constants rejected
    CHECK_FALSE(is_square_free(poly({})));
}

TEST_CASE("sturm_root_count") {
    IntPolynomial p = poly({-2, 0, 1}); // roots +- sqrt 2
    CHECK(sturm_root_count(p, Rat(1), Rat(2)) == 1);
    CHECK(sturm_root_count(p, Rat(0), Rat(1)) == 0);
    CHECK(sturm_root_count(p, Rat(-2), Rat(2)) == 2);

    IntPolynomial q = poly({0, -2, 0, 1}); // x(x^2-2)
    CHECK(sturm_root_count(q, Rat(-2), Rat(2)) == 3);
    CHECK(sturm_root_count(q, Rat(1, 10), Rat(2)) == 1);

    // Large coefficients stay exact.
    IntPolynomial r = poly({-1000000007L, 0, 1000000009L});
    CHECK(sturm_root_count(r, Rat(0), Rat(2)) == 1);
}

TEST_CASE("polynomial_gcd") {
    // (x-1)(x-2) and (x-1)(x-3)
    CHECK(polynomial_gcd(poly({2, -3, 1}), poly({3, -4, 1})) == poly({-1, 1}));
    // coprime
    CHECK(polynomial_gcd(poly({-2, 0, 1}), poly({-3, 0, 1})) == poly({1}));
    // sign normalization: leading coefficient positive
    CHECK(polynomial_gcd(poly({1, -1}), poly({1, -1})) == poly({-1, 1}));
    // zero operand
    CHECK(polynomial_gcd(poly({}), poly({4, 6})) == poly({2, 3}));
}

TEST_CASE("simplest_rational_between") {
    CHECK(simplest_rational_between(Rat(3), Rat(7, 2)) == Rat(10, 3));
    CHECK(simplest_rational_between(Rat(2), Rat(3)) == Rat(5, 2));
    CHECK(simplest_rational_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
    CHECK(simplest_rational_between(Rat(-1, 2), Rat(-3, 10)) == Rat(-1, 3));
    CHECK(simplest_rational_between(Rat(0), Rat(1)) == Rat(1, 2));
    CHECK(simplest_rational_between(Rat(5, 2), Rat(9, 2)) == Rat(3));
    // integer answers when one fits strictly inside
    CHECK(simplest_rational_between(Rat(-1, 2), Rat(3, 2)) == Rat(0));

    // Tight interval around 1/3: the answer is 1/3 itself only if inside.
    CHECK(simplest_rational_between(Rat(333, 1000), Rat(334, 1000)) ==
          Rat(1, 3));

    // Property: the result lies strictly inside and no smaller denominator
    // does, on a grid of random-ish intervals.
    for (int a = -8; a <= 8; ++a) {
        for (int b = 1; b <= 6; ++b) {
            Rat lo = make_rat(Int(a), Int(b));
            Rat hi = lo + make_rat(Int(1), Int(b + 3));
            Rat s = simplest_rational_between(lo, hi);
            CHECK(lo < s);
            CHECK(s < hi);
            for (long den = 1; den < s.get_den(); ++den) {
                Int lo_num = floor_rat(lo * den) + 1;
                // No fraction num/den in (lo, hi): the smallest candidate
                // above lo must already clear hi.
                bool inside = make_rat(lo_num, Int(den)) < hi &&
                              make_rat(lo_num, Int(den)) > lo;
                CHECK_FALSE(inside);
            }
        }
    }
}

TEST_CASE("to_decimal_string") {
    CHECK(to_decimal_string(Int(0)) == "0");
    CHECK(to_decimal_string(Int(-124)) == "-124");
    CHECK(to_decimal_string(pow_uint(10, 25)) == "10000000000000000000000000");
}
