#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitforge/error.hpp"
#include "digitforge/words.hpp"

#include "oracles.hpp"

#include <random>

using namespace digitforge;

namespace {

DigitWord W(const char* s, uint32_t b = 10) {
    return DigitWord::from_string(s, b);
}

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::domain_error;
}

} // namespace

TEST_CASE("DigitWord basics") {
    DigitWord w = W("0123");
    CHECK(w.size() == 4);
    CHECK(w[0] == 0);
    CHECK(w[3] == 3);
    CHECK(w.slice(1, 2).to_string() == "12");
    CHECK(W("01").is_prefix_of(w));
    CHECK_FALSE(W("12").is_prefix_of(w));
    CHECK(code_of([] { W("19", 9); }) == errc::parse_error);
    CHECK(code_of([] { W("12", 37); }) == errc::parse_error);
    CHECK(code_of([&] { w.slice(3, 2); }) == errc::range_error);

    CHECK(W("ab", 12).to_string() == "ab");
}

TEST_CASE("wide words store values above 255") {
    DigitWord w(1000);
    w.push_back(0);
    w.push_back(999);
    w.push_back(500);
    CHECK(w.size() == 3);
    CHECK(w[1] == 999);
    CHECK(w.to_string() == "0 999 500");
    CHECK(value(w) == Int(999) * 1000 + 500);
    CHECK(code_of([&] { w.push_back(1000); }) == errc::domain_error);
}

TEST_CASE("value uses the last symbol as units") {
    CHECK(value(W("523")) == 523);
    CHECK(value(W("0101", 2)) == 5);
    CHECK(value(W("00")) == 0);
    CHECK(code_of([] { value(DigitWord(10)); }) == errc::empty_word);
}

TEST_CASE("value concatenation law") {
    std::mt19937 rng(411);
    for (uint32_t b : {2u, 3u, 10u, 36u}) {
        for (int t = 0; t < 10; ++t) {
            DigitWord u = oracles::random_word(rng, b, 1 + t);
            DigitWord v = oracles::random_word(rng, b, 1 + (t * 7) % 11);
            DigitWord uv = u;
            uv.append(v);
            CHECK(value(uv) ==
                  value(u) * pow_uint(b, (unsigned long)v.size()) + value(v));
        }
    }
}

TEST_CASE("value_mod takes the k-suffix") {
    CHECK(value_mod(W("98765"), 3) == 765);
    CHECK(value_mod(W("98765"), 5) == 98765);
    CHECK(value_mod(W("1111", 2), 2) == 3);
    CHECK(code_of([] { value_mod(W("98765"), 6); }) == errc::range_error);
    CHECK(code_of([] { value_mod(W("98765"), 0); }) == errc::range_error);
}

TEST_CASE("complexity counts distinct factors") {
    CHECK(complexity(W("00000"), 3) == 1);
    CHECK(complexity(W("01010"), 2) == 2);
    CHECK(complexity(W("0110"), 2) == 3);
    CHECK(complexity(W("0123"), 4) == 1);
    CHECK(code_of([] { complexity(W("0123"), 5); }) == errc::block_too_long);
    CHECK(code_of([] { complexity(W("0123"), 0); }) == errc::block_too_long);
}

TEST_CASE("complexity matches naive enumeration and its bounds") {
    std::mt19937 rng(98);
    for (uint32_t b : {2u, 3u, 10u}) {
        for (int t = 0; t < 12; ++t) {
            DigitWord w = oracles::random_word(rng, b, 12 + t * 5);
            size_t prev = 0;
            for (size_t n = 1; n <= 6; ++n) {
                size_t c = complexity(w, n);
                CHECK(c == oracles::naive_complexity(w, n));
                CHECK(c <= w.size() - n + 1);
                // p(n) can't grow by more than a factor of b per step and
                // never decreases by more than the window shrinkage allows.
                if (n > 1) CHECK(c <= prev * b);
                prev = c;
            }
        }
    }
}

TEST_CASE("complexity is monotone under extension") {
    std::mt19937 rng(77);
    DigitWord w = oracles::random_word(rng, 3, 30);
    DigitWord longer = w;
    longer.append(oracles::random_word(rng, 3, 10));
    for (size_t n = 1; n <= 8; ++n)
        CHECK(complexity(w, n) <= complexity(longer, n));
}

TEST_CASE("block_count frozen examples") {
    DigitWord row = W("01010");
    BlockMatrix d01 = BlockMatrix::from_rows({{0, 1}}, 10);
    BlockMatrix d11 = BlockMatrix::from_rows({{1, 1}}, 10);
    std::vector<DigitWord> rows{row};
    CHECK(block_count(rows, d01, 4) == 2);
    CHECK(block_count(rows, d11, 4) == 0);

    std::vector<DigitWord> zeros{W("000"), W("000")};
    BlockMatrix dz = BlockMatrix::from_rows({{0}, {0}}, 10);
    CHECK(block_count(zeros, dz, 3) == 3);

    CHECK(code_of([&] { block_count(rows, d01, 5); }) ==
          errc::insufficient_digits);
    CHECK(code_of([&] { block_count(zeros, d01, 2); }) ==
          errc::shape_mismatch);
}

TEST_CASE("block_count equals the naive recount") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        uint32_t b = trial % 2 ? 2 : 3;
        size_t n = 1 + trial % 3;
        size_t m = 1 + trial % 4;
        size_t len = 30 + (trial * 13) % 200;
        std::vector<DigitWord> rows;
        for (size_t r = 0; r < n; ++r)
            rows.push_back(oracles::random_word(rng, b, len));
        std::vector<std::vector<uint32_t>> pat(n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < m; ++c)
                pat[r].push_back(rows[r][(r * 7 + c * 3) % len]);
        BlockMatrix D = BlockMatrix::from_rows(pat, b);
        size_t N = len - m + 1;
        CHECK(block_count(rows, D, N) == oracles::naive_block_count(rows, D, N));
    }
}

TEST_CASE("normality_report frozen examples") {
    std::vector<DigitWord> rows{W("0101010101")};
    NormalityReport rep = normality_report(rows, 1, 10);
    CHECK(rep.shapes == 10);
    CHECK(rep.counts[0] == 5);
    CHECK(rep.counts[1] == 5);
    CHECK(rep.frequency(0) == Rat(1, 2));
    CHECK(rep.max_deviation == Rat(2, 5)); // |1/2 - 1/10|
    CHECK(rep.dof == 9);

    std::vector<DigitWord> constant{W("2222", 3)};
    NormalityReport c = normality_report(constant, 1, 4);
    CHECK(c.counts[2] == 4);
    CHECK(c.counts[0] == 0);
    CHECK(c.max_deviation == Rat(2, 3));

    std::vector<DigitWord> z{W("000000", 2)};
    NormalityReport two = normality_report(z, 2, 5);
    CHECK(two.counts[0] == 5);
    CHECK(two.counts[1] == 0);
    CHECK(two.shapes == 4);
}

TEST_CASE("normality_report frequencies sum to one exactly") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        uint32_t b = trial % 2 ? 2 : 3;
        size_t n = 1 + trial % 2;
        size_t m = 1 + trial % 3;
        size_t N = 50 + trial * 11;
        std::vector<DigitWord> rows;
        for (size_t r = 0; r < n; ++r)
            rows.push_back(oracles::random_word(rng, b, N + m));
        NormalityReport rep = normality_report(rows, m, N);
        Rat total(0);
        uint64_t count_sum = 0;
        for (uint64_t key = 0; key < rep.shapes; ++key) {
            total += rep.frequency(key);
            count_sum += rep.counts[key];
        }
        CHECK(total == Rat(1));
        CHECK(count_sum == N);
        CHECK(rep.chi_square >= 0.0);
    }
}

TEST_CASE("normality_report decode round-trips") {
    std::vector<DigitWord> rows{W("0120", 3), W("2101", 3)};
    NormalityReport rep = normality_report(rows, 2, 3);
    // Window at i=0: rows (01, 21) -> key digits 0,1,2,1.
    std::vector<uint32_t> want{0, 1, 2, 1};
    uint64_t key = 0;
    for (uint32_t d : want) key = key * 3 + d;
    CHECK(rep.counts[key] == 1);
    CHECK(rep.decode(key) == want);
}

TEST_CASE("normality_report enforces the shape cap") {
    std::mt19937 rng(1);
    std::vector<DigitWord> rows{oracles::random_word(rng, 10, 40)};
    CHECK(code_of([&] { normality_report(rows, 7, 10); }) ==
          errc::shape_budget_exceeded);
    CHECK_NOTHROW(normality_report(rows, 6, 10));
    CHECK(code_of([&] { normality_report(rows, 3, 10, 999); }) ==
          errc::shape_budget_exceeded);
}

TEST_CASE("block_count ties out with normality counts") {
    std::mt19937 rng(2024);
    std::vector<DigitWord> rows{oracles::random_word(rng, 2, 64),
                                oracles::random_word(rng, 2, 64)};
    size_t m = 2, N = 60;
    NormalityReport rep = normality_report(rows, m, N);
    for (uint64_t key = 0; key < rep.shapes; ++key) {
        auto flat = rep.decode(key);
        std::vector<std::vector<uint32_t>> pat{
            {flat[0], flat[1]}, {flat[2], flat[3]}};
        BlockMatrix D = BlockMatrix::from_rows(pat, 2);
        CHECK(rep.counts[key] == block_count(rows, D, N));
    }
}
