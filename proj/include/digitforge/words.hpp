#pragma once

#include "digitforge/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digitforge {

// A finite word of digits over {0, ..., base-1}. Storage is one byte per
// digit for base <= 256 and 32 bits per digit otherwise, so prefixes up to
// 10^8 digits stay in memory. Indexing here is 0-based; position n of an
// expansion a_1 a_2 ... is digit(n-1).
class DigitWord {
public:
    DigitWord() = default;
    explicit DigitWord(uint32_t base);

    // Parse "4142..." with digit characters 0-9 then a-z (base <= 36 only).
    static DigitWord from_string(std::string_view text, uint32_t base);
    static DigitWord from_values(std::vector<uint32_t> digits, uint32_t base);

    uint32_t base() const { return base_; }
    size_t size() const { return wide_ ? w_.size() : s_.size(); }
    bool empty() const { return size() == 0; }

    uint32_t operator[](size_t i) const {
        return wide_ ? w_[i] : uint32_t(s_[i]);
    }

    void push_back(uint32_t digit);
    void append(const DigitWord& other);

    DigitWord slice(size_t pos, size_t len) const;
    bool is_prefix_of(const DigitWord& other) const;

    // Digit characters for base <= 36, space-separated values otherwise.
    std::string to_string() const;

    bool operator==(const DigitWord&) const = default;

private:
    uint32_t base_ = 0;
    bool wide_ = false;
    std::vector<uint8_t> s_;
    std::vector<uint32_t> w_;
};

// An n x m block of digits, the window shape of the joint-normality counter.
struct BlockMatrix {
    uint32_t base = 0;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint32_t> entries; // row-major

    static BlockMatrix from_rows(const std::vector<std::vector<uint32_t>>& r,
                                 uint32_t base);
    uint32_t at(size_t r, size_t c) const { return entries[r * cols + c]; }
};

// Word value: s_m ... s_1 s_0 -> sum s_i b^i, the LAST symbol being the
// units digit.
Int value(const DigitWord& w);

// Value of the length-len block starting at 0-based position pos.
Int value_range(const DigitWord& w, size_t pos, size_t len);

// value(last k symbols) == value(w) mod b^k, computed from the k-digit
// suffix directly.
Int value_mod(const DigitWord& w, size_t k);

// Number of distinct length-n factors of w (prefix-restricted block
// complexity; the infinite-word p(omega, n) truncated to what the finite
// prefix shows).
size_t complexity(const DigitWord& w, size_t n);

// Count of window positions i in [1, N] whose n x m window across the rows
// equals D. Rows must share a base and be at least N + cols(D) - 1 long.
uint64_t block_count(std::span<const DigitWord> rows, const BlockMatrix& D,
                     size_t N);

struct NormalityReport {
    uint32_t base = 0;
    size_t rows_n = 0;
    size_t cols_m = 0;
    size_t prefix_len = 0;      // N: the number of windows counted
    uint64_t shapes = 0;        // b^{mn}
    std::vector<uint64_t> counts; // per matrix, keyed by mixed-radix code
    Rat max_deviation;          // max |count/N - 1/shapes|, exact
    double chi_square = 0.0;
    uint64_t dof = 0;

    Rat frequency(uint64_t key) const {
        return make_rat(Int(counts[key]), Int((unsigned long)prefix_len));
    }
    // Decode a matrix key back to its digit entries (row-major).
    std::vector<uint32_t> decode(uint64_t key) const;
};

// Window histogram over all b^{mn} matrices for the first N windows.
// Throws shape_budget_exceeded when b^{mn} > shape_cap.
NormalityReport normality_report(std::span<const DigitWord> rows, size_t m,
                                 size_t N, uint64_t shape_cap = 1000000);

} // namespace digitforge
