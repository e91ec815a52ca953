#include "digitforge/words.hpp"

#include "digitforge/error.hpp"
#include "digitforge/suffix_array.hpp"

#include <algorithm>
#include <limits>

namespace digitforge {

DigitWord::DigitWord(uint32_t base) : base_(base), wide_(base > 256) {
    if (base < 2) fail(errc::domain_error, "base must be at least 2");
}

DigitWord DigitWord::from_string(std::string_view text, uint32_t base) {
    if (base < 2 || base > 36)
        fail(errc::parse_error, "digit characters cover bases 2 to 36 only");
    DigitWord w(base);
    for (char ch : text) {
        uint32_t d;
        if (ch >= '0' && ch <= '9') d = uint32_t(ch - '0');
        else if (ch >= 'a' && ch <= 'z') d = uint32_t(ch - 'a') + 10;
        else fail(errc::parse_error,
                  std::string("bad digit character '") + ch + "'");
        if (d >= base)
            fail(errc::parse_error, std::string("digit '") + ch +
                                        "' out of range for base " +
                                        std::to_string(base));
        w.push_back(d);
    }
    return w;
}

DigitWord DigitWord::from_values(std::vector<uint32_t> digits, uint32_t base) {
    DigitWord w(base);
    for (uint32_t d : digits) w.push_back(d);
    return w;
}

void DigitWord::push_back(uint32_t digit) {
    if (base_ < 2) fail(errc::domain_error, "word has no base set");
    if (digit >= base_)
        fail(errc::domain_error, "digit " + std::to_string(digit) +
                                     " out of range for base " +
                                     std::to_string(base_));
    if (wide_) w_.push_back(digit);
    else s_.push_back(uint8_t(digit));
}

void DigitWord::append(const DigitWord& other) {
    if (base_ != other.base_)
        fail(errc::base_mismatch, "cannot append a word of a different base");
    if (wide_) w_.insert(w_.end(), other.w_.begin(), other.w_.end());
    else s_.insert(s_.end(), other.s_.begin(), other.s_.end());
}

DigitWord DigitWord::slice(size_t pos, size_t len) const {
    if (pos + len > size())
        fail(errc::range_error, "slice beyond the end of the word");
    DigitWord out(base_);
    if (wide_) out.w_.assign(w_.begin() + pos, w_.begin() + pos + len);
    else out.s_.assign(s_.begin() + pos, s_.begin() + pos + len);
    return out;
}

bool DigitWord::is_prefix_of(const DigitWord& other) const {
    if (base_ != other.base_)
        fail(errc::base_mismatch, "prefix test mixes bases");
    if (size() > other.size()) return false;
    for (size_t i = 0; i < size(); ++i)
        if ((*this)[i] != other[i]) return false;
    return true;
}

std::string DigitWord::to_string() const {
    std::string out;
    if (base_ <= 36) {
        out.reserve(size());
        for (size_t i = 0; i < size(); ++i) {
            uint32_t d = (*this)[i];
            out += char(d < 10 ? '0' + d : 'a' + (d - 10));
        }
    } else {
        for (size_t i = 0; i < size(); ++i) {
            if (i) out += ' ';
            out += std::to_string((*this)[i]);
        }
    }
    return out;
}

BlockMatrix BlockMatrix::from_rows(const std::vector<std::vector<uint32_t>>& r,
                                   uint32_t base) {
    if (base < 2) fail(errc::domain_error, "base must be at least 2");
    if (r.empty() || r[0].empty())
        fail(errc::shape_mismatch, "matrix needs at least one row and column");
    BlockMatrix m;
    m.base = base;
    m.rows = r.size();
    m.cols = r[0].size();
    m.entries.reserve(m.rows * m.cols);
    for (const auto& row : r) {
        if (row.size() != m.cols)
            fail(errc::shape_mismatch, "matrix rows differ in length");
        for (uint32_t d : row) {
            if (d >= base)
                fail(errc::domain_error, "matrix entry out of digit range");
            m.entries.push_back(d);
        }
    }
    return m;
}

Int value(const DigitWord& w) {
    if (w.empty()) fail(errc::empty_word, "value of the empty word");
    Int acc = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        acc *= w.base();
        acc += w[i];
    }
    return acc;
}

Int value_range(const DigitWord& w, size_t pos, size_t len) {
    if (pos + len > w.size())
        fail(errc::range_error, "block beyond the end of the word");
    Int acc = 0;
    for (size_t i = 0; i < len; ++i) {
        acc *= w.base();
        acc += w[pos + i];
    }
    return acc;
}

Int value_mod(const DigitWord& w, size_t k) {
    if (w.empty()) fail(errc::empty_word, "value of the empty word");
    if (k < 1 || k > w.size())
        fail(errc::range_error, "suffix length outside [1, |w|]");
    return value_range(w, w.size() - k, k);
}

size_t complexity(const DigitWord& w, size_t n) {
    if (n < 1 || n > w.size())
        fail(errc::block_too_long, "block length outside [1, |w|]");
    std::vector<uint32_t> text(w.size());
    for (size_t i = 0; i < w.size(); ++i) text[i] = w[i];
    SuffixArray sa = build_suffix_array(text);

    size_t count = 0;
    bool have_prev = false;
    uint32_t gap_min = std::numeric_limits<uint32_t>::max();
    for (size_t i = 0; i < sa.sa.size(); ++i) {
        if (i > 0) gap_min = std::min(gap_min, sa.lcp[i]);
        if (w.size() - sa.sa[i] < n) continue;
        if (!have_prev || gap_min < n) ++count;
        have_prev = true;
        gap_min = std::numeric_limits<uint32_t>::max();
    }
    return count;
}

uint64_t block_count(std::span<const DigitWord> rows, const BlockMatrix& D,
                     size_t N) {
    if (rows.empty() || rows.size() != D.rows)
        fail(errc::shape_mismatch, "row count does not match the matrix");
    for (const DigitWord& w : rows)
        if (w.base() != D.base)
            fail(errc::base_mismatch, "rows and matrix disagree on base");
    const size_t cols = D.cols;
    for (const DigitWord& w : rows)
        if (w.size() + 1 < N + cols)
            fail(errc::insufficient_digits,
                 "rows shorter than the window sweep needs");
    if (N == 0) return 0;

    auto pat_eq = [&](size_t c1, size_t c2) {
        for (size_t r = 0; r < D.rows; ++r)
            if (D.at(r, c1) != D.at(r, c2)) return false;
        return true;
    };
    auto txt_eq = [&](size_t i, size_t c) {
        for (size_t r = 0; r < D.rows; ++r)
            if (rows[r][i] != D.at(r, c)) return false;
        return true;
    };

    std::vector<size_t> border(cols, 0);
    for (size_t c = 1; c < cols; ++c) {
        size_t k = border[c - 1];
        while (k > 0 && !pat_eq(c, k)) k = border[k - 1];
        if (pat_eq(c, k)) ++k;
        border[c] = k;
    }

    uint64_t count = 0;
    size_t k = 0;
    const size_t text_cols = N + cols - 1;
    for (size_t i = 0; i < text_cols; ++i) {
        while (k > 0 && !txt_eq(i, k)) k = border[k - 1];
        if (txt_eq(i, k)) ++k;
        if (k == cols) {
            ++count;
            k = border[k - 1];
        }
    }
    return count;
}

std::vector<uint32_t> NormalityReport::decode(uint64_t key) const {
    const size_t cells = rows_n * cols_m;
    std::vector<uint32_t> out(cells);
    for (size_t j = cells; j-- > 0;) {
        out[j] = uint32_t(key % base);
        key /= base;
    }
    return out;
}

NormalityReport normality_report(std::span<const DigitWord> rows, size_t m,
                                 size_t N, uint64_t shape_cap) {
    if (rows.empty()) fail(errc::shape_mismatch, "need at least one row");
    if (m < 1) fail(errc::domain_error, "window width must be at least 1");
    if (N < 1) fail(errc::domain_error, "need at least one window position");
    const uint32_t base = rows[0].base();
    for (const DigitWord& w : rows)
        if (w.base() != base)
            fail(errc::base_mismatch, "rows disagree on base");
    for (const DigitWord& w : rows)
        if (w.size() + 1 < N + m)
            fail(errc::insufficient_digits,
                 "rows shorter than the window sweep needs");

    const size_t n = rows.size();
    uint64_t shapes = 1;
    for (size_t i = 0; i < n * m; ++i) {
        if (shapes > shape_cap / base)
            fail(errc::shape_budget_exceeded,
                 "window shape count exceeds the cap of " +
                     std::to_string(shape_cap));
        shapes *= base;
    }

    NormalityReport rep;
    rep.base = base;
    rep.rows_n = n;
    rep.cols_m = m;
    rep.prefix_len = N;
    rep.shapes = shapes;
    rep.counts.assign(shapes, 0);

    uint64_t row_span = 1; // b^m
    for (size_t i = 0; i < m; ++i) row_span *= base;
    const uint64_t top = row_span / base; // b^{m-1}

    std::vector<uint64_t> code(n, 0);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < m; ++c) code[r] = code[r] * base + rows[r][c];

    for (size_t i = 0;; ++i) {
        uint64_t key = 0;
        for (size_t r = 0; r < n; ++r) key = key * row_span + code[r];
        ++rep.counts[key];
        if (i + 1 == N) break;
        for (size_t r = 0; r < n; ++r)
            code[r] = (code[r] - uint64_t(rows[r][i]) * top) * base +
                      rows[r][i + m];
    }

    uint64_t cmin = rep.counts[0], cmax = rep.counts[0];
    for (uint64_t c : rep.counts) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    Rat uniform = make_rat(1, Int(shapes));
    Rat dev_hi = abs(make_rat(Int(cmax), Int((unsigned long)N)) - uniform);
    Rat dev_lo = abs(make_rat(Int(cmin), Int((unsigned long)N)) - uniform);
    rep.max_deviation = dev_hi > dev_lo ? dev_hi : dev_lo;

    const double expected = double(N) / double(shapes);
    double chi = 0.0;
    for (uint64_t c : rep.counts) {
        double d = double(c) - expected;
        chi += d * d / expected;
    }
    rep.chi_square = chi;
    rep.dof = shapes - 1;
    return rep;
}

} // namespace digitforge
