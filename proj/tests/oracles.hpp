#pragma once

// Reference implementations the suites compare the library against.
// Everything here is deliberately naive: direct definitions, quadratic or
// exponential loops, no code shared with the optimized paths under test.

#include "digitforge/detectors.hpp"
#include "digitforge/rational.hpp"
#include "digitforge/words.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

namespace oracles {

using digitforge::CommonBlockWitness;
using digitforge::CongruenceSpec;
using digitforge::CongruenceWitness;
using digitforge::DigitWord;
using digitforge::Int;
using digitforge::Rat;
using digitforge::RepetitionWitness;

// Digits of p/q in (0,1), base b, by grade-school long division.
inline std::vector<uint32_t> long_division_digits(Int p, const Int& q,
                                                  uint32_t b, size_t count) {
    std::vector<uint32_t> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        p *= b;
        Int d = p / q;
        p -= d * q;
        out.push_back(uint32_t(d.get_ui()));
    }
    return out;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor((sqrt(c) - 1) * b^n) = isqrt(c * b^(2n)) - b^n for non-square c.
inline Int surd_floor(unsigned long c, uint32_t b, unsigned long n) {
    Int pw = digitforge::pow_uint(b, n);
    return isqrt(c * pw * pw) - pw;
}

// Digits of sqrt(c) - 1 for non-square c in (1, 4).
inline std::vector<uint32_t> surd_digits(unsigned long c, uint32_t b,
                                         size_t count) {
    std::vector<uint32_t> out;
    out.reserve(count);
    Int prev = isqrt(Int(c)) - 1;
    for (size_t n = 1; n <= count; ++n) {
        Int f = surd_floor(c, b, (unsigned long)n);
        Int d = f - prev * b;
        out.push_back(uint32_t(d.get_ui()));
        prev = std::move(f);
    }
    return out;
}

inline std::optional<RepetitionWitness>
brute_repetition(const DigitWord& w, size_t k, bool allow_empty = false) {
    const size_t amin = allow_empty ? 0 : 1;
    std::optional<RepetitionWitness> best;
    for (size_t i = amin; i + 2 * k + amin <= w.size(); ++i) {
        for (size_t a2 = amin; i + k + a2 + k <= w.size(); ++a2) {
            if (!(w.slice(i, k) == w.slice(i + k + a2, k))) continue;
            RepetitionWitness cand;
            cand.a_len = i;
            cand.a2_len = a2;
            cand.b_len = k;
            cand.ratio = digitforge::make_rat(Int((unsigned long)(i + a2)),
                                              Int((unsigned long)k));
            bool better = !best || cand.ratio < best->ratio ||
                          (cand.ratio == best->ratio &&
                           (cand.a_len < best->a_len ||
                            (cand.a_len == best->a_len &&
                             cand.a2_len < best->a2_len)));
            if (better) best = cand;
        }
    }
    return best;
}

inline std::optional<CommonBlockWitness>
brute_common_block(const DigitWord& w1, const DigitWord& w2, size_t k,
                   bool allow_empty = false) {
    const size_t amin = allow_empty ? 0 : 1;
    std::optional<CommonBlockWitness> best;
    for (size_t i = amin; i + k <= w1.size(); ++i) {
        for (size_t j = amin; j + k <= w2.size(); ++j) {
            if (!(w1.slice(i, k) == w2.slice(j, k))) continue;
            CommonBlockWitness cand;
            cand.a_len = i;
            cand.a2_len = j;
            cand.b_len = k;
            cand.ratio = digitforge::make_rat(Int((unsigned long)(i + j)),
                                              Int((unsigned long)k));
            bool better = !best || cand.ratio < best->ratio ||
                          (cand.ratio == best->ratio &&
                           (cand.a_len < best->a_len ||
                            (cand.a_len == best->a_len &&
                             cand.a2_len < best->a2_len)));
            if (better) best = cand;
        }
    }
    return best;
}

// Full enumeration over prefix tuples; blocks on one word must sit at
// strictly increasing offsets in coefficient order, matching the search.
inline std::vector<CongruenceWitness>
brute_congruence(std::span<const DigitWord> words, const CongruenceSpec& spec,
                 size_t k, size_t max_prefix, bool allow_empty = false) {
    const size_t m = spec.coefficients.size();
    const size_t amin = allow_empty ? 0 : 1;
    Int modulus = digitforge::pow_uint(words[0].base(), (unsigned long)k);
    std::vector<size_t> pos(m);
    std::vector<CongruenceWitness> out;

    auto rec = [&](auto&& self, size_t j) -> void {
        if (j == m) {
            Int sum = 0;
            for (size_t t = 0; t < m; ++t)
                sum += spec.coefficients[t] *
                       digitforge::value_range(words[spec.word_assignment[t]],
                                               pos[t], k);
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
            if (sgn(r) != 0) return;
            CongruenceWitness w;
            w.block_len = k;
            w.prefix_lens = pos;
            for (size_t t = 0; t < m; ++t)
                w.blocks.push_back(
                    words[spec.word_assignment[t]].slice(pos[t], k));
            out.push_back(std::move(w));
            return;
        }
        size_t lo = amin;
        for (size_t t = 0; t < j; ++t)
            if (spec.word_assignment[t] == spec.word_assignment[j])
                lo = std::max(lo, pos[t] + 1);
        for (size_t p = lo; p <= max_prefix; ++p) {
            pos[j] = p;
            self(self, j + 1);
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(),
              [](const CongruenceWitness& a, const CongruenceWitness& b) {
                  size_t sa = 0, sb = 0;
                  for (size_t p : a.prefix_lens) sa += p;
                  for (size_t p : b.prefix_lens) sb += p;
                  if (sa != sb) return sa < sb;
                  return a.prefix_lens < b.prefix_lens;
              });
    return out;
}

inline uint64_t naive_block_count(std::span<const DigitWord> rows,
                                  const digitforge::BlockMatrix& D, size_t N) {
    uint64_t count = 0;
    for (size_t i = 0; i < N; ++i) {
        bool match = true;
        for (size_t r = 0; r < D.rows && match; ++r)
            for (size_t c = 0; c < D.cols && match; ++c)
                if (rows[r][i + c] != D.at(r, c)) match = false;
        if (match) ++count;
    }
    return count;
}

inline size_t naive_complexity(const DigitWord& w, size_t n) {
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 0; i + n <= w.size(); ++i) {
        std::vector<uint32_t> f(n);
        for (size_t j = 0; j < n; ++j) f[j] = w[i + j];
        seen.insert(std::move(f));
    }
    return seen.size();
}

inline Int naive_gcd_pow(const Int& q, uint32_t b, unsigned long m) {
    Int g, pw = digitforge::pow_uint(b, m);
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), pw.get_mpz_t());
    return g;
}

inline DigitWord random_word(std::mt19937& rng, uint32_t base, size_t len) {
    std::vector<uint32_t> d(len);
    std::uniform_int_distribution<uint32_t> dist(0, base - 1);
    for (uint32_t& x : d) x = dist(rng);
    return DigitWord::from_values(std::move(d), base);
}

} // namespace oracles
