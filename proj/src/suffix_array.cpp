#include "digitforge/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace digitforge {

SuffixArray build_suffix_array(std::span<const uint32_t> text) {
    const size_t n = text.size();
    SuffixArray out;
    out.sa.resize(n);
    out.rank.resize(n);
    out.lcp.assign(n, 0);
    if (n == 0) return out;

    std::vector<uint32_t>& sa = out.sa;
    std::vector<uint32_t> rk(n), tmp(n);
    std::vector<uint64_t> key(n);

    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(),
              [&](uint32_t a, uint32_t b) { return text[a] < text[b]; });
    rk[sa[0]] = 0;
    for (size_t i = 1; i < n; ++i)
        rk[sa[i]] = rk[sa[i - 1]] + (text[sa[i]] != text[sa[i - 1]] ? 1 : 0);

    for (size_t h = 1; rk[sa[n - 1]] != n - 1; h <<= 1) {
        for (size_t p = 0; p < n; ++p) {
            uint64_t hi = rk[p];
            uint64_t lo = (p + h < n) ? uint64_t(rk[p + h]) + 1 : 0;
            key[p] = (hi << 32) | lo;
        }
        std::sort(sa.begin(), sa.end(),
                  [&](uint32_t a, uint32_t b) { return key[a] < key[b]; });
        tmp[sa[0]] = 0;
        for (size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (key[sa[i]] != key[sa[i - 1]] ? 1 : 0);
        rk.swap(tmp);
    }
    out.rank = rk;

    size_t h = 0;
    for (size_t i = 0; i < n; ++i) {
        if (rk[i] == 0) {
            h = 0;
            continue;
        }
        size_t j = sa[rk[i] - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        out.lcp[rk[i]] = uint32_t(h);
    }
    return out;
}

} // namespace digitforge
