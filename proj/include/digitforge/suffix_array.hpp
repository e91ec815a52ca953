#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace digitforge {

// Suffix array over an arbitrary uint32 alphabet (digits can exceed 255,
// and concatenation sentinels need values outside the digit range).
// lcp[i] is the longest common prefix of the suffixes at sa[i-1] and sa[i];
// lcp[0] = 0. rank is the inverse permutation of sa.
struct SuffixArray {
    std::vector<uint32_t> sa;
    std::vector<uint32_t> rank;
    std::vector<uint32_t> lcp;
};

// Prefix-doubling construction, O(n log^2 n), plus Kasai's LCP pass.
SuffixArray build_suffix_array(std::span<const uint32_t> text);

} // namespace digitforge
