#pragma once

#include "digitforge/rational.hpp"
#include "digitforge/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace digitforge {

// A decomposition w = A B A' B ... (the repetition is a literal prefix of
// the subject word). ratio = (|A| + |A'|) / |B|, the quantity the
// no-long-repetition property bounds away from small values.
struct RepetitionWitness {
    size_t a_len = 0;
    size_t a2_len = 0;
    size_t b_len = 0;
    Rat ratio;

    bool operator==(const RepetitionWitness&) const = default;
};

// A B a prefix of word 1 and A' B a prefix of word 2 with the same block B.
struct CommonBlockWitness {
    size_t a_len = 0;
    size_t a2_len = 0;
    size_t b_len = 0;
    Rat ratio;

    bool operator==(const CommonBlockWitness&) const = default;
};

// The fixed data of a congruence search: m nonzero coefficients a_1..a_m
// and, for each block slot, which subject word it is drawn from.
struct CongruenceSpec {
    std::vector<Int> coefficients;
    std::vector<size_t> word_assignment;
};

// Blocks B^1..B^m of one common length k, block j sitting at offset
// |A^j| = prefix_lens[j] of its assigned word, with
// sum_j a_j * value(B^j) == 0 (mod b^k).
struct CongruenceWitness {
    size_t block_len = 0;
    std::vector<size_t> prefix_lens;
    std::vector<DigitWord> blocks;

    bool operator==(const CongruenceWitness&) const = default;
};

struct SearchOptions {
    // The conditions ask for nonempty prefixes A; the flag admits the
    // empty-prefix decompositions the F-construction produces.
    bool allow_empty_prefix = false;
    uint64_t candidate_cap = 100000000;
};

// Per block length k in [k_min, k_max], the prefix decomposition A B A' B
// minimizing (|A|+|A'|)/k, or nothing when no decomposition exists. Ties
// break toward smaller |A|, then smaller |A'|. Needs 2*k_max + 2 <= |w|
// (2*k_max with empty prefixes allowed).
std::map<size_t, std::optional<RepetitionWitness>>
repetition_profile(const DigitWord& w, size_t k_min, size_t k_max,
                   const SearchOptions& opts = {});

// Per k, the pair of prefix positions with a shared length-k block
// minimizing (|A|+|A'|)/k; ties as above. Needs k_max + 1 <= |w1|, |w2|.
std::map<size_t, std::optional<CommonBlockWitness>>
common_block_profile(const DigitWord& w1, const DigitWord& w2, size_t k_min,
                     size_t k_max, const SearchOptions& opts = {});

// All witnesses with every |A^j| <= max_prefix and the exact congruence
// mod b^k, sorted by sum |A^j| then lexicographically by prefix tuple.
// Blocks assigned to the same word must sit at strictly increasing
// offsets, in coefficient order; blocks on different words are
// unconstrained relative to each other. Meet-in-the-middle on window
// residues; candidate volume beyond opts.candidate_cap raises
// budget_exceeded.
std::vector<CongruenceWitness>
congruence_search(std::span<const DigitWord> words, const CongruenceSpec& spec,
                  size_t k, size_t max_prefix, const SearchOptions& opts = {});

// Independent re-checks, recomputed from scratch on the raw words (the
// search ops never call these).
bool verify_witness(const DigitWord& w, const RepetitionWitness& witness);
bool verify_witness(const DigitWord& w1, const DigitWord& w2,
                    const CommonBlockWitness& witness);
bool verify_witness(std::span<const DigitWord> words,
                    const CongruenceSpec& spec,
                    const CongruenceWitness& witness);

// Which sequence-level clause set to check over a witness family:
// c3 = all blocks on one word (full prefix chain |A^1|<...<|A^m| per
// witness, gap growth across witnesses), c5 = one block per word (no
// ordering), c9 = first two blocks on one word (|A^1|<|A^2| only).
enum class FamilyCondition { c1, c3, c5, c9 };

struct FamilyReport {
    bool k_strictly_increasing = false;
    bool prefix_order_ok = false;
    bool gaps_strictly_increasing = false;
    Rat max_ratio;
    bool ratio_bounded = false;
    std::vector<std::string> notes;
};

// Report-only sequence checks over witnesses sorted by block length.
FamilyReport check_family(std::span<const CongruenceWitness> witnesses,
                          FamilyCondition condition, const Rat& L);
FamilyReport check_family(std::span<const RepetitionWitness> witnesses,
                          const Rat& L);

} // namespace digitforge
