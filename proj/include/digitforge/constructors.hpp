#pragma once

#include "digitforge/detectors.hpp"
#include "digitforge/rational.hpp"
#include "digitforge/words.hpp"

#include <cstddef>
#include <vector>

namespace digitforge {

// One iteration of a word-doubling operator: the word had length k
// (prefix_len_before), the appended block was forced by a congruence
// mod base^congruence_modulus_exp.
struct ConstructionStep {
    size_t iteration = 0;          // 1-based
    size_t prefix_len_before = 0;  // k
    DigitWord appended_block;
    size_t congruence_modulus_exp = 0; // [k/2] for the f step, k for g
};

enum class BuildMode { F, G };

struct BuildSpec {
    BuildMode mode = BuildMode::F;
    Int s = 1; // multiplier for G steps, nonzero
};

// a |-> a a3 where a1, a2 are the first and second [k/2]-blocks of a
// (k = |a|) and a3 is the unique length-[k/2] word with
// value(a1) + value(a2) == value(a3) (mod b^[k/2]), leading zeros kept.
DigitWord step_f(const DigitWord& a);

// a |-> a a4 where a4 is the unique length-k word with
// s * value(a) == value(a4) (mod b^k), canonical residue in [0, b^k).
DigitWord step_g(const DigitWord& a, const Int& s);

struct BuildResult {
    DigitWord word;
    std::vector<ConstructionStep> steps;
};

// Iterate the chosen step until the word reaches min_len; the full step
// ledger comes along. min_len <= |seed| returns the seed and no steps.
BuildResult generate(const DigitWord& seed, const BuildSpec& spec,
                     size_t min_len);

// The congruence shape every step of a build satisfies: coefficients
// (1, 1, -1) for F (blocks a1, a2, a3), (s, -1) for G (blocks a, a4);
// all blocks drawn from the single subject word.
CongruenceSpec certificate_spec(const BuildSpec& spec);

// Convert a step ledger into checkable witnesses against full_word: for
// each step, the blocks' offsets and contents, ready for the independent
// verify_witness path. Steps that do not match full_word (wrong word, or
// a ledger edited after the fact) raise ledger_mismatch.
std::vector<CongruenceWitness> certify(const std::vector<ConstructionStep>& steps,
                                       const DigitWord& full_word,
                                       const BuildSpec& spec);

} // namespace digitforge
