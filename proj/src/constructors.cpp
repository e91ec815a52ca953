#include "digitforge/constructors.hpp"

#include "digitforge/error.hpp"

namespace digitforge {

namespace {

// The length-len word whose value is v (0 <= v < base^len), zero-padded
// on the left.
DigitWord word_of_value(Int v, size_t len, uint32_t base) {
    std::vector<uint32_t> digits(len);
    for (size_t i = len; i-- > 0;) {
        Int d = v % base;
        v /= base;
        digits[i] = uint32_t(d.get_ui());
    }
    return DigitWord::from_values(std::move(digits), base);
}

Int mod_pow_base(const Int& v, uint32_t base, size_t k) {
    Int m = pow_uint(base, (unsigned long)k);
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

DigitWord step_f(const DigitWord& a) {
    const size_t k = a.size();
    if (k < 2) fail(errc::word_too_short, "f step needs a word of length 2+");
    const size_t h = k / 2;
    Int v = value(a.slice(0, h)) + value(a.slice(h, h));
    DigitWord out = a;
    out.append(word_of_value(mod_pow_base(v, a.base(), h), h, a.base()));
    return out;
}

DigitWord step_g(const DigitWord& a, const Int& s) {
    const size_t k = a.size();
    if (k < 2) fail(errc::word_too_short, "g step needs a word of length 2+");
    if (sgn(s) == 0) fail(errc::zero_multiplier, "g step multiplier is zero");
    Int v = s * value(a);
    DigitWord out = a;
    out.append(word_of_value(mod_pow_base(v, a.base(), k), k, a.base()));
    return out;
}

BuildResult generate(const DigitWord& seed, const BuildSpec& spec,
                     size_t min_len) {
    if (seed.size() < 2)
        fail(errc::word_too_short, "seed needs length 2+");
    if (spec.mode == BuildMode::G && sgn(spec.s) == 0)
        fail(errc::zero_multiplier, "g step multiplier is zero");

    BuildResult result;
    result.word = seed;
    size_t iteration = 0;
    while (result.word.size() < min_len) {
        const size_t k = result.word.size();
        DigitWord next = spec.mode == BuildMode::F
                             ? step_f(result.word)
                             : step_g(result.word, spec.s);
        ConstructionStep step;
        step.iteration = ++iteration;
        step.prefix_len_before = k;
        step.appended_block = next.slice(k, next.size() - k);
        step.congruence_modulus_exp = spec.mode == BuildMode::F ? k / 2 : k;
        result.steps.push_back(std::move(step));
        result.word = std::move(next);
    }
    return result;
}

CongruenceSpec certificate_spec(const BuildSpec& spec) {
    CongruenceSpec cs;
    if (spec.mode == BuildMode::F) {
        cs.coefficients = {Int(1), Int(1), Int(-1)};
        cs.word_assignment = {0, 0, 0};
    } else {
        cs.coefficients = {spec.s, Int(-1)};
        cs.word_assignment = {0, 0};
    }
    return cs;
}

std::vector<CongruenceWitness>
certify(const std::vector<ConstructionStep>& steps, const DigitWord& full_word,
        const BuildSpec& spec) {
    std::vector<CongruenceWitness> out;
    out.reserve(steps.size());
    const uint32_t b = full_word.base();

    for (size_t i = 0; i < steps.size(); ++i) {
        const ConstructionStep& st = steps[i];
        if (st.iteration != i + 1)
            fail(errc::ledger_mismatch, "step numbering is not consecutive");
        const size_t k = st.prefix_len_before;
        const size_t blk = spec.mode == BuildMode::F ? k / 2 : k;
        if (k < 2 || st.appended_block.size() != blk ||
            st.congruence_modulus_exp != blk)
            fail(errc::ledger_mismatch, "step shape does not match its mode");
        if (i > 0 && k != steps[i - 1].prefix_len_before +
                              steps[i - 1].appended_block.size())
            fail(errc::ledger_mismatch, "step lengths do not chain");
        if (k + blk > full_word.size())
            fail(errc::ledger_mismatch, "ledger extends past the word");
        if (!(st.appended_block == full_word.slice(k, blk)))
            fail(errc::ledger_mismatch,
                 "appended block differs from the word content");

        CongruenceWitness w;
        w.block_len = blk;
        Int residue;
        if (spec.mode == BuildMode::F) {
            const size_t h = blk;
            w.prefix_lens = {0, h, k};
            w.blocks = {full_word.slice(0, h), full_word.slice(h, h),
                        full_word.slice(k, h)};
            residue = value(w.blocks[0]) + value(w.blocks[1]) -
                      value(w.blocks[2]);
        } else {
            w.prefix_lens = {0, k};
            w.blocks = {full_word.slice(0, k), full_word.slice(k, k)};
            residue = spec.s * value(w.blocks[0]) - value(w.blocks[1]);
        }
        if (sgn(mod_pow_base(residue, b, blk)) != 0)
            fail(errc::ledger_mismatch, "step congruence does not verify");
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace digitforge
