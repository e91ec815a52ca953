#include "digitforge/detectors.hpp"

#include "digitforge/error.hpp"
#include "digitforge/suffix_array.hpp"

#include <algorithm>
#include <limits>

namespace digitforge {

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

std::vector<uint32_t> symbols_of(const DigitWord& w) {
    std::vector<uint32_t> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i];
    return out;
}

// Walk the maximal SA runs whose pairwise lcp is >= k, restricted to the
// positions `keep` accepts; hand each run to `bucket` as a position list
// in SA (lexicographic) order. Skipped entries still participate in the
// lcp minimum across a run.
template <class Keep, class Bucket>
void for_each_k_bucket(const SuffixArray& sa, size_t k, Keep keep,
                       Bucket bucket) {
    std::vector<uint32_t> run;
    uint32_t gap_min = std::numeric_limits<uint32_t>::max();
    for (size_t i = 0; i < sa.sa.size(); ++i) {
        if (i > 0) gap_min = std::min(gap_min, sa.lcp[i]);
        if (!keep(sa.sa[i])) continue;
        if (!run.empty() && gap_min < k) {
            bucket(run);
            run.clear();
        }
        run.push_back(sa.sa[i]);
        gap_min = std::numeric_limits<uint32_t>::max();
    }
    if (!run.empty()) bucket(run);
}

Int mod_reduce(const Int& v, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Window values value(word[p .. p+k-1]) for p in [0, count-1], rolling.
std::vector<Int> window_values(const DigitWord& w, size_t k, size_t count) {
    std::vector<Int> out;
    out.reserve(count);
    Int v = value_range(w, 0, k);
    Int top = pow_uint(w.base(), (unsigned long)(k - 1));
    out.push_back(v);
    for (size_t p = 1; p < count; ++p) {
        v -= w[p - 1] * top;
        v *= w.base();
        v += w[p + k - 1];
        out.push_back(v);
    }
    return out;
}

} // namespace

std::map<size_t, std::optional<RepetitionWitness>>
repetition_profile(const DigitWord& w, size_t k_min, size_t k_max,
                   const SearchOptions& opts) {
    if (k_min < 1 || k_min > k_max)
        fail(errc::range_error, "need 1 <= k_min <= k_max");
    const size_t amin = opts.allow_empty_prefix ? 0 : 1;
    if (2 * k_max + 2 * amin > w.size())
        fail(errc::range_error, "word too short for the largest block");

    SuffixArray sa = build_suffix_array(symbols_of(w));
    const size_t n = w.size();

    std::map<size_t, std::optional<RepetitionWitness>> out;
    for (size_t k = k_min; k <= k_max; ++k) {
        size_t best_i = kNone, best_j = kNone;
        auto keep = [&](uint32_t p) { return size_t(p) + k <= n; };
        auto bucket = [&](std::vector<uint32_t>& run) {
            if (run.size() < 2) return;
            std::sort(run.begin(), run.end());
            size_t min_q = kNone;
            for (uint32_t pu : run) {
                size_t p = pu;
                // p as the second occurrence start j; A' nonempty needs
                // q + k < p, empty-allowed needs q + k <= p.
                if (min_q != kNone && min_q + k + amin <= p) {
                    if (p < best_j || (p == best_j && min_q < best_i)) {
                        best_j = p;
                        best_i = min_q;
                    }
                }
                if (p >= amin && p < min_q) min_q = p;
            }
        };
        for_each_k_bucket(sa, k, keep, bucket);

        if (best_j == kNone) {
            out.emplace(k, std::nullopt);
        } else {
            RepetitionWitness witness;
            witness.a_len = best_i;
            witness.b_len = k;
            witness.a2_len = best_j - best_i - k;
            witness.ratio =
                make_rat(Int((unsigned long)(witness.a_len + witness.a2_len)),
                         Int((unsigned long)k));
            out.emplace(k, std::move(witness));
        }
    }
    return out;
}

std::map<size_t, std::optional<CommonBlockWitness>>
common_block_profile(const DigitWord& w1, const DigitWord& w2, size_t k_min,
                     size_t k_max, const SearchOptions& opts) {
    if (w1.base() != w2.base())
        fail(errc::base_mismatch, "common-block search mixes bases");
    if (k_min < 1 || k_min > k_max)
        fail(errc::range_error, "need 1 <= k_min <= k_max");
    const size_t amin = opts.allow_empty_prefix ? 0 : 1;
    if (k_max + amin > w1.size() || k_max + amin > w2.size())
        fail(errc::range_error, "word too short for the largest block");

    const size_t n1 = w1.size();
    std::vector<uint32_t> text(n1 + 1 + w2.size());
    for (size_t i = 0; i < n1; ++i) text[i] = w1[i];
    text[n1] = w1.base(); // sentinel outside the digit range
    for (size_t i = 0; i < w2.size(); ++i) text[n1 + 1 + i] = w2[i];
    SuffixArray sa = build_suffix_array(text);

    std::map<size_t, std::optional<CommonBlockWitness>> out;
    for (size_t k = k_min; k <= k_max; ++k) {
        size_t best1 = kNone, best2 = kNone;
        auto keep = [&](uint32_t p) {
            if (size_t(p) + k <= n1) return true;              // inside w1
            return p > n1 && size_t(p) + k <= text.size();     // inside w2
        };
        auto bucket = [&](std::vector<uint32_t>& run) {
            size_t min1 = kNone, min2 = kNone;
            for (uint32_t pu : run) {
                size_t p = pu;
                if (p + k <= n1) {
                    if (p >= amin) min1 = std::min(min1, p);
                } else {
                    size_t q = p - n1 - 1;
                    if (q >= amin) min2 = std::min(min2, q);
                }
            }
            if (min1 == kNone || min2 == kNone) return;
            if (best1 == kNone || min1 + min2 < best1 + best2 ||
                (min1 + min2 == best1 + best2 &&
                 (min1 < best1 || (min1 == best1 && min2 < best2)))) {
                best1 = min1;
                best2 = min2;
            }
        };
        for_each_k_bucket(sa, k, keep, bucket);

        if (best1 == kNone) {
            out.emplace(k, std::nullopt);
        } else {
            CommonBlockWitness witness;
            witness.a_len = best1;
            witness.a2_len = best2;
            witness.b_len = k;
            witness.ratio = make_rat(Int((unsigned long)(best1 + best2)),
                                     Int((unsigned long)k));
            out.emplace(k, std::move(witness));
        }
    }
    return out;
}

namespace {

struct HalfTuple {
    std::vector<size_t> positions;        // slot order within the half
    std::vector<size_t> word_first, word_last; // per word, kNone if absent
};

// Enumerate the positions of the half's slots, forcing strictly
// increasing offsets along each word's slot chain. budget counts tuples.
template <class Emit>
void enumerate_half(const std::vector<size_t>& slots,
                    const std::vector<size_t>& assignment, size_t word_count,
                    size_t amin, size_t max_prefix, uint64_t cap,
                    uint64_t& used, Emit emit) {
    std::vector<size_t> positions(slots.size());
    std::vector<size_t> last(word_count, kNone);

    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == slots.size()) {
            if (++used > cap)
                fail(errc::budget_exceeded,
                     "candidate count exceeds the search cap");
            HalfTuple tuple;
            tuple.positions = positions;
            tuple.word_first.assign(word_count, kNone);
            tuple.word_last.assign(word_count, kNone);
            for (size_t u = 0; u < slots.size(); ++u) {
                size_t w = assignment[slots[u]];
                if (tuple.word_first[w] == kNone)
                    tuple.word_first[w] = positions[u];
                tuple.word_last[w] = positions[u];
            }
            emit(std::move(tuple));
            return;
        }
        size_t w = assignment[slots[t]];
        size_t lo = last[w] == kNone ? amin : last[w] + 1;
        size_t prev = last[w];
        for (size_t p = lo; p <= max_prefix; ++p) {
            positions[t] = p;
            last[w] = p;
            self(self, t + 1);
        }
        last[w] = prev;
    };
    rec(rec, 0);
}

} // namespace

std::vector<CongruenceWitness>
congruence_search(std::span<const DigitWord> words, const CongruenceSpec& spec,
                  size_t k, size_t max_prefix, const SearchOptions& opts) {
    const size_t m = spec.coefficients.size();
    if (m == 0 || spec.word_assignment.size() != m)
        fail(errc::shape_mismatch,
             "coefficients and word assignment must pair up");
    if (words.empty()) fail(errc::shape_mismatch, "need at least one word");
    for (const Int& c : spec.coefficients)
        if (sgn(c) == 0)
            fail(errc::zero_multiplier, "congruence coefficients are nonzero");
    for (size_t wi : spec.word_assignment)
        if (wi >= words.size())
            fail(errc::index_out_of_range, "word assignment out of range");
    const uint32_t base = words[0].base();
    for (const DigitWord& w : words)
        if (w.base() != base)
            fail(errc::base_mismatch, "search words disagree on base");
    if (k < 1) fail(errc::range_error, "block length must be at least 1");
    for (const DigitWord& w : words)
        if (max_prefix + k > w.size())
            fail(errc::range_error,
                 "words too short for max_prefix plus the block");

    const size_t amin = opts.allow_empty_prefix ? 0 : 1;
    const Int modulus = pow_uint(base, (unsigned long)k);

    // Residues a_j * value(window) mod b^k per slot and offset.
    std::vector<std::vector<Int>> vals(words.size());
    for (size_t wi : spec.word_assignment)
        if (vals[wi].empty())
            vals[wi] = window_values(words[wi], k, max_prefix + 1);
    std::vector<std::vector<Int>> residues(m);
    for (size_t j = 0; j < m; ++j) {
        const auto& v = vals[spec.word_assignment[j]];
        residues[j].reserve(v.size());
        for (const Int& x : v)
            residues[j].push_back(mod_reduce(spec.coefficients[j] * x, modulus));
    }

    const size_t split = (m + 1) / 2;
    std::vector<size_t> h1(split), h2(m - split);
    for (size_t j = 0; j < split; ++j) h1[j] = j;
    for (size_t j = split; j < m; ++j) h2[j - split] = j;

    uint64_t used = 0;
    std::map<Int, std::vector<HalfTuple>> table;
    enumerate_half(h1, spec.word_assignment, words.size(), amin, max_prefix,
                   opts.candidate_cap, used, [&](HalfTuple tuple) {
                       Int sum = 0;
                       for (size_t u = 0; u < h1.size(); ++u)
                           sum += residues[h1[u]][tuple.positions[u]];
                       table[mod_reduce(sum, modulus)].push_back(
                           std::move(tuple));
                   });

    std::vector<CongruenceWitness> found;
    enumerate_half(
        h2, spec.word_assignment, words.size(), amin, max_prefix,
        opts.candidate_cap, used, [&](HalfTuple tuple) {
            Int sum = 0;
            for (size_t u = 0; u < h2.size(); ++u)
                sum += residues[h2[u]][tuple.positions[u]];
            auto it = table.find(mod_reduce(-sum, modulus));
            if (it == table.end()) return;
            for (const HalfTuple& left : it->second) {
                bool ok = true;
                for (size_t w = 0; w < words.size() && ok; ++w)
                    if (left.word_last[w] != kNone &&
                        tuple.word_first[w] != kNone &&
                        left.word_last[w] >= tuple.word_first[w])
                        ok = false;
                if (!ok) continue;
                if (++used > opts.candidate_cap)
                    fail(errc::budget_exceeded,
                         "candidate count exceeds the search cap");
                CongruenceWitness witness;
                witness.block_len = k;
                witness.prefix_lens.resize(m);
                for (size_t u = 0; u < h1.size(); ++u)
                    witness.prefix_lens[h1[u]] = left.positions[u];
                for (size_t u = 0; u < h2.size(); ++u)
                    witness.prefix_lens[h2[u]] = tuple.positions[u];
                witness.blocks.reserve(m);
                for (size_t j = 0; j < m; ++j)
                    witness.blocks.push_back(
                        words[spec.word_assignment[j]].slice(
                            witness.prefix_lens[j], k));
                found.push_back(std::move(witness));
            }
        });

    std::sort(found.begin(), found.end(),
              [](const CongruenceWitness& a, const CongruenceWitness& b) {
                  size_t sa = 0, sb = 0;
                  for (size_t p : a.prefix_lens) sa += p;
                  for (size_t p : b.prefix_lens) sb += p;
                  if (sa != sb) return sa < sb;
                  return a.prefix_lens < b.prefix_lens;
              });
    return found;
}

bool verify_witness(const DigitWord& w, const RepetitionWitness& witness) {
    if (witness.b_len < 1) return false;
    const size_t total =
        witness.a_len + witness.a2_len + 2 * witness.b_len;
    if (total > w.size())
        fail(errc::index_out_of_range, "witness extends past the word");
    DigitWord b1 = w.slice(witness.a_len, witness.b_len);
    DigitWord b2 = w.slice(witness.a_len + witness.b_len + witness.a2_len,
                           witness.b_len);
    if (!(b1 == b2)) return false;
    return witness.ratio ==
           make_rat(Int((unsigned long)(witness.a_len + witness.a2_len)),
                    Int((unsigned long)witness.b_len));
}

bool verify_witness(const DigitWord& w1, const DigitWord& w2,
                    const CommonBlockWitness& witness) {
    if (witness.b_len < 1) return false;
    if (witness.a_len + witness.b_len > w1.size() ||
        witness.a2_len + witness.b_len > w2.size())
        fail(errc::index_out_of_range, "witness extends past a word");
    if (!(w1.slice(witness.a_len, witness.b_len) ==
          w2.slice(witness.a2_len, witness.b_len)))
        return false;
    return witness.ratio ==
           make_rat(Int((unsigned long)(witness.a_len + witness.a2_len)),
                    Int((unsigned long)witness.b_len));
}

bool verify_witness(std::span<const DigitWord> words,
                    const CongruenceSpec& spec,
                    const CongruenceWitness& witness) {
    const size_t m = spec.coefficients.size();
    if (m == 0 || spec.word_assignment.size() != m ||
        witness.prefix_lens.size() != m || witness.blocks.size() != m)
        return false;
    if (witness.block_len < 1) return false;
    for (size_t wi : spec.word_assignment)
        if (wi >= words.size())
            fail(errc::index_out_of_range, "word assignment out of range");
    for (size_t j = 0; j < m; ++j)
        if (witness.prefix_lens[j] + witness.block_len >
            words[spec.word_assignment[j]].size())
            fail(errc::index_out_of_range, "witness extends past a word");

    Int sum = 0;
    for (size_t j = 0; j < m; ++j) {
        const DigitWord& w = words[spec.word_assignment[j]];
        if (witness.blocks[j].size() != witness.block_len) return false;
        if (!(witness.blocks[j] ==
              w.slice(witness.prefix_lens[j], witness.block_len)))
            return false;
        sum += spec.coefficients[j] * value(witness.blocks[j]);
    }
    Int modulus = pow_uint(words[0].base(), (unsigned long)witness.block_len);
    return sgn(mod_reduce(sum, modulus)) == 0;
}

FamilyReport check_family(std::span<const CongruenceWitness> witnesses,
                          FamilyCondition condition, const Rat& L) {
    FamilyReport rep;
    rep.k_strictly_increasing = true;
    rep.prefix_order_ok = true;
    rep.gaps_strictly_increasing = true;
    rep.max_ratio = Rat(0);

    if (condition == FamilyCondition::c1)
        rep.notes.push_back("condition c1 applies to repetition witnesses; "
                            "no congruence clauses checked");

    std::vector<std::vector<size_t>> prev_gaps;
    for (size_t i = 0; i < witnesses.size(); ++i) {
        const CongruenceWitness& w = witnesses[i];
        if (i > 0 && witnesses[i - 1].block_len >= w.block_len)
            rep.k_strictly_increasing = false;

        const auto& p = w.prefix_lens;
        bool ordered = true;
        for (size_t j = 0; j + 1 < p.size(); ++j)
            if (p[j] >= p[j + 1]) ordered = false;
        if (condition == FamilyCondition::c3) {
            if (!ordered) rep.prefix_order_ok = false;
        } else if (condition == FamilyCondition::c9) {
            if (p.size() >= 2 && p[0] >= p[1]) rep.prefix_order_ok = false;
        }

        if (condition == FamilyCondition::c3 && p.size() >= 2 && !ordered) {
            rep.gaps_strictly_increasing = false;
        } else if (condition == FamilyCondition::c3 && p.size() >= 2) {
            std::vector<size_t> gaps(p.size() - 1);
            for (size_t j = 0; j + 1 < p.size(); ++j)
                gaps[j] = p[j + 1] - p[j];
            if (!prev_gaps.empty()) {
                const auto& prev = prev_gaps.back();
                if (prev.size() != gaps.size()) {
                    rep.gaps_strictly_increasing = false;
                    rep.notes.push_back("witness shapes differ; gap growth "
                                        "not comparable");
                } else {
                    for (size_t j = 0; j < gaps.size(); ++j)
                        if (prev[j] >= gaps[j])
                            rep.gaps_strictly_increasing = false;
                }
            }
            prev_gaps.push_back(std::move(gaps));
        }

        for (size_t len : p) {
            Rat r = make_rat(Int((unsigned long)len),
                             Int((unsigned long)w.block_len));
            if (r > rep.max_ratio) rep.max_ratio = r;
        }
    }
    rep.ratio_bounded = rep.max_ratio <= L;
    return rep;
}

FamilyReport check_family(std::span<const RepetitionWitness> witnesses,
                          const Rat& L) {
    FamilyReport rep;
    rep.k_strictly_increasing = true;
    rep.prefix_order_ok = true;       // no prefix chain clause for c1
    rep.gaps_strictly_increasing = true;
    rep.max_ratio = Rat(0);
    for (size_t i = 0; i < witnesses.size(); ++i) {
        if (i > 0 && witnesses[i - 1].b_len >= witnesses[i].b_len)
            rep.k_strictly_increasing = false;
        Rat r = make_rat(
            Int((unsigned long)(witnesses[i].a_len + witnesses[i].a2_len)),
            Int((unsigned long)witnesses[i].b_len));
        if (r > rep.max_ratio) rep.max_ratio = r;
    }
    rep.ratio_bounded = rep.max_ratio <= L;
    return rep;
}

} // namespace digitforge
