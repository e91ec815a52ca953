// Acceptance gate: ten go/no-go checks with pinned tolerances and time
// limits, one PASS/FAIL line each. Exit 0 only when every line passes.

#include "digitforge/algebraic.hpp"
#include "digitforge/cache.hpp"
#include "digitforge/constructors.hpp"
#include "digitforge/detectors.hpp"
#include "digitforge/error.hpp"
#include "digitforge/gcdlab.hpp"
#include "digitforge/numberspec.hpp"
#include "digitforge/stream_file.hpp"
#include "digitforge/words.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace digitforge;

namespace {

int failures = 0;

void run(int index, const char* name, double limit_s,
         const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && limit_s > 0 && secs > limit_s) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over the " + std::to_string(long(limit_s)) + "s limit";
    }
    std::printf("[%2d] %s %s (%.1fs)%s%s\n", index, ok ? "PASS" : "FAIL",
                name, secs, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

AlgebraicNumber make_root(std::vector<long> coeffs, const Rat& lo,
                          const Rat& hi) {
    std::vector<Int> v(coeffs.begin(), coeffs.end());
    return AlgebraicNumber::validate(IntPolynomial(std::move(v)), lo, hi);
}

AlgebraicNumber sqrt2_minus_1() { return make_root({-1, 2, 1}, 0, 1); }
AlgebraicNumber sqrt3_minus_1() { return make_root({-2, 2, 1}, 0, 1); }

// 200 random p/q against grade-school long division, 10^4 digits each.
bool rational_digit_oracle(std::string& detail) {
    std::mt19937 rng(20260818);
    std::uniform_int_distribution<unsigned long> qd(2, 1000000000UL);
    std::uniform_int_distribution<uint32_t> bd(2, 360);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned long q = qd(rng);
        std::uniform_int_distribution<unsigned long> pd(1, q - 1);
        unsigned long p = pd(rng);
        uint32_t b = bd(rng);
        DigitWord w =
            digits(AlgebraicNumber::rational(make_rat(Int(p), Int(q))), b,
                   10000);
        std::vector<uint32_t> oracle =
            oracles::long_division_digits(Int(p), Int(q), b, 10000);
        for (size_t i = 0; i < oracle.size(); ++i) {
            if (w[i] != oracle[i]) {
                detail = "mismatch at digit " + std::to_string(i + 1) +
                         " of " + std::to_string(p) + "/" + std::to_string(q) +
                         " base " + std::to_string(b);
                return false;
            }
        }
    }
    detail = "200 expansions, 10000 digits each";
    return true;
}

// sqrt(2)-1 and sqrt(3)-1 to 2000 digits against the integer-sqrt oracle.
bool surd_digit_oracle(std::string& detail) {
    for (unsigned long c : {2UL, 3UL}) {
        AlgebraicNumber num = c == 2 ? sqrt2_minus_1() : sqrt3_minus_1();
        DigitWord w = digits(num, 10, 2000);
        std::vector<uint32_t> oracle = oracles::surd_digits(c, 10, 2000);
        for (size_t i = 0; i < oracle.size(); ++i) {
            if (w[i] != oracle[i]) {
                detail = "sqrt(" + std::to_string(c) + ")-1 differs at digit " +
                         std::to_string(i + 1);
                return false;
            }
        }
    }
    detail = "2000 digits for both surds";
    return true;
}

// a_n == [alpha b^n] - b [alpha b^(n-1)] for n <= 2000 on five numbers.
bool floor_digit_coherence(std::string& detail) {
    struct Case {
        AlgebraicNumber num;
        uint32_t base;
    };
    std::vector<Case> cases;
    cases.push_back({sqrt2_minus_1(), 10});
    cases.push_back({sqrt3_minus_1(), 7});
    cases.push_back({make_root({-1, 1, 1}, 0, 1), 10});        // (sqrt5-1)/2
    cases.push_back({make_root({-1, 3, 3, 1}, 0, 1), 2});      // cbrt(2)-1
    cases.push_back({make_root({-1, 4, 10, 10, 5, 1}, 0, 1), 10});
    for (Case& c : cases) {
        DigitWord w = digits(c.num, c.base, 2000);
        AlgebraicNumber probe = c.num;
        Int prev = probe.floor_scaled(c.base, 0);
        if (prev != 0) {
            detail = "value not in (0,1)";
            return false;
        }
        for (unsigned long n = 1; n <= 2000; ++n) {
            Int f = probe.floor_scaled(c.base, n);
            Int a = f - Int(c.base) * prev;
            if (a != w[n - 1]) {
                detail = "digit " + std::to_string(n) + " base " +
                         std::to_string(c.base) + " disagrees with the floors";
                return false;
            }
            prev = std::move(f);
        }
    }
    detail = "5 numbers, n to 2000";
    return true;
}

// Detectors equal brute-force enumeration on random words.
bool detector_brute_equivalence(std::string& detail) {
    std::mt19937 rng(97);
    const uint32_t bases[3] = {2, 3, 10};
    const std::vector<std::vector<Int>> coeff_sets = {
        {Int(1), Int(-1)},
        {Int(1), Int(1)},
        {Int(2), Int(-1)},
        {Int(1), Int(1), Int(-1)}};
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t b = bases[trial % 3];
        std::uniform_int_distribution<size_t> ld(10, 64);
        DigitWord w1 = oracles::random_word(rng, b, ld(rng));
        DigitWord w2 = oracles::random_word(rng, b, ld(rng));
        bool allow = trial % 5 == 0;
        SearchOptions opts;
        opts.allow_empty_prefix = allow;
        size_t amin = allow ? 0 : 1;

        size_t kmax = (w1.size() - 2 * amin) / 2;
        auto prof = repetition_profile(w1, 1, kmax, opts);
        for (size_t k = 1; k <= kmax; ++k) {
            if (prof.at(k) != oracles::brute_repetition(w1, k, allow)) {
                detail = "repetition mismatch, trial " + std::to_string(trial) +
                         " k=" + std::to_string(k);
                return false;
            }
        }

        size_t ckmax = std::min(w1.size(), w2.size()) - std::max<size_t>(amin, 1);
        auto cprof = common_block_profile(w1, w2, 1, ckmax, opts);
        for (size_t k = 1; k <= ckmax; ++k) {
            if (cprof.at(k) != oracles::brute_common_block(w1, w2, k, allow)) {
                detail = "common-block mismatch, trial " +
                         std::to_string(trial) + " k=" + std::to_string(k);
                return false;
            }
        }

        std::vector<DigitWord> words{w1};
        if (trial % 3 == 0) words.push_back(w2);
        for (const auto& coeffs : coeff_sets) {
            CongruenceSpec spec;
            spec.coefficients = coeffs;
            for (size_t j = 0; j < coeffs.size(); ++j)
                spec.word_assignment.push_back(
                    words.size() == 2 ? j % 2 : 0);
            for (size_t k : {2, 3}) {
                size_t shortest = w1.size();
                for (const DigitWord& w : words)
                    shortest = std::min(shortest, w.size());
                size_t max_prefix = std::min<size_t>(shortest - k, 10);
                auto fast = congruence_search(words, spec, k, max_prefix, opts);
                auto slow = oracles::brute_congruence(words, spec, k,
                                                      max_prefix, allow);
                if (fast != slow) {
                    detail = "congruence mismatch, trial " +
                             std::to_string(trial) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    detail = "100 words, all detector paths";
    return true;
}

// The step congruence re-read as a floor-sum gcd sample: one rational
// alpha (the whole word over b^N) and per-term floors at block offsets.
GcdSample step_sample(const Rat& omega, const ConstructionStep& st,
                      BuildMode mode, const Int& s, uint32_t b) {
    std::vector<AlgebraicNumber> alphas{AlgebraicNumber::rational(omega)};
    const long k = long(st.prefix_len_before);
    const long h = long(st.congruence_modulus_exp);
    CoefficientArray C;
    ExponentArray D;
    if (mode == BuildMode::G) {
        C.rows = {{Rat(s), Rat(-1)}};
        D.rows = {{k, 2 * k}};
    } else {
        Int bh = pow_uint(b, (unsigned long)h);
        if (2 * h == k) {
            C.rows = {{Rat(Int(1) - bh), Rat(Int(1) + bh), Rat(-1)}};
            D.rows = {{h, k, k + h}};
        } else {
            C.rows = {{Rat(Int(1) - bh), Rat(1), Rat(bh), Rat(-1)}};
            D.rows = {{h, 2 * h, k, k + h}};
        }
    }
    return eval_floor_sum(alphas, C, D, b, Variant::main6);
}

// Builds to 10^4 digits verify through the independent witness path, and
// each step's sample gcd is divisible by b^(modulus exponent) exactly.
bool certificate_chain_divisibility(std::string& detail) {
    std::mt19937 rng(5151);
    const uint32_t b = 10;
    std::vector<BuildSpec> specs = {{BuildMode::F, Int(1)},
                                    {BuildMode::G, Int(2)},
                                    {BuildMode::G, Int(-1)},
                                    {BuildMode::G, Int(3)}};
    size_t steps_checked = 0;
    for (int seed_i = 0; seed_i < 10; ++seed_i) {
        std::uniform_int_distribution<size_t> ld(2, 3);
        DigitWord seed = oracles::random_word(rng, b, ld(rng));
        for (const BuildSpec& spec : specs) {
            BuildResult build = generate(seed, spec, 10000);
            std::vector<CongruenceWitness> witnesses =
                certify(build.steps, build.word, spec);
            CongruenceSpec cs = certificate_spec(spec);
            std::vector<DigitWord> words{build.word};
            if (witnesses.size() != build.steps.size()) {
                detail = "certificate count differs from the step ledger";
                return false;
            }
            for (const CongruenceWitness& w : witnesses) {
                if (!verify_witness(words, cs, w)) {
                    detail = "witness failed the independent recheck";
                    return false;
                }
            }
            Rat omega = make_rat(
                value(build.word),
                pow_uint(b, (unsigned long)build.word.size()));
            for (const ConstructionStep& st : build.steps) {
                GcdSample s = step_sample(omega, st, spec.mode, spec.s, b);
                Int bk =
                    pow_uint(b, (unsigned long)st.congruence_modulus_exp);
                if (!mpz_divisible_p(s.R.get_mpz_t(), bk.get_mpz_t())) {
                    detail = "sample gcd not divisible by the step modulus";
                    return false;
                }
                ++steps_checked;
            }
        }
    }
    detail = "40 builds, " + std::to_string(steps_checked) + " step samples";
    return true;
}

// Sweep [alpha 10^d] - [alpha 10^d'] for sqrt(2)-1: every admissible array
// evaluated, max ratio reported, violations listed rather than clamped.
bool gcd_ratio_scan(std::string& detail) {
    std::vector<AlgebraicNumber> alphas{sqrt2_minus_1()};
    CoefficientArray C;
    C.rows = {{Rat(1), Rat(-1)}};
    ScanConfig cfg; // floor range 50..400, gap 20, epsilon 0.1
    ScanReport rep = scan(alphas, C, 10, Variant::main6, cfg);

    size_t recount = 0;
    for (const ScanRow& row : rep.rows) {
        bool over = row.sample.ratio >= cfg.epsilon;
        if (over != row.violation) {
            detail = "violation flag disagrees with the ratio";
            return false;
        }
        if (over) ++recount;
    }
    if (recount != rep.violation_count) {
        detail = "violation count disagrees with the rows";
        return false;
    }

    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu arrays, max ratio %.6f, %zu violations",
                  rep.rows.size(), rep.max_ratio, rep.violation_count);
    detail = buf;
    if (rep.rows.size() < 500) return false;
    return rep.violation_count == 0 && rep.max_ratio < 0.1;
}

// f(x) = x saturates the gcd for every n; sqrt(2)x^2 + x stays far from it.
bool polynomial_gcd_contrast(std::string& detail) {
    std::vector<AlgebraicNumber> lin{AlgebraicNumber::rational(Rat(0)),
                                     AlgebraicNumber::rational(Rat(1))};
    std::vector<AlgebraicNumber> mixed{AlgebraicNumber::rational(Rat(0)),
                                       AlgebraicNumber::rational(Rat(1)),
                                       make_root({-2, 0, 1}, 1, 2)};
    double max_mixed = 0.0;
    size_t violations = 0;
    for (unsigned long n = 20; n <= 200; ++n) {
        GcdSample a = poly_floor_gcd(lin, 10, n);
        if (a.ratio != 1.0) {
            detail = "f(x)=x ratio not exactly 1 at n=" + std::to_string(n);
            return false;
        }
        GcdSample m = poly_floor_gcd(mixed, 10, n);
        max_mixed = std::max(max_mixed, m.ratio);
        if (m.ratio >= 0.15) ++violations;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "n in [20,200], mixed max ratio %.6f, %zu violations",
                  max_mixed, violations);
    detail = buf;
    return violations == 0;
}

// The three nonlinear spot values, re-derived through the isqrt oracle.
bool nonlinear_spot_values(std::string& detail) {
    AlgebraicNumber a = sqrt2_minus_1();
    Int f3 = oracles::surd_floor(2, 10, 3); // [ (sqrt2-1) 10^3 ]
    Int f2 = oracles::surd_floor(2, 10, 2); // [ (sqrt2-1) 10^2 ]

    GcdSample prod =
        nonlinear_experiment(NonlinearKind::product, a, a, 1, 2, 10);
    if (prod.Q != f3 * f2 + 1 || prod.R != 25) {
        detail = "product sample off";
        return false;
    }
    GcdSample sq =
        nonlinear_experiment(NonlinearKind::square_plus, a, a, 1, 2, 10);
    if (sq.Q != f3 * f3 + f2 || sq.R != 1) {
        detail = "square_plus sample off";
        return false;
    }
    Int x = f2 * f2;
    Int nested_expect = oracles::isqrt(Int(2) * x * x) - x;
    GcdSample nest =
        nonlinear_experiment(NonlinearKind::nested, a, a, 1, 2, 10);
    if (nest.Q != nested_expect || nest.R != 4) {
        detail = "nested sample off";
        return false;
    }
    detail = "gcds 25 / 1 / 4";
    return true;
}

// Streaming window counter equals the naive recount; frequencies add to 1
// in exact rational arithmetic.
bool statistics_exactness(std::string& detail) {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        uint32_t b = trial % 2 ? 3 : 2;
        size_t n = 1 + trial % 3;
        std::uniform_int_distribution<size_t> md(1, 4);
        std::uniform_int_distribution<size_t> Nd(500, 10000);
        size_t m = md(rng);
        size_t N = Nd(rng);

        std::vector<DigitWord> rows;
        for (size_t r = 0; r < n; ++r)
            rows.push_back(oracles::random_word(rng, b, N + m - 1));

        std::vector<std::vector<uint32_t>> block(n);
        std::uniform_int_distribution<uint32_t> dd(0, b - 1);
        for (auto& row : block) {
            row.resize(m);
            for (uint32_t& x : row) x = dd(rng);
        }
        BlockMatrix D = BlockMatrix::from_rows(block, b);
        if (block_count(rows, D, N) != oracles::naive_block_count(rows, D, N)) {
            detail = "window count differs from the naive recount";
            return false;
        }

        NormalityReport nr = normality_report(rows, m, N);
        Rat total = 0;
        uint64_t count_sum = 0;
        for (uint64_t key = 0; key < nr.shapes; ++key) {
            total += nr.frequency(key);
            count_sum += nr.counts[key];
        }
        if (total != Rat(1) || count_sum != N) {
            detail = "frequencies do not sum to 1 exactly";
            return false;
        }
    }
    detail = "50 inputs, counts and frequencies exact";
    return true;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) return {};
    return std::string(std::istreambuf_iterator<char>(f),
                       std::istreambuf_iterator<char>());
}

// Stream-file identity per base, cache extension stability, and identical
// argv producing identical bytes, all through the installed binary.
bool cli_round_trip(std::string& detail) {
#ifndef DIGITFORGE_CLI_PATH
    detail = "CLI path not configured";
    return false;
#else
    const std::string cli = DIGITFORGE_CLI_PATH;
    ::unsetenv("DIGITFORGE_CACHE");
    std::filesystem::path tmp =
        std::filesystem::temp_directory_path() /
        ("digitforge_acceptance_" + std::to_string(::getpid()));
    std::filesystem::remove_all(tmp);
    std::filesystem::create_directories(tmp);
    struct Cleanup {
        std::filesystem::path p;
        ~Cleanup() {
            std::error_code ec;
            std::filesystem::remove_all(p, ec);
        }
    } cleanup{tmp};

    auto sh = [&](const std::string& cmd) {
        return std::system(cmd.c_str()) == 0;
    };

    // Library-level write/read identity on random words.
    std::mt19937 rng(777);
    for (uint32_t base : {2u, 10u, 36u, 1000u}) {
        DigitWord w = oracles::random_word(rng, base, 500);
        auto path = tmp / ("lib" + std::to_string(base) + ".dg");
        write_stream_file(path, w, "roundtrip");
        if (!(read_stream_file(path).word == w)) {
            detail = "stream file round trip broke at base " +
                     std::to_string(base);
            return false;
        }
    }

    // The binary writes streams that read back as the direct expansion.
    for (uint32_t base : {2u, 10u, 36u, 1000u}) {
        auto path = tmp / ("cli" + std::to_string(base) + ".dg");
        if (!sh(cli + " expand --spec 1/7 --base " + std::to_string(base) +
                " --digits 200 --out " + path.string())) {
            detail = "expand exited nonzero at base " + std::to_string(base);
            return false;
        }
        StreamFile got = read_stream_file(path);
        DigitWord direct =
            digits(AlgebraicNumber::rational(Rat(1, 7)), base, 200);
        if (!(got.word == direct) || got.spec != "rat:1/7") {
            detail = "CLI stream disagrees with the direct expansion at base " +
                     std::to_string(base);
            return false;
        }
    }

    // Cache extension: digits served before and after a longer request
    // are byte-identical, and the stored stream grew.
    std::string cache = (tmp / "cache").string();
    std::string expand = cli + " expand --spec x^2+2x-1@0,1 --cache-dir " +
                         cache + " --digits ";
    if (!sh(expand + "50 > " + (tmp / "first.txt").string()) ||
        !sh(expand + "200 > /dev/null") ||
        !sh(expand + "50 > " + (tmp / "again.txt").string())) {
        detail = "cached expand exited nonzero";
        return false;
    }
    std::string first = slurp(tmp / "first.txt");
    if (first.empty() || first != slurp(tmp / "again.txt")) {
        detail = "cache extension changed the first 50 digits";
        return false;
    }
    auto entry = std::filesystem::path(cache) /
                 (DigitCache::key("poly:-1,2,1@0,1", 10) + ".dg");
    if (read_stream_file(entry).word.size() != 200) {
        detail = "cache entry did not extend to 200 digits";
        return false;
    }

    // Identical argv, identical bytes.
    std::string construct = cli + " construct --seed 13 --mode g --s 2 "
                                  "--base 10 --digits 64 --format json > ";
    std::string detect = cli + " detect-rep --word 414213562373095048801688 "
                               "--k-range 1:6 --format csv > ";
    if (!sh(construct + (tmp / "c1.json").string()) ||
        !sh(construct + (tmp / "c2.json").string()) ||
        !sh(detect + (tmp / "d1.csv").string()) ||
        !sh(detect + (tmp / "d2.csv").string())) {
        detail = "repeat runs exited nonzero";
        return false;
    }
    if (slurp(tmp / "c1.json").empty() ||
        slurp(tmp / "c1.json") != slurp(tmp / "c2.json") ||
        slurp(tmp / "d1.csv") != slurp(tmp / "d2.csv")) {
        detail = "identical argv produced different bytes";
        return false;
    }

    detail = "bases 2/10/36/1000, cache extension, byte-stable reruns";
    return true;
#endif
}

} // namespace

int main() {
    run(1, "rational-digit-oracle", 10, rational_digit_oracle);
    run(2, "surd-digit-oracle", 30, surd_digit_oracle);
    run(3, "floor-digit-coherence", 0, floor_digit_coherence);
    run(4, "detector-brute-equivalence", 60, detector_brute_equivalence);
    run(5, "certificate-chain-divisibility", 0,
        certificate_chain_divisibility);
    run(6, "gcd-ratio-scan", 120, gcd_ratio_scan);
    run(7, "polynomial-gcd-contrast", 60, polynomial_gcd_contrast);
    run(8, "nonlinear-spot-values", 0, nonlinear_spot_values);
    run(9, "statistics-exactness", 0, statistics_exactness);
    run(10, "cli-round-trip", 0, cli_round_trip);
    return failures == 0 ? 0 : 1;
}
