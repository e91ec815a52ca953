#pragma once

#include "digitforge/algebraic.hpp"
#include "digitforge/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace digitforge {

// Exponent array {d_{i,j}}: one row per summand group, entries are the
// powers of b inside the floors. Positivity, strictly increasing rows and
// the max <= L*min clause are admissibility conditions checked on demand,
// not construction invariants (evaluation accepts any positive entries).
struct ExponentArray {
    std::vector<std::vector<long>> rows;
};

// Rational coefficients c_{i,j}, congruent in shape to a companion
// ExponentArray, all nonzero.
struct CoefficientArray {
    std::vector<std::vector<Rat>> rows;
};

// One GCD measurement: Q the (floored) sum, R = gcd(Q, b^floor_D),
// ratio = log_b(R) / floor_D. ratio is exactly 0.0 when R = 1 and exactly
// 1.0 when R = b^floor_D.
struct GcdSample {
    long floor_D = 0;
    Int Q;
    Int R;
    double ratio = 0.0;
};

struct ScanConfig {
    Rat L = Rat(3);
    double epsilon = 0.1;
    std::pair<long, long> floor_range{50, 400}; // inclusive range for floor(D)
    long gap_min = 20;
    size_t sample_budget = 100000;
    // Values for the bounded perturbation P in the main4/main5 sums,
    // cycled by sample index; empty means P = 0.
    std::vector<Rat> perturbation;
};

// min entry, min within-row consecutive difference (nullopt when no row
// has two entries), min |d - d'| over distinct positions (nullopt when
// there is a single entry in total).
struct ArrayStats {
    long floor = 0;
    std::optional<long> gap;
    std::optional<long> pair_gap;
};

ArrayStats array_stats(const ExponentArray& D);

// Positive entries, strictly increasing rows, max <= L * min.
bool is_admissible(const ExponentArray& D, const Rat& L);

// gcd(Q, b^m) through p-adic valuations of b's prime factors; b^m is never
// materialized except for the gcd(0, b^m) = b^m case.
Int gcd_pow(const Int& Q, uint32_t b, unsigned long m);

enum class Variant { main4, main5, main6, main7 };

// The four floor-sum shapes:
//   main4: Q = [ sum_i alpha_i c_i b^{d_i} + P ],   one column per row
//   main5: Q = [ sum_{i,j} alpha_i c_{i,j} b^{d_{i,j}} + P ]
//   main6: Q = sum_j c_j [ alpha b^{d_j} ],          one alpha, one row
//   main7: Q = sum_i c_i [ alpha_i b^{d_i} ],        one column per row
// main4/main5 take a single floor over the exact real sum (interval
// refinement until the integer part is certain); main6/main7 take exact
// per-term floors, with one exact rational floor on top when the
// coefficients are not integers. Refines the alphas in place.
GcdSample eval_floor_sum(std::vector<AlgebraicNumber>& alphas,
                         const CoefficientArray& C, const ExponentArray& D,
                         uint32_t b, Variant variant, const Rat& P = Rat(0));

struct ScanRow {
    size_t index = 0;
    ExponentArray D;
    GcdSample sample;
    bool violation = false; // ratio >= cfg.epsilon
};

struct ScanReport {
    std::vector<ScanRow> rows;
    double max_ratio = 0.0;
    size_t violation_count = 0;
};

using ArrayEnumerator = std::function<std::optional<ExponentArray>()>;

// Deterministic default enumeration: entries on the arithmetic lattice
// t, t+g, t+2g, ... assigned round-robin across rows of the given shape,
// for t ascending over cfg.floor_range and g in gap_min * {1, 2, 4},
// filtered by is_admissible(., cfg.L), cut off at cfg.sample_budget.
ArrayEnumerator grid_enumerator(const std::vector<size_t>& row_lengths,
                                const ScanConfig& cfg);

// Evaluate every enumerated array; rows come back in enumeration order,
// violations (ratio >= epsilon) flagged and counted, never suppressed.
// A null enumerator means grid_enumerator over C's shape.
ScanReport scan(std::vector<AlgebraicNumber>& alphas,
                const CoefficientArray& C, uint32_t b, Variant variant,
                const ScanConfig& cfg, ArrayEnumerator enumerate = nullptr);

// Q = [ sum_i coeffs[i] * b^{i*n} ] (single floor over the exact real
// value of the polynomial at b^n), R = gcd(Q, b^n). Needs degree >= 1.
GcdSample poly_floor_gcd(std::vector<AlgebraicNumber>& coeffs, uint32_t b,
                         unsigned long n);

struct PolyPairSample {
    long n = 0;
    Int q_f;
    Int q_g;
    Int gcd;
    double ratio = 0.0; // log_b(gcd) / n, 0.0 when gcd <= 1
};

// Full integer gcd of the two polynomial floors (not restricted to the
// b-smooth part).
PolyPairSample poly_pair_gcd(std::vector<AlgebraicNumber>& f_coeffs,
                             std::vector<AlgebraicNumber>& g_coeffs,
                             uint32_t b, unsigned long n);

enum class NonlinearKind { product, square_plus, nested };

// product:     Q = [alpha b^{k+m}] * [beta b^m] + 1
// square_plus: Q = [alpha b^{k+m}]^2 + [beta b^m]
// nested:      Q = [beta * [alpha b^m]^2]          (k unused)
// All against modulus b^m: R = gcd(Q, b^m).
GcdSample nonlinear_experiment(NonlinearKind kind, AlgebraicNumber alpha,
                               AlgebraicNumber beta, unsigned long k,
                               unsigned long m, uint32_t b);

} // namespace digitforge
