#include "digitforge/gcdlab.hpp"

#include "digitforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace digitforge {

namespace {

std::vector<std::pair<unsigned long, unsigned long>> factor_base(uint32_t b) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    unsigned long n = b;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

GcdSample make_sample(Int Q, uint32_t b, unsigned long m) {
    if (b < 2) fail(errc::domain_error, "base must be at least 2");
    if (m < 1) fail(errc::domain_error, "modulus exponent must be positive");
    GcdSample s;
    s.floor_D = long(m);
    if (sgn(Q) == 0) {
        s.Q = 0;
        s.R = pow_uint(b, m);
        s.ratio = 1.0;
        return s;
    }
    Int R = 1;
    double log_r = 0.0;
    bool all_zero = true, all_full = true;
    for (auto [p, e] : factor_base(b)) {
        unsigned long cap = m * e;
        unsigned long use = std::min(p_adic_valuation(Q, Int(p)), cap);
        if (use > 0) all_zero = false;
        if (use < cap) all_full = false;
        if (use > 0) R *= pow_uint(p, use);
        log_r += double(use) * std::log(double(p));
    }
    s.Q = std::move(Q);
    s.R = std::move(R);
    s.ratio = all_zero ? 0.0
              : all_full ? 1.0
                         : log_r / (double(m) * std::log(double(b)));
    return s;
}

// Exact floor of constant + sum of weight*alpha terms: rational alphas
// fold into the constant, irrational ones contribute shrinking intervals
// until no integer can sit inside. Refines the alphas in place.
Int floor_linear_combination(std::vector<AlgebraicNumber>& alphas,
                             const std::vector<std::pair<size_t, Rat>>& terms,
                             const Rat& constant) {
    Rat fixed = constant;
    std::vector<std::pair<size_t, Rat>> irr;
    for (const auto& [idx, weight] : terms) {
        if (alphas[idx].is_rational())
            fixed += weight * alphas[idx].rational_value();
        else
            irr.emplace_back(idx, weight);
    }
    if (irr.empty()) return floor_rat(fixed);

    Rat weight_sum = 0;
    for (const auto& [idx, weight] : irr) weight_sum += abs(weight);
    Int scale = floor_rat(weight_sum) + 1;
    unsigned long budget = 64 + 4 * mpz_sizeinbase(scale.get_mpz_t(), 2);

    for (unsigned long round = 0;; ++round) {
        Rat lo = fixed, hi = fixed;
        for (const auto& [idx, weight] : irr) {
            auto [alo, ahi] = alphas[idx].interval();
            if (sgn(weight) >= 0) {
                lo += weight * alo;
                hi += weight * ahi;
            } else {
                lo += weight * ahi;
                hi += weight * alo;
            }
        }
        Int f = floor_rat(lo);
        if (Rat(f + 1) >= hi) return f;
        if (round >= budget)
            fail(errc::refinement_budget_exceeded,
                 "sum floor did not stabilize within " +
                     std::to_string(budget) + " refinement rounds");
        for (const auto& [idx, weight] : irr) {
            auto [alo, ahi] = alphas[idx].interval();
            alphas[idx].refine((ahi - alo) / 2);
        }
    }
}

void check_shapes(const std::vector<AlgebraicNumber>& alphas,
                  const CoefficientArray& C, const ExponentArray& D,
                  Variant variant) {
    if (D.rows.empty() || D.rows[0].empty())
        fail(errc::empty_array, "exponent array is empty");
    if (C.rows.size() != D.rows.size())
        fail(errc::shape_mismatch, "coefficient and exponent rows differ");
    for (size_t i = 0; i < D.rows.size(); ++i) {
        if (D.rows[i].empty()) fail(errc::empty_array, "array row is empty");
        if (C.rows[i].size() != D.rows[i].size())
            fail(errc::shape_mismatch,
                 "coefficient and exponent rows differ in length");
        for (const Rat& c : C.rows[i])
            if (sgn(c) == 0)
                fail(errc::zero_multiplier, "coefficients must be nonzero");
        for (long d : D.rows[i])
            if (d < 1)
                fail(errc::domain_error, "exponents must be positive");
    }
    const bool one_col = [&] {
        for (const auto& r : D.rows)
            if (r.size() != 1) return false;
        return true;
    }();
    switch (variant) {
    case Variant::main4:
        if (!one_col || alphas.size() != D.rows.size())
            fail(errc::shape_mismatch,
                 "main4 needs one column per row and one alpha per row");
        break;
    case Variant::main5:
        if (alphas.size() != D.rows.size())
            fail(errc::shape_mismatch, "main5 needs one alpha per row");
        break;
    case Variant::main6:
        if (alphas.size() != 1 || D.rows.size() != 1)
            fail(errc::shape_mismatch, "main6 needs one alpha and one row");
        break;
    case Variant::main7:
        if (!one_col || alphas.size() != D.rows.size())
            fail(errc::shape_mismatch,
                 "main7 needs one column per row and one alpha per row");
        break;
    }
}

} // namespace

ArrayStats array_stats(const ExponentArray& D) {
    if (D.rows.empty()) fail(errc::empty_array, "array has no rows");
    for (const auto& row : D.rows)
        if (row.empty()) fail(errc::empty_array, "array has an empty row");

    ArrayStats st;
    st.floor = std::numeric_limits<long>::max();
    std::vector<long> all;
    for (const auto& row : D.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            st.floor = std::min(st.floor, row[j]);
            all.push_back(row[j]);
            if (j + 1 < row.size()) {
                long diff = row[j + 1] - row[j];
                if (!st.gap || diff < *st.gap) st.gap = diff;
            }
        }
    }
    if (all.size() >= 2) {
        std::sort(all.begin(), all.end());
        long best = std::numeric_limits<long>::max();
        for (size_t i = 1; i < all.size(); ++i)
            best = std::min(best, all[i] - all[i - 1]);
        st.pair_gap = best;
    }
    return st;
}

bool is_admissible(const ExponentArray& D, const Rat& L) {
    if (D.rows.empty()) return false;
    long mn = std::numeric_limits<long>::max();
    long mx = std::numeric_limits<long>::min();
    for (const auto& row : D.rows) {
        if (row.empty()) return false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) return false;
            if (j + 1 < row.size() && row[j] >= row[j + 1]) return false;
            mn = std::min(mn, row[j]);
            mx = std::max(mx, row[j]);
        }
    }
    return Rat(mx) <= L * Rat(mn);
}

Int gcd_pow(const Int& Q, uint32_t b, unsigned long m) {
    if (b < 2) fail(errc::domain_error, "base must be at least 2");
    if (sgn(Q) == 0) return pow_uint(b, m);
    Int R = 1;
    for (auto [p, e] : factor_base(b)) {
        unsigned long use = std::min(p_adic_valuation(Q, Int(p)), m * e);
        if (use > 0) R *= pow_uint(p, use);
    }
    return R;
}

GcdSample eval_floor_sum(std::vector<AlgebraicNumber>& alphas,
                         const CoefficientArray& C, const ExponentArray& D,
                         uint32_t b, Variant variant, const Rat& P) {
    check_shapes(alphas, C, D, variant);
    long floor_d = std::numeric_limits<long>::max();
    for (const auto& row : D.rows)
        for (long d : row) floor_d = std::min(floor_d, d);

    Int Q;
    if (variant == Variant::main4 || variant == Variant::main5) {
        std::vector<std::pair<size_t, Rat>> terms;
        for (size_t i = 0; i < D.rows.size(); ++i)
            for (size_t j = 0; j < D.rows[i].size(); ++j)
                terms.emplace_back(
                    i, C.rows[i][j] *
                           Rat(pow_uint(b, (unsigned long)D.rows[i][j])));
        Q = floor_linear_combination(alphas, terms, P);
    } else {
        // Per-term floors; fractional-part corrections of the P kind are
        // realized by the term-wise flooring itself, so P is not added here.
        Rat sum = 0;
        for (size_t i = 0; i < D.rows.size(); ++i) {
            AlgebraicNumber& a =
                variant == Variant::main6 ? alphas[0] : alphas[i];
            for (size_t j = 0; j < D.rows[i].size(); ++j)
                sum += C.rows[i][j] *
                       Rat(a.floor_scaled(b, (unsigned long)D.rows[i][j]));
        }
        Q = floor_rat(sum);
    }
    return make_sample(std::move(Q), b, (unsigned long)floor_d);
}

ArrayEnumerator grid_enumerator(const std::vector<size_t>& row_lengths,
                                const ScanConfig& cfg) {
    if (row_lengths.empty())
        fail(errc::empty_array, "enumerator needs a shape");
    size_t total = 0;
    for (size_t len : row_lengths) {
        if (len == 0) fail(errc::empty_array, "enumerator row length 0");
        total += len;
    }
    if (cfg.gap_min < 1) fail(errc::domain_error, "gap_min must be positive");
    if (cfg.floor_range.first < 1 ||
        cfg.floor_range.first > cfg.floor_range.second)
        fail(errc::range_error, "floor range is empty or nonpositive");

    struct State {
        std::vector<size_t> lengths;
        size_t total;
        ScanConfig cfg;
        long t;
        int gi = 0;
        size_t emitted = 0;
    };
    auto st = std::make_shared<State>();
    st->lengths = row_lengths;
    st->total = total;
    st->cfg = cfg;
    st->t = cfg.floor_range.first;

    return [st]() -> std::optional<ExponentArray> {
        if (st->emitted >= st->cfg.sample_budget) return std::nullopt;
        while (st->t <= st->cfg.floor_range.second) {
            const long t = st->t;
            const long g = st->cfg.gap_min * (1L << st->gi);
            if (++st->gi == 3) {
                st->gi = 0;
                ++st->t;
            }
            ExponentArray D;
            D.rows.resize(st->lengths.size());
            size_t row = 0;
            for (size_t q = 0; q < st->total; ++q) {
                while (D.rows[row].size() == st->lengths[row])
                    row = (row + 1) % st->lengths.size();
                D.rows[row].push_back(t + long(q) * g);
                row = (row + 1) % st->lengths.size();
            }
            if (!is_admissible(D, st->cfg.L)) continue;
            ++st->emitted;
            return D;
        }
        return std::nullopt;
    };
}

ScanReport scan(std::vector<AlgebraicNumber>& alphas,
                const CoefficientArray& C, uint32_t b, Variant variant,
                const ScanConfig& cfg, ArrayEnumerator enumerate) {
    if (!enumerate) {
        std::vector<size_t> shape;
        for (const auto& row : C.rows) shape.push_back(row.size());
        enumerate = grid_enumerator(shape, cfg);
    }
    ScanReport rep;
    for (size_t index = 0;; ++index) {
        std::optional<ExponentArray> D = enumerate();
        if (!D) break;
        Rat P = cfg.perturbation.empty()
                    ? Rat(0)
                    : cfg.perturbation[index % cfg.perturbation.size()];
        ScanRow row;
        row.index = index;
        row.sample = eval_floor_sum(alphas, C, *D, b, variant, P);
        row.D = std::move(*D);
        row.violation = row.sample.ratio >= cfg.epsilon;
        rep.max_ratio = std::max(rep.max_ratio, row.sample.ratio);
        if (row.violation) ++rep.violation_count;
        rep.rows.push_back(std::move(row));
        if (rep.rows.size() >= cfg.sample_budget) break;
    }
    return rep;
}

GcdSample poly_floor_gcd(std::vector<AlgebraicNumber>& coeffs, uint32_t b,
                         unsigned long n) {
    if (coeffs.size() < 2)
        fail(errc::domain_error, "polynomial degree must be at least 1");
    if (n < 1) fail(errc::domain_error, "n must be at least 1");
    std::vector<std::pair<size_t, Rat>> terms;
    for (size_t i = 0; i < coeffs.size(); ++i)
        terms.emplace_back(i, Rat(pow_uint(b, (unsigned long)i * n)));
    Int Q = floor_linear_combination(coeffs, terms, Rat(0));
    return make_sample(std::move(Q), b, n);
}

PolyPairSample poly_pair_gcd(std::vector<AlgebraicNumber>& f_coeffs,
                             std::vector<AlgebraicNumber>& g_coeffs,
                             uint32_t b, unsigned long n) {
    if (f_coeffs.empty() || g_coeffs.empty())
        fail(errc::domain_error, "polynomials need coefficients");
    if (n < 1) fail(errc::domain_error, "n must be at least 1");
    auto eval = [&](std::vector<AlgebraicNumber>& cs) {
        std::vector<std::pair<size_t, Rat>> terms;
        for (size_t i = 0; i < cs.size(); ++i)
            terms.emplace_back(i, Rat(pow_uint(b, (unsigned long)i * n)));
        return floor_linear_combination(cs, terms, Rat(0));
    };
    PolyPairSample s;
    s.n = long(n);
    s.q_f = eval(f_coeffs);
    s.q_g = eval(g_coeffs);
    mpz_gcd(s.gcd.get_mpz_t(), s.q_f.get_mpz_t(), s.q_g.get_mpz_t());
    if (s.gcd <= 1) {
        s.ratio = 0.0;
    } else {
        signed long exp2;
        double mant = mpz_get_d_2exp(&exp2, s.gcd.get_mpz_t());
        double log2_g = double(exp2) + std::log2(mant);
        s.ratio = log2_g / (double(n) * std::log2(double(b)));
    }
    return s;
}

GcdSample nonlinear_experiment(NonlinearKind kind, AlgebraicNumber alpha,
                               AlgebraicNumber beta, unsigned long k,
                               unsigned long m, uint32_t b) {
    if (m < 1) fail(errc::domain_error, "m must be at least 1");
    Int Q;
    switch (kind) {
    case NonlinearKind::product:
        Q = alpha.floor_scaled(b, k + m) * beta.floor_scaled(b, m) + 1;
        break;
    case NonlinearKind::square_plus: {
        Int x = alpha.floor_scaled(b, k + m);
        Q = x * x + beta.floor_scaled(b, m);
        break;
    }
    case NonlinearKind::nested: {
        Int x = alpha.floor_scaled(b, m);
        Q = beta.floor_times(x * x);
        break;
    }
    }
    return make_sample(std::move(Q), b, m);
}

} // namespace digitforge
