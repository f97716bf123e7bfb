#pragma once

// Determinants of random skew-symmetric ±1 matrices: exact integer
// determinants and Pfaffians, exhaustive and Monte Carlo moment statistics,
// the asymptotic means, and a local search for large determinants.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtl/bigint.hpp"
#include "mtl/parallel.hpp"

namespace mtl::skewdet {

enum class DiagonalConvention {
    zero,  // strict skew-symmetry, a_ii = 0
    unit,  // skew-type, A + Aᵀ = 2I
};

[[nodiscard]] inline const char* to_string(DiagonalConvention c) noexcept {
    return c == DiagonalConvention::zero ? "zero" : "unit";
}

/// Raised when the ensemble mean |det| is zero (odd n, zero diagonal).
class DegenerateEnsemble : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// n×n matrix with a_ij = −a_ji = ±1 above the diagonal. Only the upper
/// triangle is stored, row-major, `true` meaning +1.
class SkewSignMatrix {
public:
    SkewSignMatrix(std::size_t n, std::vector<bool> upper_positive, DiagonalConvention convention)
        : n_(n), upper_(std::move(upper_positive)), convention_(convention) {
        if (n == 0) throw std::invalid_argument("matrix order must be positive");
        if (upper_.size() != pair_count(n)) throw std::invalid_argument("upper triangle has the wrong length");
    }

    [[nodiscard]] static constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

    /// Bit k of `negative_mask` set means upper entry k is −1.
    [[nodiscard]] static SkewSignMatrix from_mask(std::size_t n, std::uint64_t negative_mask,
                                                  DiagonalConvention convention) {
        if (pair_count(n) > 64) throw std::invalid_argument("mask form supports n <= 11");
        std::vector<bool> upper(pair_count(n));
        for (std::size_t k = 0; k < upper.size(); ++k) upper[k] = ((negative_mask >> k) & 1U) == 0;
        return {n, std::move(upper), convention};
    }

    template <class URBG>
    [[nodiscard]] static SkewSignMatrix random(std::size_t n, URBG& rng, DiagonalConvention convention) {
        std::vector<bool> upper(pair_count(n));
        std::uint64_t word = 0;
        for (std::size_t k = 0; k < upper.size(); ++k) {
            if (k % 64 == 0) word = rng();
            upper[k] = ((word >> (k % 64)) & 1U) != 0;
        }
        return {n, std::move(upper), convention};
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] DiagonalConvention convention() const noexcept { return convention_; }
    [[nodiscard]] const std::vector<bool>& upper() const noexcept { return upper_; }

    [[nodiscard]] std::size_t upper_index(std::size_t i, std::size_t j) const noexcept {
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    [[nodiscard]] int entry(std::size_t i, std::size_t j) const noexcept {
        if (i == j) return convention_ == DiagonalConvention::unit ? 1 : 0;
        if (i < j) return upper_[upper_index(i, j)] ? 1 : -1;
        return upper_[upper_index(j, i)] ? -1 : 1;
    }

    /// Copy with upper entry k negated (and its mirror).
    [[nodiscard]] SkewSignMatrix flipped(std::size_t k) const {
        SkewSignMatrix out = *this;
        out.upper_[k] = !out.upper_[k];
        return out;
    }

    /// B with b_ij = a_{perm[i], perm[j]}.
    [[nodiscard]] SkewSignMatrix permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != n_) throw std::invalid_argument("permutation has the wrong length");
        std::vector<bool> upper(upper_.size());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) upper[upper_index(i, j)] = entry(perm[i], perm[j]) > 0;
        return {n_, std::move(upper), convention_};
    }

    template <class Int>
    [[nodiscard]] std::vector<Int> dense() const {
        std::vector<Int> a(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] = Int(entry(i, j));
        return a;
    }

    friend bool operator==(const SkewSignMatrix&, const SkewSignMatrix&) = default;

private:
    std::size_t n_;
    std::vector<bool> upper_;
    DiagonalConvention convention_;
};

/// Fraction-free (Bareiss) determinant of a row-major n×n integer matrix.
/// `Wide` must hold products of two minors.
template <class Int, class Wide = Int>
[[nodiscard]] Int bareiss_determinant(std::vector<Int> a, std::size_t n) {
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return Int(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
            sign = -sign;
        }
        const Int pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Wide num = Wide(a[i * n + j]) * Wide(pivot) - Wide(a[i * n + k]) * Wide(a[k * n + j]);
                a[i * n + j] = static_cast<Int>(num / Wide(prev));
            }
        }
        prev = pivot;
    }
    return sign * a[n * n - 1];
}

namespace detail {

// Minors of an n×n ±1 matrix are bounded by n^{n/2}; up to n = 20 they fit in
// int64 with products in __int128.
inline constexpr std::size_t kMachineIntegerLimit = 20;

inline std::int64_t det_small(const SkewSignMatrix& m) {
    return bareiss_determinant<std::int64_t, __int128>(m.dense<std::int64_t>(), m.n());
}

}  // namespace detail

/// Exact determinant.
[[nodiscard]] inline BigInt det_exact(const SkewSignMatrix& m) {
    if (m.n() <= detail::kMachineIntegerLimit) return BigInt(detail::det_small(m));
    return bareiss_determinant<BigInt>(m.dense<BigInt>(), m.n());
}

/// Pfaffian by expansion along the first remaining row, memoized over the
/// subset of rows left. Requires zero diagonal, even n <= 20.
[[nodiscard]] inline BigInt pfaffian(const SkewSignMatrix& m) {
    const std::size_t n = m.n();
    if (m.convention() != DiagonalConvention::zero) throw std::invalid_argument("Pfaffian needs a zero diagonal");
    if (n % 2 != 0) throw std::invalid_argument("Pfaffian needs even order");
    if (n > 20) throw std::invalid_argument("Pfaffian supports n <= 20");

    const std::uint32_t full = (1U << n) - 1U;
    std::vector<std::int64_t> memo(std::size_t{1} << n, 0);
    std::vector<bool> known(std::size_t{1} << n, false);
    memo[0] = 1;
    known[0] = true;

    auto solve = [&](auto&& self, std::uint32_t set) -> std::int64_t {
        if (known[set]) return memo[set];
        const auto first = static_cast<std::size_t>(__builtin_ctz(set));
        const std::uint32_t rest = set & ~(1U << first);
        std::int64_t total = 0;
        int position = 1;
        for (std::uint32_t r = rest; r != 0; r &= r - 1, ++position) {
            const auto j = static_cast<std::size_t>(__builtin_ctz(r));
            const std::int64_t sub = self(self, rest & ~(1U << j));
            const std::int64_t term = m.entry(first, j) * sub;
            total += (position % 2 == 1) ? term : -term;
        }
        memo[set] = total;
        known[set] = true;
        return total;
    };
    return BigInt(solve(solve, full));
}

enum class StatsMode { exact, monte_carlo };

[[nodiscard]] inline const char* to_string(StatsMode m) noexcept {
    return m == StatsMode::exact ? "exact" : "monte-carlo";
}

/// Moment statistics of |det| over an ensemble (all matrices, or a sample).
struct DetStats {
    std::size_t n = 0;
    StatsMode mode = StatsMode::exact;
    DiagonalConvention convention = DiagonalConvention::zero;
    std::uint64_t count = 0;
    double s1 = 0.0;  // E|det|
    double s2 = 0.0;  // (E det²)^{1/2}
    BigInt sum_abs_det;
    BigInt sum_det2;
    BigInt sum_det4;
    BigInt max_abs_det;
    double stderr_s1 = 0.0;
    double stderr_s2 = 0.0;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline double ratio(const BigInt& num, const BigInt& den) {
    return std::exp(log_abs(num) - log_abs(den));
}

struct Accumulator {
    std::uint64_t count = 0;
    BigInt sum_abs;
    BigInt sum_sq;
    BigInt sum_quad;
    BigInt max_abs;

    void add(const BigInt& det, std::uint64_t multiplicity = 1) {
        const BigInt a = boost::multiprecision::abs(det);
        const BigInt sq = a * a;
        count += multiplicity;
        sum_abs += a * multiplicity;
        sum_sq += sq * multiplicity;
        sum_quad += sq * sq * multiplicity;
        if (a > max_abs) max_abs = a;
    }

    void merge(const Accumulator& o) {
        count += o.count;
        sum_abs += o.sum_abs;
        sum_sq += o.sum_sq;
        sum_quad += o.sum_quad;
        if (o.max_abs > max_abs) max_abs = o.max_abs;
    }
};

inline DetStats finish(std::size_t n, StatsMode mode, DiagonalConvention conv, const Accumulator& acc) {
    DetStats s;
    s.n = n;
    s.mode = mode;
    s.convention = conv;
    s.count = acc.count;
    s.sum_abs_det = acc.sum_abs;
    s.sum_det2 = acc.sum_sq;
    s.sum_det4 = acc.sum_quad;
    s.max_abs_det = acc.max_abs;
    const BigInt count(acc.count);
    s.s1 = acc.sum_abs == 0 ? 0.0 : ratio(acc.sum_abs, count);
    s.s2 = acc.sum_sq == 0 ? 0.0 : std::sqrt(ratio(acc.sum_sq, count));
    if (mode == StatsMode::monte_carlo && acc.count > 1) {
        const double nn = static_cast<double>(acc.count);
        // Sample variances from exact integer sums: (N Σx² − (Σx)²) / (N (N−1)).
        const BigInt v1 = count * acc.sum_sq - acc.sum_abs * acc.sum_abs;
        const BigInt v2 = count * acc.sum_quad - acc.sum_sq * acc.sum_sq;
        const double var1 = v1 == 0 ? 0.0 : std::exp(log_abs(v1) - std::log(nn) - std::log(nn - 1.0));
        const double var2 = v2 == 0 ? 0.0 : std::exp(log_abs(v2) - std::log(nn) - std::log(nn - 1.0));
        s.stderr_s1 = std::sqrt(var1 / nn);
        // Delta method for the square root of the mean of det².
        s.stderr_s2 = s.s2 > 0.0 ? std::sqrt(var2 / nn) / (2.0 * s.s2) : 0.0;
    }
    return s;
}

/// Every sign assignment, one by one.
inline Accumulator enumerate_full(std::size_t n, DiagonalConvention conv, std::size_t threads) {
    const std::size_t pairs = SkewSignMatrix::pair_count(n);
    const std::uint64_t total = std::uint64_t{1} << pairs;
    constexpr std::uint64_t kChunk = 4096;
    const auto chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<Accumulator> parts(chunks);
    parallel::for_each_chunk(chunks, threads, [&](std::size_t c) {
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(total, lo + kChunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            parts[c].add(BigInt(det_small(SkewSignMatrix::from_mask(n, mask, conv))));
    });
    Accumulator acc;
    for (const auto& p : parts) acc.merge(p);
    return acc;
}

/// Conjugation by D = diag(1, ±1, …, ±1) preserves skew structure, the
/// diagonal and det, and acts freely; each orbit has exactly one member whose
/// first row is all +1. Enumerating those with multiplicity 2^{n−1} covers
/// every matrix once.
inline Accumulator enumerate_sign_orbits(std::size_t n, DiagonalConvention conv, std::size_t threads) {
    if (n < 2) return enumerate_full(n, conv, threads);
    const std::size_t pairs = SkewSignMatrix::pair_count(n);
    const std::size_t free_pairs = pairs - (n - 1);  // the first row occupies upper indices 0..n−2
    const std::uint64_t total = std::uint64_t{1} << free_pairs;
    const std::uint64_t multiplicity = std::uint64_t{1} << (n - 1);
    constexpr std::uint64_t kChunk = 4096;
    const auto chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<Accumulator> parts(chunks);
    parallel::for_each_chunk(chunks, threads, [&](std::size_t c) {
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(total, lo + kChunk);
        for (std::uint64_t rest = lo; rest < hi; ++rest) {
            const auto m = SkewSignMatrix::from_mask(n, rest << (n - 1), conv);
            parts[c].add(BigInt(det_small(m)), multiplicity);
        }
    });
    Accumulator acc;
    for (const auto& p : parts) acc.merge(p);
    return acc;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Exact statistics over all 2^{n(n−1)/2} sign assignments, n <= 8.
[[nodiscard]] inline DetStats enumerate_stats(std::size_t n, DiagonalConvention conv = DiagonalConvention::zero,
                                              std::size_t threads = 0) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n > kMaxEnumerationOrder)
        throw std::invalid_argument("enumeration is limited to n <= 8 (2^{n(n-1)/2} matrices); use mc_stats for larger n");
    const auto acc = n <= 6 ? detail::enumerate_full(n, conv, threads) : detail::enumerate_sign_orbits(n, conv, threads);
    return detail::finish(n, StatsMode::exact, conv, acc);
}

inline constexpr std::size_t kMinSamples = 100;
inline constexpr std::uint64_t kDefaultSamples = 100000;

/// Monte Carlo statistics from iid uniform sign draws. Samples are drawn in
/// fixed chunks of 4096, each from its own generator seeded by (seed, chunk),
/// so the result does not depend on the number of workers.
[[nodiscard]] inline DetStats mc_stats(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                       DiagonalConvention conv = DiagonalConvention::zero, std::size_t threads = 0) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (samples < kMinSamples) throw std::invalid_argument("samples must be >= 100");
    constexpr std::uint64_t kChunk = 4096;
    const auto chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<detail::Accumulator> parts(chunks);
    parallel::for_each_chunk(chunks, threads, [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(std::uint64_t{c} >> 32)};
        std::mt19937_64 rng(seq);
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(samples, lo + kChunk);
        for (std::uint64_t i = lo; i < hi; ++i) parts[c].add(det_exact(SkewSignMatrix::random(n, rng, conv)));
    });
    detail::Accumulator acc;
    for (const auto& p : parts) acc.merge(p);
    DetStats s = detail::finish(n, StatsMode::monte_carlo, conv, acc);
    s.seed = seed;
    return s;
}

/// s1(n) ~ (8πen)^{−1/4} e^{√n} √(n!).
[[nodiscard]] inline LogReal szekeres_s1_asym(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2");
    const double dn = static_cast<double>(n);
    return LogReal::from_log(-0.25 * std::log(8.0 * std::numbers::pi * std::numbers::e * dn) + std::sqrt(dn) +
                             0.5 * log_factorial(static_cast<unsigned>(n)));
}

/// s2(n) ~ (32πe³)^{−1/2} e^{2√n} √(n!).
[[nodiscard]] inline LogReal szekeres_s2_asym(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2");
    const double dn = static_cast<double>(n);
    const double e3 = std::numbers::e * std::numbers::e * std::numbers::e;
    return LogReal::from_log(-0.5 * std::log(32.0 * std::numbers::pi * e3) + 2.0 * std::sqrt(dn) +
                             0.5 * log_factorial(static_cast<unsigned>(n)));
}

/// (n/(64πe⁵))^{1/4} e^{√n} √(n!).
[[nodiscard]] inline LogReal corollary2_bound(std::size_t n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const double dn = static_cast<double>(n);
    return LogReal::from_log(0.25 * (std::log(dn) - std::log(64.0 * std::numbers::pi) - 5.0) + std::sqrt(dn) +
                             0.5 * log_factorial(static_cast<unsigned>(n)));
}

struct DetBoundCheck {
    double bound = 0.0;          // s2² / s1
    bool existence_holds = false;  // max |det| >= bound, compared exactly
};

/// Existence bound max |det| >= E det² / E|det| on the (finite) ensemble the
/// statistics were taken over. The comparison max·Σ|det| >= Σdet² is exact.
[[nodiscard]] inline DetBoundCheck theorem_det_bound(const DetStats& stats) {
    if (stats.sum_abs_det == 0 || !(stats.s1 > 0.0))
        throw DegenerateEnsemble("mean |det| is zero; the ensemble is degenerate (odd n with zero diagonal)");
    DetBoundCheck out;
    out.bound = detail::ratio(stats.sum_det2, stats.sum_abs_det);
    out.existence_holds = stats.max_abs_det * stats.sum_abs_det >= stats.sum_det2 ||
                          stats.max_abs_det.convert_to<double>() >= out.bound * (1.0 - 1e-6);
    return out;
}

struct SearchResult {
    SkewSignMatrix best;
    BigInt best_abs_det;
    std::uint64_t evaluations = 0;
    std::uint64_t restarts = 0;
    double log_abs_det = 0.0;
    std::optional<double> ratio_to_corollary2;
    std::optional<double> ratio_to_szekeres_s1;
};

/// Random-restart best-improvement hill climbing over single sign flips.
/// `budget` counts determinant evaluations; the best matrix is tracked over
/// every evaluation, so for a fixed seed the result can only improve as the
/// budget grows.
[[nodiscard]] inline SearchResult search_high_det(std::size_t n, std::uint64_t budget, std::uint64_t seed,
                                                  DiagonalConvention conv = DiagonalConvention::zero) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");

    std::mt19937_64 rng(seed);
    std::uint64_t used = 0;
    std::uint64_t restarts = 0;
    std::optional<SkewSignMatrix> best;
    BigInt best_abs = -1;

    auto evaluate = [&](const SkewSignMatrix& m) {
        ++used;
        BigInt a = boost::multiprecision::abs(det_exact(m));
        if (a > best_abs) {
            best_abs = a;
            best = m;
        }
        return a;
    };

    const std::size_t pairs = SkewSignMatrix::pair_count(n);
    while (used < budget) {
        ++restarts;
        SkewSignMatrix current = SkewSignMatrix::random(n, rng, conv);
        BigInt current_abs = evaluate(current);
        if (pairs == 0) break;
        while (used < budget) {
            std::optional<std::size_t> best_flip;
            BigInt best_flip_abs = current_abs;
            for (std::size_t k = 0; k < pairs && used < budget; ++k) {
                const BigInt a = evaluate(current.flipped(k));
                if (a > best_flip_abs) {
                    best_flip_abs = a;
                    best_flip = k;
                }
            }
            if (!best_flip) break;
            current = current.flipped(*best_flip);
            current_abs = best_flip_abs;
        }
    }

    SearchResult r{*best, best_abs, used, restarts, log_abs(best_abs), std::nullopt, std::nullopt};
    if (best_abs > 0) {
        if (n >= 2) r.ratio_to_corollary2 = std::exp(r.log_abs_det - corollary2_bound(n).log);
        if (n >= 2 && n % 2 == 0) r.ratio_to_szekeres_s1 = std::exp(r.log_abs_det - szekeres_s1_asym(n).log);
    }
    return r;
}

}  // namespace mtl::skewdet
