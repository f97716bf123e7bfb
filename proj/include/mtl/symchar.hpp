#pragma once

// Character degrees of the symmetric group S_n: partitions, hook lengths,
// involution and partition counts, and the moment bounds built on them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtl/bigint.hpp"
#include "mtl/parallel.hpp"

namespace mtl::symchar {

inline constexpr int kMaxTableOrder = 60;

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all positive
    int n = 0;

    [[nodiscard]] bool valid() const {
        int sum = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
            sum += parts[i];
        }
        return sum == n;
    }

    /// Dash-separated parts, e.g. "3-1-1". Empty for n = 0.
    [[nodiscard]] std::string label() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) s += '-';
            s += std::to_string(parts[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

[[nodiscard]] inline Partition make_partition(std::vector<int> parts) {
    Partition p{std::move(parts), 0};
    for (int x : p.parts) p.n += x;
    if (!p.valid()) throw std::invalid_argument("parts must be positive and weakly decreasing");
    return p;
}

[[nodiscard]] inline Partition conjugate(const Partition& p) {
    Partition c;
    c.n = p.n;
    if (p.parts.empty()) return c;
    c.parts.assign(static_cast<std::size_t>(p.parts.front()), 0);
    for (int row : p.parts)
        for (int j = 0; j < row; ++j) ++c.parts[static_cast<std::size_t>(j)];
    return c;
}

namespace detail {

inline void check_order(int n, int limit) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > limit) throw std::invalid_argument("n exceeds the limit of " + std::to_string(limit));
}

}  // namespace detail

/// Visits every partition of n once, in reverse lexicographic order, starting
/// from (n). n = 0 yields the single empty partition.
template <class Fn>
void for_each_partition(int n, Fn&& fn) {
    detail::check_order(n, kMaxTableOrder);
    Partition p;
    p.n = n;
    if (n > 0) p.parts.push_back(n);
    fn(static_cast<const Partition&>(p));
    for (;;) {
        int ones = 0;
        while (!p.parts.empty() && p.parts.back() == 1) {
            p.parts.pop_back();
            ++ones;
        }
        if (p.parts.empty()) return;
        const int x = --p.parts.back();
        int rest = ones + 1;
        while (rest > x) {
            p.parts.push_back(x);
            rest -= x;
        }
        if (rest > 0) p.parts.push_back(rest);
        fn(static_cast<const Partition&>(p));
    }
}

[[nodiscard]] inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// p(0..n) from Euler's pentagonal-number recurrence.
[[nodiscard]] inline std::vector<BigInt> partition_counts(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

[[nodiscard]] inline BigInt p_exact(int n) { return partition_counts(n).back(); }

/// e^{π√(2n/3)} / (4n√3).
[[nodiscard]] inline LogReal p_asym(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double dn = n;
    return LogReal::from_log(std::numbers::pi * std::sqrt(2.0 * dn / 3.0) - std::log(4.0 * dn * std::sqrt(3.0)));
}

/// χ_λ(1) = n! / ∏ hook lengths.
[[nodiscard]] inline BigInt degree(const Partition& p) {
    if (!p.valid()) throw std::invalid_argument("invalid partition");
    const Partition c = conjugate(p);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (int j = 0; j < p.parts[i]; ++j) {
            const int arm = p.parts[i] - j - 1;
            const int leg = c.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    const BigInt f = factorial(static_cast<unsigned>(p.n));
    if (f % hooks != 0) throw std::logic_error("hook product does not divide n!");
    return f / hooks;
}

/// t(0..n): t(m) = t(m−1) + (m−1) t(m−2).
[[nodiscard]] inline std::vector<BigInt> involution_counts(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<BigInt> t(static_cast<std::size_t>(std::max(n, 1)) + 1);
    t[0] = 1;
    t[1] = 1;
    for (int m = 2; m <= n; ++m)
        t[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(m - 1)] + (m - 1) * t[static_cast<std::size_t>(m - 2)];
    t.resize(static_cast<std::size_t>(n) + 1);
    return t;
}

[[nodiscard]] inline BigInt involutions(int n) { return involution_counts(n).back(); }

/// e^{√n − ¼} / (2√(πn)) · √(n!).
[[nodiscard]] inline LogReal involutions_asym(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double dn = n;
    return LogReal::from_log(std::sqrt(dn) - 0.25 - std::log(2.0 * std::sqrt(std::numbers::pi * dn)) +
                             0.5 * log_factorial(static_cast<unsigned>(n)));
}

struct DegreeRow {
    Partition partition;
    BigInt degree;
};

struct DegreeTable {
    int n = 0;
    std::vector<DegreeRow> rows;
    BigInt sum_degrees;
    BigInt sum_degree_squares;

    [[nodiscard]] const DegreeRow& max_row() const {
        return *std::max_element(rows.begin(), rows.end(),
                                 [](const DegreeRow& a, const DegreeRow& b) { return a.degree < b.degree; });
    }
};

[[nodiscard]] inline DegreeTable degree_table(int n, std::size_t threads = 0) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    detail::check_order(n, kMaxTableOrder);
    DegreeTable table;
    table.n = n;
    for_each_partition(n, [&](const Partition& p) { table.rows.push_back({p, BigInt(0)}); });

    constexpr std::size_t kChunk = 256;
    parallel::for_each_chunk(parallel::chunk_count(table.rows.size(), kChunk), threads, [&](std::size_t c) {
        const std::size_t hi = std::min(table.rows.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < hi; ++i) table.rows[i].degree = degree(table.rows[i].partition);
    });
    for (const auto& row : table.rows) {
        table.sum_degrees += row.degree;
        table.sum_degree_squares += row.degree * row.degree;
    }
    return table;
}

/// Moments of ξ = χ(1)/√(n!) with χ uniform over the p(n) irreducible
/// characters, next to their asymptotic forms.
struct XiMoments {
    int n = 0;
    double e_xi = 0.0;   // t(n) / (p(n) √(n!))
    double e_xi2 = 0.0;  // 1 / p(n)
    BigInt e_xi2_denominator;  // p(n); e_xi2 is exactly its reciprocal
    LogReal e_xi_asym;
    LogReal e_xi2_asym;
};

[[nodiscard]] inline XiMoments xi_moments(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double dn = n;
    const BigInt p = p_exact(n);
    const BigInt t = involutions(n);
    const double log_p = log_abs(p);
    const double log_fact = log_factorial(static_cast<unsigned>(n));

    XiMoments m;
    m.n = n;
    m.e_xi = std::exp(log_abs(t) - log_p - 0.5 * log_fact);
    m.e_xi2 = std::exp(-log_p);
    m.e_xi2_denominator = p;
    const double c = 1.0 - std::numbers::pi * std::sqrt(2.0 / 3.0);
    m.e_xi_asym = LogReal::from_log(std::log(2.0 * std::sqrt(3.0 * dn)) - 0.25 - 0.5 * std::log(std::numbers::pi) +
                                    c * std::sqrt(dn));
    m.e_xi2_asym = LogReal::from_log(std::log(4.0 * dn * std::sqrt(3.0)) - std::numbers::pi * std::sqrt(2.0 * dn / 3.0));
    return m;
}

/// max χ(1) >= n!/t(n), kept as an exact rational.
struct DegreeBound {
    BigInt numerator;    // n!
    BigInt denominator;  // t(n)
    double log_value = 0.0;
    double value = 0.0;

    /// Exact test degree >= numerator/denominator.
    [[nodiscard]] bool satisfied_by(const BigInt& degree) const { return degree * denominator >= numerator; }
};

[[nodiscard]] inline DegreeBound theorem_degree_bound(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    DegreeBound b;
    b.numerator = factorial(static_cast<unsigned>(n));
    b.denominator = involutions(n);
    b.log_value = log_abs(b.numerator) - log_abs(b.denominator);
    b.value = std::exp(b.log_value);
    return b;
}

/// (1 − ε) e^{1/4} √(πn) e^{−√n} √(n!). ε = 1 gives exactly 0.
[[nodiscard]] inline LogReal corollary3_bound(int n, double eps) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
    const double dn = n;
    return LogReal::from_log(std::log1p(-eps) + 0.25 + 0.5 * std::log(std::numbers::pi * dn) - std::sqrt(dn) +
                             0.5 * log_factorial(static_cast<unsigned>(n)));
}

/// √(n!)·Eξ²/Eξ from the asymptotic forms: 2 e^{1/4} √(πn) e^{−√n} √(n!).
[[nodiscard]] inline LogReal asymptotic_moment_bound(int n) {
    const XiMoments m = xi_moments(n);
    return LogReal::from_log(0.5 * log_factorial(static_cast<unsigned>(n)) + m.e_xi2_asym.log - m.e_xi_asym.log);
}

}  // namespace mtl::symchar
