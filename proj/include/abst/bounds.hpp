#ifndef ABST_BOUNDS_HPP
#define ABST_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "abst/errors.hpp"

namespace abst {

// Sentinel for a probability that is exactly zero (log of 0). Ordered below
// every real log value.
inline constexpr double kCertainZero = -std::numeric_limits<double>::infinity();

// p(n) = C(n-1, ⌊(n-1)/2⌋), exact via the Pascal recurrence. Guarded to
// n <= 64 so every intermediate binomial fits a 64-bit unsigned.
inline std::uint64_t family_size(int n) {
    if (n < 1) throw BuildError("colour count must be >= 1");
    if (n > 64) throw GuardError("family_size is limited to n <= 64");
    const int rows = n - 1;
    const int k = rows / 2;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int r = 1; r <= rows; ++r)
        for (int c = std::min(r, k); c >= 1; --c) row[c] += row[c - 1];
    return row[k];
}

// ln C(a, b) as a sum of ln terms (no log-gamma), for reproducible reports.
inline double log_binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return kCertainZero;
    if (b > a - b) b = a - b;
    double sum = 0.0;
    for (std::uint64_t i = 1; i <= b; ++i)
        sum += std::log(static_cast<double>(a - b + i)) -
               std::log(static_cast<double>(i));
    return sum;
}

// ln of the union bound C(mp, p-1) * (1 - 2^-(p-1))^m. For p = 1 the second
// factor is 0^m, so the probability is certainly zero.
inline double union_bound_log(std::uint64_t p, std::uint64_t m) {
    if (p < 1 || m < 1) throw BuildError("bounds need p >= 1 and m >= 1");
    if (p == 1) return kCertainZero;
    const double per_vertex = std::log1p(-std::exp2(-static_cast<double>(p - 1)));
    return log_binomial(m * p, p - 1) + static_cast<double>(m) * per_vertex;
}

// ln of the relaxed bound (e*m*p/(p-1))^(p-1) * e^(-m*2^-(p-1)); the p = 1
// power term is an empty product, leaving -m.
inline double relaxed_bound_log(std::uint64_t p, std::uint64_t m) {
    if (p < 1 || m < 1) throw BuildError("bounds need p >= 1 and m >= 1");
    if (p == 1) return -static_cast<double>(m);
    const double k = static_cast<double>(p - 1);
    return k * (1.0 + std::log(static_cast<double>(m) * static_cast<double>(p) / k)) -
           static_cast<double>(m) * std::exp2(-k);
}

enum class BoundKind { Union, Relaxed };

// Least m >= 1 with the selected bound's log < 0. Both bounds start
// non-negative (for p >= 2), rise at most once and then fall to -infinity,
// so doubling to a negative value followed by bisection finds the unique
// downward crossing.
inline std::uint64_t minimal_m(std::uint64_t p, BoundKind kind) {
    auto eval = [&](std::uint64_t m) {
        return kind == BoundKind::Union ? union_bound_log(p, m)
                                        : relaxed_bound_log(p, m);
    };
    if (eval(1) < 0.0) return 1;
    std::uint64_t hi = 1;
    while (eval(hi) >= 0.0) {
        if (hi > (std::uint64_t(1) << 50))
            throw GuardError("minimal m exceeds the scan limit for p = " +
                             std::to_string(p));
        hi *= 2;
    }
    std::uint64_t lo = hi / 2;  // eval(lo) >= 0 > eval(hi)
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (eval(mid) < 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// p(n) * sqrt(n) / 2^n, in log space; stays near 0.4 for moderate n, which
// is the testable form of the "order 2^n / sqrt(n)" growth of the bound.
inline double stirling_ratio(int n) {
    if (n < 2) throw BuildError("stirling_ratio needs n >= 2");
    const double log_p = std::log(static_cast<double>(family_size(n)));
    return std::exp(log_p + 0.5 * std::log(static_cast<double>(n)) -
                    static_cast<double>(n) * std::log(2.0));
}

struct BoundReport {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    double log_union_bound = 0.0;
    double log_relaxed_bound = 0.0;
    bool certifies_existence = false;  // union bound log < 0
};

inline BoundReport make_bound_report(std::uint64_t p, std::uint64_t m) {
    BoundReport report;
    report.p = p;
    report.m = m;
    report.log_union_bound = union_bound_log(p, m);
    report.log_relaxed_bound = relaxed_bound_log(p, m);
    report.certifies_existence = report.log_union_bound < 0.0;
    return report;
}

} // namespace abst

#endif
