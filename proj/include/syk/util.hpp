#pragma once
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace syk {

// Exact binomial coefficient. Intermediate products stay integral at every
// step, so the result is exact as long as it fits in 64 bits.
inline std::uint64_t binomial_u64(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

inline double binomial(int n, int k) { return static_cast<double>(binomial_u64(n, k)); }

// First k-combination of {1,...,n} in lexicographic order.
inline std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    return c;
}

// Advance a sorted k-subset of {1,...,n} to its lexicographic successor.
// Returns false when the input is the last combination.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Pairwise (cascade) summation. The reduction tree depends only on the
// length, so totals are bit-identical no matter how the values were produced.
inline double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v.data(), v.size()));
}

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// Wilson score interval for a binomial proportion.
inline WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be positive");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    WilsonInterval w;
    w.low = (center - half) / denom;
    w.high = (center + half) / denom;
    if (w.low < 0.0) w.low = 0.0;
    if (w.high > 1.0) w.high = 1.0;
    return w;
}

// Project-wide defaults. The seed is a fixed constant so every run is
// reproducible unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr double kWilsonZ = 3.0;

}  // namespace syk
