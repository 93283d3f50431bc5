#include "syk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syk/hamiltonian.hpp"
#include "syk/parallel.hpp"
#include "syk/rng.hpp"
#include "syk/spectrum.hpp"
#include "syk/util.hpp"

namespace syk {

namespace {

// Mean and 3-sigma normal CI from per-trial values, reduced in index order
// so the result does not depend on how trials were scheduled.
struct MeanCI {
    double mean = 0.0;
    double low = 0.0;
    double high = 0.0;
    double variance = 0.0;
};

MeanCI mean_ci(const std::vector<double>& vals) {
    const double n = static_cast<double>(vals.size());
    const double mean = pairwise_sum(vals) / n;
    std::vector<double> sq(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double d = vals[i] - mean;
        sq[i] = d * d;
    }
    const double var = vals.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
    const double half = 3.0 * std::sqrt(var / n);
    return {mean, mean - half, mean + half, var};
}

}  // namespace

double selberg_log_normalization(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("selberg_log_normalization: n must be even and >= 2");
    double v = 0.25 * n * std::log(3.14159265358979323846 / 2.0);
    for (int j = 0; j < n / 2; ++j) v += std::lgamma(2.0 * j + 1.0);
    return v;
}

double mgf_log_upper_bound(int n, int k, double a, double b) {
    if (!(a < 0.5) || !(b < 0.5))
        throw std::invalid_argument("mgf_log_upper_bound: need a, b < 1/2");
    if (k < 0 || k > n / 2) throw std::invalid_argument("mgf_log_upper_bound: need 0 <= k <= n/2");
    const double half_n = 0.5 * n;
    return n * k * std::log(2.0) - k * (n - k - 0.5) * std::log1p(-2.0 * a) -
           (half_n - k) * (0.5 * (n - 1.0) - k) * std::log1p(-2.0 * b);
}

double mgf_upper_bound(int n, int k, double a, double b) {
    return std::exp(mgf_log_upper_bound(n, k, a, b));
}

BoundReport estimate_mgf(int n, int k, double a, double b, std::uint64_t trials,
                         std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("estimate_mgf: trials must be positive");
    if (!(a < 0.5) || !(b < 0.5))
        throw std::invalid_argument("estimate_mgf: moment generating function diverges");
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("estimate_mgf: n must be even");
    if (k < 0 || k > n / 2) throw std::invalid_argument("estimate_mgf: need 0 <= k <= n/2");

    std::vector<double> vals(trials);
    parallel_for_index(trials, workers, [&](std::uint64_t t) {
        const MuSpectrum m = mu_spectrum(sample_antisymmetric(n, seed, t));
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t j = 0; j < m.mu.size(); ++j) {
            const double sq = m.mu[j] * m.mu[j];
            if (static_cast<int>(j) < k)
                s1 += sq;
            else
                s2 += sq;
        }
        vals[t] = std::exp(a * s1 + b * s2);
    });

    const MeanCI ci = mean_ci(vals);
    BoundReport r;
    r.estimate = ci.mean;
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    r.bound = mgf_upper_bound(n, k, a, b);
    r.satisfied = r.ci_high <= r.bound;
    return r;
}

BoundReport shell_probability(int n, double a, double b, std::uint64_t trials,
                              std::uint64_t seed, int workers) {
    if (!(0.0 < a && a < 1.0 && 1.0 < b))
        throw std::invalid_argument("shell_probability: need 0 < a < 1 < b");
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("shell_probability: n must be even");
    if (trials < 1) throw std::invalid_argument("shell_probability: trials must be positive");

    // sum_j mu_j^2 = sum_{i<j} J_ij^2 exactly, so the event needs only the
    // Gaussian draws themselves.
    const std::uint64_t count = binomial_u64(n, 2);
    const double c = binomial(n, 2);
    std::vector<unsigned char> hit(trials, 0);
    parallel_for_index(trials, workers, [&](std::uint64_t t) {
        RandomStream rs(seed, t);
        double s = 0.0;
        for (std::uint64_t r = 0; r < count; ++r) {
            const double g = rs.normal(r);
            s += g * g;
        }
        hit[t] = (s > a * c && s < b * c) ? 1 : 0;
    });

    std::uint64_t hits = 0;
    for (unsigned char h : hit) hits += h;
    const double m = 0.25 * n * (n - 1.0);
    const double bound =
        1.0 - std::exp(m * (std::log(a) + 1.0 - a)) - std::exp(m * (std::log(b) + 1.0 - b));

    BoundReport r;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    const WilsonInterval w = wilson_interval(hits, trials, kWilsonZ);
    r.ci_low = w.low;
    r.ci_high = w.high;
    r.bound = bound;
    r.vacuous = bound <= 0.0;
    r.satisfied = !r.vacuous && r.ci_low >= bound;
    return r;
}

std::vector<LipschitzTestFn> default_lipschitz_family() {
    return {
        {"identity", [](double x) { return x; }, 1.0},
        {"tanh", [](double x) { return std::tanh(x); }, 1.0},
        {"abs_clipped", [](double x) { return std::min(std::abs(x), 2.0); }, 1.0},
    };
}

LipschitzAuditResult audit_lipschitz(int n, int q, std::uint64_t trials, std::uint64_t seed,
                                     const std::vector<LipschitzTestFn>& family,
                                     const DiscreteMeasure& reference, int workers) {
    if (trials < 1) throw std::invalid_argument("audit_lipschitz: trials must be positive");
    const double scale = 1.0 / std::sqrt(binomial(n, q));

    const std::size_t nf = family.size();
    std::vector<double> ratio_fn(trials * nf, 0.0);
    std::vector<double> ratio_dbl(trials, 0.0);

    parallel_for_index(trials, workers, [&](std::uint64_t t) {
        const CouplingVector x = sample_couplings(n, q, seed, 2 * t);
        const CouplingVector y = sample_couplings(n, q, seed, 2 * t + 1);
        const double dx = CouplingVector::distance(x, y);
        if (dx == 0.0) return;
        const std::vector<double> ex = eigenvalues(assemble(x));
        const std::vector<double> ey = eigenvalues(assemble(y));
        const double inv_l = 1.0 / static_cast<double>(ex.size());
        for (std::size_t i = 0; i < nf; ++i) {
            double sx = 0.0, sy = 0.0;
            for (double v : ex) sx += family[i].fn(v);
            for (double v : ey) sy += family[i].fn(v);
            const double num = std::abs(sx - sy) * inv_l;
            ratio_fn[t * nf + i] = num / (scale * family[i].lipschitz_constant * dx);
        }
        const double da = bounded_lipschitz_distance(empirical_measure(ex), reference).distance;
        const double db = bounded_lipschitz_distance(empirical_measure(ey), reference).distance;
        ratio_dbl[t] = std::abs(da - db) / (scale * dx);
    });

    LipschitzAuditResult r;
    r.max_ratio_fn.assign(nf, 0.0);
    for (const auto& f : family) r.names.push_back(f.name);
    for (std::uint64_t t = 0; t < trials; ++t)
        for (std::size_t i = 0; i < nf; ++i)
            r.max_ratio_fn[i] = std::max(r.max_ratio_fn[i], ratio_fn[t * nf + i]);
    r.max_ratio_dbl = *std::max_element(ratio_dbl.begin(), ratio_dbl.end());
    return r;
}

std::vector<SweepRow> variance_sweep(const std::vector<std::pair<int, int>>& plans,
                                     const std::function<double(double)>& f,
                                     std::uint64_t trials, std::uint64_t seed, int workers) {
    if (trials < 2) throw std::invalid_argument("variance_sweep: need at least two trials");
    std::vector<SweepRow> rows;
    rows.reserve(plans.size());
    std::uint64_t plan_index = 0;
    for (const auto& [n, q] : plans) {
        std::vector<double> vals(trials);
        // Distinct stream block per plan so plans do not share draws.
        const std::uint64_t base = plan_index * trials;
        parallel_for_index(trials, workers, [&](std::uint64_t t) {
            const std::vector<double> eig = eigenvalues(assemble(sample_couplings(n, q, seed, base + t)));
            double s = 0.0;
            for (double v : eig) s += f(v);
            vals[t] = s / static_cast<double>(eig.size());
        });
        const MeanCI ci = mean_ci(vals);
        SweepRow row;
        row.n = n;
        row.q = q;
        row.cnq = binomial(n, q);
        row.var_hat = ci.variance;
        row.var_times_cnq = ci.variance * row.cnq;
        rows.push_back(row);
        ++plan_index;
    }
    return rows;
}

}  // namespace syk
