#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "syk/measures.hpp"

namespace syk {

// Monte Carlo estimate against an analytic bound. For upper bounds the
// satisfied flag means ci_high <= bound; for lower bounds, ci_low >= bound.
// A bound that is trivially true or empty of content (e.g. a shell bound
// that is negative at small n) is reported as vacuous, never as satisfied.
struct BoundReport {
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    bool vacuous = false;
};

// ln Z_n for the antisymmetric Gaussian joint eigenvalue density:
//   Z_n = (pi/2)^{n/4} prod_{j=0}^{n/2-1} (2j)!
// accumulated with log-gamma, stable up to n ~ 10^4.
double selberg_log_normalization(int n);

// Right-hand side of the moment-generating-function bound
//   E exp(a sum_{j<=k} mu_j^2 + b sum_{j>k} mu_j^2)
//     <= 2^{nk} (1-2a)^{-k(n-k-1/2)} (1-2b)^{-(n/2-k)((n-1)/2-k)}
// for a, b < 1/2. Computed in log space; the plain value may overflow to
// +infinity for large n.
double mgf_log_upper_bound(int n, int k, double a, double b);
double mgf_upper_bound(int n, int k, double a, double b);

// Monte Carlo estimate of the left-hand side above over independent
// antisymmetric Gaussian samples, with a 3-sigma normal CI for the mean.
BoundReport estimate_mgf(int n, int k, double a, double b, std::uint64_t trials,
                         std::uint64_t seed, int workers = 1);

// Monte Carlo estimate of P(a C(n,2) < sum mu_j^2 < b C(n,2)) for
// 0 < a < 1 < b, checked against the shell lower bound
//   1 - (a e^{1-a})^{n(n-1)/4} - (b e^{1-b})^{n(n-1)/4}.
BoundReport shell_probability(int n, double a, double b, std::uint64_t trials,
                              std::uint64_t seed, int workers = 1);

struct LipschitzTestFn {
    std::string name;
    std::function<double(double)> fn;
    double lipschitz_constant = 1.0;
};

// The default family: identity, tanh, |x| clipped at 2.
std::vector<LipschitzTestFn> default_lipschitz_family();

struct LipschitzAuditResult {
    std::vector<std::string> names;       // one per test function
    std::vector<double> max_ratio_fn;     // worst observed ratio per function
    double max_ratio_dbl = 0.0;           // worst ratio for the d_BL target
};

// Over random coupling pairs (x, x'), the observed Lipschitz ratios
//   |<f, rho> - <f, rho'>| / (C(n,q)^{-1/2} Lip(f) ||x - x'||)
// and the same for x -> d_BL(rho_n, reference). Both are bounded by 1.
LipschitzAuditResult audit_lipschitz(int n, int q, std::uint64_t trials, std::uint64_t seed,
                                     const std::vector<LipschitzTestFn>& family,
                                     const DiscreteMeasure& reference, int workers = 1);

struct SweepRow {
    int n = 0;
    int q = 0;
    double cnq = 0.0;
    double var_hat = 0.0;
    double var_times_cnq = 0.0;
};

// Sample variance of <f, rho_n> across trials for each plan; concentration
// predicts var * C(n,q) stays within a bounded band.
std::vector<SweepRow> variance_sweep(const std::vector<std::pair<int, int>>& plans,
                                     const std::function<double(double)>& f,
                                     std::uint64_t trials, std::uint64_t seed, int workers = 1);

}  // namespace syk
