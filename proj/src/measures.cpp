#include "syk/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "syk/util.hpp"

namespace syk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void sort_and_merge(std::vector<double>& support, std::vector<double>& weights) {
    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    std::vector<double> s, w;
    s.reserve(support.size());
    w.reserve(support.size());
    for (std::size_t idx : order) {
        if (!s.empty() && s.back() == support[idx]) {
            w.back() += weights[idx];
        } else {
            s.push_back(support[idx]);
            w.push_back(weights[idx]);
        }
    }
    support = std::move(s);
    weights = std::move(w);
}

}  // namespace

DiscreteMeasure DiscreteMeasure::from_points_and_weights(std::vector<double> support,
                                                         std::vector<double> weights) {
    if (support.size() != weights.size() || support.empty())
        throw std::invalid_argument("DiscreteMeasure: bad support/weight sizes");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("DiscreteMeasure: weights must be positive");
    sort_and_merge(support, weights);
    const double total = pairwise_sum(weights);
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("DiscreteMeasure: weights do not sum to 1");
    DiscreteMeasure m;
    m.support_ = std::move(support);
    m.weights_ = std::move(weights);
    for (double& w : m.weights_) w /= total;
    return m;
}

DiscreteMeasure DiscreteMeasure::from_samples(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("DiscreteMeasure: empty sample set");
    std::vector<double> weights(samples.size(), 1.0 / static_cast<double>(samples.size()));
    return from_points_and_weights(std::move(samples), std::move(weights));
}

DiscreteMeasure DiscreteMeasure::dirac(double x) {
    return from_points_and_weights({x}, {1.0});
}

double DiscreteMeasure::moment(int k) const {
    if (k < 0) throw std::invalid_argument("moment: order must be nonnegative");
    std::vector<double> terms(support_.size());
    for (std::size_t i = 0; i < support_.size(); ++i)
        terms[i] = weights_[i] * std::pow(support_[i], k);
    return pairwise_sum(terms);
}

double moment(const DiscreteMeasure& m, int k) { return m.moment(k); }

// ---------------------------------------------------------------------------
// Exact chain LP.
//
// Backward dynamic programming over W_i(f) = max total payoff of points
// i..m given f_i = f. Each W_i is concave piecewise linear on [-1, 1], and
// the step W_i = w_i f + max_{|f'-f| <= g_i} W_{i+1}(f') preserves that
// shape: the sliding max inserts a plateau at the top, the linear term tilts
// every slope.
// ---------------------------------------------------------------------------
namespace {

struct ConcavePL {
    std::vector<double> xs;      // breakpoints, ascending; first=lo, last=hi
    std::vector<double> slopes;  // one per piece, non-increasing
    double v0 = 0.0;             // value at xs.front()

    double eval(double x) const {
        double v = v0;
        for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
            if (x <= xs[j + 1]) return v + slopes[j] * (x - xs[j]);
            v += slopes[j] * (xs[j + 1] - xs[j]);
        }
        return v;
    }

    void add_linear(double w) {
        v0 += w * xs.front();
        for (double& s : slopes) s += w;
    }

    // Closed interval on which the maximum is attained.
    std::pair<double, double> argmax() const {
        std::size_t j = 0;
        while (j < slopes.size() && slopes[j] > 0.0) ++j;
        const double a = xs[j];
        std::size_t k = j;
        while (k < slopes.size() && slopes[k] == 0.0) ++k;
        return {a, xs[k]};
    }

    double max_value() const { return eval(argmax().first); }
};

// V'(f) = max of V over [f-g, f+g] intersected with the domain.
ConcavePL slide(const ConcavePL& v, double g) {
    if (g <= 0.0) return v;
    const double lo = v.xs.front();
    const double hi = v.xs.back();
    const auto [a, b] = v.argmax();
    const double vmax = v.eval(a);

    ConcavePL out;
    out.xs.push_back(lo);
    if (a - g > lo) {
        out.v0 = v.eval(lo + g);
        for (std::size_t j = 0; j < v.slopes.size(); ++j) {
            const double s = std::max(v.xs[j], lo + g);
            const double e = std::min(v.xs[j + 1], a);
            if (e <= s) continue;
            out.slopes.push_back(v.slopes[j]);
            out.xs.push_back(e - g);
        }
    } else {
        out.v0 = vmax;
    }
    const double plateau_end = std::min(hi, b + g);
    if (plateau_end > out.xs.back()) {
        out.slopes.push_back(0.0);
        out.xs.push_back(plateau_end);
    }
    if (b + g < hi) {
        for (std::size_t j = 0; j < v.slopes.size(); ++j) {
            const double s = std::max(v.xs[j], b);
            const double e = std::min(v.xs[j + 1], hi - g);
            if (e <= s) continue;
            out.slopes.push_back(v.slopes[j]);
            out.xs.push_back(e + g);
        }
    }
    out.xs.back() = hi;  // undo accumulated rounding on the right endpoint
    return out;
}

struct MergedSupport {
    std::vector<double> support;
    std::vector<double> w;  // mu - nu atom by atom
};

MergedSupport merge_signed(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    MergedSupport m;
    std::size_t i = 0, j = 0;
    const auto& s1 = mu.support();
    const auto& s2 = nu.support();
    while (i < s1.size() || j < s2.size()) {
        if (j == s2.size() || (i < s1.size() && s1[i] < s2[j])) {
            m.support.push_back(s1[i]);
            m.w.push_back(mu.weights()[i]);
            ++i;
        } else if (i == s1.size() || s2[j] < s1[i]) {
            m.support.push_back(s2[j]);
            m.w.push_back(-nu.weights()[j]);
            ++j;
        } else {
            m.support.push_back(s1[i]);
            m.w.push_back(mu.weights()[i] - nu.weights()[j]);
            ++i;
            ++j;
        }
    }
    return m;
}

}  // namespace

BLResult bounded_lipschitz_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                    std::size_t support_cap) {
    if (mu.size() == 0 || nu.size() == 0)
        throw std::invalid_argument("bounded_lipschitz_distance: empty measure");
    MergedSupport ms = merge_signed(mu, nu);
    const std::size_t m = ms.support.size();
    if (m > support_cap) throw std::runtime_error("bounded_lipschitz_distance: support cap exceeded");

    // Canonical sign so that d(mu, nu) and d(nu, mu) run the identical DP.
    bool flipped = false;
    for (double w : ms.w) {
        if (w != 0.0) {
            flipped = w < 0.0;
            break;
        }
    }
    if (flipped)
        for (double& w : ms.w) w = -w;

    BLResult result;
    result.certificate.support = ms.support;
    if (m == 1) {
        result.certificate.witness = {0.0};
        return result;
    }

    // Backward sweep, recording the argmax interval of every W_i.
    std::vector<std::pair<double, double>> amax(m + 1);
    ConcavePL w_next{{-1.0, 1.0}, {0.0}, 0.0};
    w_next.add_linear(ms.w[m - 1]);
    amax[m] = w_next.argmax();
    for (std::size_t i = m - 1; i >= 1; --i) {
        const double gap = ms.support[i] - ms.support[i - 1];
        ConcavePL w_i = slide(w_next, gap);
        w_i.add_linear(ms.w[i - 1]);
        amax[i] = w_i.argmax();
        w_next = std::move(w_i);
    }
    const double value = w_next.max_value();

    // Forward witness recovery: walk toward each remaining argmax interval,
    // clamped by the Lipschitz window around the previous value.
    std::vector<double> f(m);
    f[0] = std::clamp(amax[1].first, -1.0, 1.0);
    for (std::size_t i = 1; i < m; ++i) {
        const double gap = ms.support[i] - ms.support[i - 1];
        const double lo = std::max(f[i - 1] - gap, -1.0);
        const double hi = std::min(f[i - 1] + gap, 1.0);
        f[i] = std::min(std::max(lo, amax[i + 1].first), hi);
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < m; ++i) objective += f[i] * ms.w[i];
    if (std::abs(objective - value) > 1e-9 * (1.0 + std::abs(value)))
        throw std::logic_error("bounded_lipschitz_distance: witness does not attain DP value");

    if (flipped)
        for (double& x : f) x = -x;
    result.distance = std::max(objective, 0.0);
    result.certificate.witness = std::move(f);
    result.certificate.objective = result.distance;
    return result;
}

double bounded_lipschitz_bruteforce(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                    int levels) {
    if (levels < 2 || levels > 41)
        throw std::invalid_argument("bounded_lipschitz_bruteforce: levels out of range");
    MergedSupport ms = merge_signed(mu, nu);
    const std::size_t m = ms.support.size();
    if (m > 7) throw std::invalid_argument("bounded_lipschitz_bruteforce: merged support too large");

    std::vector<double> grid(static_cast<std::size_t>(levels));
    for (int a = 0; a < levels; ++a)
        grid[static_cast<std::size_t>(a)] = -1.0 + 2.0 * a / (levels - 1);

    // Exact maximum over all grid-valued feasible witnesses (chain structure
    // makes the enumeration collapse to a per-point table).
    std::vector<double> best(grid.size());
    for (std::size_t a = 0; a < grid.size(); ++a) best[a] = ms.w[0] * grid[a];
    for (std::size_t i = 1; i < m; ++i) {
        const double gap = ms.support[i] - ms.support[i - 1];
        std::vector<double> next(grid.size(), -1e300);
        for (std::size_t b = 0; b < grid.size(); ++b) {
            for (std::size_t a = 0; a < grid.size(); ++a) {
                if (std::abs(grid[b] - grid[a]) > gap + 1e-12) continue;
                next[b] = std::max(next[b], best[a] + ms.w[i] * grid[b]);
            }
        }
        best = std::move(next);
    }
    return *std::max_element(best.begin(), best.end());
}

// ---------------------------------------------------------------------------
// Limit laws.
// ---------------------------------------------------------------------------
namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_density(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

// Acklam's rational approximation, polished with two Newton steps.
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0, 1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double u = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    } else if (p <= 1.0 - plow) {
        const double u = p - 0.5;
        const double t = u * u;
        x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
            (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
    } else {
        const double u = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    for (int it = 0; it < 2; ++it) {
        const double err = normal_cdf(x) - p;
        x -= err / normal_density(x);
    }
    return x;
}

double semicircle_density(double x) {
    if (x <= -2.0 || x >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

double semicircle_cdf(double x) {
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return 1.0;
    return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
}

double semicircle_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("semicircle_quantile: p outside (0, 1)");
    double lo = -2.0, hi = 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (semicircle_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double LimitLaw::density(double x) const {
    return kind_ == LawKind::Gaussian ? normal_density(x) : semicircle_density(x);
}

double LimitLaw::cdf(double x) const {
    return kind_ == LawKind::Gaussian ? normal_cdf(x) : semicircle_cdf(x);
}

double LimitLaw::quantile(double p) const {
    return kind_ == LawKind::Gaussian ? normal_quantile(p) : semicircle_quantile(p);
}

double LimitLaw::sample(const RandomStream& rs, std::uint64_t index) const {
    if (kind_ == LawKind::Gaussian) return rs.normal(index);
    return semicircle_quantile(rs.uniform(index));
}

LimitLaw::Discretization LimitLaw::discretize(int m) const {
    if (m < 2) throw std::invalid_argument("LimitLaw::discretize: need at least 2 atoms");
    std::vector<double> support(static_cast<std::size_t>(m));
    std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
    for (int k = 0; k < m; ++k)
        support[static_cast<std::size_t>(k)] = quantile((k + 0.5) / m);

    // d_BL cost of snapping each equal-mass cell onto its atom; cell width is
    // capped at 2 because |f| <= 1 bounds any single transport by 2.
    double err = 0.0;
    for (int k = 0; k < m; ++k) {
        const double left = k == 0 ? -1e300 : quantile(static_cast<double>(k) / m);
        const double right = k == m - 1 ? 1e300 : quantile(static_cast<double>(k + 1) / m);
        err += std::min(right - left, 2.0) / m;
    }

    Discretization d;
    d.measure = DiscreteMeasure::from_points_and_weights(std::move(support), std::move(weights));
    d.snap_error = err;
    return d;
}

LimitLaw limit_law(LawKind kind, std::optional<double> q_ratio_hint) {
    if (q_ratio_hint) {
        const double h = *q_ratio_hint;
        if (h < 0.0) throw std::invalid_argument("limit_law: negative q^2/n hint");
        const bool gaussian_range = h <= 1.0;
        const bool semicircle_range = h >= 16.0;
        if (!gaussian_range && !semicircle_range)
            throw std::invalid_argument(
                "limit_law: q^2/n hint falls in the interpolating regime, which is unsupported");
        if ((kind == LawKind::Gaussian && !gaussian_range) ||
            (kind == LawKind::Semicircle && !semicircle_range))
            throw std::invalid_argument("limit_law: hint inconsistent with requested law");
    }
    return LimitLaw(kind);
}

}  // namespace syk
