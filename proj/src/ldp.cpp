#include "syk/ldp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syk/parallel.hpp"
#include "syk/rng.hpp"
#include "syk/spectrum.hpp"
#include "syk/util.hpp"

namespace syk {

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double CharFn::operator()(double s) const {
    double v = std::exp(-0.5 * gaussian_variance * s * s);
    for (double f : cosine_freqs) v *= std::cos(s * f);
    return v;
}

CharFn characteristic_function(const AuxPoint& x) {
    CharFn f;
    f.gaussian_variance = gaussian_variance(x);
    f.cosine_freqs = x.tail();
    return f;
}

DiscreteMeasure sample_law(const AuxPoint& x, std::uint64_t n_samples, std::uint64_t seed,
                           std::uint64_t stream) {
    if (n_samples == 0) throw std::invalid_argument("sample_law: need at least one sample");
    const double sigma = std::sqrt(gaussian_variance(x));
    const auto& tail = x.tail();
    const std::uint64_t draws_per_sample = 1 + tail.size();
    RandomStream rs(seed, stream);
    std::vector<double> samples(n_samples);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        const std::uint64_t base = i * draws_per_sample;
        double y = sigma * rs.normal(base);
        for (std::size_t j = 0; j < tail.size(); ++j)
            y += rs.sign(base + 1 + j) * tail[j];
        samples[i] = y;
    }
    return DiscreteMeasure::from_samples(std::move(samples));
}

DiscreteMeasure invert_char_fn(const AuxPoint& x, double half_width, int bins) {
    if (!(half_width > 0.0)) throw std::invalid_argument("invert_char_fn: half_width must be positive");
    if (bins < 8 || (bins & (bins - 1)) != 0)
        throw std::invalid_argument("invert_char_fn: bins must be a power of two, at least 8");
    const double j = gaussian_variance(x);
    if (j <= 0.0)
        throw std::runtime_error(
            "invert_char_fn: law is purely atomic (J = 0); use sampling or enumeration");
    // Y is sub-Gaussian with variance proxy x0 = J + sum x_k^2.
    const double tail_bound = 2.0 * std::exp(-0.5 * half_width * half_width / x.x0());
    if (!(tail_bound < 1e-6))
        throw std::runtime_error("invert_char_fn: window too small for the second moment");

    const CharFn f = characteristic_function(x);
    const int half_bins = bins / 2;
    const double ds = kPi / half_width;
    std::vector<double> fhat(static_cast<std::size_t>(half_bins) + 1);
    for (int k = 0; k <= half_bins; ++k) fhat[static_cast<std::size_t>(k)] = f(k * ds);

    const double dt = 2.0 * half_width / bins;
    std::vector<double> support;
    std::vector<double> weights;
    support.reserve(static_cast<std::size_t>(bins));
    weights.reserve(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i) {
        const double t = -half_width + (i + 0.5) * dt;
        double density = 0.5 * fhat[0];
        for (int k = 1; k < half_bins; ++k)
            density += fhat[static_cast<std::size_t>(k)] * std::cos(k * ds * t);
        density += 0.5 * fhat[static_cast<std::size_t>(half_bins)] * std::cos(half_bins * ds * t);
        density *= ds / kPi;
        double w = density * dt;
        if (w < -1e-10)
            throw std::runtime_error("invert_char_fn: inversion produced negative mass");
        if (w > 0.0) {
            support.push_back(t);
            weights.push_back(w);
        }
    }
    return DiscreteMeasure::from_points_and_weights(std::move(support), std::move(weights));
}

// ---------------------------------------------------------------------------
// Constructive inverse.
// ---------------------------------------------------------------------------
namespace {

// f divided by the cosine factors extracted so far.
struct DividedFn {
    const std::function<double(double)>* f;
    const std::vector<double>* freqs;

    double operator()(double s) const {
        double v = (*f)(s);
        for (double x : *freqs) v /= std::cos(s * x);
        return v;
    }
};

double bisect_zero(const DividedFn& g, double lo, double hi, double tol) {
    double flo = g(lo);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = g(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Minimizes |g| by golden-section search; used for even-multiplicity zeros,
// which touch the axis without a sign change.
double minimize_abs(const DividedFn& g, double lo, double hi, double tol) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = std::abs(g(x1));
    double f2 = std::abs(g(x2));
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = std::abs(g(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = std::abs(g(x2));
        }
    }
    return 0.5 * (a + b);
}

struct ZeroHit {
    bool found = false;
    double location = 0.0;
};

// First zero of g on (from, horizon): sign changes are bisected, touch zeros
// (no sign change, |g| dipping to the noise floor) are located by golden
// section and accepted only when the refined minimum is consistent with an
// actual zero.
ZeroHit first_zero(const DividedFn& g, double from, double horizon, double step, double tol) {
    double s_prev = from;
    double v_prev = g(s_prev);
    double recent_max = std::abs(v_prev);
    int stall = 0;
    for (double s = from + step; s <= horizon; s += step) {
        const double v = g(s);
        if ((v_prev <= 0.0) != (v <= 0.0)) {
            return {true, bisect_zero(g, s_prev, s, tol)};
        }
        // Touch-zero candidate: a sharp dip of |g| against its neighborhood.
        if (std::abs(v) < std::abs(v_prev) && std::abs(v) < 0.05 * recent_max) {
            const double v_next = g(s + step);
            if (std::abs(v) < std::abs(v_next)) {
                const double m = minimize_abs(g, s_prev, s + step, tol);
                if (std::abs(g(m)) < std::max(1e-8, 1e-5 * recent_max)) return {true, m};
            }
        }
        recent_max = std::max(0.9995 * recent_max, std::abs(v));
        if (std::abs(v) < 1e-12 && recent_max < 1e-11) {
            if (++stall > 64) break;  // envelope below the noise floor
        } else {
            stall = 0;
        }
        s_prev = s;
        v_prev = v;
    }
    return {};
}

// Crude second-moment estimate, only used to choose the scan step.
double rough_second_moment(const std::function<double(double)>& f) {
    const double h = 2e-3;
    const double d1 = (2.0 * f(0.0) - f(h) - f(-h)) / (h * h);
    const double d2 = (2.0 * f(0.0) - f(2.0 * h) - f(-2.0 * h)) / (4.0 * h * h);
    return (4.0 * d1 - d2) / 3.0;
}

}  // namespace

AuxPoint aux_point_from_char_fn(const std::function<double(double)>& f, int k_max,
                                double zero_tol) {
    if (k_max < 0) throw std::invalid_argument("aux_point_from_char_fn: k_max must be >= 0");
    if (std::abs(f(0.0) - 1.0) > 1e-9)
        throw std::invalid_argument("aux_point_from_char_fn: f(0) must equal 1");

    double x0_est = rough_second_moment(f);
    if (!(x0_est > 1e-8) || !std::isfinite(x0_est)) x0_est = 1e-8;
    const double step = std::min(kPi / (64.0 * std::max(std::sqrt(x0_est), 1e-4)), 0.02);
    const double horizon = 64.0 * kPi;

    std::vector<double> freqs;
    DividedFn g{&f, &freqs};
    double scan_from = step;
    while (true) {
        const ZeroHit hit = first_zero(g, scan_from, horizon, step, zero_tol);
        if (!hit.found) break;
        if (static_cast<int>(freqs.size()) == k_max)
            throw std::runtime_error("aux_point_from_char_fn: more than k_max coordinates");
        freqs.push_back(kPi / (2.0 * hit.location));
        // A repeated coordinate leaves a zero at the same spot; resume the
        // scan slightly before it so the survivor is seen again.
        scan_from = std::max(step, hit.location - 2.0 * step);
    }

    // The remainder must be a pure Gaussian factor exp(-J s^2 / 2).
    std::vector<std::pair<double, double>> probes;  // (s, J estimate at s)
    for (double s = 0.25; s <= horizon; s *= 1.5) {
        bool near_singularity = false;
        for (double x : freqs)
            if (std::abs(std::cos(s * x)) < 0.1) near_singularity = true;
        if (near_singularity) continue;
        const double r = g(s);
        if (!(r > 1e-10)) continue;
        if (r > 1.0 + 1e-7)
            throw std::runtime_error(
                "aux_point_from_char_fn: residual exceeds 1, not a Gaussian factor");
        probes.emplace_back(s, -2.0 * std::log(r) / (s * s));
    }
    if (probes.empty())
        throw std::runtime_error("aux_point_from_char_fn: residual factor is unobservable");
    double j_hat = probes.back().second;  // largest usable s is best conditioned
    if (j_hat < 0.0) j_hat = 0.0;
    for (const auto& [s, je] : probes) {
        if (std::abs(je - j_hat) > 1e-4 * std::max(1.0, j_hat) + 1e-6)
            throw std::runtime_error(
                "aux_point_from_char_fn: residual is not a consistent Gaussian factor");
    }

    std::sort(freqs.begin(), freqs.end(), std::greater<double>());
    double x0 = 0.0;
    for (double x : freqs) x0 += x * x;
    x0 += j_hat;
    return AuxPoint(x0, std::move(freqs));
}

SmallBallReport small_ball_rate(const AuxPoint& x, double epsilon, int n, std::uint64_t trials,
                                std::uint64_t seed, int workers) {
    if (trials == 0) throw std::invalid_argument("small_ball_rate: trials must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("small_ball_rate: epsilon must be positive");
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("small_ball_rate: n must be even");

    std::vector<unsigned char> hit(trials, 0);
    parallel_for_index(trials, workers, [&](std::uint64_t t) {
        const Eigen::MatrixXd j = sample_antisymmetric(n, seed, t);
        const AuxPoint gamma = empirical_aux_point(mu_spectrum(j));
        hit[t] = sup_distance(gamma, x) < epsilon ? 1 : 0;
    });

    SmallBallReport r;
    r.trials = trials;
    for (unsigned char h : hit) r.hits += h;
    r.p_hat = static_cast<double>(r.hits) / static_cast<double>(trials);
    const WilsonInterval w = wilson_interval(r.hits, trials, kWilsonZ);
    r.ci_low = w.low;
    r.ci_high = w.high;
    if (r.hits == 0) {
        r.rate = std::numeric_limits<double>::infinity();
        r.rate_is_infinite = true;
    } else {
        r.rate = -4.0 / (static_cast<double>(n) * n) * std::log(r.p_hat);
    }
    return r;
}

}  // namespace syk
