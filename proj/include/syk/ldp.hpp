#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "syk/aux_point.hpp"
#include "syk/measures.hpp"

namespace syk {

// Characteristic function of the law attached to an auxiliary point:
//   s -> exp(-J s^2 / 2) * prod_j cos(s x_j),
// the Fourier transform of Y = a_0 + sum_j x_j a_j with a_0 centered
// Gaussian of variance J and a_j independent Rademacher signs.
struct CharFn {
    double gaussian_variance = 0.0;
    std::vector<double> cosine_freqs;

    double operator()(double s) const;
};

CharFn characteristic_function(const AuxPoint& x);

// Empirical measure of n_samples i.i.d. draws of Y.
DiscreteMeasure sample_law(const AuxPoint& x, std::uint64_t n_samples, std::uint64_t seed,
                           std::uint64_t stream = 0);

// Law of Y discretized on a uniform grid over [-half_width, half_width] by
// numerical inversion of the characteristic function. Requires a Gaussian
// component (J(x) > 0); purely atomic laws are refused. The window must be
// wide enough that the sub-Gaussian tail bound 2 exp(-W^2 / (2 x0)) stays
// below 1e-6.
DiscreteMeasure invert_char_fn(const AuxPoint& x, double half_width, int bins);

// Constructive inverse: recovers the tail coordinates by iterated
// first-positive-zero detection of f, f/cos(s x_1), ..., and the head
// coordinate from the residual Gaussian factor plus the recovered tail
// (the second-moment identity <law, t^2> = J + sum x_j^2 = x0). Throws when
// more than k_max coordinates would be extracted, or when the residual after
// extraction is not a Gaussian factor (malformed input).
AuxPoint aux_point_from_char_fn(const std::function<double(double)>& f, int k_max,
                                double zero_tol = 1e-12);

struct SmallBallReport {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double rate = 0.0;  // -(4/n^2) ln p_hat; +infinity when p_hat = 0
    bool rate_is_infinite = false;
};

// Monte Carlo estimate of P(d(gamma_n, x) < epsilon) over independent
// antisymmetric Gaussian samples, with Wilson confidence interval and the
// speed-n^2/4 empirical rate. A zero-hit outcome is a valid report, not an
// error.
SmallBallReport small_ball_rate(const AuxPoint& x, double epsilon, int n, std::uint64_t trials,
                                std::uint64_t seed, int workers = 1);

}  // namespace syk
