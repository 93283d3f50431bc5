#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "syk/rng.hpp"

namespace syk {

// Probability measure with finitely many atoms. Support is strictly
// increasing (exactly equal atoms are merged, nothing else is), weights are
// positive and renormalized to sum to 1 at construction.
class DiscreteMeasure {
  public:
    DiscreteMeasure() = default;

    static DiscreteMeasure from_points_and_weights(std::vector<double> support,
                                                   std::vector<double> weights);
    static DiscreteMeasure from_samples(std::vector<double> samples);
    static DiscreteMeasure dirac(double x);

    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return support_.size(); }

    double moment(int k) const;

  private:
    std::vector<double> support_;
    std::vector<double> weights_;
};

// k-th raw moment, sum w_i s_i^k.
double moment(const DiscreteMeasure& m, int k);

// Optimal witness for the bounded-Lipschitz program: values f_i on the merged
// support with |f_i| <= 1 and |f_{i+1} - f_i| <= s_{i+1} - s_i.
struct BLCertificate {
    std::vector<double> support;
    std::vector<double> witness;
    double objective = 0.0;
};

struct BLResult {
    double distance = 0.0;
    BLCertificate certificate;
};

// Exact bounded-Lipschitz distance
//   d_BL(mu, nu) = sup { integral f d(mu - nu) : |f| <= 1, f 1-Lipschitz }.
// On a sorted one-dimensional support the Lipschitz condition reduces to the
// adjacent differences, and the resulting chain LP is solved exactly by
// dynamic programming over concave piecewise-linear value functions.
BLResult bounded_lipschitz_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                    std::size_t support_cap = 1000000);

// Lower-bound oracle: optimum over witnesses restricted to a uniform value
// grid of `levels` points on [-1, 1]. Converges to the exact value from
// below as the grid refines.
double bounded_lipschitz_bruteforce(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                    int levels);

enum class LawKind { Gaussian, Semicircle };

// Unit-variance limit law: standard Gaussian, or the semicircle on [-2, 2].
class LimitLaw {
  public:
    explicit LimitLaw(LawKind kind) : kind_(kind) {}

    LawKind kind() const { return kind_; }
    double density(double x) const;
    double cdf(double x) const;
    double quantile(double p) const;
    double sample(const RandomStream& rs, std::uint64_t index) const;

    // Quantile discretization into m equal-mass atoms, plus an upper bound on
    // the d_BL perturbation introduced by the snapping.
    struct Discretization {
        DiscreteMeasure measure;
        double snap_error = 0.0;
    };
    Discretization discretize(int m) const;

  private:
    LawKind kind_;
};

// The q-Hermite interpolating regime (q^2/n -> a in (0, inf)) is out of
// range: hints clearly in it are rejected.
LimitLaw limit_law(LawKind kind, std::optional<double> q_ratio_hint = std::nullopt);

}  // namespace syk
