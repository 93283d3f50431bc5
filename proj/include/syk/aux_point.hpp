#pragma once
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syk {

// Point of the auxiliary sequence space: a head coordinate x0 plus a finite
// non-increasing nonnegative tail (x_1, ..., x_k); coordinates beyond the
// stored tail are zero. Membership requires x0 >= sum x_j^2.
class AuxPoint {
  public:
    AuxPoint() = default;

    AuxPoint(double x0, std::vector<double> tail) : x0_(x0), tail_(std::move(tail)) {
        if (!(x0_ >= 0.0)) throw std::invalid_argument("AuxPoint: x0 must be nonnegative");
        for (std::size_t j = 0; j < tail_.size(); ++j) {
            if (!(tail_[j] >= 0.0))
                throw std::invalid_argument("AuxPoint: tail coordinates must be nonnegative");
            if (j > 0 && tail_[j] > tail_[j - 1])
                throw std::invalid_argument("AuxPoint: tail must be non-increasing");
        }
        const double s = tail_square_sum();
        if (s > x0_ + 1e-12 * std::max(1.0, x0_))
            throw std::invalid_argument("AuxPoint: x0 < sum of squared tail coordinates");
    }

    double x0() const { return x0_; }
    const std::vector<double>& tail() const { return tail_; }
    double coordinate(std::size_t j) const {
        if (j == 0) return x0_;
        return j <= tail_.size() ? tail_[j - 1] : 0.0;
    }

    // Left-to-right accumulation; empirical points are built with the same
    // order so their gaussian_variance is exactly zero in floating point.
    double tail_square_sum() const {
        double s = 0.0;
        for (double t : tail_) s += t * t;
        return s;
    }

    static AuxPoint minimizer() { return AuxPoint(1.0, {}); }

  private:
    double x0_ = 0.0;
    std::vector<double> tail_;
};

// Sup metric over all coordinates, with implicit zeros past each tail.
inline double sup_distance(const AuxPoint& x, const AuxPoint& y) {
    double d = std::abs(x.x0() - y.x0());
    const std::size_t k = std::max(x.tail().size(), y.tail().size());
    for (std::size_t j = 1; j <= k; ++j)
        d = std::max(d, std::abs(x.coordinate(j) - y.coordinate(j)));
    return d;
}

// Variance of the Gaussian component of the associated law: x0 - sum x_j^2.
// Nonnegative by the membership invariant; clamped against rounding.
inline double gaussian_variance(const AuxPoint& x) {
    return std::max(0.0, x.x0() - x.tail_square_sum());
}

// Large-deviation rate: x0 - 1 - ln J(x) when J(x) > 0, +infinity on the
// degenerate set J(x) = 0.
inline double rate_function(const AuxPoint& x) {
    const double j = gaussian_variance(x);
    if (j <= 0.0) return std::numeric_limits<double>::infinity();
    return x.x0() - 1.0 - std::log(j);
}

}  // namespace syk
