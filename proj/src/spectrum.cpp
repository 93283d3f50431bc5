#include "syk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "syk/rng.hpp"
#include "syk/util.hpp"

namespace syk {

std::vector<double> eigenvalues(const SykHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        out[static_cast<std::size_t>(ev.size() - 1 - i)] = ev(i);
    return out;
}

DiscreteMeasure empirical_measure(const std::vector<double>& eigs) {
    if (eigs.empty()) throw std::invalid_argument("empirical_measure: empty spectrum");
    return DiscreteMeasure::from_samples(eigs);
}

Eigen::MatrixXd sample_antisymmetric(int n, std::uint64_t seed, std::uint64_t stream) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("sample_antisymmetric: n must be even");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    RandomStream rs(seed, stream);
    std::uint64_t r = 0;
    for (int row = 0; row < n; ++row) {
        for (int col = row + 1; col < n; ++col) {
            const double g = rs.normal(r++);
            j(row, col) = g;
            j(col, row) = -g;
        }
    }
    return j;
}

MuSpectrum mu_spectrum(const Eigen::MatrixXd& j) {
    const Eigen::Index n = j.rows();
    if (n != j.cols() || n % 2 != 0)
        throw std::invalid_argument("mu_spectrum: matrix must be square with even dimension");
    const double asym = (j + j.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12)
        throw std::invalid_argument("mu_spectrum: input is not antisymmetric");

    Eigen::MatrixXd s = j.transpose() * j;  // = -J^2, PSD with doubled spectrum
    s = 0.5 * (s + s.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("mu_spectrum: symmetric eigensolver did not converge");

    std::vector<double> sq(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        sq[static_cast<std::size_t>(n - 1 - i)] = solver.eigenvalues()(i);

    MuSpectrum m;
    m.n = static_cast<int>(n);
    m.mu.resize(static_cast<std::size_t>(n / 2));
    for (std::size_t k = 0; k < m.mu.size(); ++k) {
        const double a = sq[2 * k];
        const double b = sq[2 * k + 1];
        if (std::abs(a - b) > 1e-6 * std::max(1.0, std::abs(a)))
            throw std::runtime_error("mu_spectrum: eigenvalues of -J^2 failed to pair");
        m.mu[k] = std::sqrt(std::max(0.0, 0.5 * (a + b)));
    }
    return m;
}

namespace {

double sign_sum(const MuSpectrum& m, std::uint64_t mask, double scale) {
    double v = 0.0;
    for (std::size_t j = 0; j < m.mu.size(); ++j)
        v += ((mask >> j) & 1u) ? m.mu[j] : -m.mu[j];
    return v * scale;
}

}  // namespace

DiscreteMeasure q2_spectrum_exhaustive(const MuSpectrum& m) {
    const int half = static_cast<int>(m.mu.size());
    if (half > 24) throw std::runtime_error("q2_spectrum: exhaustive mode capped at n/2 <= 24");
    const double scale = 1.0 / std::sqrt(binomial(m.n, 2));
    const std::uint64_t count = std::uint64_t{1} << half;
    std::vector<double> values(count);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        values[mask] = sign_sum(m, mask, scale);
    return DiscreteMeasure::from_samples(std::move(values));
}

DiscreteMeasure q2_spectrum_sampled(const MuSpectrum& m, std::uint64_t samples,
                                    std::uint64_t seed, std::uint64_t stream) {
    if (samples == 0) throw std::invalid_argument("q2_spectrum: need at least one sample");
    const double scale = 1.0 / std::sqrt(binomial(m.n, 2));
    RandomStream rs(seed, stream);
    const std::size_t half = m.mu.size();
    std::vector<double> values(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < half; ++j)
            v += rs.sign(i * half + j) * m.mu[j];
        values[i] = v * scale;
    }
    return DiscreteMeasure::from_samples(std::move(values));
}

AuxPoint empirical_aux_point(const MuSpectrum& m) {
    const double scale = 1.0 / std::sqrt(binomial(m.n, 2));
    std::vector<double> tail(m.mu.size());
    for (std::size_t j = 0; j < tail.size(); ++j) tail[j] = m.mu[j] * scale;
    double x0 = 0.0;
    for (double t : tail) x0 += t * t;  // same order as AuxPoint::tail_square_sum
    return AuxPoint(x0, std::move(tail));
}

}  // namespace syk
