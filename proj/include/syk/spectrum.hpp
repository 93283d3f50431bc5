#pragma once
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "syk/aux_point.hpp"
#include "syk/hamiltonian.hpp"
#include "syk/measures.hpp"

namespace syk {

// Full real spectrum of the Hamiltonian, sorted descending. Throws when the
// underlying Hermitian eigensolver reports non-convergence.
std::vector<double> eigenvalues(const SykHamiltonian& h);

// Normalized empirical measure: one atom of weight 1/L per eigenvalue.
DiscreteMeasure empirical_measure(const std::vector<double>& eigs);

// Real Gaussian antisymmetric matrix: strictly upper entries are i.i.d.
// standard normals in lexicographic (row-major) order, the same stream
// layout used by sample_couplings at q = 2, so the two agree entry for
// entry at equal (seed, stream).
Eigen::MatrixXd sample_antisymmetric(int n, std::uint64_t seed, std::uint64_t stream = 0);

// The n/2 nonnegative values mu_j with eigenvalues of J equal to +-i mu_j,
// sorted decreasing.
struct MuSpectrum {
    int n = 0;
    std::vector<double> mu;
};

// Extracts mu from the symmetric positive semidefinite matrix -J^2 = J^T J,
// whose eigenvalues are the mu_j^2 doubled. Adjacent pairs must agree to
// relative 1e-6, otherwise the pairing is reported as failed.
MuSpectrum mu_spectrum(const Eigen::MatrixXd& j);

// q = 2 spectrum by sign sums: atoms C(n,2)^{-1/2} sum_j a_j mu_j over sign
// vectors a. Exhaustive mode enumerates all 2^{n/2} vectors (n/2 <= 24).
DiscreteMeasure q2_spectrum_exhaustive(const MuSpectrum& mu);
DiscreteMeasure q2_spectrum_sampled(const MuSpectrum& mu, std::uint64_t samples,
                                    std::uint64_t seed, std::uint64_t stream = 0);

// Empirical auxiliary point: tail_j = C(n,2)^{-1/2} mu_j and x0 the sum of
// squared tail coordinates, so gaussian_variance of the result is exactly 0.
AuxPoint empirical_aux_point(const MuSpectrum& mu);

}  // namespace syk
