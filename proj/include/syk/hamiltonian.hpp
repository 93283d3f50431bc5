#pragma once
#include <cstdint>
#include <vector>

#include "syk/pauli.hpp"

namespace syk {

// The i.i.d. standard Gaussian couplings J_R, one per q-subset R of {1..n},
// stored in lexicographic order of R. Draw r of stream `stream_id` under
// `seed` is a fixed function of (seed, stream_id, r), so the same triple
// always reproduces bit-identical values, independent of evaluation order.
struct CouplingVector {
    int n = 0;
    int q = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::vector<double> values;  // size C(n, q), lexicographic in R

    double norm() const;
    static double distance(const CouplingVector& a, const CouplingVector& b);
};

CouplingVector sample_couplings(int n, int q, std::uint64_t seed, std::uint64_t stream = 0);

// Dense SYK Hamiltonian
//   H = i^{floor(q/2)} C(n,q)^{-1/2} sum_R J_R Psi_R
// on L = 2^{n/2} dimensions, together with the couplings that produced it.
struct SykHamiltonian {
    int n = 0;
    int q = 0;
    CouplingVector couplings;
    MatrixXcd matrix;

    Eigen::Index dim() const { return matrix.rows(); }
};

// Assembles the dense matrix string by string; each Psi_R touches exactly one
// entry per column. Throws when 2^{n/2} exceeds max_dim.
SykHamiltonian assemble(const CouplingVector& couplings, Eigen::Index max_dim = 4096);

// Hilbert-Schmidt distance ||H - H'||_{H.S.} = sqrt(Tr (H-H')(H-H')^*).
double hilbert_schmidt_distance(const SykHamiltonian& a, const SykHamiltonian& b);

}  // namespace syk
