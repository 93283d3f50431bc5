#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace syk {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;

// Sorted subset of {1,...,n}, the index set of a Majorana product.
class IndexSet {
  public:
    IndexSet() = default;
    // Validates: strictly increasing, all elements in [1, n].
    IndexSet(std::vector<int> indices, int n);

    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }

    // Symmetric difference, the support of the product Psi_A Psi_B.
    static IndexSet symmetric_difference(const IndexSet& a, const IndexSet& b, int n);

  private:
    std::vector<int> indices_;
};

// Tensor product of single-qubit Paulis with a tracked global phase:
//
//   matrix = i^phase * (X^{x_0} Z^{z_0}) (x) ... (x) (X^{x_{m-1}} Z^{z_{m-1}})
//
// where bit j of x_mask/z_mask selects the factor on qubit j. Products are
// mask XORs; pushing Z past X on a qubit contributes a factor (-1), which is
// what keeps the phase exact. Column c of the dense matrix has its single
// nonzero entry at row c ^ x_mask, with value i^phase * (-1)^popcount(z & c).
class PauliString {
  public:
    PauliString() = default;
    PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exponent);

    static PauliString identity(int n_qubits) { return PauliString(n_qubits, 0, 0, 0); }

    int n_qubits() const { return n_qubits_; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }
    int phase_exponent() const { return phase_; }

    // True when the dense matrix is self-adjoint, i.e. when the phase parity
    // matches the number of qubits carrying both an X and a Z factor.
    bool is_hermitian() const;

    // i^phase as an exact complex unit.
    Complex phase_factor() const;

    // Trace: i^phase * 2^{n_qubits} when both masks vanish, otherwise 0.
    Complex trace() const;

    // Whether the two strings are equal up to a sign (same masks, phases
    // differing by an even power of i).
    bool proportional(const PauliString& other) const;

    bool operator==(const PauliString& other) const {
        return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ &&
               z_mask_ == other.z_mask_ && phase_ == other.phase_;
    }

    friend PauliString operator*(const PauliString& a, const PauliString& b);

  private:
    int n_qubits_ = 0;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
    int phase_ = 0;  // exponent of i, kept in {0,1,2,3}
};

// Jordan-Wigner Majorana operator psi_i on n/2 qubits:
//   psi_{2k-1} = Z^{(k-1)} (x) X,   psi_{2k} = Z^{(k-1)} (x) Y.
// Satisfies {psi_i, psi_j} = 2 delta_ij and psi_i^2 = I.
PauliString majorana_operator(int n, int i);

// Ordered product psi_{i_1} ... psi_{i_m} over the index set, identity for
// the empty set.
PauliString majorana_product(int n, const IndexSet& a);

// Exact dense materialization; entries are drawn from {0, ±1, ±i}.
// Throws when n_qubits exceeds the cap (default dimension 2^15).
MatrixXcd to_dense(const PauliString& p, int max_qubits = 15);

}  // namespace syk
