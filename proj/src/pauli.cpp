#include "syk/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace syk {

IndexSet::IndexSet(std::vector<int> indices, int n) : indices_(std::move(indices)) {
    int prev = 0;
    for (int i : indices_) {
        if (i <= prev) throw std::invalid_argument("IndexSet: indices must be strictly increasing");
        if (i < 1 || i > n) throw std::invalid_argument("IndexSet: index out of range");
        prev = i;
    }
}

IndexSet IndexSet::symmetric_difference(const IndexSet& a, const IndexSet& b, int n) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    const auto& u = a.indices_;
    const auto& v = b.indices_;
    while (i < u.size() || j < v.size()) {
        if (j == v.size() || (i < u.size() && u[i] < v[j])) {
            out.push_back(u[i++]);
        } else if (i == u.size() || v[j] < u[i]) {
            out.push_back(v[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return IndexSet(std::move(out), n);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                         int phase_exponent)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask), phase_(phase_exponent & 3) {
    if (n_qubits < 0 || n_qubits > 63)
        throw std::invalid_argument("PauliString: qubit count out of range");
    const std::uint64_t valid = n_qubits == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_qubits));
    if ((x_mask & ~valid) || (z_mask & ~valid))
        throw std::invalid_argument("PauliString: mask exceeds qubit count");
}

bool PauliString::is_hermitian() const {
    // (X^x Z^z)^dagger = (-1)^{xz} X^x Z^z per qubit, so adjoining flips the
    // sign once per Y-like site while i^phase conjugates to i^{-phase};
    // self-adjointness needs the two parities to agree.
    const int y_sites = std::popcount(x_mask_ & z_mask_);
    return (phase_ & 1) == (y_sites & 1);
}

Complex PauliString::phase_factor() const {
    switch (phase_ & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex PauliString::trace() const {
    if (x_mask_ == 0 && z_mask_ == 0) {
        const double dim = std::pow(2.0, n_qubits_);
        return phase_factor() * dim;
    }
    return {0.0, 0.0};
}

bool PauliString::proportional(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ &&
           z_mask_ == other.z_mask_ && (((phase_ - other.phase_) & 1) == 0);
}

PauliString operator*(const PauliString& a, const PauliString& b) {
    if (a.n_qubits_ != b.n_qubits_)
        throw std::invalid_argument("PauliString product: qubit counts differ");
    // Per qubit: (X^a Z^b)(X^c Z^d) = (-1)^{bc} X^{a^c} Z^{b^d}.
    const int swaps = std::popcount(a.z_mask_ & b.x_mask_);
    return PauliString(a.n_qubits_, a.x_mask_ ^ b.x_mask_, a.z_mask_ ^ b.z_mask_,
                       (a.phase_ + b.phase_ + 2 * swaps) & 3);
}

PauliString majorana_operator(int n, int i) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("majorana_operator: n must be even");
    if (i < 1 || i > n) throw std::invalid_argument("majorana_operator: index out of range");
    const int n_qubits = n / 2;
    const int k = (i + 1) / 2;  // site carrying the X or Y factor, 1-based
    const std::uint64_t site = std::uint64_t{1} << (k - 1);
    const std::uint64_t z_prefix = site - 1;  // Z on qubits 0..k-2
    if (i % 2 == 1) {
        return PauliString(n_qubits, site, z_prefix, 0);
    }
    // Y = i * X Z, hence the extra unit of phase.
    return PauliString(n_qubits, site, z_prefix | site, 1);
}

PauliString majorana_product(int n, const IndexSet& a) {
    PauliString p = PauliString::identity(n / 2);
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("majorana_product: n must be even");
    for (int i : a.indices()) p = p * majorana_operator(n, i);
    return p;
}

MatrixXcd to_dense(const PauliString& p, int max_qubits) {
    if (p.n_qubits() > max_qubits)
        throw std::runtime_error("to_dense: dimension cap exceeded");
    const std::uint64_t dim = std::uint64_t{1} << p.n_qubits();
    MatrixXcd m = MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const Complex unit = p.phase_factor();
    for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t r = c ^ p.x_mask();
        const double sign = (std::popcount(p.z_mask() & c) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = unit * sign;
    }
    return m;
}

}  // namespace syk
