#include "syk/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "syk/rng.hpp"
#include "syk/util.hpp"

namespace syk {

double CouplingVector::norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

double CouplingVector::distance(const CouplingVector& a, const CouplingVector& b) {
    if (a.n != b.n || a.q != b.q)
        throw std::invalid_argument("CouplingVector::distance: mismatched (n, q)");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s);
}

CouplingVector sample_couplings(int n, int q, std::uint64_t seed, std::uint64_t stream) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("sample_couplings: n must be even");
    if (q <= 0 || q > n / 2) throw std::invalid_argument("sample_couplings: need 0 < q <= n/2");
    CouplingVector c;
    c.n = n;
    c.q = q;
    c.seed = seed;
    c.stream = stream;
    const std::uint64_t count = binomial_u64(n, q);
    c.values.resize(count);
    RandomStream rs(seed, stream);
    for (std::uint64_t r = 0; r < count; ++r) c.values[r] = rs.normal(r);
    return c;
}

SykHamiltonian assemble(const CouplingVector& couplings, Eigen::Index max_dim) {
    const int n = couplings.n;
    const int q = couplings.q;
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("assemble: n must be even");
    if (q <= 0 || q > n / 2) throw std::invalid_argument("assemble: need 0 < q <= n/2");
    if (couplings.values.size() != binomial_u64(n, q))
        throw std::invalid_argument("assemble: coupling count does not match C(n, q)");
    const int n_qubits = n / 2;
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (dim > max_dim) throw std::runtime_error("assemble: dimension cap exceeded");

    SykHamiltonian h;
    h.n = n;
    h.q = q;
    h.couplings = couplings;
    h.matrix = MatrixXcd::Zero(dim, dim);

    const double scale = 1.0 / std::sqrt(binomial(n, q));
    const int global_phase = q / 2;  // i^{floor(q/2)} prefactor

    std::vector<int> combo = first_combination(q);
    std::size_t r = 0;
    do {
        const PauliString psi = majorana_product(n, IndexSet(combo, n));
        const Complex coeff =
            couplings.values[r] * scale *
            PauliString(n_qubits, 0, 0, psi.phase_exponent() + global_phase).phase_factor();
        const std::uint64_t x = psi.x_mask();
        const std::uint64_t z = psi.z_mask();
        for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
            const std::uint64_t row = col ^ x;
            const double sign = (std::popcount(z & col) & 1) ? -1.0 : 1.0;
            h.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                coeff * sign;
        }
        ++r;
    } while (next_combination(combo, n));
    return h;
}

double hilbert_schmidt_distance(const SykHamiltonian& a, const SykHamiltonian& b) {
    if (a.n != b.n || a.q != b.q)
        throw std::invalid_argument("hilbert_schmidt_distance: mismatched (n, q)");
    return (a.matrix - b.matrix).norm();
}

}  // namespace syk
