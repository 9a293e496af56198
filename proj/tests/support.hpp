#pragma once

// Shared helpers for the unit and acceptance suites: seeded random state
// generators and a few fixed reference objects.

#include <complex>
#include <random>
#include <vector>

#include "scopelab/matrix.hpp"
#include "scopelab/numerics.hpp"

namespace testsupport {

using scopelab::Complex;
using scopelab::ComplexMatrix;

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix a = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    scopelab::orthonormalize_columns(m, 0);
    return m;
}

inline std::vector<Complex> random_pure(std::size_t n, Rng& rng) {
    std::vector<Complex> v(n);
    double nrm = 0.0;
    for (auto& x : v) {
        x = random_complex(rng);
        nrm += std::norm(x);
    }
    nrm = std::sqrt(nrm);
    for (auto& x : v) x /= nrm;
    return v;
}

// Random full-rank density matrix as a mixture of n random pure states.
inline ComplexMatrix random_density(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<double> w(n);
    double tot = 0.0;
    for (auto& x : w) {
        x = u(rng);
        tot += x;
    }
    ComplexMatrix rho(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto psi = random_pure(n, rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rho(i, j) += (w[k] / tot) * psi[i] * std::conj(psi[j]);
    }
    return rho;
}

inline std::vector<Complex> bell_phi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, 0.0, 0.0, s};
}

inline ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

inline ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows(
        {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}

inline ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

inline ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace testsupport
