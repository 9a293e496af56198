#pragma once

#include <cstdint>
#include <vector>

#include "scopelab/matrix.hpp"
#include "scopelab/tolerances.hpp"

namespace scopelab {

struct EigenResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // unitary, k-th column pairs with values[k]
    int sweeps = 0;
};

struct SvdResult {
    ComplexMatrix u;                     // rows x rows, unitary
    std::vector<double> singular_values; // descending, length min(rows, cols)
    ComplexMatrix v;                     // cols x cols, unitary; A = U Σ V†
};

// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
// rotations.  Rejects non-Hermitian input (relative defect beyond
// tol.hermiticity) and raises ConvergenceError past the sweep cap.
EigenResult eigh(const ComplexMatrix& a, const Tolerances& tol = kDefaultTol);

// Singular value decomposition of a general complex matrix, built on
// eigh(A†A); left vectors are recovered as A·v/σ and columns belonging to
// singular values below tol.svd_null are completed by orthonormalization.
SvdResult svd(const ComplexMatrix& a, const Tolerances& tol = kDefaultTol);

// Kronecker product.  Subsystem dims metadata concatenates: factors that
// carry dims contribute them in order, factors without dims contribute a
// single subsystem of their row count.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> tensor_product(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b);

// Trace out every subsystem not listed in `keep` (indices into rho.dims(),
// result keeps the original order of the retained factors).
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& keep);

// Transpose one party of a bipartite operator; requires rho.dims() of
// length 2 and party in {0, 1}.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t party);

// Sum of singular values.
double trace_norm(const ComplexMatrix& a, const Tolerances& tol = kDefaultTol);

enum class MatFunc { Exp, Log, Sqrt };
enum class LogBase { E, Two };

// Hermitian matrix function through the eigenbasis.  Eigenvalues in
// [−tol.log_clamp, 0] are clamped to zero first.  Log of a rank-deficient
// matrix raises DomainError unless support_restricted is set, in which
// case null directions are skipped (0·log 0 := 0).
ComplexMatrix mat_func(const ComplexMatrix& a, MatFunc f,
                       LogBase base = LogBase::E,
                       bool support_restricted = false,
                       const Tolerances& tol = kDefaultTol);

// exp(−i·H·t) for Hermitian H (ħ = 1 throughout).
ComplexMatrix evolution_unitary(const ComplexMatrix& h, double t,
                                const Tolerances& tol = kDefaultTol);

// In-place modified Gram–Schmidt on the columns of m starting at column
// `from`; earlier columns are assumed orthonormal.  Columns that vanish
// are replaced from the standard basis.
void orthonormalize_columns(ComplexMatrix& m, std::size_t from);

}  // namespace scopelab
