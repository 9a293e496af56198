#pragma once

namespace scopelab {

// Central numeric tolerance configuration.  Every validation and
// convergence threshold in the library reads from one of these fields so
// the defaults are documented in a single place.  Construct a custom
// instance and pass it where a function accepts one to override locally.
struct Tolerances {
    // Relative Hermiticity violation allowed on symmetric inputs,
    // measured against the largest entry modulus.
    double hermiticity = 1e-12;

    // Jacobi eigensolver: rotations stop once every off-diagonal entry is
    // below jacobi_offdiag * max|A|; sweeps beyond jacobi_max_sweeps raise
    // a convergence error.
    double jacobi_offdiag = 1e-13;
    int jacobi_max_sweeps = 100;

    // Singular values below this are treated as exact zeros and their
    // left vectors completed by orthonormalization.
    double svd_null = 1e-12;

    // Reconstruction acceptance for factorizations, relative to max(1, max|A|).
    double reconstruct = 1e-10;

    // State validation.
    double norm = 1e-12;            // |‖psi‖² − 1| for pure states
    double norm_input = 1e-9;       // looser gate for user-facing coefficient input
    double trace = 1e-12;           // |tr(rho) − 1| for density matrices
    double psd = 1e-10;             // eigenvalues of a density matrix must be ≥ −psd
    double projector = 1e-10;       // idempotence / orthogonality of operator sets
    double unitarity = 1e-10;       // ‖U†U − I‖_max for evolutions and bases

    // Matrix functions.
    double log_clamp = 1e-12;       // eigenvalues in [−log_clamp, 0] clamp to 0
    double log_floor = 1e-300;      // spectral floor below which log is undefined

    // Decoherence-functional consistency threshold on off-diagonal terms.
    double consistency = 1e-8;

    // Wavefunction grids: |Σ|psi|²·dx − 1| allowed.
    double grid_norm = 1e-6;

    // Geometry: squared areas/volumes more negative than this reject the
    // distance set as non-embeddable; magnitudes below it flush to zero.
    double geometry = 1e-9;
};

inline constexpr Tolerances kDefaultTol{};

}  // namespace scopelab
