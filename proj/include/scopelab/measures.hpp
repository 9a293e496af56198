#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "scopelab/states.hpp"
#include "scopelab/tolerances.hpp"

namespace scopelab {

// ----------------------------------------------------- superposition degrees

// Degree of superposition of a normalized coefficient vector:
// epsilon = sum_{i<j} |a_i||a_j| = (‖a‖₁² − Σ|a_i|²)/2, maximal at uniform
// moduli where it reaches (n−1)/2.
double degree_of_superposition(const std::vector<Complex>& coeffs,
                               const Tolerances& tol = kDefaultTol);

// The same l1-style functional on the branch coefficients of an entangled
// state sum_i c_i |psi_1i ... psi_mi>.
double degree_of_entanglement(const std::vector<Complex>& branch_coeffs,
                              const Tolerances& tol = kDefaultTol);

// Direct and cross pairings of two 2-state scopes and the reduced degree
// E† = E_d E_c / (E_d + E_c), which equals ε_A ε_B for normalized inputs.
struct DirectCrossResult {
    double e_direct = 0.0;
    double e_cross = 0.0;
    double e_reduced = 0.0;
};
DirectCrossResult direct_cross_entanglement(const std::vector<Complex>& a,
                                            const std::vector<Complex>& b,
                                            const Tolerances& tol = kDefaultTol);

// Degree of nonorthogonality: sum over parties of |<psi_xi|psi_xi'>| over
// ordered member pairs xi != xi'.
double nonorthogonality(const EnsembleDecomposition& ensemble);

// --------------------------------------------------------------- entropies

// Binary entropy h(x) = −x log₂ x − (1−x) log₂ (1−x), with h(0)=h(1)=0.
double binary_entropy(double x);

// Shannon entropy of a probability vector, in bits.
double shannon_entropy_bits(const std::vector<double>& p);

// Von Neumann entropy −Σ λ log₂ λ of a unit-trace density matrix, in bits.
double von_neumann_entropy(const DensityMatrix& rho,
                           const Tolerances& tol = kDefaultTol);

// -------------------------------------------------- two-qubit entanglement

enum class ConcurrenceBasis { Magic, Computation, Schmidt };

// Concurrence of a pure two-qubit state, computed in the requested basis
// convention; all three agree within 1e−10.
double concurrence(const PureState& psi,
                   ConcurrenceBasis mode = ConcurrenceBasis::Computation,
                   const Tolerances& tol = kDefaultTol);

// E_f = h((1 + sqrt(1 − C²))/2); monotone from E_f(0)=0 to E_f(1)=1.
double entanglement_of_formation(double concurrence_value);

// Fixed-decomposition formation value Σ p_i E_f(C(psi_i)) — linear under
// concatenation of decompositions; no convex-roof minimization.
struct WeightedPureState {
    double weight;
    PureState state;
};
double formation_entropy_of_ensemble(
    const std::vector<WeightedPureState>& members);

// The 2×2 entropy-concurrence matrix
//   Λ = 1/2 [[1+sqrt(1−C²), C], [C, 1−sqrt(1−C²)]]:
// trace exactly 1 by construction, determinant 0, off-diagonal pair sums
// to C.
ComplexMatrix entropy_concurrence_matrix(double concurrence_value);

// Negativity N = (‖ρ^{T_A}‖₁ − 1)/2 = |sum of negative eigenvalues of
// ρ^{T_A}|; both routes are computed and must agree within tol.reconstruct.
double negativity(const DensityMatrix& rho, const Tolerances& tol = kDefaultTol);

// Robustness of a pure bipartite state: twice the negativity.
double robustness_pure(const DensityMatrix& rho,
                       const Tolerances& tol = kDefaultTol);

// ------------------------------------------- relative entropy of entanglement

struct ReeOptions {
    std::size_t products = 8;      // separable ansatz: K product states
    std::size_t restarts = 16;     // 2 structured + the rest random
    std::size_t budget = 20000;    // total objective evaluations
    std::uint64_t seed = 20260825; // restart randomness
};

struct ReeResult {
    double bits = 0.0;              // certified upper bound on E_r
    DensityMatrix closest_separable;
    bool converged = false;
    std::size_t evaluations = 0;
};

// E_r(ρ) = inf over separable σ of Tr(ρ log₂ ρ − ρ log₂ σ), minimized over
// mixtures of `products` two-qubit product states by simplex search with
// restarts.  The returned σ is separable by construction, so `bits` is a
// certified upper bound; for pure ρ it lands within 2% of S(ρ_A).
ReeResult relative_entropy_of_entanglement(const DensityMatrix& rho,
                                           const ReeOptions& opts = {},
                                           const Tolerances& tol = kDefaultTol);

// ------------------------------------------------------- λ-decompositions

struct LsCorrelationResult {
    double lambda_star = 0.0;  // max λ with ρ − λσ positive semidefinite
    double value = 0.0;        // λ* · measure(σ)
};

// Decompose ρ = λσ + (1−λ)ρ′ against a reference σ: the largest feasible
// λ is found by bisection on the minimum eigenvalue of ρ − λσ, and the
// quantum correlation of ρ is scored as λ*·measure(σ).
LsCorrelationResult ls_correlation(
    const DensityMatrix& rho, const DensityMatrix& sigma,
    const std::function<double(const DensityMatrix&)>& measure,
    const Tolerances& tol = kDefaultTol);

// ------------------------------------------------------------- classifier

// The four correlations of the state taxonomy: flags are a lookup on the
// family tag (the table is definitional), quantitative slots are computed
// from the tag parameters.  Untagged matrices yield structural=false with
// only the spectrum facts filled.
struct CorrelationProfile {
    bool structural = false;
    std::optional<Family> family;

    bool entanglement = false;
    bool decohered_classicality = false;
    bool nonorthogonality = false;
    bool coarse_grained_classicality = false;

    double entanglement_value = 0.0;      // degree E where defined
    double nonorthogonality_value = 0.0;  // Ō where defined
    double coarse_entropy_bits = 0.0;     // S = −Σ p_ξ log₂ p_ξ
    double negativity_value = 0.0;        // spectrum fact (bipartite input)
    double entropy_bits = 0.0;            // von Neumann entropy of the matrix
};

CorrelationProfile classify(const DensityMatrix& rho,
                            const Tolerances& tol = kDefaultTol);

// -------------------------------------------------------- scope magnitude

// Magnitude of the shape spanned by n scope states under a pairwise
// distance: n=1 point (0), n=2 segment length, n=3 triangle area (Heron),
// n=4 tetrahedron volume (Cayley–Menger).  n ≥ 5 is rejected; distance
// sets that embed in no Euclidean configuration raise DomainError.
double scope_magnitude(const std::vector<std::vector<double>>& distances,
                       const Tolerances& tol = kDefaultTol);

// Energy-level convenience: distances D(i,j) = |E_i − E_j|.
double scope_magnitude_energies(const std::vector<double>& energies,
                                const Tolerances& tol = kDefaultTol);

}  // namespace scopelab
