#pragma once

// Permutation-entangled states of an n (x) n system, their entanglement
// degrees alpha_i / beta_i, the combinatorial sum identities they satisfy,
// the GHZ-type two-branch family with its reduced entanglement, and the
// two-component mixture identity.

#include <cstddef>
#include <vector>

#include "scopelab/matrix.hpp"
#include "scopelab/tolerances.hpp"

namespace scopelab {

// One permutation state |Psi_sigma> with branch coefficients a_i b_sigma(i).
// alpha is the pairwise modulus-product sum of the raw branch coefficients,
// beta their squared norm, and entanglement the ratio alpha / beta (the
// degree of entanglement of the normalized branch vector).
struct PermutationStateReport {
    std::vector<std::size_t> permutation;  // image of 0..n-1 under sigma
    double alpha = 0.0;
    double beta = 0.0;
    double entanglement = 0.0;
};

// Residuals of the three sum identities over all n! permutation states:
//   sum_i beta_i        = (n-1)!
//   sum_i alpha_i       = 2 (n-2)! eps_A eps_B
//   sum_i alpha_i / E_i = (n-1)!
struct IdentityReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    double sum_beta_residual = 0.0;
    double sum_alpha_residual = 0.0;
    double sum_alpha_over_e_residual = 0.0;
    double max_abs_residual = 0.0;
};

// All n! permutation states in lexicographic order of sigma. Both scopes
// must be normalized; n is capped (default 7) to bound the n! work.
std::vector<PermutationStateReport> enumerate_perm_states(
    const std::vector<Complex>& a, const std::vector<Complex>& b,
    std::size_t max_n = 7, const Tolerances& tol = kDefaultTol);

IdentityReport verify_sum_identities(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b,
                                     std::size_t max_n = 7,
                                     const Tolerances& tol = kDefaultTol);

// One GHZ-type two-branch state: the branches pair the basis pattern s
// (first bit fixed to 0) with its bitwise complement.
struct GhzStateReport {
    std::vector<std::size_t> pattern;  // s_mu in {0,1} per party, s_0 = 0
    double alpha = 0.0;                // |eta_1| |eta_2|
    double beta = 0.0;                 // |eta_1|^2 + |eta_2|^2
    double entanglement = 0.0;         // alpha / beta
};

struct GhzFamilyResult {
    std::vector<GhzStateReport> states;  // 2^(m-1) reports, pattern order
    double e_dagger = 0.0;               // (sum_k 1/E_k)^(-1)
};

// Two-branch family over m >= 2 parties with normalized local 2-vectors.
// A zero coefficient anywhere short-circuits the reduced entanglement to 0.
GhzFamilyResult ghz_family(const std::vector<std::vector<Complex>>& party_coeffs,
                           const Tolerances& tol = kDefaultTol);

// Both sides of the two-component mixture identity
//   p1 E_d + p2 E_c = (E_d + E_c) u_c^2 + E_dagger u_0^2
// with u_i = sqrt(p_i), u_c = (u_1 E_d + u_2 E_c)/(E_d + E_c),
// u_0 = |u_1 - u_2| and E_dagger = E_d E_c / (E_d + E_c).
struct MixtureIdentityResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

MixtureIdentityResult mixture_identity(double e_direct, double e_cross,
                                       double p1, double p2,
                                       const Tolerances& tol = kDefaultTol);

}  // namespace scopelab
