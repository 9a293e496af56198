#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scopelab/matrix.hpp"
#include "scopelab/tolerances.hpp"

namespace scopelab {

// Normalize a coefficient vector in place and return the original norm.
// Exact zero vectors are rejected; anything else is silently rescaled.
double normalize_coefficients(std::vector<Complex>& v);

// Validate and normalize a probability vector (entries ≥ 0, sum within
// tol.norm_input of one before rescaling).
std::vector<double> normalize_weights(std::vector<double> w,
                                      const Tolerances& tol = kDefaultTol);

// ------------------------------------------------------------------ PureState

class PureState {
  public:
    // Normalizes the amplitudes (recording the original norm) and attaches
    // optional subsystem dims, which must multiply to the vector length.
    explicit PureState(std::vector<Complex> amplitudes,
                       std::vector<std::size_t> dims = {});

    // Accepts amplitudes already normalized within tol.norm_input and keeps
    // them bit-for-bit instead of rescaling (deserialization stays exact).
    static PureState from_normalized(std::vector<Complex> amplitudes,
                                     std::vector<std::size_t> dims = {},
                                     const Tolerances& tol = kDefaultTol);

    const std::vector<Complex>& amplitudes() const { return amps_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return amps_.size(); }
    double input_scale() const { return scale_; }

    // |psi><psi| carrying the dims metadata.
    ComplexMatrix density() const;

  private:
    std::vector<Complex> amps_;
    std::vector<std::size_t> dims_;
    double scale_ = 1.0;
};

// --------------------------------------------------------- ScopeDecomposition

// A scope: per-party superposition coefficients over chosen orthonormal
// bases, plus (for entangled scopes) the branch map pairing each branch
// with one basis index per party — every branch realizes exactly one
// member on each side.
struct ScopeDecomposition {
    std::vector<std::vector<Complex>> coeffs;       // per party, normalized
    std::vector<std::vector<std::string>> labels;   // optional, per party
    std::vector<std::vector<std::size_t>> branch_map;  // [party][branch] -> basis index

    std::size_t parties() const { return coeffs.size(); }
    std::size_t branches() const {
        return branch_map.empty() ? 0 : branch_map.front().size();
    }
    // Throws ValidationError if the branch map is not a per-party injection
    // or the shapes disagree.
    void validate(const Tolerances& tol = kDefaultTol) const;
};

// Single-party scope from superposition coefficients (normalized here).
// n = 1 is allowed and denotes a classical point.
ScopeDecomposition make_scope(const std::vector<Complex>& coeffs,
                              const std::vector<std::string>& labels = {});

// ---------------------------------------------------------- active operators

// The rank-one projectors A_i = |i><i| acting on a single-party scope:
// A_i S = alpha_i psi_i, A_i² = A_i, A_i A_j = 0 for i ≠ j, and the
// expectations <S|A_i|S> = |alpha_i|² sum to one.  anti(i) = 1 − A_i keeps
// every branch except i.
class ActiveOperatorSet {
  public:
    ActiveOperatorSet(std::vector<ComplexMatrix> ops, PureState scope,
                      const Tolerances& tol = kDefaultTol);

    const std::vector<ComplexMatrix>& ops() const { return ops_; }
    const PureState& scope() const { return scope_; }
    ComplexMatrix anti(std::size_t i) const;
    double expectation(std::size_t i) const;  // <S|A_i|S>

  private:
    std::vector<ComplexMatrix> ops_;
    PureState scope_;
};

ActiveOperatorSet active_operators(const ScopeDecomposition& scope);

// ------------------------------------------------------ EnsembleDecomposition

// Weighted ensemble of local pure states, per party.  For wavefunction
// ensembles gamma holds complex superposition coefficients with
// |gamma_k|² = weights[k]; when absent, sqrt(weights) is implied.
class EnsembleDecomposition {
  public:
    EnsembleDecomposition(
        std::vector<double> weights,
        std::vector<std::vector<std::vector<Complex>>> locals,  // [party][member]
        std::vector<Complex> gamma = {},
        const Tolerances& tol = kDefaultTol);

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<std::vector<std::vector<Complex>>>& locals() const {
        return locals_;
    }
    std::vector<Complex> gamma_or_default() const;
    bool has_gamma() const { return !gamma_.empty(); }
    std::size_t parties() const { return locals_.size(); }
    std::size_t members() const { return weights_.size(); }

  private:
    std::vector<double> weights_;
    std::vector<std::vector<std::vector<Complex>>> locals_;
    std::vector<Complex> gamma_;
};

// ------------------------------------------------------------ state families

// Structured bipartite state families.  The family tag stays attached to
// the constructed density matrix because separability and ensemble
// structure are not recoverable from a raw matrix.

struct ProductBasisParams {
    std::vector<std::size_t> dims;     // two party dimensions
    std::vector<std::size_t> indices;  // chosen basis index per party
};
struct ProductPureParams {
    std::vector<Complex> a, b;
};
struct EnsembleProductParams {
    std::vector<double> weights;
    std::vector<std::vector<Complex>> locals_a, locals_b;
};
struct EntangledQuditParams {
    std::vector<Complex> a, b;
    std::vector<std::size_t> pairing;  // branch i pairs (i, pairing[i])
};
struct DecoheredQuditParams {
    std::vector<Complex> a, b;
    std::vector<std::size_t> pairing;
};
struct SeparableParams {
    std::vector<double> weights;
    std::vector<std::vector<Complex>> locals_a, locals_b;
};
struct EnsembleEntangledParams {
    std::vector<double> weights;
    std::vector<std::vector<Complex>> lambdas;  // per-member Schmidt vectors
};
struct EnsembleDecoheredParams {
    std::vector<double> weights;
    std::vector<std::vector<Complex>> lambdas;
};
struct WfesParams {
    std::vector<Complex> gamma;
    std::vector<std::vector<Complex>> members;
};

using FamilyParams =
    std::variant<ProductBasisParams, ProductPureParams, EnsembleProductParams,
                 EntangledQuditParams, DecoheredQuditParams, SeparableParams,
                 EnsembleEntangledParams, EnsembleDecoheredParams, WfesParams>;

enum class Family {
    ProductBasis,
    ProductPure,
    EnsembleProduct,
    EntangledQudit,
    DecoheredQudit,
    Separable,
    EnsembleEntangled,
    EnsembleDecohered,
    Wfes,
};

Family family_of(const FamilyParams& params);
std::string family_name(Family f);

// --------------------------------------------------------------
// DensityMatrix

class DensityMatrix {
  public:
    // Validates Hermiticity, positive semidefiniteness (eigenvalues ≥
    // −tol.psd) and unit trace.  The trace check is skipped for the Wfes
    // tag: a wavefunction ensemble over non-orthogonal members carries
    // trace <Psi|Psi> ≠ 1 by construction.
    explicit DensityMatrix(ComplexMatrix matrix,
                           std::optional<FamilyParams> tag = std::nullopt,
                           const Tolerances& tol = kDefaultTol);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::optional<FamilyParams>& tag() const { return tag_; }
    std::size_t dim() const { return matrix_.rows(); }
    double purity() const;  // tr(rho²)

  private:
    ComplexMatrix matrix_;
    std::optional<FamilyParams> tag_;
};

DensityMatrix build_family(const FamilyParams& params);

// ------------------------------------------------------------- entangle etc.

// Schmidt form of a bipartite pure state: psi = Σ_k c_k |a_k>|b_k> with
// descending nonnegative coefficients.
struct SchmidtResult {
    std::vector<double> coefficients;
    ComplexMatrix basis_a;  // columns
    ComplexMatrix basis_b;
};

SchmidtResult schmidt_decompose(const PureState& psi,
                                const Tolerances& tol = kDefaultTol);

// The entangle process: pair branch i of scope A with branch pairing[i]
// of scope B and renormalize, S = Σ_i a_i b_{pairing[i]} |i, pairing[i]> /
// sqrt(Σ_i |a_i b_{pairing[i]}|²).  A subset of branch indices models
// partially realized entanglement; empty means all min(n, m) branches.
PureState entangle(const ScopeDecomposition& scope_a,
                   const ScopeDecomposition& scope_b,
                   const std::vector<std::size_t>& pairing,
                   const std::vector<std::size_t>& branches = {});

// Classical reduction: force one orthogonal basis state per ensemble
// member (d = 1 per party).  Defined on separable and ensemble-entangled
// tags; inputs that are already classical come back unchanged.
DensityMatrix classical_reduction(const DensityMatrix& rho);

// Wavefunction ensemble: the rank-one varrho = Σ_{k,k'} gamma_k
// conj(gamma_k') |psi_k><psi_k'| built literally from a single-party
// ensemble.  Trace exceeds one when members overlap.
DensityMatrix wfes_density(const EnsembleDecomposition& ensemble);

// Sub-decoherence of a wavefunction ensemble: drop the k ≠ k' cross terms,
// leaving the trace-one mixture Σ_k |gamma_k|² |psi_k><psi_k|.
DensityMatrix sub_decohere(const DensityMatrix& wfes);

// Full decoherence in an orthonormal basis (columns of `basis`): zero all
// off-diagonal elements in that basis.  Idempotent and trace preserving.
DensityMatrix decohere(const DensityMatrix& rho, const ComplexMatrix& basis);

}  // namespace scopelab
