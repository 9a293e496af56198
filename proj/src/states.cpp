#include "scopelab/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "scopelab/errors.hpp"
#include "scopelab/numerics.hpp"

namespace scopelab {

double normalize_coefficients(std::vector<Complex>& v) {
    if (v.empty())
        throw ValidationError("coefficient vector is empty");
    const double nrm = std::sqrt(norm2(v));
    if (nrm == 0.0)
        throw ValidationError("coefficient vector is exactly zero");
    for (auto& x : v) x /= nrm;
    return nrm;
}

std::vector<double> normalize_weights(std::vector<double> w,
                                      const Tolerances& tol) {
    if (w.empty()) throw ValidationError("weight vector is empty");
    double sum = 0.0;
    for (double x : w) {
        if (x < 0.0)
            throw ValidationError("weights must be nonnegative");
        sum += x;
    }
    if (sum == 0.0) throw ValidationError("weights sum to zero");
    if (std::abs(sum - 1.0) > tol.norm_input)
        throw ValidationError("weights are not on the probability simplex");
    for (double& x : w) x /= sum;
    return w;
}

// ------------------------------------------------------------------ PureState

PureState::PureState(std::vector<Complex> amplitudes,
                     std::vector<std::size_t> dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    scale_ = normalize_coefficients(amps_);
    if (!dims_.empty()) {
        std::size_t prod = 1;
        for (std::size_t d : dims_) prod *= d;
        if (prod != amps_.size())
            throw ValidationError(
                "PureState: subsystem dims do not match amplitude count");
    }
}

PureState PureState::from_normalized(std::vector<Complex> amplitudes,
                                     std::vector<std::size_t> dims,
                                     const Tolerances& tol) {
    if (amplitudes.empty())
        throw ValidationError("coefficient vector is empty");
    const double nrm = std::sqrt(norm2(amplitudes));
    if (std::abs(nrm - 1.0) > tol.norm_input)
        throw ValidationError("PureState: amplitudes are not normalized");
    std::vector<Complex> verbatim = amplitudes;
    PureState psi(std::move(amplitudes), std::move(dims));
    psi.amps_ = std::move(verbatim);  // undo the constructor's rescaling
    psi.scale_ = nrm;
    return psi;
}

ComplexMatrix PureState::density() const {
    ComplexMatrix rho = ComplexMatrix::outer(amps_, amps_);
    if (!dims_.empty()) rho.set_dims(dims_);
    return rho;
}

// --------------------------------------------------------- ScopeDecomposition

void ScopeDecomposition::validate(const Tolerances& tol) const {
    if (coeffs.empty()) throw ValidationError("scope: no parties");
    if (!labels.empty() && labels.size() != coeffs.size())
        throw ValidationError("scope: labels/parties mismatch");
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p].empty())
            throw ValidationError("scope: party with no coefficients");
        if (std::abs(norm2(coeffs[p]) - 1.0) > tol.norm_input)
            throw ValidationError("scope: party coefficients not normalized");
        if (!labels.empty() && !labels[p].empty() &&
            labels[p].size() != coeffs[p].size())
            throw ValidationError("scope: labels/coefficients mismatch");
    }
    if (branch_map.empty()) return;
    if (branch_map.size() != coeffs.size())
        throw ValidationError("scope: branch map must cover every party");
    const std::size_t nb = branch_map.front().size();
    for (std::size_t p = 0; p < branch_map.size(); ++p) {
        if (branch_map[p].size() != nb)
            throw ValidationError("scope: branch map rows differ in length");
        std::set<std::size_t> seen;
        for (std::size_t idx : branch_map[p]) {
            if (idx >= coeffs[p].size())
                throw ValidationError("scope: branch map index out of range");
            if (!seen.insert(idx).second)
                throw ValidationError(
                    "scope: branch map assigns one basis state to two "
                    "branches (1-1 branch rule violated)");
        }
    }
}

ScopeDecomposition make_scope(const std::vector<Complex>& coeffs,
                              const std::vector<std::string>& labels) {
    std::vector<Complex> c = coeffs;
    normalize_coefficients(c);
    ScopeDecomposition scope;
    scope.coeffs = {std::move(c)};
    if (!labels.empty()) scope.labels = {labels};
    scope.branch_map = {std::vector<std::size_t>(scope.coeffs[0].size())};
    for (std::size_t i = 0; i < scope.branch_map[0].size(); ++i)
        scope.branch_map[0][i] = i;
    scope.validate();
    return scope;
}

// ---------------------------------------------------------- active operators

ActiveOperatorSet::ActiveOperatorSet(std::vector<ComplexMatrix> ops,
                                     PureState scope, const Tolerances& tol)
    : ops_(std::move(ops)), scope_(std::move(scope)) {
    const std::size_t d = scope_.dim();
    double expectation_sum = 0.0;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const ComplexMatrix& a = ops_[i];
        if (a.rows() != d || a.cols() != d)
            throw ValidationError("active operators: shape mismatch");
        if ((a * a - a).max_abs() > tol.projector)
            throw ValidationError("active operators: A_i is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if ((a * ops_[j]).max_abs() > tol.projector)
                throw ValidationError(
                    "active operators: A_i A_j does not vanish for i != j");
        expectation_sum += expectation(i);
    }
    if (std::abs(expectation_sum - 1.0) > tol.norm)
        throw ValidationError(
            "active operators: scope expectations do not sum to one");
}

ComplexMatrix ActiveOperatorSet::anti(std::size_t i) const {
    if (i >= ops_.size())
        throw ValidationError("active operators: index out of range");
    return ComplexMatrix::identity(scope_.dim()) - ops_[i];
}

double ActiveOperatorSet::expectation(std::size_t i) const {
    if (i >= ops_.size())
        throw ValidationError("active operators: index out of range");
    const auto av = ops_[i].apply(scope_.amplitudes());
    return inner(scope_.amplitudes(), av).real();
}

ActiveOperatorSet active_operators(const ScopeDecomposition& scope) {
    scope.validate();
    if (scope.parties() != 1)
        throw ValidationError(
            "active_operators: expected a single-party scope");
    const auto& c = scope.coeffs[0];
    const std::size_t n = c.size();
    std::vector<ComplexMatrix> ops;
    ops.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix a(n, n);
        a(i, i) = 1.0;
        ops.push_back(std::move(a));
    }
    return ActiveOperatorSet(std::move(ops), PureState(c));
}

// ------------------------------------------------------ EnsembleDecomposition

EnsembleDecomposition::EnsembleDecomposition(
    std::vector<double> weights,
    std::vector<std::vector<std::vector<Complex>>> locals,
    std::vector<Complex> gamma, const Tolerances& tol)
    : weights_(normalize_weights(std::move(weights), tol)),
      locals_(std::move(locals)),
      gamma_(std::move(gamma)) {
    if (locals_.empty())
        throw ValidationError("ensemble: no parties");
    for (auto& party : locals_) {
        if (party.size() != weights_.size())
            throw ValidationError(
                "ensemble: member count differs from weight count");
        const std::size_t d = party.front().size();
        for (auto& member : party) {
            if (member.size() != d)
                throw ValidationError(
                    "ensemble: members of one party differ in dimension");
            normalize_coefficients(member);
        }
    }
    if (!gamma_.empty()) {
        if (gamma_.size() != weights_.size())
            throw ValidationError("ensemble: gamma/weight count mismatch");
        for (std::size_t k = 0; k < gamma_.size(); ++k)
            if (std::abs(std::norm(gamma_[k]) - weights_[k]) > tol.projector)
                throw ValidationError(
                    "ensemble: |gamma_k|^2 does not match weight k");
    }
}

std::vector<Complex> EnsembleDecomposition::gamma_or_default() const {
    if (!gamma_.empty()) return gamma_;
    std::vector<Complex> g(weights_.size());
    for (std::size_t k = 0; k < g.size(); ++k)
        g[k] = std::sqrt(weights_[k]);
    return g;
}

// ------------------------------------------------------------ state families

Family family_of(const FamilyParams& params) {
    return static_cast<Family>(params.index());
}

std::string family_name(Family f) {
    switch (f) {
        case Family::ProductBasis: return "product_basis";
        case Family::ProductPure: return "product_pure";
        case Family::EnsembleProduct: return "ensemble_product";
        case Family::EntangledQudit: return "entangled_qudit";
        case Family::DecoheredQudit: return "decohered_qudit";
        case Family::Separable: return "separable";
        case Family::EnsembleEntangled: return "ensemble_entangled";
        case Family::EnsembleDecohered: return "ensemble_decohered";
        case Family::Wfes: return "wfes";
    }
    return "unknown";
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix,
                             std::optional<FamilyParams> tag,
                             const Tolerances& tol)
    : matrix_(std::move(matrix)), tag_(std::move(tag)) {
    if (!matrix_.is_square())
        throw ValidationError("density matrix: not square");
    if (matrix_.hermiticity_defect() > tol.hermiticity)
        throw ValidationError("density matrix: not Hermitian");
    const bool wfes =
        tag_ && family_of(*tag_) == Family::Wfes;
    if (!wfes && std::abs(matrix_.trace() - Complex(1.0)) > tol.trace)
        throw ValidationError("density matrix: trace differs from one");
    const auto eig = eigh(matrix_, tol);
    if (eig.values.front() < -tol.psd)
        throw ValidationError(
            "density matrix: negative eigenvalue beyond tolerance");
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

namespace {

// Branch products eta_i = a_i * b_{pairing[i]} restricted to a branch
// subset; shared by entangle and the qudit family builders.
struct BranchExpansion {
    std::vector<Complex> eta;            // unnormalized branch coefficients
    std::vector<std::size_t> a_index;    // basis index on A per branch
    std::vector<std::size_t> b_index;    // basis index on B per branch
    double norm2_eta = 0.0;
};

BranchExpansion expand_branches(const std::vector<Complex>& a,
                                const std::vector<Complex>& b,
                                const std::vector<std::size_t>& pairing,
                                const std::vector<std::size_t>& subset) {
    const std::size_t nbranch = std::min(a.size(), b.size());
    if (pairing.size() != nbranch)
        throw ValidationError(
            "pairing length must equal min(n, m) branch count");
    std::set<std::size_t> seen;
    for (std::size_t idx : pairing) {
        if (idx >= b.size())
            throw ValidationError("pairing index exceeds B-party dimension");
        if (!seen.insert(idx).second)
            throw ValidationError(
                "pairing is not one-to-one (1-1 branch rule violated)");
    }
    std::vector<std::size_t> use = subset;
    if (use.empty()) {
        use.resize(nbranch);
        for (std::size_t i = 0; i < nbranch; ++i) use[i] = i;
    }
    std::set<std::size_t> unique_use;
    BranchExpansion out;
    for (std::size_t i : use) {
        if (i >= nbranch)
            throw ValidationError("branch subset index out of range");
        if (!unique_use.insert(i).second)
            throw ValidationError("branch subset contains duplicates");
        const Complex eta = a[i] * b[pairing[i]];
        out.eta.push_back(eta);
        out.a_index.push_back(i);
        out.b_index.push_back(pairing[i]);
        out.norm2_eta += std::norm(eta);
    }
    if (out.norm2_eta == 0.0)
        throw ValidationError(
            "all selected branch products vanish; nothing to entangle");
    return out;
}

std::vector<Complex> normalized_copy(std::vector<Complex> v) {
    normalize_coefficients(v);
    return v;
}

ComplexMatrix mixture_of_locals(const std::vector<double>& w,
                                const std::vector<std::vector<Complex>>& locals) {
    if (locals.size() != w.size())
        throw ValidationError("family: member count differs from weights");
    const std::size_t d = locals.front().size();
    ComplexMatrix rho(d, d);
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto psi = normalized_copy(locals[k]);
        if (psi.size() != d)
            throw ValidationError("family: members differ in dimension");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                rho(i, j) += w[k] * psi[i] * std::conj(psi[j]);
    }
    return rho;
}

DensityMatrix build_product_basis(const ProductBasisParams& p) {
    if (p.dims.size() != 2 || p.indices.size() != 2)
        throw ValidationError("product_basis: two parties expected");
    for (std::size_t s = 0; s < 2; ++s)
        if (p.indices[s] >= p.dims[s])
            throw ValidationError("product_basis: basis index out of range");
    const std::size_t d = p.dims[0] * p.dims[1];
    ComplexMatrix rho(d, d);
    const std::size_t idx = p.indices[0] * p.dims[1] + p.indices[1];
    rho(idx, idx) = 1.0;
    rho.set_dims({p.dims[0], p.dims[1]});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_product_pure(const ProductPureParams& p) {
    const auto a = normalized_copy(p.a);
    const auto b = normalized_copy(p.b);
    const auto psi = tensor_product(a, b);
    ComplexMatrix rho = ComplexMatrix::outer(psi, psi);
    rho.set_dims({a.size(), b.size()});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_ensemble_product(const EnsembleProductParams& p) {
    const auto w = normalize_weights(p.weights);
    ComplexMatrix rho_a = mixture_of_locals(w, p.locals_a);
    ComplexMatrix rho_b = mixture_of_locals(w, p.locals_b);
    ComplexMatrix rho = tensor_product(rho_a, rho_b);
    rho.set_dims({rho_a.rows(), rho_b.rows()});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_entangled_qudit(const EntangledQuditParams& p) {
    const auto a = normalized_copy(p.a);
    const auto b = normalized_copy(p.b);
    const auto ex = expand_branches(a, b, p.pairing, {});
    const std::size_t da = a.size(), db = b.size();
    std::vector<Complex> psi(da * db, Complex(0.0, 0.0));
    const double scale = std::sqrt(ex.norm2_eta);
    for (std::size_t k = 0; k < ex.eta.size(); ++k)
        psi[ex.a_index[k] * db + ex.b_index[k]] = ex.eta[k] / scale;
    ComplexMatrix rho = ComplexMatrix::outer(psi, psi);
    rho.set_dims({da, db});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_decohered_qudit(const DecoheredQuditParams& p) {
    const auto a = normalized_copy(p.a);
    const auto b = normalized_copy(p.b);
    const auto ex = expand_branches(a, b, p.pairing, {});
    const std::size_t da = a.size(), db = b.size();
    ComplexMatrix rho(da * db, da * db);
    for (std::size_t k = 0; k < ex.eta.size(); ++k) {
        const std::size_t idx = ex.a_index[k] * db + ex.b_index[k];
        rho(idx, idx) = std::norm(ex.eta[k]) / ex.norm2_eta;
    }
    rho.set_dims({da, db});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_separable(const SeparableParams& p) {
    const auto w = normalize_weights(p.weights);
    if (p.locals_a.size() != w.size() || p.locals_b.size() != w.size())
        throw ValidationError("separable: member count differs from weights");
    const std::size_t da = p.locals_a.front().size();
    const std::size_t db = p.locals_b.front().size();
    ComplexMatrix rho(da * db, da * db);
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto pa = normalized_copy(p.locals_a[k]);
        const auto pb = normalized_copy(p.locals_b[k]);
        if (pa.size() != da || pb.size() != db)
            throw ValidationError("separable: members differ in dimension");
        const auto psi = tensor_product(pa, pb);
        for (std::size_t i = 0; i < psi.size(); ++i)
            for (std::size_t j = 0; j < psi.size(); ++j)
                rho(i, j) += w[k] * psi[i] * std::conj(psi[j]);
    }
    rho.set_dims({da, db});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

std::vector<std::vector<Complex>> normalized_lambdas(
    const std::vector<std::vector<Complex>>& lambdas, std::size_t members) {
    if (lambdas.size() != members)
        throw ValidationError("family: lambda count differs from weights");
    const std::size_t d = lambdas.front().size();
    std::vector<std::vector<Complex>> out;
    out.reserve(members);
    for (const auto& lam : lambdas) {
        if (lam.size() != d)
            throw ValidationError("family: lambda vectors differ in length");
        out.push_back(normalized_copy(lam));
    }
    return out;
}

DensityMatrix build_ensemble_entangled(const EnsembleEntangledParams& p) {
    const auto w = normalize_weights(p.weights);
    const auto lams = normalized_lambdas(p.lambdas, w.size());
    const std::size_t d = lams.front().size();
    ComplexMatrix rho(d * d, d * d);
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<Complex> psi(d * d, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = lams[k][i];
        for (std::size_t i = 0; i < psi.size(); ++i)
            for (std::size_t j = 0; j < psi.size(); ++j)
                rho(i, j) += w[k] * psi[i] * std::conj(psi[j]);
    }
    rho.set_dims({d, d});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

DensityMatrix build_ensemble_decohered(const EnsembleDecoheredParams& p) {
    const auto w = normalize_weights(p.weights);
    const auto lams = normalized_lambdas(p.lambdas, w.size());
    const std::size_t d = lams.front().size();
    ComplexMatrix rho(d * d, d * d);
    for (std::size_t k = 0; k < w.size(); ++k)
        for (std::size_t i = 0; i < d; ++i)
            rho(i * d + i, i * d + i) += w[k] * std::norm(lams[k][i]);
    rho.set_dims({d, d});
    return DensityMatrix(std::move(rho), FamilyParams(p));
}

}  // namespace

DensityMatrix build_family(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> DensityMatrix {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ProductBasisParams>)
                return build_product_basis(p);
            else if constexpr (std::is_same_v<T, ProductPureParams>)
                return build_product_pure(p);
            else if constexpr (std::is_same_v<T, EnsembleProductParams>)
                return build_ensemble_product(p);
            else if constexpr (std::is_same_v<T, EntangledQuditParams>)
                return build_entangled_qudit(p);
            else if constexpr (std::is_same_v<T, DecoheredQuditParams>)
                return build_decohered_qudit(p);
            else if constexpr (std::is_same_v<T, SeparableParams>)
                return build_separable(p);
            else if constexpr (std::is_same_v<T, EnsembleEntangledParams>)
                return build_ensemble_entangled(p);
            else if constexpr (std::is_same_v<T, EnsembleDecoheredParams>)
                return build_ensemble_decohered(p);
            else
                return wfes_density(EnsembleDecomposition(
                    [&] {
                        std::vector<double> w(p.gamma.size());
                        for (std::size_t k = 0; k < w.size(); ++k)
                            w[k] = std::norm(p.gamma[k]);
                        return w;
                    }(),
                    {p.members}, p.gamma));
        },
        params);
}

// ------------------------------------------------------------- entangle etc.

SchmidtResult schmidt_decompose(const PureState& psi, const Tolerances& tol) {
    const auto& dims = psi.dims();
    if (dims.size() != 2)
        throw ValidationError("schmidt_decompose: bipartite dims required");
    const std::size_t da = dims[0], db = dims[1];
    ComplexMatrix m(da, db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            m(i, j) = psi.amplitudes()[i * db + j];
    const SvdResult s = svd(m, tol);

    SchmidtResult out;
    out.coefficients = s.singular_values;
    out.basis_a = s.u;
    out.basis_b = s.v.conjugate();
    return out;
}

PureState entangle(const ScopeDecomposition& scope_a,
                   const ScopeDecomposition& scope_b,
                   const std::vector<std::size_t>& pairing,
                   const std::vector<std::size_t>& branches) {
    scope_a.validate();
    scope_b.validate();
    if (scope_a.parties() != 1 || scope_b.parties() != 1)
        throw ValidationError("entangle: expected two single-party scopes");
    const auto& a = scope_a.coeffs[0];
    const auto& b = scope_b.coeffs[0];
    const auto ex = expand_branches(a, b, pairing, branches);
    const std::size_t da = a.size(), db = b.size();
    std::vector<Complex> psi(da * db, Complex(0.0, 0.0));
    const double scale = std::sqrt(ex.norm2_eta);
    for (std::size_t k = 0; k < ex.eta.size(); ++k)
        psi[ex.a_index[k] * db + ex.b_index[k]] = ex.eta[k] / scale;
    return PureState(std::move(psi), {da, db});
}

namespace {

// True when every local is a standard basis vector (up to phase) and no
// two members of one party share a basis index.
bool locals_are_classical(const std::vector<std::vector<Complex>>& locals) {
    std::set<std::size_t> used;
    for (const auto& v : locals) {
        std::size_t hot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > 1e-12) {
                if (hot != v.size()) return false;  // two nonzero entries
                hot = i;
            }
        }
        if (hot == v.size()) return false;
        if (!used.insert(hot).second) return false;
    }
    return true;
}

std::vector<std::vector<Complex>> orthogonal_point_locals(std::size_t n) {
    std::vector<std::vector<Complex>> locals(n,
                                             std::vector<Complex>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) locals[k][k] = 1.0;
    return locals;
}

}  // namespace

DensityMatrix classical_reduction(const DensityMatrix& rho) {
    if (!rho.tag())
        throw DomainError(
            "classical_reduction: requires a family tag (separable or "
            "ensemble_entangled)");
    const FamilyParams& tag = *rho.tag();
    if (const auto* sep = std::get_if<SeparableParams>(&tag)) {
        if (locals_are_classical(sep->locals_a) &&
            locals_are_classical(sep->locals_b))
            return rho;  // already classical
        SeparableParams reduced;
        reduced.weights = sep->weights;
        reduced.locals_a = orthogonal_point_locals(sep->weights.size());
        reduced.locals_b = reduced.locals_a;
        return build_family(FamilyParams(reduced));
    }
    if (const auto* ee = std::get_if<EnsembleEntangledParams>(&tag)) {
        SeparableParams reduced;
        reduced.weights = ee->weights;
        reduced.locals_a = orthogonal_point_locals(ee->weights.size());
        reduced.locals_b = reduced.locals_a;
        return build_family(FamilyParams(reduced));
    }
    throw DomainError(
        "classical_reduction: defined on separable or ensemble_entangled "
        "family tags, got " + family_name(family_of(tag)));
}

DensityMatrix wfes_density(const EnsembleDecomposition& ensemble) {
    if (ensemble.parties() != 1)
        throw ValidationError(
            "wfes_density: wavefunction ensembles are single-party");
    const auto gamma = ensemble.gamma_or_default();
    const auto& members = ensemble.locals()[0];
    const std::size_t d = members.front().size();
    ComplexMatrix rho(d, d);
    for (std::size_t k = 0; k < members.size(); ++k)
        for (std::size_t kp = 0; kp < members.size(); ++kp) {
            const Complex coeff = gamma[k] * std::conj(gamma[kp]);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    rho(i, j) +=
                        coeff * members[k][i] * std::conj(members[kp][j]);
        }
    rho.set_dims({d});
    WfesParams tag{gamma, members};
    return DensityMatrix(std::move(rho), FamilyParams(std::move(tag)));
}

DensityMatrix sub_decohere(const DensityMatrix& wfes) {
    if (!wfes.tag() || family_of(*wfes.tag()) != Family::Wfes)
        throw DomainError(
            "sub_decohere: input must carry a wavefunction-ensemble tag");
    const auto& p = std::get<WfesParams>(*wfes.tag());
    const std::size_t d = p.members.front().size();
    ComplexMatrix rho(d, d);
    for (std::size_t k = 0; k < p.members.size(); ++k) {
        const double w = std::norm(p.gamma[k]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                rho(i, j) += w * p.members[k][i] * std::conj(p.members[k][j]);
    }
    rho.set_dims({d});
    return DensityMatrix(std::move(rho));
}

DensityMatrix decohere(const DensityMatrix& rho, const ComplexMatrix& basis) {
    const std::size_t d = rho.dim();
    if (basis.rows() != d || basis.cols() != d)
        throw ValidationError("decohere: basis shape mismatch");
    if ((basis.adjoint() * basis - ComplexMatrix::identity(d)).max_abs() >
        kDefaultTol.unitarity)
        throw ValidationError("decohere: basis columns are not orthonormal");
    if (std::abs(rho.matrix().trace() - Complex(1.0)) > kDefaultTol.norm_input)
        throw ValidationError(
            "decohere: input trace differs from one (sub-decohere a "
            "wavefunction ensemble first)");

    const ComplexMatrix in_basis = basis.adjoint() * rho.matrix() * basis;
    ComplexMatrix diag(d, d);
    for (std::size_t i = 0; i < d; ++i)
        diag(i, i) = Complex(in_basis(i, i).real(), 0.0);
    ComplexMatrix out = basis * diag * basis.adjoint();
    if (!rho.matrix().dims().empty()) out.set_dims(rho.matrix().dims());

    // Decohering an entangled qudit in the computational product basis
    // lands exactly on the decohered-qudit family; carry the tag along.
    std::optional<FamilyParams> tag;
    if (rho.tag() && family_of(*rho.tag()) == Family::EntangledQudit &&
        (basis - ComplexMatrix::identity(d)).max_abs() == 0.0) {
        const auto& p = std::get<EntangledQuditParams>(*rho.tag());
        tag = FamilyParams(DecoheredQuditParams{p.a, p.b, p.pairing});
    }
    return DensityMatrix(std::move(out), std::move(tag));
}

}  // namespace scopelab
