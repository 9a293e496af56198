#include "scopelab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "scopelab/errors.hpp"
#include "scopelab/numerics.hpp"
#include "scopelab/optimize.hpp"

namespace scopelab {

namespace {

void require_normalized(const std::vector<Complex>& v, const Tolerances& tol,
                        const char* who) {
    if (v.empty()) throw ValidationError(std::string(who) + ": empty input");
    if (std::abs(norm2(v) - 1.0) > tol.norm_input)
        throw ValidationError(std::string(who) +
                              ": coefficients are not normalized");
}

double pair_product_sum(const std::vector<Complex>& v) {
    double eps = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            eps += std::abs(v[i]) * std::abs(v[j]);
    return eps;
}

}  // namespace

double degree_of_superposition(const std::vector<Complex>& coeffs,
                               const Tolerances& tol) {
    require_normalized(coeffs, tol, "degree_of_superposition");
    return pair_product_sum(coeffs);
}

double degree_of_entanglement(const std::vector<Complex>& branch_coeffs,
                              const Tolerances& tol) {
    require_normalized(branch_coeffs, tol, "degree_of_entanglement");
    return pair_product_sum(branch_coeffs);
}

DirectCrossResult direct_cross_entanglement(const std::vector<Complex>& a,
                                            const std::vector<Complex>& b,
                                            const Tolerances& tol) {
    if (a.size() != 2 || b.size() != 2)
        throw ValidationError(
            "direct_cross_entanglement: two 2-state scopes expected");
    require_normalized(a, tol, "direct_cross_entanglement");
    require_normalized(b, tol, "direct_cross_entanglement");

    const double na = std::sqrt(norm2(a)), nb = std::sqrt(norm2(b));
    const double a1 = std::abs(a[0]) / na, a2 = std::abs(a[1]) / na;
    const double b1 = std::abs(b[0]) / nb, b2 = std::abs(b[1]) / nb;

    const double num = (a1 * a2) * (b1 * b2);
    const double dd = (a1 * b1) * (a1 * b1) + (a2 * b2) * (a2 * b2);
    const double dc = (a1 * b2) * (a1 * b2) + (a2 * b1) * (a2 * b1);

    DirectCrossResult r;
    r.e_direct = (dd > 0.0) ? num / dd : 0.0;
    r.e_cross = (dc > 0.0) ? num / dc : 0.0;
    const double sum = r.e_direct + r.e_cross;
    r.e_reduced = (sum > 0.0) ? r.e_direct * r.e_cross / sum : 0.0;
    return r;
}

double nonorthogonality(const EnsembleDecomposition& ensemble) {
    double total = 0.0;
    for (const auto& party : ensemble.locals())
        for (std::size_t x = 0; x < party.size(); ++x)
            for (std::size_t y = 0; y < party.size(); ++y) {
                if (x == y) continue;
                total += std::abs(inner(party[x], party[y]));
            }
    return total;
}

// --------------------------------------------------------------- entropies

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw DomainError("binary_entropy: argument outside [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double shannon_entropy_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x < -1e-12)
            throw ValidationError("shannon_entropy_bits: negative weight");
        if (x > 0.0) s -= x * std::log2(x);
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
    if (std::abs(rho.matrix().trace() - Complex(1.0)) > tol.norm_input)
        throw ValidationError(
            "von_neumann_entropy: trace differs from one (sub-decohere a "
            "wavefunction ensemble first)");
    const auto eig = eigh(rho.matrix(), tol);
    double s = 0.0;
    for (double lam : eig.values)
        if (lam > 0.0) s -= lam * std::log2(lam);
    return std::max(s, 0.0);
}

// -------------------------------------------------- two-qubit entanglement

double concurrence(const PureState& psi, ConcurrenceBasis mode,
                   const Tolerances& tol) {
    if (psi.dim() != 4 ||
        (!psi.dims().empty() && psi.dims() != std::vector<std::size_t>{2, 2}))
        throw ValidationError("concurrence: a 2x2 pure state is required");
    const auto& v = psi.amplitudes();
    const Complex a = v[0], b = v[1], c = v[2], d = v[3];

    switch (mode) {
        case ConcurrenceBasis::Computation:
            return 2.0 * std::abs(a * d - b * c);
        case ConcurrenceBasis::Magic: {
            // Components in the magic basis e1 = (|00>+|11>)/sqrt2,
            // e2 = i(|00>-|11>)/sqrt2, e3 = i(|01>+|10>)/sqrt2,
            // e4 = (|01>-|10>)/sqrt2; C = |sum alpha_k^2|.
            const double s = 1.0 / std::sqrt(2.0);
            const Complex mi(0.0, -1.0);
            const Complex a1 = (a + d) * s;
            const Complex a2 = mi * (a - d) * s;
            const Complex a3 = mi * (b + c) * s;
            const Complex a4 = (b - c) * s;
            return std::abs(a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4);
        }
        case ConcurrenceBasis::Schmidt: {
            const PureState bip(v, {2, 2});
            const auto s = schmidt_decompose(bip, tol);
            return 2.0 * s.coefficients[0] * s.coefficients[1];
        }
    }
    throw ValidationError("concurrence: unknown basis mode");
}

double entanglement_of_formation(double concurrence_value) {
    if (concurrence_value < -1e-12 || concurrence_value > 1.0 + 1e-12)
        throw DomainError(
            "entanglement_of_formation: concurrence outside [0, 1]");
    const double c = std::clamp(concurrence_value, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double formation_entropy_of_ensemble(
    const std::vector<WeightedPureState>& members) {
    if (members.empty())
        throw ValidationError("formation_entropy_of_ensemble: empty list");
    std::vector<double> w;
    w.reserve(members.size());
    for (const auto& m : members) w.push_back(m.weight);
    w = normalize_weights(std::move(w));
    double total = 0.0;
    for (std::size_t k = 0; k < members.size(); ++k)
        total += w[k] * entanglement_of_formation(
                            concurrence(members[k].state));
    return total;
}

ComplexMatrix entropy_concurrence_matrix(double concurrence_value) {
    if (concurrence_value < -1e-12 || concurrence_value > 1.0 + 1e-12)
        throw DomainError(
            "entropy_concurrence_matrix: concurrence outside [0, 1]");
    const double c = std::clamp(concurrence_value, 0.0, 1.0);
    const double top = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
    ComplexMatrix lam(2, 2);
    lam(0, 0) = top;
    lam(1, 1) = 1.0 - top;  // trace is exactly one by construction
    lam(0, 1) = 0.5 * c;
    lam(1, 0) = 0.5 * c;
    return lam;
}

double negativity(const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.matrix().dims().size() != 2)
        throw ValidationError("negativity: bipartite dims are required");
    const ComplexMatrix pt = partial_transpose(rho.matrix(), 0);

    const double via_norm = 0.5 * (trace_norm(pt, tol) - 1.0);
    double neg_sum = 0.0;
    for (double lam : eigh(pt, tol).values)
        if (lam < 0.0) neg_sum += lam;
    const double via_eigs = std::abs(neg_sum);

    if (std::abs(via_norm - via_eigs) > tol.reconstruct)
        throw Error("negativity: trace-norm and eigenvalue routes disagree");
    return via_eigs;
}

double robustness_pure(const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.purity() < 1.0 - tol.norm_input)
        throw ValidationError("robustness_pure: input is not a pure state");
    return 2.0 * negativity(rho, tol);
}

// ------------------------------------------- relative entropy of entanglement

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Complex> bloch_state(double theta, double phi) {
    return {std::cos(0.5 * theta),
            std::polar(std::sin(0.5 * theta), phi)};
}

// Layout of the REE parameter vector: K softmax weight pre-images followed
// by K quadruples (theta_a, phi_a, theta_b, phi_b).
struct SigmaAnsatz {
    std::vector<double> weights;
    std::vector<std::vector<Complex>> locals_a, locals_b;
};

SigmaAnsatz decode_sigma(const std::vector<double>& x, std::size_t k) {
    SigmaAnsatz s;
    double wmax = x[0];
    for (std::size_t i = 1; i < k; ++i) wmax = std::max(wmax, x[i]);
    double wsum = 0.0;
    s.weights.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        s.weights[i] = std::exp(x[i] - wmax);
        wsum += s.weights[i];
    }
    for (double& w : s.weights) w /= wsum;
    for (std::size_t i = 0; i < k; ++i) {
        const double* q = &x[k + 4 * i];
        s.locals_a.push_back(bloch_state(q[0], q[1]));
        s.locals_b.push_back(bloch_state(q[2], q[3]));
    }
    return s;
}

ComplexMatrix sigma_matrix(const SigmaAnsatz& s) {
    ComplexMatrix m(4, 4);
    for (std::size_t kk = 0; kk < s.weights.size(); ++kk) {
        const auto prod = tensor_product(s.locals_a[kk], s.locals_b[kk]);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) += s.weights[kk] * prod[i] * std::conj(prod[j]);
    }
    return m;
}

// Tr(rho log2 sigma) with a spectral floor standing in for -infinity on
// the null space; support violations show up as large positive penalties
// in the relative entropy.
double trace_rho_log_sigma(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                           const Tolerances& tol) {
    const auto eig = eigh(sigma, tol);
    const std::size_t n = rho.rows();
    double total = 0.0;
    for (std::size_t kk = 0; kk < n; ++kk) {
        const double lam = std::max(eig.values[kk], 1e-18);
        // <v_k| rho |v_k>
        Complex q(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            Complex row(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                row += rho(i, j) * eig.vectors(j, kk);
            q += std::conj(eig.vectors(i, kk)) * row;
        }
        total += std::log2(lam) * q.real();
    }
    return total;
}

// Bloch angles (theta, phi) of a normalized qubit column, up to global phase.
std::pair<double, double> angles_of(const Complex& u0, const Complex& u1) {
    const double m0 = std::abs(u0), m1 = std::abs(u1);
    const double theta = 2.0 * std::atan2(m1, m0);
    double phi = 0.0;
    if (m1 > 1e-14) phi = (m0 > 1e-14) ? std::arg(u1) - std::arg(u0)
                                       : std::arg(u1);
    return {theta, phi};
}

}  // namespace

ReeResult relative_entropy_of_entanglement(const DensityMatrix& rho,
                                           const ReeOptions& opts,
                                           const Tolerances& tol) {
    if (rho.dim() != 4)
        throw ValidationError(
            "relative_entropy_of_entanglement: a two-qubit state is required");
    if (opts.products < 4 || opts.restarts < 2 || opts.budget < 100)
        throw ValidationError(
            "relative_entropy_of_entanglement: options too small (need >= 4 "
            "products, >= 2 restarts, >= 100 evaluations)");
    ComplexMatrix m = rho.matrix();
    if (m.dims().size() != 2) m.set_dims({2, 2});

    const std::size_t K = opts.products;
    const std::size_t nparam = K + 4 * K;

    // Tr(rho log2 rho) on the support of rho.
    double tr_rho_log_rho = 0.0;
    for (double lam : eigh(m, tol).values)
        if (lam > 0.0) tr_rho_log_rho += lam * std::log2(lam);

    std::size_t evaluations = 0;
    auto objective = [&](const std::vector<double>& x) {
        ++evaluations;
        const SigmaAnsatz s = decode_sigma(x, K);
        return tr_rho_log_rho - trace_rho_log_sigma(m, sigma_matrix(s), tol);
    };

    // Structured restart seeds: the input decohered in the computational
    // product basis, and decohered in the product of its local reduced
    // eigenbases (for pure inputs the latter is the exact closest
    // separable state).
    auto seed_from_products =
        [&](const std::vector<double>& q,
            const std::vector<std::pair<double, double>>& aa,
            const std::vector<std::pair<double, double>>& bb) {
            std::vector<double> x(nparam, 0.0);
            for (std::size_t i = 0; i < K; ++i)
                x[i] = std::log(i < q.size() ? std::max(q[i], 1e-12) : 1e-12);
            for (std::size_t i = 0; i < K; ++i) {
                const std::size_t src = i % aa.size();
                x[K + 4 * i + 0] = aa[src].first;
                x[K + 4 * i + 1] = aa[src].second;
                x[K + 4 * i + 2] = bb[src].first;
                x[K + 4 * i + 3] = bb[src].second;
            }
            return x;
        };

    std::vector<std::vector<double>> seeds;
    {
        // (a) computational-basis diagonal
        std::vector<double> q(4);
        std::vector<std::pair<double, double>> aa(4), bb(4);
        const double pi = std::acos(-1.0);
        for (std::size_t i = 0; i < 4; ++i) {
            q[i] = m(i, i).real();
            aa[i] = {(i / 2) ? pi : 0.0, 0.0};
            bb[i] = {(i % 2) ? pi : 0.0, 0.0};
        }
        seeds.push_back(seed_from_products(q, aa, bb));

        // (b) local reduced eigenbases
        const auto va = eigh(partial_trace(m, {0}), tol).vectors;
        const auto vb = eigh(partial_trace(m, {1}), tol).vectors;
        std::vector<double> q2;
        std::vector<std::pair<double, double>> aa2, bb2;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Complex> u = {va(0, i), va(1, i)};
                std::vector<Complex> v = {vb(0, j), vb(1, j)};
                const auto prod = tensor_product(u, v);
                const auto mprod = m.apply(prod);
                q2.push_back(inner(prod, mprod).real());
                aa2.push_back(angles_of(u[0], u[1]));
                bb2.push_back(angles_of(v[0], v[1]));
            }
        seeds.push_back(seed_from_products(q2, aa2, bb2));
    }

    std::mt19937_64 rng(opts.seed);
    const double pi = std::acos(-1.0);
    while (seeds.size() < opts.restarts) {
        std::vector<double> x(nparam);
        for (std::size_t i = 0; i < K; ++i)
            x[i] = -1.0 + 2.0 * uniform01(rng);
        for (std::size_t i = 0; i < 4 * K; ++i) {
            const bool is_theta = (i % 2) == 0;
            x[K + i] = (is_theta ? pi : 2.0 * pi) * uniform01(rng);
        }
        seeds.push_back(std::move(x));
    }

    NelderMeadOptions nm;
    nm.max_evaluations = std::max<std::size_t>(opts.budget / opts.restarts,
                                               nparam + 2);
    nm.initial_step = 0.2;
    nm.x_tolerance = 1e-8;
    nm.f_tolerance = 1e-12;

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    bool any_converged = false;
    std::size_t near_best = 0;

    std::vector<double> restart_values;
    for (const auto& seed : seeds) {
        const auto r = nelder_mead(objective, seed, nm);
        restart_values.push_back(r.value);
        any_converged = any_converged || r.converged;
        if (r.value < best) {
            best = r.value;
            best_x = r.x;
        }
    }
    for (double v : restart_values)
        if (v <= best + 1e-4) ++near_best;

    const SigmaAnsatz s = decode_sigma(best_x, K);
    SeparableParams sep;
    sep.weights = s.weights;
    sep.locals_a = s.locals_a;
    sep.locals_b = s.locals_b;
    DensityMatrix sigma = build_family(FamilyParams(sep));

    ReeResult out{std::max(best, 0.0), std::move(sigma),
                  any_converged || near_best >= 2 || best <= 1e-8,
                  evaluations};
    return out;
}

// ------------------------------------------------------- λ-decompositions

LsCorrelationResult ls_correlation(
    const DensityMatrix& rho, const DensityMatrix& sigma,
    const std::function<double(const DensityMatrix&)>& measure,
    const Tolerances& tol) {
    if (rho.dim() != sigma.dim())
        throw ValidationError("ls_correlation: dimension mismatch");

    auto feasible = [&](double lam) {
        const ComplexMatrix diff =
            rho.matrix() - ComplexMatrix(lam * sigma.matrix());
        return eigh(diff, tol).values.front() >= -tol.psd;
    };

    double lambda_star;
    if (feasible(1.0)) {
        lambda_star = 1.0;
    } else {
        double lo = 0.0, hi = 1.0;  // rho itself is PSD, so lo is feasible
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
        lambda_star = lo;
    }
    return {lambda_star, lambda_star * measure(sigma)};
}

// ------------------------------------------------------------- classifier

namespace {

void fill_spectrum_facts(CorrelationProfile& p, const DensityMatrix& rho,
                         const Tolerances& tol) {
    p.entropy_bits = von_neumann_entropy(rho, tol);
    if (rho.matrix().dims().size() == 2)
        p.negativity_value = negativity(rho, tol);
}

std::vector<Complex> normalized_branch_coeffs(const EntangledQuditParams& q) {
    std::vector<Complex> a = q.a, b = q.b;
    normalize_coefficients(a);
    normalize_coefficients(b);
    const std::size_t nb = std::min(a.size(), b.size());
    std::vector<Complex> eta(nb);
    for (std::size_t i = 0; i < nb; ++i) eta[i] = a[i] * b[q.pairing[i]];
    normalize_coefficients(eta);
    return eta;
}

double lambda_overlap_sum(const std::vector<double>& weights,
                          const std::vector<std::vector<Complex>>& lambdas) {
    return nonorthogonality(
        EnsembleDecomposition(weights, {lambdas, lambdas}));
}

}  // namespace

CorrelationProfile classify(const DensityMatrix& rho, const Tolerances& tol) {
    CorrelationProfile p;
    if (!rho.tag()) {
        fill_spectrum_facts(p, rho, tol);
        return p;
    }
    const FamilyParams& tag = *rho.tag();
    const Family fam = family_of(tag);
    if (fam == Family::Wfes)
        throw DomainError(
            "classify: sub-decohere the wavefunction ensemble first");

    p.structural = true;
    p.family = fam;
    fill_spectrum_facts(p, rho, tol);

    switch (fam) {
        case Family::ProductBasis:
        case Family::ProductPure:
            break;  // all four correlations absent
        case Family::EntangledQudit: {
            p.entanglement = true;
            p.decohered_classicality = true;
            const auto& q = std::get<EntangledQuditParams>(tag);
            p.entanglement_value =
                degree_of_entanglement(normalized_branch_coeffs(q), tol);
            break;
        }
        case Family::DecoheredQudit:
            p.decohered_classicality = true;
            break;
        case Family::Separable: {
            p.nonorthogonality = true;
            p.coarse_grained_classicality = true;
            const auto& q = std::get<SeparableParams>(tag);
            const auto w = normalize_weights(q.weights);
            p.nonorthogonality_value = nonorthogonality(
                EnsembleDecomposition(w, {q.locals_a, q.locals_b}));
            p.coarse_entropy_bits = shannon_entropy_bits(w);
            break;
        }
        case Family::EnsembleProduct: {
            p.nonorthogonality = true;
            const auto& q = std::get<EnsembleProductParams>(tag);
            const auto w = normalize_weights(q.weights);
            p.nonorthogonality_value = nonorthogonality(
                EnsembleDecomposition(w, {q.locals_a, q.locals_b}));
            break;
        }
        case Family::EnsembleEntangled: {
            p.entanglement = true;
            p.decohered_classicality = true;
            p.nonorthogonality = true;
            p.coarse_grained_classicality = true;
            const auto& q = std::get<EnsembleEntangledParams>(tag);
            const auto w = normalize_weights(q.weights);
            double e = 0.0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                std::vector<Complex> lam = q.lambdas[k];
                normalize_coefficients(lam);
                e += w[k] * degree_of_entanglement(lam, tol);
            }
            p.entanglement_value = e;
            p.nonorthogonality_value = lambda_overlap_sum(w, q.lambdas);
            p.coarse_entropy_bits = shannon_entropy_bits(w);
            break;
        }
        case Family::EnsembleDecohered: {
            p.decohered_classicality = true;
            p.nonorthogonality = true;
            p.coarse_grained_classicality = true;
            const auto& q = std::get<EnsembleDecoheredParams>(tag);
            const auto w = normalize_weights(q.weights);
            p.nonorthogonality_value = lambda_overlap_sum(w, q.lambdas);
            p.coarse_entropy_bits = shannon_entropy_bits(w);
            break;
        }
        case Family::Wfes:
            break;  // unreachable, rejected above
    }
    return p;
}

// -------------------------------------------------------- scope magnitude

namespace {

double heron_area(double a, double b, double c, const Tolerances& tol) {
    const double s = 0.5 * (a + b + c);
    const double t = s * (s - a) * (s - b) * (s - c);
    const double scale = std::max(1.0, s * s * s * s);
    if (t < -tol.geometry * scale)
        throw DomainError(
            "scope_magnitude: distances violate the triangle inequality");
    return std::sqrt(std::max(t, 0.0));
}

double det_real(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return det;
}

}  // namespace

double scope_magnitude(const std::vector<std::vector<double>>& distances,
                       const Tolerances& tol) {
    const std::size_t n = distances.size();
    if (n == 0) throw ValidationError("scope_magnitude: empty distance matrix");
    if (n > 4)
        throw DomainError(
            "scope_magnitude: shapes are defined through the tetrahedron "
            "(n <= 4)");
    for (std::size_t i = 0; i < n; ++i) {
        if (distances[i].size() != n)
            throw ValidationError("scope_magnitude: matrix is not square");
        if (std::abs(distances[i][i]) > tol.geometry)
            throw ValidationError("scope_magnitude: nonzero self-distance");
        for (std::size_t j = 0; j < n; ++j) {
            if (distances[i][j] < 0.0)
                throw ValidationError("scope_magnitude: negative distance");
            if (std::abs(distances[i][j] - distances[j][i]) > tol.geometry)
                throw ValidationError("scope_magnitude: matrix not symmetric");
        }
    }

    if (n == 1) return 0.0;                   // point
    if (n == 2) return distances[0][1];       // segment length
    if (n == 3)                               // triangle area
        return heron_area(distances[0][1], distances[0][2], distances[1][2],
                          tol);

    // Tetrahedron volume from the Cayley-Menger determinant
    // 288 V^2 = det of the bordered squared-distance matrix.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                heron_area(distances[i][j], distances[i][k], distances[j][k],
                           tol);  // every face must embed

    std::vector<std::vector<double>> cm(5, std::vector<double>(5, 1.0));
    cm[0][0] = 0.0;
    double dmax = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cm[i + 1][j + 1] = distances[i][j] * distances[i][j];
            dmax = std::max(dmax, distances[i][j]);
        }
    const double det = det_real(cm);
    const double scale = std::max(1.0, std::pow(dmax, 6.0));
    if (det < -tol.geometry * scale)
        throw DomainError(
            "scope_magnitude: distance set embeds in no tetrahedron");
    return std::sqrt(std::max(det, 0.0) / 288.0);
}

double scope_magnitude_energies(const std::vector<double>& energies,
                                const Tolerances& tol) {
    const std::size_t n = energies.size();
    if (n == 0) throw ValidationError("scope_magnitude: empty energy list");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i][j] = std::abs(energies[i] - energies[j]);
    return scope_magnitude(d, tol);
}

}  // namespace scopelab
