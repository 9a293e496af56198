#include "scopelab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scopelab/errors.hpp"
#include "scopelab/measures.hpp"

namespace scopelab {

namespace {

void require_scope(const std::vector<Complex>& v, const Tolerances& tol,
                   const char* who) {
    if (v.empty()) throw ValidationError(std::string(who) + ": empty scope");
    double n2 = 0.0;
    for (const auto& x : v) n2 += std::norm(x);
    if (std::abs(n2 - 1.0) > tol.norm_input)
        throw ValidationError(std::string(who) + ": scope is not normalized");
}

// Bit-stable sum: accumulate in ascending order regardless of how the
// terms were produced.
double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    return std::accumulate(terms.begin(), terms.end(), 0.0);
}

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

}  // namespace

std::vector<PermutationStateReport> enumerate_perm_states(
    const std::vector<Complex>& a, const std::vector<Complex>& b,
    std::size_t max_n, const Tolerances& tol) {
    require_scope(a, tol, "enumerate_perm_states");
    require_scope(b, tol, "enumerate_perm_states");
    if (a.size() != b.size())
        throw ValidationError("enumerate_perm_states: scope sizes differ");
    const std::size_t n = a.size();
    if (n > max_n)
        throw ValidationError(
            "enumerate_perm_states: dimension exceeds the factorial cap");

    std::vector<double> ma(n), mb(n);
    for (std::size_t i = 0; i < n; ++i) {
        ma[i] = std::abs(a[i]);
        mb[i] = std::abs(b[i]);
    }

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);

    std::vector<PermutationStateReport> out;
    do {
        PermutationStateReport r;
        r.permutation = sigma;
        std::vector<double> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] * mb[sigma[i]];
        for (std::size_t i = 0; i < n; ++i) {
            r.beta += m[i] * m[i];
            for (std::size_t j = i + 1; j < n; ++j) r.alpha += m[i] * m[j];
        }
        r.entanglement = (r.beta > 0.0) ? r.alpha / r.beta : 0.0;
        out.push_back(std::move(r));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

IdentityReport verify_sum_identities(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b,
                                     std::size_t max_n, const Tolerances& tol) {
    const auto states = enumerate_perm_states(a, b, max_n, tol);
    const std::size_t n = a.size();
    if (n < 2)
        throw ValidationError("verify_sum_identities: need at least 2 levels");

    std::vector<double> betas, alphas, ratios;
    betas.reserve(states.size());
    alphas.reserve(states.size());
    ratios.reserve(states.size());
    for (const auto& s : states) {
        betas.push_back(s.beta);
        alphas.push_back(s.alpha);
        // alpha / E collapses to beta algebraically; fall back to that
        // limit when a degenerate permutation state has no entanglement.
        ratios.push_back(s.entanglement > 0.0 ? s.alpha / s.entanglement
                                              : s.beta);
    }

    const double eps_a = degree_of_superposition(a, tol);
    const double eps_b = degree_of_superposition(b, tol);

    IdentityReport rep;
    rep.n = n;
    rep.trials = 1;
    rep.sum_beta_residual = std::abs(sorted_sum(betas) - factorial(n - 1));
    rep.sum_alpha_residual = std::abs(
        sorted_sum(alphas) - 2.0 * factorial(n - 2) * eps_a * eps_b);
    rep.sum_alpha_over_e_residual =
        std::abs(sorted_sum(ratios) - factorial(n - 1));
    rep.max_abs_residual =
        std::max({rep.sum_beta_residual, rep.sum_alpha_residual,
                  rep.sum_alpha_over_e_residual});
    return rep;
}

GhzFamilyResult ghz_family(
    const std::vector<std::vector<Complex>>& party_coeffs,
    const Tolerances& tol) {
    const std::size_t m = party_coeffs.size();
    if (m < 2) throw ValidationError("ghz_family: at least two parties");
    if (m > 20) throw ValidationError("ghz_family: too many parties");
    for (const auto& c : party_coeffs) {
        if (c.size() != 2)
            throw ValidationError("ghz_family: each party needs a 2-vector");
        require_scope(c, tol, "ghz_family");
    }

    GhzFamilyResult out;
    const std::size_t count = std::size_t{1} << (m - 1);
    for (std::size_t k = 0; k < count; ++k) {
        GhzStateReport r;
        r.pattern.resize(m, 0);
        for (std::size_t j = 1; j < m; ++j)
            r.pattern[j] = (k >> (m - 1 - j)) & 1u;
        Complex eta1(1.0, 0.0), eta2(1.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            eta1 *= party_coeffs[j][r.pattern[j]];
            eta2 *= party_coeffs[j][1 - r.pattern[j]];
        }
        const double m1 = std::abs(eta1), m2 = std::abs(eta2);
        r.alpha = m1 * m2;
        r.beta = m1 * m1 + m2 * m2;
        r.entanglement = (r.beta > 0.0) ? r.alpha / r.beta : 0.0;
        out.states.push_back(std::move(r));
    }

    std::vector<double> inv;
    inv.reserve(out.states.size());
    for (const auto& s : out.states) {
        if (s.entanglement <= 0.0) {
            out.e_dagger = 0.0;  // a zero coefficient kills one channel
            return out;
        }
        inv.push_back(1.0 / s.entanglement);
    }
    out.e_dagger = 1.0 / sorted_sum(std::move(inv));
    return out;
}

MixtureIdentityResult mixture_identity(double e_direct, double e_cross,
                                       double p1, double p2,
                                       const Tolerances& tol) {
    if (e_direct < 0.0 || e_cross < 0.0)
        throw ValidationError("mixture_identity: entanglements must be >= 0");
    if (e_direct == 0.0 && e_cross == 0.0)
        throw DomainError("mixture_identity: both entanglements are zero");
    if (p1 < 0.0 || p2 < 0.0 || std::abs(p1 + p2 - 1.0) > tol.norm_input)
        throw ValidationError(
            "mixture_identity: (p1, p2) is not a probability pair");

    const double u1 = std::sqrt(p1), u2 = std::sqrt(p2);
    const double total = e_direct + e_cross;
    const double uc = (u1 * e_direct + u2 * e_cross) / total;
    const double u0 = std::abs(u1 - u2);
    const double e_dagger = e_direct * e_cross / total;

    MixtureIdentityResult r;
    r.lhs = p1 * e_direct + p2 * e_cross;
    r.rhs = total * uc * uc + e_dagger * u0 * u0;
    return r;
}

}  // namespace scopelab
