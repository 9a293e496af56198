#include "scopelab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "scopelab/errors.hpp"
#include "scopelab/numerics.hpp"

namespace scopelab {

namespace {

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol,
                       const char* who) {
    if (!m.is_square())
        throw ValidationError(std::string(who) + ": matrix is not square");
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > tol.hermiticity * scale)
        throw ValidationError(std::string(who) + ": matrix is not Hermitian");
}

void require_unitary(const ComplexMatrix& m, const Tolerances& tol,
                     const char* who) {
    if (!m.is_square())
        throw ValidationError(std::string(who) + ": matrix is not square");
    const ComplexMatrix gram = m.adjoint() * m;
    if ((gram - ComplexMatrix::identity(m.rows())).max_abs() > tol.unitarity)
        throw ValidationError(std::string(who) + ": matrix is not unitary");
}

double real_expectation(const std::vector<Complex>& psi,
                        const ComplexMatrix& a) {
    const Complex v = inner(psi, a.apply(psi));
    return v.real();
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(ComplexMatrix h, const Tolerances& tol)
    : h_(std::move(h)) {
    require_hermitian(h_, tol, "HamiltonianSpec");
}

HamiltonianSpec::HamiltonianSpec(ComplexMatrix h0, ComplexMatrix hprime,
                                 const Tolerances& tol)
    : h_(h0 + hprime), h0_(std::move(h0)), hprime_(std::move(hprime)) {
    require_hermitian(*h0_, tol, "HamiltonianSpec (free part)");
    require_hermitian(*hprime_, tol, "HamiltonianSpec (interaction part)");
    require_hermitian(h_, tol, "HamiltonianSpec");
}

const ComplexMatrix& HamiltonianSpec::h0() const {
    if (!h0_) throw ValidationError("HamiltonianSpec: no split was provided");
    return *h0_;
}

const ComplexMatrix& HamiltonianSpec::hprime() const {
    if (!hprime_)
        throw ValidationError("HamiltonianSpec: no split was provided");
    return *hprime_;
}

PureState evolve(const PureState& psi, const HamiltonianSpec& h, double t,
                 const Tolerances& tol) {
    if (h.h().rows() != psi.dim())
        throw ValidationError("evolve: dimension mismatch");
    const ComplexMatrix u = evolution_unitary(h.h(), t, tol);
    return PureState(u.apply(psi.amplitudes()), psi.dims());
}

DensityMatrix evolve(const DensityMatrix& rho, const HamiltonianSpec& h,
                     double t, const Tolerances& tol) {
    if (h.h().rows() != rho.dim())
        throw ValidationError("evolve: dimension mismatch");
    const ComplexMatrix u = evolution_unitary(h.h(), t, tol);
    ComplexMatrix out = u * rho.matrix() * u.adjoint();
    if (!rho.matrix().dims().empty()) out.set_dims(rho.matrix().dims());
    return DensityMatrix(out, std::nullopt, tol);
}

PictureExpectations expectation_in_pictures(const ComplexMatrix& observable,
                                            const PureState& psi0,
                                            const HamiltonianSpec& h, double t,
                                            const Tolerances& tol) {
    require_hermitian(observable, tol, "expectation_in_pictures");
    if (observable.rows() != psi0.dim() || h.h().rows() != psi0.dim())
        throw ValidationError("expectation_in_pictures: dimension mismatch");
    if (!h.has_split())
        throw ValidationError(
            "expectation_in_pictures: the interaction picture needs the "
            "H = H0 + H' split");

    PictureExpectations out;
    const ComplexMatrix u = evolution_unitary(h.h(), t, tol);

    // Schrodinger: the state moves.
    out.schrodinger = real_expectation(u.apply(psi0.amplitudes()), observable);

    // Heisenberg: the operator moves.
    const ComplexMatrix a_t = u.adjoint() * observable * u;
    out.heisenberg = real_expectation(psi0.amplitudes(), a_t);

    // Dirac: the free part moves the operator, the interaction moves the
    // state.
    const ComplexMatrix u0 = evolution_unitary(h.h0(), t, tol);
    const ComplexMatrix u_int = u0.adjoint() * u;
    const ComplexMatrix a_int = u0.adjoint() * observable * u0;
    out.dirac = real_expectation(u_int.apply(psi0.amplitudes()), a_int);
    return out;
}

Channel::Channel(std::vector<ComplexMatrix> kraus, const Tolerances& tol)
    : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw ValidationError("Channel: no Kraus operators");
    const std::size_t d = kraus_.front().rows();
    ComplexMatrix sum(d, d);
    for (const auto& k : kraus_) {
        if (!k.is_square() || k.rows() != d)
            throw ValidationError("Channel: Kraus operator shape mismatch");
        sum = sum + k.adjoint() * k;
    }
    if ((sum - ComplexMatrix::identity(d)).max_abs() > tol.unitarity)
        throw ValidationError(
            "Channel: Kraus operators do not resolve the identity");
}

Channel kraus_from_dilation(const ComplexMatrix& u, std::size_t env_dim,
                            std::size_t env_init, const Tolerances& tol) {
    require_unitary(u, tol, "kraus_from_dilation");
    if (env_dim == 0 || u.rows() % env_dim != 0)
        throw ValidationError(
            "kraus_from_dilation: environment dimension does not divide the "
            "dilation");
    if (env_init >= env_dim)
        throw ValidationError(
            "kraus_from_dilation: environment start index out of range");
    const std::size_t ds = u.rows() / env_dim;

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(env_dim);
    for (std::size_t i = 0; i < env_dim; ++i) {
        ComplexMatrix k(ds, ds);
        for (std::size_t r = 0; r < ds; ++r)
            for (std::size_t c = 0; c < ds; ++c)
                k(r, c) = u(r * env_dim + i, c * env_dim + env_init);
        kraus.push_back(std::move(k));
    }
    return Channel(std::move(kraus), tol);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const Channel& ch,
                            const Tolerances& tol) {
    if (ch.dim() != rho.dim())
        throw ValidationError("apply_channel: dimension mismatch");
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto& k : ch.kraus())
        out = out + k * rho.matrix() * k.adjoint();
    if (!rho.matrix().dims().empty()) out.set_dims(rho.matrix().dims());
    return DensityMatrix(out, std::nullopt, tol);
}

HistorySpec::HistorySpec(DensityMatrix initial, std::vector<HistoryStep> steps,
                         const Tolerances& tol)
    : initial_(std::move(initial)), steps_(std::move(steps)) {
    const std::size_t d = initial_.dim();
    for (const auto& step : steps_) {
        require_unitary(step.unitary, tol, "HistorySpec");
        if (step.unitary.rows() != d)
            throw ValidationError("HistorySpec: unitary dimension mismatch");
        if (step.projectors.empty())
            throw ValidationError("HistorySpec: empty projector family");
        ComplexMatrix sum(d, d);
        for (std::size_t i = 0; i < step.projectors.size(); ++i) {
            const ComplexMatrix& p = step.projectors[i];
            if (!p.is_square() || p.rows() != d)
                throw ValidationError(
                    "HistorySpec: projector dimension mismatch");
            if (p.hermiticity_defect() > tol.projector)
                throw ValidationError("HistorySpec: projector not Hermitian");
            for (std::size_t j = 0; j < step.projectors.size(); ++j) {
                const ComplexMatrix prod = p * step.projectors[j];
                const ComplexMatrix target =
                    (i == j) ? p : ComplexMatrix(p.rows(), p.cols());
                if ((prod - target).max_abs() > tol.projector)
                    throw ValidationError(
                        "HistorySpec: family is not orthogonal-idempotent");
            }
            sum = sum + p;
        }
        if ((sum - ComplexMatrix::identity(d)).max_abs() > tol.projector)
            throw ValidationError(
                "HistorySpec: projectors do not resolve the identity");
    }
}

std::size_t HistorySpec::lattice_size() const {
    std::size_t total = 1;
    for (const auto& step : steps_) {
        if (total > 1000000 / std::max<std::size_t>(step.projectors.size(), 1))
            return 1000001;  // saturate well above every cap we enforce
        total *= step.projectors.size();
    }
    return total;
}

namespace {

ComplexMatrix class_operator_applied(const HistorySpec& spec,
                                     const std::vector<std::size_t>& alpha) {
    const auto& steps = spec.steps();
    if (alpha.size() != steps.size())
        throw ValidationError(
            "decoherence_functional: outcome list length mismatch");
    ComplexMatrix m = spec.initial().matrix();
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (alpha[k] >= steps[k].projectors.size())
            throw ValidationError(
                "decoherence_functional: outcome index out of range");
        m = steps[k].projectors[alpha[k]] * (steps[k].unitary * m);
    }
    return m;
}

}  // namespace

Complex decoherence_functional(const HistorySpec& spec,
                               const std::vector<std::size_t>& alpha,
                               const std::vector<std::size_t>& alpha_prime) {
    // Tr(C_a rho C_b^dagger) written as the Frobenius pairing of C_a rho
    // with C_b rho-free chain; build C_b by running the chain on the
    // identity.
    const ComplexMatrix left = class_operator_applied(spec, alpha);

    const auto& steps = spec.steps();
    if (alpha_prime.size() != steps.size())
        throw ValidationError(
            "decoherence_functional: outcome list length mismatch");
    ComplexMatrix right = ComplexMatrix::identity(spec.initial().dim());
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (alpha_prime[k] >= steps[k].projectors.size())
            throw ValidationError(
                "decoherence_functional: outcome index out of range");
        right = steps[k].projectors[alpha_prime[k]] * (steps[k].unitary * right);
    }
    return (right.adjoint() * left).trace();
}

ConsistencyReport consistency_check(const HistorySpec& spec,
                                    const Tolerances& tol) {
    const std::size_t total = spec.lattice_size();
    if (total > 100000)
        throw ValidationError(
            "consistency_check: outcome lattice exceeds 1e5 histories");

    const auto& steps = spec.steps();
    const std::size_t nsteps = steps.size();

    // Enumerate the lattice in mixed-radix order and cache C_alpha rho.
    std::vector<ComplexMatrix> chains;
    chains.reserve(total);
    std::vector<std::size_t> alpha(nsteps, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        chains.push_back(class_operator_applied(spec, alpha));
        for (std::size_t k = nsteps; k-- > 0;) {
            if (++alpha[k] < steps[k].projectors.size()) break;
            alpha[k] = 0;
        }
    }

    // D(a, b) = Tr(C_a rho C_b^dagger); with E_a = C_a rho this is
    // sum_ij E_a(i, j) conj(C_b rho C_b ... ) -- instead rebuild via the
    // projector chains: Tr(E_a C_b^dagger) requires C_b itself, so cache
    // the operator chains applied to the identity as well.
    std::vector<ComplexMatrix> operators;
    operators.reserve(total);
    std::fill(alpha.begin(), alpha.end(), 0);
    const std::size_t d = spec.initial().dim();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ComplexMatrix c = ComplexMatrix::identity(d);
        for (std::size_t k = 0; k < nsteps; ++k)
            c = steps[k].projectors[alpha[k]] * (steps[k].unitary * c);
        operators.push_back(std::move(c));
        for (std::size_t k = nsteps; k-- > 0;) {
            if (++alpha[k] < steps[k].projectors.size()) break;
            alpha[k] = 0;
        }
    }

    double max_offdiag = 0.0;
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            if (a == b) continue;
            const Complex dab = (operators[b].adjoint() * chains[a]).trace();
            max_offdiag = std::max(max_offdiag, std::abs(dab));
        }
    return {max_offdiag <= tol.consistency, max_offdiag};
}

WavefunctionGrid::WavefunctionGrid(std::vector<Complex> samples, double x0,
                                   double dx, const Tolerances& tol)
    : samples_(std::move(samples)), x0_(x0), dx_(dx) {
    if (samples_.size() < 2)
        throw ValidationError("WavefunctionGrid: need at least two samples");
    if (!(dx_ > 0.0))
        throw ValidationError("WavefunctionGrid: spacing must be positive");
    if (std::abs(norm() - 1.0) > tol.grid_norm)
        throw ValidationError("WavefunctionGrid: samples are not normalized");
}

double WavefunctionGrid::x_max() const {
    return x0_ + dx_ * static_cast<double>(samples_.size() - 1);
}

double WavefunctionGrid::norm() const {
    double n2 = 0.0;
    for (const auto& v : samples_) n2 += std::norm(v);
    return n2 * dx_;
}

bool WavefunctionGrid::covers_support(double eps) const {
    return std::abs(samples_.front()) < eps && std::abs(samples_.back()) < eps;
}

Complex WavefunctionGrid::value_at(double x) const {
    const double u = (x - x0_) / dx_;
    if (u <= -1.0 || u >= static_cast<double>(samples_.size())) return {};
    const double fl = std::floor(u);
    const double frac = u - fl;
    const auto at = [&](double idx) -> Complex {
        if (idx < 0.0 || idx >= static_cast<double>(samples_.size()))
            return {};
        return samples_[static_cast<std::size_t>(idx)];
    };
    return (1.0 - frac) * at(fl) + frac * at(fl + 1.0);
}

double wigner(const WavefunctionGrid& psi, double q, double p,
              const Tolerances& tol) {
    const double dx = psi.dx();
    const double span = psi.x_max() - psi.x0();
    const auto steps = static_cast<std::ptrdiff_t>(std::lround(span / dx));

    // Phase recurrence: e^{-2ip x_{k+1}} = e^{-2ip x_k} * e^{-2ip dx}.
    const Complex step_phase = std::polar(1.0, -2.0 * p * dx);
    Complex phase = std::polar(1.0, -2.0 * p * (-span));
    Complex integral(0.0, 0.0);
    for (std::ptrdiff_t k = -steps; k <= steps; ++k) {
        const double x = static_cast<double>(k) * dx;
        const Complex f =
            std::conj(psi.value_at(q - x)) * psi.value_at(q + x) * phase;
        const double w = (k == -steps || k == steps) ? 0.5 : 1.0;
        integral += w * f;
        phase *= step_phase;
    }
    integral *= dx;

    const double pi = std::acos(-1.0);
    if (std::abs(integral.imag()) / pi > tol.consistency)
        throw Error("wigner: integral has a non-negligible imaginary part");
    return integral.real() / pi;
}

}  // namespace scopelab
