#include <doctest.h>

#include <cmath>
#include <vector>

#include "scopelab/dynamics.hpp"
#include "scopelab/errors.hpp"
#include "scopelab/measures.hpp"
#include "scopelab/numerics.hpp"
#include "support.hpp"

using namespace scopelab;
using namespace testsupport;

namespace {

const double kPi = std::acos(-1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<ComplexMatrix> z_projectors() {
    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    return {p0, p1};
}

DensityMatrix pure_rho(const std::vector<Complex>& amps) {
    return DensityMatrix(ComplexMatrix::outer(amps, amps));
}

// Projector family from the columns of a random unitary.
std::vector<ComplexMatrix> random_projector_family(std::size_t d, Rng& rng) {
    const ComplexMatrix u = random_unitary(d, rng);
    std::vector<ComplexMatrix> fam;
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<Complex> col(d);
        for (std::size_t r = 0; r < d; ++r) col[r] = u(r, c);
        fam.push_back(ComplexMatrix::outer(col, col));
    }
    return fam;
}

// CNOT with the first (system) qubit controlling the second.
ComplexMatrix cnot_sys_env() {
    ComplexMatrix u(4, 4);
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;
    return u;
}

WavefunctionGrid gaussian_grid() {
    const double dx = 0.01;
    std::vector<Complex> samples;
    const double amp = std::pow(kPi, -0.25);
    for (int j = -800; j <= 800; ++j) {
        const double x = dx * j;
        samples.push_back(amp * std::exp(-0.5 * x * x));
    }
    return WavefunctionGrid(std::move(samples), -8.0, dx);
}

WavefunctionGrid odd_cat_grid() {
    const double dx = 0.01;
    std::vector<Complex> samples;
    for (int j = -800; j <= 800; ++j) {
        const double x = dx * j;
        samples.push_back(std::exp(-0.5 * (x - 3.0) * (x - 3.0)) -
                          std::exp(-0.5 * (x + 3.0) * (x + 3.0)));
    }
    double n2 = 0.0;
    for (const auto& v : samples) n2 += std::norm(v);
    const double scale = std::sqrt(n2 * dx);
    for (auto& v : samples) v /= scale;
    return WavefunctionGrid(std::move(samples), -8.0, dx);
}

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("time-zero evolution is the identity") {
    Rng rng(7001);
    const HamiltonianSpec h(random_hermitian(3, rng));
    const PureState psi(random_pure(3, rng));
    const PureState out = evolve(psi, h, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(out.amplitudes()[i] - psi.amplitudes()[i]) <= 1e-12);
}

TEST_CASE("Pauli-Z turns the plus state into the minus state") {
    const HamiltonianSpec h(pauli_z());
    const PureState plus({kInvSqrt2, kInvSqrt2});
    const PureState out = evolve(plus, h, kPi / 2.0);
    const Complex expected0 = std::polar(kInvSqrt2, -kPi / 2.0);
    const Complex expected1 = std::polar(kInvSqrt2, kPi / 2.0);
    CHECK(std::abs(out.amplitudes()[0] - expected0) <= 1e-12);
    CHECK(std::abs(out.amplitudes()[1] - expected1) <= 1e-12);
    // |-> up to the global phase -i
    const Complex overlap = out.amplitudes()[0] * kInvSqrt2 -
                            out.amplitudes()[1] * kInvSqrt2;
    CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-12);
}

TEST_CASE("evolution preserves norm and trace") {
    Rng rng(7002);
    for (int rep = 0; rep < 20; ++rep) {
        const HamiltonianSpec h(random_hermitian(3, rng));
        const PureState psi(random_pure(3, rng));
        const double t = -2.0 + 0.2 * rep;
        const PureState out = evolve(psi, h, t);
        CHECK(std::abs(norm2(out.amplitudes()) - 1.0) <= 1e-10);

        const DensityMatrix rho(random_density(3, rng));
        const DensityMatrix rho_t = evolve(rho, h, t);
        CHECK(std::abs(rho_t.matrix().trace() - Complex(1.0)) <= 1e-10);
    }
}

TEST_CASE("the Liouville equation holds against a finite difference") {
    Rng rng(7003);
    const double dt = 1e-5, t = 0.7;
    for (int rep = 0; rep < 10; ++rep) {
        const HamiltonianSpec h(random_hermitian(2, rng));
        const DensityMatrix rho0(random_density(2, rng));
        const ComplexMatrix plus = evolve(rho0, h, t + dt).matrix();
        const ComplexMatrix minus = evolve(rho0, h, t - dt).matrix();
        const ComplexMatrix rho_t = evolve(rho0, h, t).matrix();

        const Complex ii(0.0, 1.0);
        ComplexMatrix lhs = plus - minus;
        lhs = (ii / (2.0 * dt)) * lhs;  // i d(rho)/dt
        const ComplexMatrix rhs = h.h() * rho_t - rho_t * h.h();
        CHECK((lhs - rhs).max_abs() <= 1e-6);
    }
}

TEST_CASE("three pictures agree on expectation values") {
    Rng rng(7004);
    SUBCASE("time zero gives the static expectation in every picture") {
        const ComplexMatrix a = random_hermitian(2, rng);
        const PureState psi(random_pure(2, rng));
        const HamiltonianSpec h(random_hermitian(2, rng),
                                random_hermitian(2, rng));
        const auto e = expectation_in_pictures(a, psi, h, 0.0);
        const double direct = inner(psi.amplitudes(),
                                    a.apply(psi.amplitudes())).real();
        CHECK(e.schrodinger == doctest::Approx(direct).epsilon(1e-12));
        CHECK(e.heisenberg == doctest::Approx(direct).epsilon(1e-12));
        CHECK(e.dirac == doctest::Approx(direct).epsilon(1e-12));
    }
    SUBCASE("a vanishing interaction reduces Dirac to Heisenberg") {
        const ComplexMatrix a = random_hermitian(2, rng);
        const PureState psi(random_pure(2, rng));
        const HamiltonianSpec h(random_hermitian(2, rng), ComplexMatrix(2, 2));
        const auto e = expectation_in_pictures(a, psi, h, 1.1);
        CHECK(std::abs(e.dirac - e.heisenberg) <= 1e-12);
    }
    SUBCASE("random draws agree pairwise") {
        for (int rep = 0; rep < 100; ++rep) {
            const std::size_t d = 2 + rep % 2;
            const ComplexMatrix a = random_hermitian(d, rng);
            const PureState psi(random_pure(d, rng));
            const HamiltonianSpec h(random_hermitian(d, rng),
                                    random_hermitian(d, rng));
            const double t = (rep == 0) ? 1.3 : -2.0 + 0.04 * rep;
            const auto e = expectation_in_pictures(a, psi, h, t);
            CHECK(std::abs(e.schrodinger - e.heisenberg) <= 1e-10);
            CHECK(std::abs(e.schrodinger - e.dirac) <= 1e-10);
        }
    }
    SUBCASE("the interaction picture requires the split") {
        const HamiltonianSpec h(pauli_z());
        CHECK_THROWS_AS(expectation_in_pictures(pauli_x(),
                                                PureState({1.0, 0.0}), h, 1.0),
                        ValidationError);
    }
}

TEST_CASE("Kraus operators from a unitary dilation") {
    SUBCASE("the identity dilation is the identity channel") {
        const Channel ch = kraus_from_dilation(ComplexMatrix::identity(4), 2);
        REQUIRE(ch.kraus().size() == 2);
        CHECK((ch.kraus()[0] - ComplexMatrix::identity(2)).max_abs() == 0.0);
        CHECK(ch.kraus()[1].max_abs() == 0.0);
    }
    SUBCASE("a controlled flip dephases the system") {
        const Channel ch = kraus_from_dilation(cnot_sys_env(), 2);
        REQUIRE(ch.kraus().size() == 2);
        ComplexMatrix p0(2, 2), p1(2, 2);
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        CHECK((ch.kraus()[0] - p0).max_abs() == 0.0);
        CHECK((ch.kraus()[1] - p1).max_abs() == 0.0);
    }
    SUBCASE("random dilations define trace-preserving channels") {
        Rng rng(7005);
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix u = random_unitary(4, rng);
            const std::size_t env_init = rep % 2;
            const Channel ch = kraus_from_dilation(u, 2, env_init);
            ComplexMatrix sum(2, 2);
            for (const auto& k : ch.kraus()) sum = sum + k.adjoint() * k;
            CHECK((sum - ComplexMatrix::identity(2)).max_abs() <= 1e-10);

            // channel output equals the partial trace over the dilation
            const ComplexMatrix rho = random_density(2, rng);
            ComplexMatrix env(2, 2);
            env(env_init, env_init) = 1.0;
            ComplexMatrix joint = tensor_product(rho, env);
            joint = u * joint * u.adjoint();
            joint.set_dims({2, 2});
            const ComplexMatrix reduced = partial_trace(joint, {0});
            const DensityMatrix out =
                apply_channel(DensityMatrix(rho), ch);
            CHECK(max_diff(out.matrix(), reduced) <= 1e-10);
        }
    }
    SUBCASE("invalid dilations are rejected") {
        Rng rng(7006);
        CHECK_THROWS_AS(kraus_from_dilation(random_matrix(4, 4, rng), 2),
                        ValidationError);
        CHECK_THROWS_AS(kraus_from_dilation(ComplexMatrix::identity(4), 3),
                        ValidationError);
        CHECK_THROWS_AS(kraus_from_dilation(ComplexMatrix::identity(4), 2, 5),
                        ValidationError);
    }
}

TEST_CASE("channel application") {
    const Channel dephase(z_projectors());
    SUBCASE("full dephasing flattens the plus state") {
        const DensityMatrix out =
            apply_channel(pure_rho({kInvSqrt2, kInvSqrt2}), dephase);
        ComplexMatrix half = ComplexMatrix::identity(2);
        half = 0.5 * half;
        CHECK(max_diff(out.matrix(), half) <= 1e-15);
    }
    SUBCASE("sequential channels equal the composed Kraus family") {
        Rng rng(7007);
        const Channel ch1 = kraus_from_dilation(random_unitary(4, rng), 2);
        const Channel ch2 = kraus_from_dilation(random_unitary(4, rng), 2);
        std::vector<ComplexMatrix> composed;
        for (const auto& k2 : ch2.kraus())
            for (const auto& k1 : ch1.kraus()) composed.push_back(k2 * k1);
        const Channel once(std::move(composed));

        const DensityMatrix rho(random_density(2, rng));
        const DensityMatrix chained = apply_channel(apply_channel(rho, ch1),
                                                    ch2);
        const DensityMatrix direct = apply_channel(rho, once);
        CHECK(max_diff(chained.matrix(), direct.matrix()) <= 1e-12);
    }
    SUBCASE("outputs stay positive with unit trace") {
        Rng rng(7008);
        for (int rep = 0; rep < 20; ++rep) {
            const Channel ch = kraus_from_dilation(random_unitary(4, rng), 2);
            const DensityMatrix out =
                apply_channel(DensityMatrix(random_density(2, rng)), ch);
            CHECK(std::abs(out.matrix().trace() - Complex(1.0)) <= 1e-12);
            CHECK(eigh(out.matrix()).values.front() >= -1e-10);
        }
    }
    SUBCASE("malformed Kraus families are rejected") {
        CHECK_THROWS_AS(Channel({ComplexMatrix::identity(2),
                                 ComplexMatrix::identity(2)}),
                        ValidationError);
        CHECK_THROWS_AS(Channel(std::vector<ComplexMatrix>{}),
                        ValidationError);
    }
}

TEST_CASE("decoherence functional of a single measurement") {
    const std::vector<Complex> psi = {0.6, 0.8};
    const HistorySpec spec(pure_rho(psi),
                           {{ComplexMatrix::identity(2), z_projectors()}});
    const Complex d00 = decoherence_functional(spec, {0}, {0});
    const Complex d11 = decoherence_functional(spec, {1}, {1});
    const Complex d01 = decoherence_functional(spec, {0}, {1});
    CHECK(std::abs(d00 - Complex(0.36)) <= 1e-14);
    CHECK(std::abs(d11 - Complex(0.64)) <= 1e-14);
    CHECK(std::abs(d01) <= 1e-14);

    CHECK_THROWS_AS(decoherence_functional(spec, {0, 0}, {0}),
                    ValidationError);
    CHECK_THROWS_AS(decoherence_functional(spec, {2}, {0}), ValidationError);
}

TEST_CASE("interfering double-slit history is inconsistent at one quarter") {
    const HistorySpec spec(pure_rho({1.0, 0.0}),
                           {{hadamard(), z_projectors()},
                            {hadamard(), z_projectors()}});
    // hand chain: every branch amplitude collapses to |0>/2 or |1>/2
    CHECK(std::abs(decoherence_functional(spec, {0, 0}, {1, 0}) -
                   Complex(0.25)) <= 1e-12);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(decoherence_functional(spec, {i, j}, {i, j}) -
                           Complex(0.25)) <= 1e-12);

    const auto report = consistency_check(spec);
    CHECK_FALSE(report.consistent);
    CHECK(report.max_offdiag == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("a dephasing record restores consistency") {
    // same double-slit chain, but the first step also copies the branch
    // into an environment qubit through a controlled flip
    const ComplexMatrix h2 = tensor_product(hadamard(),
                                            ComplexMatrix::identity(2));
    const ComplexMatrix u1 = cnot_sys_env() * h2;
    std::vector<ComplexMatrix> big_proj;
    for (const auto& p : z_projectors())
        big_proj.push_back(tensor_product(p, ComplexMatrix::identity(2)));

    std::vector<Complex> init(4);
    init[0] = 1.0;
    const HistorySpec spec(pure_rho(init),
                           {{u1, big_proj}, {h2, big_proj}});
    const auto report = consistency_check(spec);
    CHECK(report.consistent);
    CHECK(report.max_offdiag <= 1e-10);
}

TEST_CASE("decoherence functional is Hermitian with unit diagonal sum") {
    Rng rng(7009);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t d = 2 + rep % 2;
        const std::size_t nsteps = 1 + rep % 3;
        std::vector<HistoryStep> steps;
        for (std::size_t k = 0; k < nsteps; ++k)
            steps.push_back({random_unitary(d, rng),
                             random_projector_family(d, rng)});
        const HistorySpec spec(DensityMatrix(random_density(d, rng)),
                               std::move(steps));

        // walk the full lattice
        std::vector<std::vector<std::size_t>> lattice;
        std::vector<std::size_t> alpha(nsteps, 0);
        for (;;) {
            lattice.push_back(alpha);
            std::size_t k = nsteps;
            for (; k-- > 0;) {
                if (++alpha[k] < d) break;
                alpha[k] = 0;
            }
            if (k == static_cast<std::size_t>(-1)) break;
        }

        Complex diag_sum(0.0, 0.0);
        for (const auto& a : lattice) {
            const Complex daa = decoherence_functional(spec, a, a);
            CHECK(daa.real() >= -1e-12);
            CHECK(std::abs(daa.imag()) <= 1e-12);
            diag_sum += daa;
            const auto& b = lattice[(&a - lattice.data() + 1) %
                                    lattice.size()];
            const Complex dab = decoherence_functional(spec, a, b);
            const Complex dba = decoherence_functional(spec, b, a);
            CHECK(std::abs(dab - std::conj(dba)) <= 1e-10);
        }
        CHECK(std::abs(diag_sum - Complex(1.0)) <= 1e-10);
    }
}

TEST_CASE("the consistency lattice is capped") {
    std::vector<HistoryStep> steps(
        17, {ComplexMatrix::identity(2), z_projectors()});
    const HistorySpec spec(pure_rho({0.6, 0.8}), std::move(steps));
    CHECK(spec.lattice_size() > 100000);
    CHECK_THROWS_AS(consistency_check(spec), ValidationError);
}

TEST_CASE("malformed history specs are rejected") {
    Rng rng(7010);
    SUBCASE("non-unitary step") {
        CHECK_THROWS_AS(HistorySpec(pure_rho({1.0, 0.0}),
                                    {{random_matrix(2, 2, rng),
                                      z_projectors()}}),
                        ValidationError);
    }
    SUBCASE("incomplete family") {
        ComplexMatrix p0(2, 2);
        p0(0, 0) = 1.0;
        CHECK_THROWS_AS(HistorySpec(pure_rho({1.0, 0.0}),
                                    {{ComplexMatrix::identity(2), {p0}}}),
                        ValidationError);
    }
    SUBCASE("non-orthogonal family") {
        ComplexMatrix p0(2, 2), q(2, 2);
        p0(0, 0) = 1.0;
        q(0, 0) = 0.5;
        q(1, 1) = 1.0;
        q(0, 1) = 0.5;
        CHECK_THROWS_AS(HistorySpec(pure_rho({1.0, 0.0}),
                                    {{ComplexMatrix::identity(2), {p0, q}}}),
                        ValidationError);
    }
}

TEST_CASE("wavefunction grids validate their sampling") {
    CHECK_THROWS_AS(WavefunctionGrid({1.0, 1.0}, 0.0, 0.7), ValidationError);
    CHECK_THROWS_AS(WavefunctionGrid({1.0}, 0.0, 0.5), ValidationError);
    CHECK_THROWS_AS(WavefunctionGrid({1.0, 1.0}, 0.0, -0.5), ValidationError);

    const auto g = gaussian_grid();
    CHECK(std::abs(g.norm() - 1.0) <= 1e-6);
    CHECK(g.covers_support());
    CHECK(std::abs(g.value_at(0.0) - Complex(std::pow(kPi, -0.25))) <= 1e-12);
    CHECK(std::abs(g.value_at(0.005) -
                   0.5 * (g.value_at(0.0) + g.value_at(0.01))) <= 1e-12);
    CHECK(std::abs(g.value_at(12.0)) == 0.0);

    const auto cat = odd_cat_grid();
    CHECK_FALSE(cat.covers_support());      // tails sit just above 1e-8
    CHECK(cat.covers_support(1e-4));        // but are still small
}

TEST_CASE("Wigner function of the Gaussian ground state") {
    const auto g = gaussian_grid();
    SUBCASE("peak value at the origin") {
        CHECK(std::abs(wigner(g, 0.0, 0.0) - 1.0 / kPi) <= 1e-4);
    }
    SUBCASE("closed form at scattered phase-space points") {
        for (const auto& qp : {std::pair{0.5, 0.0}, std::pair{0.0, 1.0},
                               std::pair{1.0, -0.7}, std::pair{-1.2, 0.4}}) {
            const double expected =
                std::exp(-qp.first * qp.first - qp.second * qp.second) / kPi;
            CHECK(std::abs(wigner(g, qp.first, qp.second) - expected) <= 1e-6);
        }
    }
    SUBCASE("momentum marginal reproduces the position density") {
        for (const double q : {0.0, 0.5, 1.0}) {
            double marginal = 0.0;
            const double dp = 0.05;
            for (int k = -120; k <= 120; ++k) {
                const double w = (std::abs(k) == 120) ? 0.5 : 1.0;
                marginal += w * wigner(g, q, dp * k);
            }
            marginal *= dp;
            CHECK(std::abs(marginal - std::norm(g.value_at(q))) <= 1e-4);
        }
    }
    SUBCASE("phase-space normalization") {
        double total = 0.0;
        const double h = 0.1;
        for (int a = -50; a <= 50; ++a)
            for (int b = -50; b <= 50; ++b) {
                const double w = ((std::abs(a) == 50) ? 0.5 : 1.0) *
                                 ((std::abs(b) == 50) ? 0.5 : 1.0);
                total += w * wigner(g, h * a, h * b);
            }
        total *= h * h;
        CHECK(std::abs(total - 1.0) <= 1e-4);
    }
    SUBCASE("even in momentum at the origin") {
        for (const double p : {0.3, 0.9, 1.7})
            CHECK(std::abs(wigner(g, 0.0, p) - wigner(g, 0.0, -p)) <= 1e-8);
    }
}

TEST_CASE("the odd cat state is negative at the origin") {
    const auto cat = odd_cat_grid();
    const double w = wigner(cat, 0.0, 0.0);
    CHECK(std::abs(w + 1.0 / kPi) <= 0.02 / kPi);
}

TEST_SUITE_END();
