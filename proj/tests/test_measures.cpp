#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "scopelab/errors.hpp"
#include "scopelab/measures.hpp"
#include "scopelab/numerics.hpp"
#include "scopelab/optimize.hpp"
#include "scopelab/states.hpp"
#include "support.hpp"

using namespace scopelab;
using namespace testsupport;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix pure_density(const std::vector<Complex>& amps,
                           std::vector<std::size_t> dims) {
    return DensityMatrix(PureState(amps, std::move(dims)).density());
}

double l1_identity(const std::vector<Complex>& v) {
    double l1 = 0.0, l2 = 0.0;
    for (const auto& x : v) {
        l1 += std::abs(x);
        l2 += std::norm(x);
    }
    return 0.5 * (l1 * l1 - l2);
}

std::vector<Complex> ket0() { return {1.0, 0.0}; }
std::vector<Complex> ket1() { return {0.0, 1.0}; }
std::vector<Complex> ket_plus() { return {kInvSqrt2, kInvSqrt2}; }

}  // namespace

TEST_SUITE_BEGIN("measures");

TEST_CASE("degree of superposition on frozen inputs") {
    CHECK(degree_of_superposition({1.0}) == 0.0);
    CHECK(degree_of_superposition({kInvSqrt2, kInvSqrt2}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const double t = 1.0 / std::sqrt(3.0);
    CHECK(degree_of_superposition({t, t, t}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(degree_of_superposition({0.6, 0.8}) ==
          doctest::Approx(0.48).epsilon(1e-14));
    CHECK_THROWS_AS(degree_of_superposition({0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(degree_of_superposition({}), ValidationError);
}

TEST_CASE("degree of superposition equals the l1-norm identity and respects "
          "its bound") {
    Rng rng(8101);
    for (std::size_t n = 2; n <= 6; ++n) {
        const double bound = 0.5 * static_cast<double>(n - 1);
        for (int rep = 0; rep < 500; ++rep) {
            const auto v = random_pure(n, rng);
            const double eps = degree_of_superposition(v);
            CHECK(std::abs(eps - l1_identity(v)) < 1e-12);
            CHECK(eps <= bound + 1e-12);
        }
    }
}

TEST_CASE("direct and cross entanglement are exact at equal amplitudes") {
    const std::vector<Complex> half = {kInvSqrt2, kInvSqrt2};
    const auto r = direct_cross_entanglement(half, half);
    CHECK(r.e_direct == 0.5);
    CHECK(r.e_cross == 0.5);
    CHECK(r.e_reduced == 0.25);
}

TEST_CASE("direct and cross entanglement on the 0.6/0.8 example") {
    const std::vector<Complex> v = {0.6, 0.8};
    const auto r = direct_cross_entanglement(v, v);
    CHECK(r.e_direct == doctest::Approx(0.2304 / 0.5392).epsilon(1e-14));
    CHECK(r.e_cross == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.e_reduced == doctest::Approx(0.2304).epsilon(1e-14));
}

TEST_CASE("a zero amplitude removes all entanglement") {
    const auto r = direct_cross_entanglement({1.0, 0.0}, {0.6, 0.8});
    CHECK(r.e_direct == 0.0);
    CHECK(r.e_cross == 0.0);
    CHECK(r.e_reduced == 0.0);
}

TEST_CASE("reduced entanglement factorizes into the scope degrees") {
    Rng rng(8102);
    for (int rep = 0; rep < 500; ++rep) {
        const auto a = random_pure(2, rng);
        const auto b = random_pure(2, rng);
        const auto r = direct_cross_entanglement(a, b);
        const double product =
            degree_of_superposition(a) * degree_of_superposition(b);
        CHECK(std::abs(r.e_reduced - product) <= 1e-12);
    }
    CHECK_THROWS_AS(direct_cross_entanglement({1.0, 0.0, 0.0}, {1.0, 0.0}),
                    ValidationError);
}

TEST_CASE("nonorthogonality sums the overlaps of every ordered local pair") {
    const std::vector<double> w = {0.5, 0.5};
    SUBCASE("orthogonal members vanish") {
        EnsembleDecomposition ens(w, {{ket0(), ket1()}, {ket0(), ket1()}});
        CHECK(nonorthogonality(ens) == 0.0);
    }
    SUBCASE("|0> against |+> on both parties") {
        EnsembleDecomposition ens(w, {{ket0(), ket_plus()},
                                      {ket0(), ket_plus()}});
        CHECK(nonorthogonality(ens) ==
              doctest::Approx(2.8284271247461903).epsilon(1e-12));
    }
    SUBCASE("identical members count once per ordered pair") {
        EnsembleDecomposition ens(w, {{ket0(), ket0()}, {ket0(), ket0()}});
        CHECK(nonorthogonality(ens) == doctest::Approx(4.0).epsilon(1e-14));
    }
}

TEST_CASE("binary and Shannon entropies") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.25) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);

    CHECK(shannon_entropy_bits({1.0}) == 0.0);
    CHECK(shannon_entropy_bits({0.5, 0.5}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shannon_entropy_bits({0.25, 0.75}) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-14));
    CHECK_THROWS_AS(shannon_entropy_bits({-0.5, 1.5}), ValidationError);
}

TEST_CASE("von Neumann entropy from the spectrum") {
    CHECK(von_neumann_entropy(pure_density(bell_phi_plus(), {2, 2})) <= 1e-10);

    ComplexMatrix half = ComplexMatrix::identity(2);
    half = 0.5 * half;
    CHECK(von_neumann_entropy(DensityMatrix(half)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix skew(2, 2);
    skew(0, 0) = 0.75;
    skew(1, 1) = 0.25;
    CHECK(von_neumann_entropy(DensityMatrix(skew)) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("concurrence of frozen two-qubit states") {
    const PureState bell(bell_phi_plus(), {2, 2});
    const PureState prod({0.6, 0.0, 0.8, 0.0}, {2, 2});
    const PureState schmidt({0.6, 0.0, 0.0, 0.8}, {2, 2});
    for (auto mode : {ConcurrenceBasis::Computation, ConcurrenceBasis::Magic,
                      ConcurrenceBasis::Schmidt}) {
        CHECK(concurrence(bell, mode) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(concurrence(prod, mode) <= 1e-12);
        CHECK(concurrence(schmidt, mode) ==
              doctest::Approx(0.96).epsilon(1e-12));
    }
    CHECK_THROWS_AS(concurrence(PureState({1.0, 0.0, 0.0}, {3})),
                    ValidationError);
}

TEST_CASE("the three concurrence routes agree on random states") {
    Rng rng(8103);
    for (int rep = 0; rep < 500; ++rep) {
        const PureState psi(random_pure(4, rng), {2, 2});
        const double c1 = concurrence(psi, ConcurrenceBasis::Computation);
        const double c2 = concurrence(psi, ConcurrenceBasis::Magic);
        const double c3 = concurrence(psi, ConcurrenceBasis::Schmidt);
        CHECK(std::abs(c1 - c2) <= 1e-10);
        CHECK(std::abs(c1 - c3) <= 1e-10);
        CHECK(c1 >= 0.0);
        CHECK(c1 <= 1.0 + 1e-12);
    }
}

TEST_CASE("entanglement of formation from the concurrence") {
    CHECK(entanglement_of_formation(0.0) == 0.0);
    CHECK(entanglement_of_formation(1.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entanglement_of_formation(0.96) ==
          doctest::Approx(0.9426831892554922).epsilon(1e-14));
    CHECK_THROWS_AS(entanglement_of_formation(1.5), DomainError);
    CHECK_THROWS_AS(entanglement_of_formation(-0.5), DomainError);
}

TEST_CASE("formation entropy of a weighted pure ensemble") {
    const PureState bell(bell_phi_plus(), {2, 2});
    const PureState prod({1.0, 0.0, 0.0, 0.0}, {2, 2});
    CHECK(formation_entropy_of_ensemble({{1.0, bell}}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(formation_entropy_of_ensemble({{0.3, prod}, {0.7, prod}}) == 0.0);
    CHECK(formation_entropy_of_ensemble({{0.5, bell}, {0.5, prod}}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(formation_entropy_of_ensemble({{5.0, bell}, {5.0, prod}}),
                    ValidationError);
    CHECK_THROWS_AS(formation_entropy_of_ensemble({}), ValidationError);
}

TEST_CASE("entropy-concurrence matrix has unit trace and vanishing "
          "determinant") {
    for (int k = 0; k <= 100; ++k) {
        const double c = static_cast<double>(k) / 100.0;
        const ComplexMatrix lam = entropy_concurrence_matrix(c);
        CHECK((lam(0, 0) + lam(1, 1)).real() == 1.0);
        CHECK((lam(0, 1) + lam(1, 0)).real() ==
              doctest::Approx(c).epsilon(1e-15));
        const Complex det = lam(0, 0) * lam(1, 1) - lam(0, 1) * lam(1, 0);
        CHECK(std::abs(det) <= 1e-12);
        CHECK(lam.hermiticity_defect() == 0.0);
    }
    CHECK_THROWS_AS(entropy_concurrence_matrix(2.0), DomainError);
}

TEST_CASE("negativity of frozen states") {
    CHECK(negativity(pure_density({1.0, 0.0, 0.0, 0.0}, {2, 2})) <= 1e-12);
    CHECK(negativity(pure_density(bell_phi_plus(), {2, 2})) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // bipartite structure is mandatory
    CHECK_THROWS_AS(negativity(pure_density(bell_phi_plus(), {4})),
                    ValidationError);
}

TEST_CASE("negativity equals half the concurrence for pure two-qubit states") {
    Rng rng(8104);
    for (int rep = 0; rep < 500; ++rep) {
        const PureState psi(random_pure(4, rng), {2, 2});
        const double n = negativity(DensityMatrix(psi.density()));
        const double c = concurrence(psi);
        CHECK(std::abs(n - 0.5 * c) <= 1e-10);
    }
}

TEST_CASE("robustness of pure states doubles the negativity") {
    CHECK(robustness_pure(pure_density(bell_phi_plus(), {2, 2})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed = 0.25 * mixed;
    mixed.set_dims({2, 2});
    CHECK_THROWS_AS(robustness_pure(DensityMatrix(mixed)), ValidationError);
}

TEST_CASE("relative entropy of entanglement vanishes on separable input") {
    SeparableParams sep;
    sep.weights = {0.5, 0.5};
    sep.locals_a = {ket0(), ket1()};
    sep.locals_b = {ket0(), ket1()};
    const DensityMatrix rho = build_family(FamilyParams(sep));
    ReeOptions opts;
    opts.budget = 6000;
    opts.restarts = 6;
    const auto r = relative_entropy_of_entanglement(rho, opts);
    CHECK(r.bits <= 1e-6);
    CHECK(r.closest_separable.tag().has_value());
    CHECK(family_of(*r.closest_separable.tag()) == Family::Separable);
}

TEST_CASE("relative entropy of entanglement reaches one bit on a Bell state") {
    const DensityMatrix rho = pure_density(bell_phi_plus(), {2, 2});
    const auto r = relative_entropy_of_entanglement(rho);
    CHECK(std::abs(r.bits - 1.0) <= 0.02);
    CHECK(r.converged);
    // the reported closest separable state certifies the bound
    CHECK(negativity(r.closest_separable) <= 1e-9);
}

TEST_CASE("relative entropy of entanglement matches the reduced entropy of "
          "pure states") {
    Rng rng(8105);
    ReeOptions opts;
    opts.budget = 8000;
    opts.restarts = 8;
    for (int rep = 0; rep < 3; ++rep) {
        const auto amps = random_pure(4, rng);
        const DensityMatrix rho = pure_density(amps, {2, 2});
        const double target = von_neumann_entropy(
            DensityMatrix(partial_trace(rho.matrix(), {0})));
        const auto r = relative_entropy_of_entanglement(rho, opts);
        CHECK(std::abs(r.bits - target) <= 0.02 * std::max(target, 1.0));
    }
}

TEST_CASE("relative entropy of entanglement is deterministic for a seed") {
    const DensityMatrix rho =
        pure_density({0.6, 0.0, 0.0, 0.8}, {2, 2});
    ReeOptions opts;
    opts.budget = 4000;
    opts.restarts = 4;
    const auto r1 = relative_entropy_of_entanglement(rho, opts);
    const auto r2 = relative_entropy_of_entanglement(rho, opts);
    CHECK(r1.bits == r2.bits);
    CHECK(r1.evaluations == r2.evaluations);
    ReeOptions bad;
    bad.restarts = 1;
    CHECK_THROWS_AS(relative_entropy_of_entanglement(rho, bad),
                    ValidationError);
}

TEST_CASE("lambda-decomposition weight via one-sided positivity") {
    ComplexMatrix half = ComplexMatrix::identity(2);
    half = 0.5 * half;
    const DensityMatrix maximally_mixed(half);
    const DensityMatrix ground = pure_density(ket0(), {2});
    auto unit_measure = [](const DensityMatrix&) { return 1.0; };

    SUBCASE("a state against itself gives the full weight") {
        const auto r = ls_correlation(maximally_mixed, maximally_mixed,
                                      unit_measure);
        CHECK(r.lambda_star == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("the maximally mixed qubit holds half of a basis projector") {
        const auto r = ls_correlation(maximally_mixed, ground, unit_measure);
        CHECK(r.lambda_star == doctest::Approx(0.5).epsilon(1e-9));
        // boundary certificate: the remainder sits on the positivity edge
        const ComplexMatrix rest =
            half - ComplexMatrix(r.lambda_star * ground.matrix());
        const double min_eig = eigh(rest).values.front();
        CHECK(min_eig >= -1e-9);
        CHECK(min_eig <= 1e-6);
    }
    SUBCASE("the measure value is scaled by the extracted weight") {
        auto entropy_measure = [](const DensityMatrix& s) {
            return von_neumann_entropy(s);
        };
        const auto r =
            ls_correlation(maximally_mixed, maximally_mixed, entropy_measure);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("dimension mismatch is rejected") {
        const DensityMatrix big(
            DensityMatrix(pure_density(bell_phi_plus(), {2, 2})));
        CHECK_THROWS_AS(ls_correlation(big, ground, unit_measure),
                        ValidationError);
    }
}

TEST_CASE("classification of the structural families") {
    SUBCASE("products carry no correlations at all") {
        ProductPureParams pp;
        pp.a = {0.6, 0.8};
        pp.b = ket_plus();
        const auto p = classify(build_family(FamilyParams(pp)));
        CHECK(p.structural);
        CHECK(*p.family == Family::ProductPure);
        CHECK_FALSE(p.entanglement);
        CHECK_FALSE(p.decohered_classicality);
        CHECK_FALSE(p.nonorthogonality);
        CHECK_FALSE(p.coarse_grained_classicality);
        CHECK(p.entanglement_value == 0.0);
        CHECK(p.nonorthogonality_value == 0.0);
        CHECK(p.coarse_entropy_bits == 0.0);
        CHECK(p.negativity_value <= 1e-10);
        CHECK(p.entropy_bits <= 1e-10);
    }
    SUBCASE("entangled qudit") {
        EntangledQuditParams q;
        q.a = {0.6, 0.8};
        q.b = {0.6, 0.8};
        q.pairing = {0, 1};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK(p.entanglement);
        CHECK(p.decohered_classicality);
        CHECK_FALSE(p.nonorthogonality);
        CHECK_FALSE(p.coarse_grained_classicality);
        CHECK(p.entanglement_value ==
              doctest::Approx(0.42729970326409494).epsilon(1e-12));
        // for a two-branch pure state the negativity equals the degree
        CHECK(p.negativity_value ==
              doctest::Approx(0.42729970326409494).epsilon(1e-10));
    }
    SUBCASE("decohered qudit") {
        DecoheredQuditParams q;
        q.a = {0.6, 0.8};
        q.b = {0.6, 0.8};
        q.pairing = {0, 1};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK_FALSE(p.entanglement);
        CHECK(p.decohered_classicality);
        CHECK_FALSE(p.nonorthogonality);
        CHECK_FALSE(p.coarse_grained_classicality);
        CHECK(p.entanglement_value == 0.0);
        CHECK(p.entropy_bits > 0.0);
    }
    SUBCASE("separable mixture of nonorthogonal products") {
        SeparableParams q;
        q.weights = {0.5, 0.5};
        q.locals_a = {ket0(), ket_plus()};
        q.locals_b = {ket0(), ket_plus()};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK_FALSE(p.entanglement);
        CHECK_FALSE(p.decohered_classicality);
        CHECK(p.nonorthogonality);
        CHECK(p.coarse_grained_classicality);
        CHECK(p.nonorthogonality_value ==
              doctest::Approx(2.8284271247461903).epsilon(1e-12));
        CHECK(p.coarse_entropy_bits == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.negativity_value <= 1e-10);
    }
    SUBCASE("ensemble product") {
        EnsembleProductParams q;
        q.weights = {0.5, 0.5};
        q.locals_a = {ket0(), ket_plus()};
        q.locals_b = {ket0(), ket_plus()};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK_FALSE(p.entanglement);
        CHECK_FALSE(p.decohered_classicality);
        CHECK(p.nonorthogonality);
        CHECK_FALSE(p.coarse_grained_classicality);
        CHECK(p.nonorthogonality_value ==
              doctest::Approx(2.8284271247461903).epsilon(1e-12));
        CHECK(p.coarse_entropy_bits == 0.0);
    }
    SUBCASE("ensemble-entangled qudit lights every column") {
        EnsembleEntangledParams q;
        q.weights = {0.5, 0.5};
        q.lambdas = {{kInvSqrt2, kInvSqrt2}, {0.6, 0.8}};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK(p.entanglement);
        CHECK(p.decohered_classicality);
        CHECK(p.nonorthogonality);
        CHECK(p.coarse_grained_classicality);
        CHECK(p.entanglement_value == doctest::Approx(0.49).epsilon(1e-12));
        CHECK(p.nonorthogonality_value ==
              doctest::Approx(3.9597979746446654).epsilon(1e-12));
        CHECK(p.coarse_entropy_bits == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("ensemble-decohered qudit") {
        EnsembleDecoheredParams q;
        q.weights = {0.5, 0.5};
        q.lambdas = {{kInvSqrt2, kInvSqrt2}, {0.6, 0.8}};
        const auto p = classify(build_family(FamilyParams(q)));
        CHECK_FALSE(p.entanglement);
        CHECK(p.decohered_classicality);
        CHECK(p.nonorthogonality);
        CHECK(p.coarse_grained_classicality);
        CHECK(p.entanglement_value == 0.0);
        CHECK(p.nonorthogonality_value ==
              doctest::Approx(3.9597979746446654).epsilon(1e-12));
    }
    SUBCASE("untagged input yields spectrum facts only") {
        const auto p = classify(pure_density(bell_phi_plus(), {2, 2}));
        CHECK_FALSE(p.structural);
        CHECK_FALSE(p.family.has_value());
        CHECK_FALSE(p.entanglement);
        CHECK(p.negativity_value == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(p.entropy_bits <= 1e-10);
    }
    SUBCASE("raw wavefunction ensembles must be sub-decohered first") {
        WfesParams q;
        q.gamma = {kInvSqrt2, kInvSqrt2};
        q.members = {ket0(), ket_plus()};
        CHECK_THROWS_AS(classify(build_family(FamilyParams(q))), DomainError);
    }
}

TEST_CASE("scope magnitude across the four admissible shapes") {
    SUBCASE("a single level is a point of zero magnitude") {
        CHECK(scope_magnitude_energies({3.5}) == 0.0);
    }
    SUBCASE("two levels span a segment") {
        CHECK(scope_magnitude_energies({0.0, 1.0}) == 1.0);
    }
    SUBCASE("collinear energies give a degenerate triangle") {
        CHECK(scope_magnitude_energies({0.0, 1.0, 2.0}) == 0.0);
    }
    SUBCASE("unit equilateral triangle") {
        const std::vector<std::vector<double>> d = {
            {0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
        CHECK(scope_magnitude(d) ==
              doctest::Approx(0.4330127018922193).epsilon(1e-12));
    }
    SUBCASE("regular tetrahedron with unit edges") {
        std::vector<std::vector<double>> d(4, std::vector<double>(4, 1.0));
        for (int i = 0; i < 4; ++i) d[i][i] = 0.0;
        CHECK(scope_magnitude(d) ==
              doctest::Approx(0.11785113019775792).epsilon(1e-12));
    }
    SUBCASE("four collinear energies give a flat tetrahedron") {
        CHECK(scope_magnitude_energies({0.0, 1.0, 2.0, 3.0}) ==
              doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("infeasible distances are rejected") {
        const std::vector<std::vector<double>> bad = {
            {0.0, 1.0, 3.0}, {1.0, 0.0, 1.0}, {3.0, 1.0, 0.0}};
        CHECK_THROWS_AS(scope_magnitude(bad), DomainError);
    }
    SUBCASE("shapes stop at the tetrahedron") {
        CHECK_THROWS_AS(scope_magnitude_energies({0.0, 1.0, 2.0, 3.0, 4.0}),
                        DomainError);
    }
    SUBCASE("malformed matrices are rejected") {
        CHECK_THROWS_AS(scope_magnitude({}), ValidationError);
        CHECK_THROWS_AS(scope_magnitude({{0.0, 1.0}, {2.0, 0.0}}),
                        ValidationError);
        CHECK_THROWS_AS(scope_magnitude({{0.5, 1.0}, {1.0, 0.0}}),
                        ValidationError);
        CHECK_THROWS_AS(scope_magnitude({{0.0, -1.0}, {-1.0, 0.0}}),
                        ValidationError);
        CHECK_THROWS_AS(scope_magnitude({{0.0, 1.0}}), ValidationError);
    }
}

TEST_CASE("the simplex optimizer finds a quadratic minimum") {
    auto f = [](const std::vector<double>& x) {
        const double u = x[0] - 2.0, v = x[1] + 1.0;
        return u * u + 2.0 * v * v;
    };
    const auto r = nelder_mead(f, {0.0, 0.0});
    CHECK(r.converged);
    CHECK(std::abs(r.x[0] - 2.0) <= 1e-5);
    CHECK(std::abs(r.x[1] + 1.0) <= 1e-5);
    CHECK(r.value <= 1e-9);
    CHECK_THROWS_AS(nelder_mead(f, {}), ValidationError);
}

TEST_SUITE_END();
