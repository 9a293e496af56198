// Python bindings for the core operations.  Matrices cross the boundary as
// nested lists of complex numbers (row major); vectors as flat lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "scopelab/dynamics.hpp"
#include "scopelab/errors.hpp"
#include "scopelab/identities.hpp"
#include "scopelab/measures.hpp"
#include "scopelab/numerics.hpp"
#include "scopelab/states.hpp"

namespace py = pybind11;

namespace {

using namespace scopelab;
using Rows = std::vector<std::vector<Complex>>;

ComplexMatrix to_matrix(const Rows& rows,
                        const std::vector<std::size_t>& dims = {}) {
    if (rows.empty()) throw ValidationError("matrix must not be empty");
    ComplexMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size())
            throw ValidationError("matrix rows have inconsistent lengths");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    if (!dims.empty()) m.set_dims(dims);
    return m;
}

Rows to_rows(const ComplexMatrix& m) {
    Rows rows(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

ConcurrenceBasis basis_from_name(const std::string& name) {
    if (name == "magic") return ConcurrenceBasis::Magic;
    if (name == "computation") return ConcurrenceBasis::Computation;
    if (name == "schmidt") return ConcurrenceBasis::Schmidt;
    throw ValidationError(
        "basis must be one of 'magic', 'computation', 'schmidt'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Quantum superposition, entanglement and decoherence toolkit: "
        "scope degrees, entanglement measures, sum identities, channels "
        "and phase-space distributions.";

    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // ------------------------------------------------------------- measures
    m.def(
        "degree_of_superposition",
        [](const std::vector<Complex>& coeffs) {
            return degree_of_superposition(coeffs);
        },
        py::arg("coeffs"),
        "Superposition degree eps of a normalized coefficient vector.");

    m.def(
        "direct_cross_entanglement",
        [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
            const DirectCrossResult r = direct_cross_entanglement(a, b);
            return py::make_tuple(r.e_direct, r.e_cross, r.e_reduced);
        },
        py::arg("a"), py::arg("b"),
        "Direct, cross and reduced entanglement degrees (E_d, E_c, E+) of a "
        "two-branch bipartite state with coefficient vectors a and b.");

    m.def(
        "concurrence",
        [](const std::vector<Complex>& amplitudes, const std::string& basis) {
            return concurrence(PureState(amplitudes, {2, 2}),
                               basis_from_name(basis));
        },
        py::arg("amplitudes"), py::arg("basis") = "computation",
        "Concurrence of a pure two-qubit state (4 amplitudes); basis is "
        "'magic', 'computation' or 'schmidt'.");

    m.def(
        "entanglement_of_formation",
        [](const std::vector<Complex>& amplitudes) {
            return entanglement_of_formation(
                concurrence(PureState(amplitudes, {2, 2})));
        },
        py::arg("amplitudes"),
        "Entanglement of formation (bits) of a pure two-qubit state.");

    m.def(
        "negativity",
        [](const Rows& rho, const std::vector<std::size_t>& dims) {
            return negativity(DensityMatrix(to_matrix(rho, dims)));
        },
        py::arg("rho"), py::arg("dims") = std::vector<std::size_t>{2, 2},
        "Negativity of a bipartite density matrix under partial transpose "
        "of the first party.");

    m.def(
        "von_neumann_entropy",
        [](const Rows& rho) {
            return von_neumann_entropy(DensityMatrix(to_matrix(rho)));
        },
        py::arg("rho"), "Von Neumann entropy in bits of a density matrix.");

    m.def(
        "relative_entropy_of_entanglement",
        [](const Rows& rho, std::size_t budget, std::size_t restarts,
           std::size_t products, std::uint64_t seed) {
            ReeOptions opts;
            opts.budget = budget;
            opts.restarts = restarts;
            opts.products = products;
            opts.seed = seed;
            const ReeResult r = relative_entropy_of_entanglement(
                DensityMatrix(to_matrix(rho, {2, 2})), opts);
            py::dict out;
            out["bits"] = r.bits;
            out["converged"] = r.converged;
            out["evaluations"] = r.evaluations;
            out["closest_separable"] = to_rows(r.closest_separable.matrix());
            return out;
        },
        py::arg("rho"), py::arg("budget") = 20000, py::arg("restarts") = 16,
        py::arg("products") = 8, py::arg("seed") = 20260825,
        "Certified upper bound (bits) on the relative entropy of "
        "entanglement of a two-qubit density matrix, with the separable "
        "state that witnesses it.");

    // ------------------------------------------------------------ identities
    m.def(
        "verify_sum_identities",
        [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
            const IdentityReport r = verify_sum_identities(a, b);
            py::dict out;
            out["sum_beta_residual"] = r.sum_beta_residual;
            out["sum_alpha_residual"] = r.sum_alpha_residual;
            out["sum_alpha_over_e_residual"] = r.sum_alpha_over_e_residual;
            out["max_abs_residual"] = r.max_abs_residual;
            return out;
        },
        py::arg("a"), py::arg("b"),
        "Residuals of the permutation-state sum identities for coefficient "
        "vectors a and b of equal length.");

    m.def(
        "ghz_e_dagger",
        [](const std::vector<std::vector<Complex>>& party_coeffs) {
            return ghz_family(party_coeffs).e_dagger;
        },
        py::arg("party_coeffs"),
        "Reduced entanglement degree of the two-branch multiparty family; "
        "party_coeffs holds one (c0, c1) pair per party.");

    m.def(
        "mixture_identity",
        [](double e_direct, double e_cross, double p1, double p2) {
            const MixtureIdentityResult r =
                mixture_identity(e_direct, e_cross, p1, p2);
            return py::make_tuple(r.lhs, r.rhs);
        },
        py::arg("e_direct"), py::arg("e_cross"), py::arg("p1"), py::arg("p2"),
        "Both sides of the two-component mixture identity; they agree for "
        "valid inputs.");

    // ---------------------------------------------------------------- states
    m.def(
        "schmidt_coefficients",
        [](const std::vector<Complex>& amplitudes,
           const std::vector<std::size_t>& dims) {
            return schmidt_decompose(PureState(amplitudes, dims)).coefficients;
        },
        py::arg("amplitudes"), py::arg("dims"),
        "Schmidt coefficients (descending) of a bipartite pure state.");

    // -------------------------------------------------------------- numerics
    m.def(
        "partial_trace",
        [](const Rows& rho, const std::vector<std::size_t>& dims,
           const std::vector<std::size_t>& keep) {
            return to_rows(partial_trace(to_matrix(rho, dims), keep));
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep"),
        "Trace out every tensor factor not listed in keep.");

    m.def(
        "partial_transpose",
        [](const Rows& rho, const std::vector<std::size_t>& dims,
           std::size_t party) {
            return to_rows(partial_transpose(to_matrix(rho, dims), party));
        },
        py::arg("rho"), py::arg("dims"), py::arg("party") = 0,
        "Partial transpose of a bipartite matrix on the given party (0/1).");

    // -------------------------------------------------------------- dynamics
    m.def(
        "evolve_pure",
        [](const std::vector<Complex>& amplitudes, const Rows& hamiltonian,
           double t) {
            const PureState out =
                evolve(PureState(amplitudes), HamiltonianSpec(to_matrix(hamiltonian)), t);
            return out.amplitudes();
        },
        py::arg("amplitudes"), py::arg("hamiltonian"), py::arg("t"),
        "Evolve a pure state under exp(-iHt) and return the new amplitudes.");

    m.def(
        "expectation_pictures",
        [](const Rows& observable, const std::vector<Complex>& amplitudes,
           const Rows& h0, const Rows& hprime, double t) {
            const HamiltonianSpec spec =
                hprime.empty()
                    ? HamiltonianSpec(to_matrix(h0),
                                      ComplexMatrix(h0.size(), h0.size()))
                    : HamiltonianSpec(to_matrix(h0), to_matrix(hprime));
            const PictureExpectations r = expectation_in_pictures(
                to_matrix(observable), PureState(amplitudes), spec, t);
            py::dict out;
            out["schrodinger"] = r.schrodinger;
            out["heisenberg"] = r.heisenberg;
            out["dirac"] = r.dirac;
            return out;
        },
        py::arg("observable"), py::arg("amplitudes"), py::arg("h0"),
        py::arg("hprime") = Rows{}, py::arg("t") = 0.0,
        "Expectation value of an observable computed in the Schrodinger, "
        "Heisenberg and interaction pictures (they agree).");

    m.def(
        "wigner",
        [](const std::vector<Complex>& samples, double x0, double dx, double q,
           double p) { return wigner(WavefunctionGrid(samples, x0, dx), q, p); },
        py::arg("samples"), py::arg("x0"), py::arg("dx"), py::arg("q"),
        py::arg("p"),
        "Wigner distribution W(q, p) of a sampled one-dimensional "
        "wavefunction on a uniform grid starting at x0 with spacing dx.");
}
