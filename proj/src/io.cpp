#include "scopelab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "scopelab/errors.hpp"

namespace scopelab {

namespace {

using nlohmann::json;

// ------------------------------------------------------------ encode helpers

json enc_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json enc_cvec(const std::vector<Complex>& v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back(enc_complex(z));
    return out;
}

json enc_cvecs(const std::vector<std::vector<Complex>>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(enc_cvec(v));
    return out;
}

json enc_matrix(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(enc_complex(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json enc_tag(const FamilyParams& params) {
    json p = json::object();
    std::visit(
        [&p](const auto& fp) {
            using T = std::decay_t<decltype(fp)>;
            if constexpr (std::is_same_v<T, ProductBasisParams>) {
                p["dims"] = fp.dims;
                p["indices"] = fp.indices;
            } else if constexpr (std::is_same_v<T, ProductPureParams>) {
                p["a"] = enc_cvec(fp.a);
                p["b"] = enc_cvec(fp.b);
            } else if constexpr (std::is_same_v<T, EnsembleProductParams> ||
                                 std::is_same_v<T, SeparableParams>) {
                p["weights"] = fp.weights;
                p["locals_a"] = enc_cvecs(fp.locals_a);
                p["locals_b"] = enc_cvecs(fp.locals_b);
            } else if constexpr (std::is_same_v<T, EntangledQuditParams> ||
                                 std::is_same_v<T, DecoheredQuditParams>) {
                p["a"] = enc_cvec(fp.a);
                p["b"] = enc_cvec(fp.b);
                p["pairing"] = fp.pairing;
            } else if constexpr (std::is_same_v<T, EnsembleEntangledParams> ||
                                 std::is_same_v<T, EnsembleDecoheredParams>) {
                p["weights"] = fp.weights;
                p["lambdas"] = enc_cvecs(fp.lambdas);
            } else if constexpr (std::is_same_v<T, WfesParams>) {
                p["gamma"] = enc_cvec(fp.gamma);
                p["members"] = enc_cvecs(fp.members);
            }
        },
        params);
    return json{{"name", family_name(family_of(params))}, {"params", p}};
}

// ------------------------------------------------------------ decode helpers

Complex dec_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("state file: complex numbers must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> dec_cvec(const json& j) {
    if (!j.is_array()) throw ValidationError("state file: expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(dec_complex(e));
    return out;
}

std::vector<std::vector<Complex>> dec_cvecs(const json& j) {
    if (!j.is_array()) throw ValidationError("state file: expected an array of vectors");
    std::vector<std::vector<Complex>> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(dec_cvec(e));
    return out;
}

std::vector<double> dec_dvec(const json& j) {
    if (!j.is_array()) throw ValidationError("state file: expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number()) throw ValidationError("state file: expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::size_t> dec_svec(const json& j) {
    if (!j.is_array()) throw ValidationError("state file: expected an array of indices");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_unsigned())
            throw ValidationError("state file: expected nonnegative integer indices");
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

ComplexMatrix dec_matrix(const json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("state file: matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw ValidationError("state file: matrix rows must be nonempty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ValidationError("state file: matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dec_complex(j[r][c]);
    }
    return m;
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string("state file: missing required field \"") + key + "\"");
    return *it;
}

FamilyParams dec_tag(const json& j) {
    if (!j.is_object()) throw ValidationError("state file: family_tag must be an object");
    const std::string name = require_field(j, "name").get<std::string>();
    const json& p = require_field(j, "params");
    if (name == "product_basis")
        return ProductBasisParams{dec_svec(require_field(p, "dims")),
                                  dec_svec(require_field(p, "indices"))};
    if (name == "product_pure")
        return ProductPureParams{dec_cvec(require_field(p, "a")), dec_cvec(require_field(p, "b"))};
    if (name == "ensemble_product")
        return EnsembleProductParams{dec_dvec(require_field(p, "weights")),
                                     dec_cvecs(require_field(p, "locals_a")),
                                     dec_cvecs(require_field(p, "locals_b"))};
    if (name == "entangled_qudit")
        return EntangledQuditParams{dec_cvec(require_field(p, "a")),
                                    dec_cvec(require_field(p, "b")),
                                    dec_svec(require_field(p, "pairing"))};
    if (name == "decohered_qudit")
        return DecoheredQuditParams{dec_cvec(require_field(p, "a")),
                                    dec_cvec(require_field(p, "b")),
                                    dec_svec(require_field(p, "pairing"))};
    if (name == "separable")
        return SeparableParams{dec_dvec(require_field(p, "weights")),
                               dec_cvecs(require_field(p, "locals_a")),
                               dec_cvecs(require_field(p, "locals_b"))};
    if (name == "ensemble_entangled")
        return EnsembleEntangledParams{dec_dvec(require_field(p, "weights")),
                                       dec_cvecs(require_field(p, "lambdas"))};
    if (name == "ensemble_decohered")
        return EnsembleDecoheredParams{dec_dvec(require_field(p, "weights")),
                                       dec_cvecs(require_field(p, "lambdas"))};
    if (name == "wfes")
        return WfesParams{dec_cvec(require_field(p, "gamma")),
                          dec_cvecs(require_field(p, "members"))};
    throw ValidationError("state file: unknown family_tag name \"" + name + "\"");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("state file: invalid JSON (") + e.what() + ")");
    }
}

}  // namespace

// ------------------------------------------------------------------ encoders

std::string to_json_text(const PureState& psi) {
    json j{{"kind", "pure"}, {"amplitudes", enc_cvec(psi.amplitudes())}};
    if (!psi.dims().empty()) j["dims"] = psi.dims();
    return dump(j);
}

std::string to_json_text(const DensityMatrix& rho) {
    json j{{"kind", "density"}, {"matrix", enc_matrix(rho.matrix())}};
    if (!rho.matrix().dims().empty()) j["dims"] = rho.matrix().dims();
    if (rho.tag().has_value()) j["family_tag"] = enc_tag(*rho.tag());
    return dump(j);
}

std::string to_json_text(const EnsembleDecomposition& ensemble) {
    json j{{"kind", "ensemble"},
           {"weights", ensemble.weights()},
           {"locals", json::array()}};
    for (const auto& party : ensemble.locals()) j["locals"].push_back(enc_cvecs(party));
    if (ensemble.has_gamma()) j["gamma"] = enc_cvec(ensemble.gamma_or_default());
    return dump(j);
}

std::string to_json_text(const ScopeDecomposition& scope) {
    json j{{"kind", "scope"}, {"coeffs", enc_cvecs(scope.coeffs)}};
    if (!scope.labels.empty()) j["labels"] = scope.labels;
    if (!scope.branch_map.empty()) j["branch_map"] = scope.branch_map;
    return dump(j);
}

std::string to_json_text(const WavefunctionGrid& grid) {
    json j{{"kind", "grid"},
           {"x0", grid.x0()},
           {"dx", grid.dx()},
           {"samples", enc_cvec(grid.samples())}};
    return dump(j);
}

// ------------------------------------------------------------------- decoders

namespace {

StateDocument parse_state_json(const json& j) {
    if (!j.is_object()) throw ValidationError("state file: top level must be an object");
    StateDocument doc;
    doc.kind = require_field(j, "kind").get<std::string>();
    if (doc.kind == "pure") {
        std::vector<std::size_t> dims;
        if (j.contains("dims")) dims = dec_svec(j["dims"]);
        std::vector<Complex> amps = dec_cvec(require_field(j, "amplitudes"));
        const double nrm = std::sqrt(norm2(amps));
        if (std::abs(nrm - 1.0) <= kDefaultTol.norm_input)
            doc.pure.emplace(
                PureState::from_normalized(std::move(amps), std::move(dims)));
        else
            doc.pure.emplace(std::move(amps), std::move(dims));
    } else if (doc.kind == "density") {
        ComplexMatrix m = dec_matrix(require_field(j, "matrix"));
        if (j.contains("dims")) m.set_dims(dec_svec(j["dims"]));
        std::optional<FamilyParams> tag;
        if (j.contains("family_tag")) tag = dec_tag(j["family_tag"]);
        doc.density.emplace(std::move(m), std::move(tag));
    } else if (doc.kind == "ensemble") {
        std::vector<std::vector<std::vector<Complex>>> locals;
        for (const json& party : require_field(j, "locals")) locals.push_back(dec_cvecs(party));
        std::vector<Complex> gamma;
        if (j.contains("gamma")) gamma = dec_cvec(j["gamma"]);
        doc.ensemble.emplace(dec_dvec(require_field(j, "weights")), std::move(locals),
                             std::move(gamma));
    } else if (doc.kind == "scope") {
        ScopeDecomposition scope;
        if (j.contains("coeffs")) {
            scope.coeffs = dec_cvecs(j["coeffs"]);
            if (j.contains("labels"))
                scope.labels = j["labels"].get<std::vector<std::vector<std::string>>>();
            if (j.contains("branch_map")) {
                for (const json& party : j["branch_map"])
                    scope.branch_map.push_back(dec_svec(party));
            }
            scope.validate();
        } else {
            // Single-party shorthand: just the superposition amplitudes.
            scope = make_scope(dec_cvec(require_field(j, "amplitudes")));
        }
        doc.scope.emplace(std::move(scope));
    } else if (doc.kind == "grid") {
        doc.grid.emplace(dec_cvec(require_field(j, "samples")),
                         require_field(j, "x0").get<double>(),
                         require_field(j, "dx").get<double>());
    } else {
        throw ValidationError("state file: unknown kind \"" + doc.kind + "\"");
    }
    return doc;
}

}  // namespace

StateDocument parse_state_text(const std::string& text) {
    return parse_state_json(parse_or_throw(text));
}

StateDocument load_state_file(const std::string& path) {
    return parse_state_text(load_text_file(path));
}

HistorySpec parse_history_text(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw ValidationError("history spec: top level must be an object");
    const StateDocument initial_doc = parse_state_json(require_field(j, "initial"));
    std::optional<DensityMatrix> initial;
    if (initial_doc.pure.has_value())
        initial.emplace(initial_doc.pure->density());
    else if (initial_doc.density.has_value())
        initial = initial_doc.density;
    else
        throw ValidationError("history spec: initial state must be pure or density");
    const std::size_t dim = initial->dim();

    const json& jsteps = require_field(j, "steps");
    if (!jsteps.is_array() || jsteps.empty())
        throw ValidationError("history spec: \"steps\" must be a nonempty array");
    std::vector<HistoryStep> steps;
    for (const json& js : jsteps) {
        if (!js.is_object()) throw ValidationError("history spec: each step must be an object");
        HistoryStep step;
        step.unitary = js.contains("unitary") ? dec_matrix(js["unitary"])
                                              : ComplexMatrix::identity(dim);
        for (const json& p : require_field(js, "projectors"))
            step.projectors.push_back(dec_matrix(p));
        steps.push_back(std::move(step));
    }
    return HistorySpec(std::move(*initial), std::move(steps));
}

HistorySpec load_history_file(const std::string& path) {
    return parse_history_text(load_text_file(path));
}

HamiltonianSpec parse_hamiltonian_text(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw ValidationError("hamiltonian file: top level must be an object");
    if (j.contains("h0") || j.contains("hprime"))
        return HamiltonianSpec(dec_matrix(require_field(j, "h0")),
                               dec_matrix(require_field(j, "hprime")));
    return HamiltonianSpec(dec_matrix(require_field(j, "h")));
}

HamiltonianSpec load_hamiltonian_file(const std::string& path) {
    return parse_hamiltonian_text(load_text_file(path));
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw ValidationError("failed while writing \"" + path + "\"");
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open \"" + path + "\" for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace scopelab
