// scope-lab: command-line front end for the superposition / entanglement /
// decoherence toolkit.  Exit codes: 0 success, 1 verification failure
// (a residual exceeded the gate), 2 usage or parse error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scopelab/dynamics.hpp"
#include "scopelab/errors.hpp"
#include "scopelab/identities.hpp"
#include "scopelab/io.hpp"
#include "scopelab/measures.hpp"
#include "scopelab/numerics.hpp"
#include "scopelab/states.hpp"
#include "scopelab/tolerances.hpp"

namespace {

using namespace scopelab;

// Residual gate shared by the verification-style subcommands.
constexpr double kResidualGate = 1e-8;

// --------------------------------------------------------------- formatting

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(std::size_t v) { return std::to_string(v); }

std::string join_indices(const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) out += '-';
        out += std::to_string(idx[k]);
    }
    return out;
}

class Csv {
  public:
    explicit Csv(const std::string& header) {
        text_ = "# schema=1\n";
        text_ += header;
        text_ += '\n';
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) text_ += ',';
            text_ += cells[k];
        }
        text_ += '\n';
    }
    const std::string& text() const { return text_; }

  private:
    std::string text_;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        save_text_file(out_path, text);
    }
}

// ------------------------------------------------------------ flag parsing

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_real(const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("not a number: \"" + tok + "\"");
    }
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    for (const std::string& tok : split(s, ',')) out.push_back(parse_real(tok));
    return out;
}

std::vector<Complex> parse_amps(const std::string& s) {
    std::vector<Complex> out;
    for (double v : parse_reals(s)) out.emplace_back(v, 0.0);
    return out;
}

std::vector<std::vector<Complex>> parse_members(const std::string& s) {
    std::vector<std::vector<Complex>> out;
    for (const std::string& member : split(s, ';')) out.push_back(parse_amps(member));
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    for (const std::string& tok : split(s, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ValidationError("not an index: \"" + tok + "\"");
        }
    }
    return out;
}

std::vector<std::size_t> parse_pairing(const std::string& s, std::size_t n) {
    std::vector<std::size_t> p(n);
    if (s == "direct") {
        std::iota(p.begin(), p.end(), std::size_t{0});
    } else if (s == "cross") {
        for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
    } else {
        p = parse_indices(s);
    }
    return p;
}

// Range string: either a single value "v" or "start:stop:step" inclusive.
std::vector<double> parse_range(const std::string& s) {
    const std::vector<std::string> parts = split(s, ':');
    if (parts.size() == 1) return {parse_real(parts[0])};
    if (parts.size() != 3)
        throw ValidationError("range must be \"value\" or \"start:stop:step\": \"" + s + "\"");
    const double start = parse_real(parts[0]);
    const double stop = parse_real(parts[1]);
    const double step = parse_real(parts[2]);
    if (step <= 0.0) throw ValidationError("range step must be positive");
    if (stop < start) throw ValidationError("range stop must be >= start");
    std::vector<double> out;
    // Index-based stepping keeps the grid points reproducible.
    const std::size_t count = static_cast<std::size_t>(
        std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
    return out;
}

// ------------------------------------------------------------------- random

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Complex> random_positive_scope(std::size_t n, std::mt19937_64& rng) {
    std::vector<Complex> v(n);
    for (auto& x : v) x = Complex(0.05 + 0.95 * uniform01(rng), 0.0);
    normalize_coefficients(v);
    return v;
}

// =====================================================================  gen

struct GenArgs {
    std::string family;
    std::string a, b;
    std::string pairing = "direct";
    std::string weights;
    std::string locals_a, locals_b;
    std::string lambdas;
    std::string gamma;
    std::string members;
    std::string dims, indices;
    std::string out;
    int d = 0;
};

std::vector<std::vector<Complex>> point_locals(std::size_t count) {
    std::vector<std::vector<Complex>> locals(count,
                                             std::vector<Complex>(count, Complex(0.0, 0.0)));
    for (std::size_t k = 0; k < count; ++k) locals[k][k] = Complex(1.0, 0.0);
    return locals;
}

FamilyParams gen_params(const GenArgs& g) {
    const std::string& f = g.family;
    auto need = [](const std::string& value, const char* flag) -> const std::string& {
        if (value.empty())
            throw ValidationError(std::string("missing required flag ") + flag);
        return value;
    };
    if (f == "bell") {
        const double s = 1.0 / std::sqrt(2.0);
        const std::vector<Complex> half{{s, 0.0}, {s, 0.0}};
        return EntangledQuditParams{half, half, {0, 1}};
    }
    if (f == "product-basis")
        return ProductBasisParams{parse_indices(need(g.dims, "--dims")),
                                  parse_indices(need(g.indices, "--indices"))};
    if (f == "product-pure")
        return ProductPureParams{parse_amps(need(g.a, "--a")), parse_amps(need(g.b, "--b"))};
    if (f == "entangled-qudit" || f == "decohered-qudit") {
        std::vector<Complex> a = parse_amps(need(g.a, "--a"));
        std::vector<Complex> b = parse_amps(need(g.b, "--b"));
        std::vector<std::size_t> pairing = parse_pairing(g.pairing, a.size());
        if (f == "entangled-qudit") return EntangledQuditParams{a, b, pairing};
        return DecoheredQuditParams{a, b, pairing};
    }
    if (f == "ensemble-product" || f == "separable") {
        std::vector<double> w = parse_reals(need(g.weights, "--weights"));
        std::vector<std::vector<Complex>> la, lb;
        if (g.d != 0) {
            if (g.d != 1)
                throw ValidationError(
                    "--d supports only 1 (one orthogonal basis point per member)");
            if (!g.locals_a.empty() || !g.locals_b.empty())
                throw ValidationError("--d and --locals-a/--locals-b are mutually exclusive");
            la = point_locals(w.size());
            lb = point_locals(w.size());
        } else {
            la = parse_members(need(g.locals_a, "--locals-a"));
            lb = parse_members(need(g.locals_b, "--locals-b"));
        }
        if (f == "ensemble-product") return EnsembleProductParams{w, la, lb};
        return SeparableParams{w, la, lb};
    }
    if (f == "ensemble-entangled" || f == "ensemble-decohered") {
        std::vector<double> w = parse_reals(need(g.weights, "--weights"));
        std::vector<std::vector<Complex>> lambdas = parse_members(need(g.lambdas, "--lambdas"));
        if (f == "ensemble-entangled") return EnsembleEntangledParams{w, lambdas};
        return EnsembleDecoheredParams{w, lambdas};
    }
    if (f == "wfes")
        return WfesParams{parse_amps(need(g.gamma, "--gamma")),
                          parse_members(need(g.members, "--members"))};
    throw ValidationError(
        "unknown family \"" + f +
        "\" (expected bell, product-basis, product-pure, ensemble-product, "
        "entangled-qudit, decohered-qudit, separable, ensemble-entangled, "
        "ensemble-decohered, or wfes)");
}

int run_gen(const GenArgs& g) {
    const DensityMatrix rho = build_family(gen_params(g));
    emit(to_json_text(rho), g.out);
    return 0;
}

// =================================================================  analyze

struct AnalyzeArgs {
    std::string state;
    std::string out;
};

PureState dominant_eigenvector(const DensityMatrix& rho) {
    const EigenResult es = eigh(rho.matrix());
    const std::size_t last = es.values.size() - 1;
    std::vector<Complex> v(rho.dim());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = es.vectors(r, last);
    return PureState::from_normalized(std::move(v), rho.matrix().dims());
}

void analyze_pure_extras(Csv& csv, const DensityMatrix& rho) {
    if (rho.dim() != 4) return;
    if (rho.purity() < 1.0 - 1e-9) return;
    PureState psi = dominant_eigenvector(rho);
    if (psi.dims().empty())
        psi = PureState::from_normalized(psi.amplitudes(), {2, 2});
    if (psi.dims() != std::vector<std::size_t>{2, 2}) return;
    const double c = concurrence(psi);
    csv.row({"concurrence", fmt(c)});
    csv.row({"formation", fmt(entanglement_of_formation(c))});
}

void analyze_density(Csv& csv, const DensityMatrix& rho) {
    csv.row({"kind", "density"});
    csv.row({"dim", fmt(rho.dim())});
    if (rho.tag().has_value() && family_of(*rho.tag()) == Family::Wfes) {
        // Wavefunction ensembles carry trace <Psi|Psi> != 1; report the
        // sub-decohered (cross terms dropped) mixture instead.
        csv.row({"family", "wfes"});
        csv.row({"wfes_trace", fmt(rho.matrix().trace().real())});
        const DensityMatrix sub = sub_decohere(rho);
        for (std::size_t k = 0; k < sub.dim(); ++k)
            csv.row({"epsilon_" + std::to_string(k), fmt(sub.matrix()(k, k).real())});
        csv.row({"entropy_bits", fmt(von_neumann_entropy(sub))});
        csv.row({"purity", fmt(sub.purity())});
        return;
    }
    const CorrelationProfile profile = classify(rho);
    csv.row({"family",
             profile.family.has_value() ? family_name(*profile.family) : "untagged"});
    if (profile.structural) {
        csv.row({"flag_entanglement", profile.entanglement ? "1" : "0"});
        csv.row({"flag_decohered_classicality",
                 profile.decohered_classicality ? "1" : "0"});
        csv.row({"flag_nonorthogonality", profile.nonorthogonality ? "1" : "0"});
        csv.row({"flag_coarse_grained_classicality",
                 profile.coarse_grained_classicality ? "1" : "0"});
        csv.row({"entanglement_degree", fmt(profile.entanglement_value)});
        csv.row({"nonorthogonality", fmt(profile.nonorthogonality_value)});
        csv.row({"coarse_entropy_bits", fmt(profile.coarse_entropy_bits)});
    }
    if (rho.matrix().dims().size() == 2)
        csv.row({"negativity", fmt(profile.negativity_value)});
    csv.row({"entropy_bits", fmt(profile.entropy_bits)});
    csv.row({"purity", fmt(rho.purity())});
    analyze_pure_extras(csv, rho);
}

int run_analyze(const AnalyzeArgs& args) {
    const StateDocument doc = load_state_file(args.state);
    Csv csv("metric,value");
    if (doc.pure.has_value()) {
        const PureState& psi = *doc.pure;
        csv.row({"kind", "pure"});
        csv.row({"dim", fmt(psi.dim())});
        csv.row({"epsilon", fmt(degree_of_superposition(psi.amplitudes()))});
        if (psi.dims().size() == 2) {
            const DensityMatrix rho(psi.density());
            csv.row({"negativity", fmt(negativity(rho))});
            analyze_pure_extras(csv, rho);
        }
    } else if (doc.density.has_value()) {
        analyze_density(csv, *doc.density);
    } else if (doc.ensemble.has_value()) {
        const EnsembleDecomposition& ens = *doc.ensemble;
        csv.row({"kind", "ensemble"});
        csv.row({"parties", fmt(ens.parties())});
        csv.row({"members", fmt(ens.members())});
        csv.row({"nonorthogonality", fmt(nonorthogonality(ens))});
        csv.row({"entropy_bits", fmt(shannon_entropy_bits(ens.weights()))});
    } else if (doc.scope.has_value()) {
        const ScopeDecomposition& scope = *doc.scope;
        csv.row({"kind", "scope"});
        csv.row({"parties", fmt(scope.parties())});
        for (std::size_t p = 0; p < scope.coeffs.size(); ++p)
            csv.row({"epsilon_" + std::to_string(p),
                     fmt(degree_of_superposition(scope.coeffs[p]))});
    } else if (doc.grid.has_value()) {
        const WavefunctionGrid& grid = *doc.grid;
        csv.row({"kind", "grid"});
        csv.row({"samples", fmt(grid.samples().size())});
        csv.row({"norm", fmt(grid.norm())});
        csv.row({"covers_support", grid.covers_support() ? "1" : "0"});
    }
    emit(csv.text(), args.out);
    return 0;
}

// ==================================================================  verify

struct VerifyArgs {
    std::size_t n = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    if (args.n < 2 || args.n > 7)
        throw ValidationError("--n must lie in 2..7 (factorial cap)");
    if (args.trials == 0) throw ValidationError("--trials must be positive");
    std::mt19937_64 rng(args.seed);
    Csv csv(
        "trial,n,eps_a,eps_b,sum_beta,sum_alpha,sum_alpha_over_e,"
        "beta_residual,alpha_residual,alpha_over_e_residual,max_residual");
    double overall = 0.0;
    for (std::size_t t = 0; t < args.trials; ++t) {
        const std::vector<Complex> a = random_positive_scope(args.n, rng);
        const std::vector<Complex> b = random_positive_scope(args.n, rng);
        double sum_beta = 0.0, sum_alpha = 0.0, sum_ratio = 0.0;
        for (const PermutationStateReport& s : enumerate_perm_states(a, b)) {
            sum_beta += s.beta;
            sum_alpha += s.alpha;
            sum_ratio += s.entanglement > 0.0 ? s.alpha / s.entanglement : s.beta;
        }
        const IdentityReport rep = verify_sum_identities(a, b);
        overall = std::max(overall, rep.max_abs_residual);
        csv.row({fmt(t), fmt(args.n), fmt(degree_of_superposition(a)),
                 fmt(degree_of_superposition(b)), fmt(sum_beta), fmt(sum_alpha),
                 fmt(sum_ratio), fmt(rep.sum_beta_residual),
                 fmt(rep.sum_alpha_residual), fmt(rep.sum_alpha_over_e_residual),
                 fmt(rep.max_abs_residual)});
    }
    csv.row({"summary", fmt(args.n), "", "", "", "", "", "", "", "", fmt(overall)});
    emit(csv.text(), args.out);
    return overall > kResidualGate ? 1 : 0;
}

// =====================================================================  ghz

struct GhzArgs {
    std::size_t parties = 0;
    std::string coeffs;
    std::string out;
};

int run_ghz(const GhzArgs& args) {
    if (args.parties < 2 || args.parties > 16)
        throw ValidationError("--parties must lie in 2..16");
    std::vector<std::vector<Complex>> party_coeffs;
    if (args.coeffs.empty()) {
        const double s = 1.0 / std::sqrt(2.0);
        party_coeffs.assign(args.parties, {Complex(s, 0.0), Complex(s, 0.0)});
    } else {
        party_coeffs = parse_members(args.coeffs);
        if (party_coeffs.size() != args.parties)
            throw ValidationError("--coeffs must supply one c0,c1 pair per party");
        for (auto& c : party_coeffs) normalize_coefficients(c);
    }
    const GhzFamilyResult res = ghz_family(party_coeffs);
    double eps_product = 1.0;
    for (const auto& c : party_coeffs) eps_product *= degree_of_superposition(c);
    const double residual = std::abs(res.e_dagger - eps_product);

    Csv csv("row,pattern,alpha,beta,entanglement,e_dagger,eps_product,residual");
    for (const GhzStateReport& s : res.states)
        csv.row({"state", join_indices(s.pattern), fmt(s.alpha), fmt(s.beta),
                 fmt(s.entanglement), "", "", ""});
    csv.row({"summary", "", "", "", "", fmt(res.e_dagger), fmt(eps_product),
             fmt(residual)});
    emit(csv.text(), args.out);
    return residual > kResidualGate ? 1 : 0;
}

// ====================================================== mixture-identity

struct MixtureArgs {
    double e_direct = -1.0;
    double e_cross = -1.0;
    double p1 = -1.0;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_mixture(const MixtureArgs& args) {
    Csv csv("trial,e_direct,e_cross,p1,p2,lhs,rhs,residual");
    double overall = 0.0;
    auto add_row = [&](const std::string& label, double ed, double ec, double p1) {
        const double p2 = 1.0 - p1;
        const MixtureIdentityResult r = mixture_identity(ed, ec, p1, p2);
        const double residual = std::abs(r.lhs - r.rhs);
        overall = std::max(overall, residual);
        csv.row({label, fmt(ed), fmt(ec), fmt(p1), fmt(p2), fmt(r.lhs), fmt(r.rhs),
                 fmt(residual)});
    };
    if (args.trials == 0) {
        if (args.e_direct < 0.0 || args.e_cross < 0.0 || args.p1 < 0.0)
            throw ValidationError(
                "provide --ed, --ec and --p1, or --trials for random draws");
        add_row("0", args.e_direct, args.e_cross, args.p1);
    } else {
        std::mt19937_64 rng(args.seed);
        for (std::size_t t = 0; t < args.trials; ++t) {
            const double ed = 0.05 + 0.95 * uniform01(rng);
            const double ec = 0.05 + 0.95 * uniform01(rng);
            add_row(fmt(t), ed, ec, uniform01(rng));
        }
    }
    csv.row({"summary", "", "", "", "", "", "", fmt(overall)});
    emit(csv.text(), args.out);
    return overall > kResidualGate ? 1 : 0;
}

// ===============================================================  histories

struct HistoriesArgs {
    std::string spec;
    std::string out;
};

int run_histories(const HistoriesArgs& args) {
    const HistorySpec spec = load_history_file(args.spec);
    const std::size_t lattice = spec.lattice_size();
    if (lattice > 64)
        throw ValidationError(
            "history lattice too large to tabulate (more than 64 sequences)");
    // Enumerate index sequences lexicographically.
    std::vector<std::vector<std::size_t>> alphas;
    std::vector<std::size_t> cursor(spec.steps().size(), 0);
    for (std::size_t flat = 0; flat < lattice; ++flat) {
        alphas.push_back(cursor);
        for (std::size_t k = spec.steps().size(); k-- > 0;) {
            if (++cursor[k] < spec.steps()[k].projectors.size()) break;
            cursor[k] = 0;
        }
    }
    Csv csv("row,alpha,alpha_prime,value_re,value_im,consistent,max_offdiag");
    for (const auto& a : alphas) {
        for (const auto& ap : alphas) {
            const Complex d = decoherence_functional(spec, a, ap);
            csv.row({"D", join_indices(a), join_indices(ap), fmt(d.real()),
                     fmt(d.imag()), "", ""});
        }
    }
    const ConsistencyReport rep = consistency_check(spec);
    csv.row({"summary", "", "", "", "", rep.consistent ? "1" : "0",
             fmt(rep.max_offdiag)});
    emit(csv.text(), args.out);
    return 0;
}

// ==================================================================  wigner

struct WignerArgs {
    std::string state;
    std::string q = "0";
    std::string p = "0";
    bool gaussian = false;
    double cat = 0.0;
    std::string out;
};

WavefunctionGrid synthesize_gaussian() {
    const double dx = 0.01;
    std::vector<Complex> samples;
    const double amp = std::pow(M_PI, -0.25);
    for (int j = -800; j <= 800; ++j) {
        const double x = j * dx;
        samples.emplace_back(amp * std::exp(-0.5 * x * x), 0.0);
    }
    return WavefunctionGrid(std::move(samples), -8.0, dx);
}

WavefunctionGrid synthesize_cat(double separation) {
    if (separation <= 0.0) throw ValidationError("--cat separation must be positive");
    const double dx = 0.01;
    const double span = separation + 8.0;
    const int half = static_cast<int>(std::lround(span / dx));
    std::vector<Complex> samples;
    double norm2_sum = 0.0;
    for (int j = -half; j <= half; ++j) {
        const double x = j * dx;
        const double v = std::exp(-0.5 * (x - separation) * (x - separation)) -
                         std::exp(-0.5 * (x + separation) * (x + separation));
        samples.emplace_back(v, 0.0);
        norm2_sum += v * v * dx;
    }
    const double scale = 1.0 / std::sqrt(norm2_sum);
    for (auto& s : samples) s *= scale;
    return WavefunctionGrid(std::move(samples), -span, dx);
}

int run_wigner(const WignerArgs& args) {
    std::optional<WavefunctionGrid> grid;
    const int sources = (!args.state.empty()) + args.gaussian + (args.cat > 0.0);
    if (sources != 1)
        throw ValidationError(
            "provide exactly one wavefunction source: a grid state file, "
            "--gaussian, or --cat <separation>");
    if (args.gaussian) {
        grid.emplace(synthesize_gaussian());
    } else if (args.cat > 0.0) {
        grid.emplace(synthesize_cat(args.cat));
    } else {
        StateDocument doc = load_state_file(args.state);
        if (!doc.grid.has_value())
            throw ValidationError("wigner requires a state file of kind \"grid\"");
        grid.emplace(std::move(*doc.grid));
    }
    if (!grid->covers_support())
        std::fputs(
            "warning: wavefunction support may extend beyond the sampled window; "
            "Wigner values near the edge lose accuracy\n",
            stderr);
    const std::vector<double> qs = parse_range(args.q);
    const std::vector<double> ps = parse_range(args.p);
    if (qs.size() * ps.size() > 100000)
        throw ValidationError("q/p grid exceeds 100000 rows");
    Csv csv("q,p,w");
    for (double q : qs)
        for (double p : ps) csv.row({fmt(q), fmt(p), fmt(wigner(*grid, q, p))});
    emit(csv.text(), args.out);
    return 0;
}

// ==================================================================  evolve

struct EvolveArgs {
    std::string state;
    std::string hamiltonian;
    double t = 0.0;
    std::string observable;
    std::string out;
};

int run_evolve(const EvolveArgs& args) {
    const StateDocument doc = load_state_file(args.state);
    const HamiltonianSpec h = load_hamiltonian_file(args.hamiltonian);
    if (!args.observable.empty()) {
        if (!doc.pure.has_value())
            throw ValidationError("--observable requires a pure state");
        // The observable file shares the Hamiltonian format: {"h": rows}.
        const ComplexMatrix observable = load_hamiltonian_file(args.observable).h();
        // Split Hamiltonians report all three pictures; otherwise treat the
        // whole Hamiltonian as the free part (interaction zero).
        const HamiltonianSpec split =
            h.has_split() ? h
                          : HamiltonianSpec(h.h(), ComplexMatrix(h.h().rows(),
                                                                 h.h().cols()));
        const PictureExpectations e =
            expectation_in_pictures(observable, *doc.pure, split, args.t);
        Csv csv("t,schrodinger,heisenberg,dirac");
        csv.row({fmt(args.t), fmt(e.schrodinger), fmt(e.heisenberg), fmt(e.dirac)});
        emit(csv.text(), args.out);
        return 0;
    }
    if (doc.pure.has_value()) {
        emit(to_json_text(evolve(*doc.pure, h, args.t)), args.out);
        return 0;
    }
    if (doc.density.has_value()) {
        emit(to_json_text(evolve(*doc.density, h, args.t)), args.out);
        return 0;
    }
    throw ValidationError("evolve requires a pure or density state file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scope-lab: superposition, entanglement and decoherence toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Construct a state family and write it as JSON");
    gen->add_option("family", gen_args.family,
                    "bell | product-basis | product-pure | ensemble-product | "
                    "entangled-qudit | decohered-qudit | separable | "
                    "ensemble-entangled | ensemble-decohered | wfes")
        ->required();
    gen->add_option("--a", gen_args.a, "comma-separated coefficients for party A");
    gen->add_option("--b", gen_args.b, "comma-separated coefficients for party B");
    gen->add_option("--pairing", gen_args.pairing, "direct | cross | explicit index list");
    gen->add_option("--weights", gen_args.weights, "comma-separated ensemble weights");
    gen->add_option("--d", gen_args.d,
                    "1 = one orthogonal basis point per member (classical locals)");
    gen->add_option("--locals-a", gen_args.locals_a,
                    "members for party A, e.g. \"1,0;0,1\" (';' between members)");
    gen->add_option("--locals-b", gen_args.locals_b, "members for party B");
    gen->add_option("--lambdas", gen_args.lambdas,
                    "per-member Schmidt coefficient vectors, ';' between members");
    gen->add_option("--gamma", gen_args.gamma, "wavefunction-ensemble coefficients");
    gen->add_option("--members", gen_args.members, "wavefunction-ensemble member vectors");
    gen->add_option("--dims", gen_args.dims, "party dimensions for product-basis");
    gen->add_option("--indices", gen_args.indices, "basis index per party for product-basis");
    gen->add_option("--out", gen_args.out, "output path (default: standard output)");
    gen->callback([&] { rc = run_gen(gen_args); });

    AnalyzeArgs analyze_args;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Report measures and classification for a state file");
    analyze->add_option("state", analyze_args.state, "state file to analyze")->required();
    analyze->add_option("--out", analyze_args.out, "output path (default: standard output)");
    analyze->callback([&] { rc = run_analyze(analyze_args); });

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the permutation-state sum identities on random draws");
    verify->add_option("--n", verify_args.n, "levels per party (2..7)")->required();
    verify->add_option("--trials", verify_args.trials, "number of random draws (default 100)");
    verify->add_option("--seed", verify_args.seed, "random seed (default 1)");
    verify->add_option("--out", verify_args.out, "output path (default: standard output)");
    verify->callback([&] { rc = run_verify(verify_args); });

    GhzArgs ghz_args;
    CLI::App* ghz = app.add_subcommand(
        "ghz", "Tabulate the multiparty two-branch family and its reduced degree");
    ghz->add_option("--parties", ghz_args.parties, "number of parties (2..16)")->required();
    ghz->add_option("--coeffs", ghz_args.coeffs,
                    "per-party c0,c1 pairs, ';' between parties (default uniform)");
    ghz->add_option("--out", ghz_args.out, "output path (default: standard output)");
    ghz->callback([&] { rc = run_ghz(ghz_args); });

    MixtureArgs mixture_args;
    CLI::App* mixture = app.add_subcommand(
        "mixture-identity", "Check the direct/cross mixture identity");
    mixture->add_option("--ed", mixture_args.e_direct, "direct-pairing degree");
    mixture->add_option("--ec", mixture_args.e_cross, "cross-pairing degree");
    mixture->add_option("--p1", mixture_args.p1, "first mixture weight");
    mixture->add_option("--trials", mixture_args.trials, "random draws instead of --ed/--ec/--p1");
    mixture->add_option("--seed", mixture_args.seed, "random seed (default 1)");
    mixture->add_option("--out", mixture_args.out, "output path (default: standard output)");
    mixture->callback([&] { rc = run_mixture(mixture_args); });

    HistoriesArgs histories_args;
    CLI::App* histories = app.add_subcommand(
        "histories", "Tabulate the decoherence functional of a history spec");
    histories->add_option("spec", histories_args.spec, "history spec file")->required();
    histories->add_option("--out", histories_args.out, "output path (default: standard output)");
    histories->callback([&] { rc = run_histories(histories_args); });

    WignerArgs wigner_args;
    CLI::App* wig = app.add_subcommand("wigner", "Evaluate the Wigner function on a q/p grid");
    wig->add_option("state", wigner_args.state, "grid-kind state file");
    wig->add_option("--q", wigner_args.q, "position: value or start:stop:step (default 0)");
    wig->add_option("--p", wigner_args.p, "momentum: value or start:stop:step (default 0)");
    wig->add_flag("--gaussian", wigner_args.gaussian, "use the standard Gaussian wavefunction");
    wig->add_option("--cat", wigner_args.cat, "use an odd cat state with this separation");
    wig->add_option("--out", wigner_args.out, "output path (default: standard output)");
    wig->callback([&] { rc = run_wigner(wigner_args); });

    EvolveArgs evolve_args;
    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "Evolve a state under a Hamiltonian file for a time t");
    evolve_cmd->add_option("state", evolve_args.state, "pure or density state file")->required();
    evolve_cmd->add_option("--hamiltonian", evolve_args.hamiltonian, "Hamiltonian file")
        ->required();
    evolve_cmd->add_option("--t", evolve_args.t, "evolution time")->required();
    evolve_cmd->add_option("--observable", evolve_args.observable,
                           "Hermitian operator file ({\"h\": rows}); reports "
                           "expectations in the three pictures");
    evolve_cmd->add_option("--out", evolve_args.out, "output path (default: standard output)");
    evolve_cmd->callback([&] { rc = run_evolve(evolve_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
