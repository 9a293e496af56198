#pragma once

// JSON state-file serialization. Documents carry one of four kinds
// ("pure", "density", "ensemble", "scope") plus an optional grid kind for
// sampled wavefunctions; complex numbers are stored as [re, im] pairs and
// doubles round-trip bit-exactly through the decimal encoding.

#include <optional>
#include <string>

#include "scopelab/dynamics.hpp"
#include "scopelab/states.hpp"

namespace scopelab {

struct StateDocument {
    std::string kind;
    std::optional<PureState> pure;
    std::optional<DensityMatrix> density;
    std::optional<EnsembleDecomposition> ensemble;
    std::optional<ScopeDecomposition> scope;
    std::optional<WavefunctionGrid> grid;
};

std::string to_json_text(const PureState& psi);
std::string to_json_text(const DensityMatrix& rho);
std::string to_json_text(const EnsembleDecomposition& ensemble);
std::string to_json_text(const ScopeDecomposition& scope);
std::string to_json_text(const WavefunctionGrid& grid);

StateDocument parse_state_text(const std::string& text);
StateDocument load_state_file(const std::string& path);

// History spec files: {"initial": <pure or density document>, "steps":
// [{"unitary": rows (optional, default identity), "projectors": [rows,...]},
// ...]}.  Matrices are arrays of rows of [re, im] pairs.
HistorySpec parse_history_text(const std::string& text);
HistorySpec load_history_file(const std::string& path);

// Hamiltonian files: {"h": rows} or {"h0": rows, "hprime": rows}; the split
// form records the free/interaction decomposition.
HamiltonianSpec parse_hamiltonian_text(const std::string& text);
HamiltonianSpec load_hamiltonian_file(const std::string& path);

void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

}  // namespace scopelab
