#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace scopelab {

// Derivative-free simplex minimization (Nelder–Mead with the
// dimension-adaptive reflection/expansion/contraction/shrink parameters).
// Deterministic for a fixed starting point.

struct NelderMeadOptions {
    std::size_t max_evaluations = 2000;
    double initial_step = 0.25;  // simplex edge along each coordinate
    double x_tolerance = 1e-9;   // max coordinate spread for convergence
    double f_tolerance = 1e-12;  // max value spread for convergence
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const NelderMeadOptions& opts = {});

}  // namespace scopelab
