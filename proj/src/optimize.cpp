#include "scopelab/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "scopelab/errors.hpp"

namespace scopelab {

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    if (n == 0) throw ValidationError("nelder_mead: empty starting point");

    // Dimension-adaptive coefficients: for small n these reduce to the
    // classic 1, 2, 1/2, 1/2 choice; for large n the gentler expansion and
    // contraction steps avoid the usual high-dimension stagnation.
    const double nd = static_cast<double>(n);
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / nd;
    const double gamma = 0.75 - 0.5 / nd;
    const double delta = 1.0 - 1.0 / nd;

    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i)
        pts[i + 1][i] += (x0[i] >= 0.0 ? opts.initial_step : -opts.initial_step);

    NelderMeadResult res;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);
    res.evaluations = n + 1;

    std::vector<std::size_t> order(n + 1);
    auto sort_order = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return vals[a] < vals[b];
                         });
    };

    std::vector<double> centroid(n), cand(n);
    while (res.evaluations < opts.max_evaluations) {
        sort_order();
        const std::size_t best = order.front(), worst = order.back();

        double fspread = 0.0, xspread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            fspread = std::max(fspread, std::abs(vals[i] - vals[best]));
            for (std::size_t j = 0; j < n; ++j)
                xspread = std::max(xspread,
                                   std::abs(pts[i][j] - pts[best][j]));
        }
        if (fspread <= opts.f_tolerance && xspread <= opts.x_tolerance) {
            res.converged = true;
            break;
        }

        // Centroid of all points but the worst.
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= nd;

        auto blend = [&](double t) {
            for (std::size_t j = 0; j < n; ++j)
                cand[j] = centroid[j] + t * (centroid[j] - pts[worst][j]);
        };

        blend(alpha);  // reflection
        const std::vector<double> xr = cand;
        const double fr = f(xr);
        ++res.evaluations;

        const double fbest = vals[best];
        const double fsecond = vals[order[n - 1]];
        if (fr < fbest) {
            blend(alpha * beta);  // expansion
            const double fe = f(cand);
            ++res.evaluations;
            if (fe < fr) {
                pts[worst] = cand;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
        } else if (fr < fsecond) {
            pts[worst] = xr;
            vals[worst] = fr;
        } else {
            if (fr < vals[worst]) {
                blend(alpha * gamma);  // outside contraction
                const double fc = f(cand);
                ++res.evaluations;
                if (fc <= fr) {
                    pts[worst] = cand;
                    vals[worst] = fc;
                    continue;
                }
            } else {
                blend(-gamma);  // inside contraction
                const double fc = f(cand);
                ++res.evaluations;
                if (fc < vals[worst]) {
                    pts[worst] = cand;
                    vals[worst] = fc;
                    continue;
                }
            }
            // Shrink towards the best point.
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == best) continue;
                for (std::size_t j = 0; j < n; ++j)
                    pts[i][j] = pts[best][j] + delta * (pts[i][j] - pts[best][j]);
                vals[i] = f(pts[i]);
                ++res.evaluations;
            }
        }
    }

    sort_order();
    res.x = pts[order.front()];
    res.value = vals[order.front()];
    return res;
}

}  // namespace scopelab
