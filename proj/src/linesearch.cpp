#include "nmopt/linesearch.hpp"

#include <cmath>
#include <limits>

namespace nmopt {

LineSearchOutcome backtrack(const Problem& problem, const Vector& x, double f_ref,
                            const Vector& g, const Vector& d, const SolverConfig& cfg) {
    const double gd = g.dot(d);
    if (!(gd < 0.0))
        throw std::invalid_argument("backtrack: g'd >= 0, direction is not descent");

    LineSearchOutcome out;
    double alpha = cfg.s;
    Vector xt(x.size());
    for (int j = 0; j <= cfg.max_backtracks; ++j) {
        if (alpha < cfg.alpha_min) break;
        xt = x + alpha * d;
        const double ft = problem.f(xt);
        out.trials += 1;
        if (std::isfinite(ft) && ft <= f_ref + cfg.sigma * alpha * gd) {
            out.alpha = alpha;
            out.x_new = std::move(xt);
            out.f_new = ft;
            return out;
        }
        alpha *= cfg.rho;
    }
    out.failed = true;
    out.alpha = 0.0;
    out.x_new = x;
    out.f_new = std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace nmopt
