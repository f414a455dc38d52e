#pragma once

#include "nmopt/core.hpp"

namespace nmopt {

struct LineSearchOutcome {
    double alpha = 0;   // accepted step, s * rho^(trials-1)
    Vector x_new;
    double f_new = 0;
    int trials = 0;     // objective evaluations consumed
    bool failed = false;
};

/// Backtracking Armijo search against an arbitrary reference value:
/// accepts the first alpha in {s, rho*s, rho^2*s, ...} with
///   f(x + alpha*d) <= f_ref + sigma*alpha*g'd.
///
/// Throws std::invalid_argument when d is not a descent direction (the
/// caller must safeguard first). Non-finite trial values count as
/// rejections and still cost an evaluation. Fails after max_backtracks
/// reductions or once alpha drops below alpha_min.
LineSearchOutcome backtrack(const Problem& problem, const Vector& x, double f_ref,
                            const Vector& g, const Vector& d, const SolverConfig& cfg);

}  // namespace nmopt
