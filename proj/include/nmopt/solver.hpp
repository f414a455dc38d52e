#pragma once

#include "nmopt/core.hpp"

#include <functional>

namespace nmopt {

/// Observer invoked at the start point (k = 0) and after every accepted
/// iteration with the new iterate.
using IterCallback = std::function<void(int k, const Vector& x, double f)>;

/// Nonmonotone Armijo-type backtracking solver. Iterates
/// x_{k+1} = x_k + alpha_k d_k, testing trial values against the reference
/// produced by the configured term, until ||g_k|| < eps, the iteration cap
/// is reached, or the line search stalls at machine precision.
SolveResult solve(const Problem& problem, const SolverConfig& cfg,
                  const IterCallback& on_iterate = {});

/// Undamped Newton: x_{k+1} = x_k + d_k with d_k from the raw symmetric
/// solve H d = -g (LU; shifted repair only when H is singular). No line
/// search, so the value sequence may be nonmonotone.
SolveResult solve_pure_newton(const Problem& problem, const Vector& x0, double eps,
                              long maxiter);

}  // namespace nmopt
