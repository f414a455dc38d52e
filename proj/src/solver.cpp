#include "nmopt/solver.hpp"

#include "nmopt/directions.hpp"
#include "nmopt/linesearch.hpp"
#include "nmopt/nm_terms.hpp"

#include <Eigen/LU>

#include <cmath>

namespace nmopt {

SolveResult solve(const Problem& problem, const SolverConfig& cfg,
                  const IterCallback& on_iterate) {
    cfg.validate();
    if (problem.x0.size() != problem.n)
        throw std::invalid_argument("solve: x0 length does not match problem dimension");

    SolveResult res;
    Vector x = problem.x0;
    double f = problem.f(x);
    res.counters.n_f += 1;
    if (!std::isfinite(f)) {
        res.status = Status::LineSearchFail;
        res.diagnostic = "objective non-finite at the start point";
        res.x_b = x;
        res.f_b = f;
        return res;
    }
    Vector g = problem.grad(x);
    res.counters.n_g += 1;
    double gnorm = g.norm();

    TermState term(cfg.term, cfg.N, cfg.eta0, f);
    DirectionState dirstate(cfg.direction, problem.n, cfg.lbfgs_m_cap);
    if (on_iterate) on_iterate(0, x, f);

    long k = 0;
    while (true) {
        if (!g.allFinite()) {
            res.status = Status::LineSearchFail;
            res.diagnostic = "gradient non-finite at iterate " + std::to_string(k);
            break;
        }
        if (gnorm < cfg.eps || gnorm == 0.0) {
            res.status = Status::Converged;
            break;
        }
        if (k >= cfg.maxiter) {
            res.status = Status::MaxIter;
            break;
        }

        Vector d = dirstate.compute(problem, x, g, res.counters);
        d = descent_safeguard(d, g);

        const double T = term.reference_value();
        if (!term.lemma1_ok()) res.lemma1_violations += 1;

        LineSearchOutcome ls = backtrack(problem, x, T, g, d, cfg);
        res.counters.n_f += ls.trials;
        if (ls.failed) {
            res.status = Status::LineSearchFail;
            res.diagnostic = "backtracking exhausted at iterate " + std::to_string(k);
            break;
        }

        Vector g_new = problem.grad(ls.x_new);
        res.counters.n_g += 1;
        dirstate.push_step(x, g, ls.x_new, g_new);

        res.trace.push_back({static_cast<int>(k), f, gnorm, ls.alpha, ls.trials - 1, T});

        x = std::move(ls.x_new);
        f = ls.f_new;
        g = std::move(g_new);
        gnorm = g.norm();
        term.accept(f);

        k += 1;
        res.counters.n_iter = k;
        if (on_iterate) on_iterate(static_cast<int>(k), x, f);
    }

    res.x_b = std::move(x);
    res.f_b = f;
    res.g_norm = gnorm;
    return res;
}

SolveResult solve_pure_newton(const Problem& problem, const Vector& x0, double eps,
                              long maxiter) {
    SolveResult res;
    Vector x = x0;
    double f = problem.f(x);
    res.counters.n_f += 1;
    Vector g = problem.grad(x);
    res.counters.n_g += 1;
    double gnorm = g.norm();

    long k = 0;
    while (gnorm >= eps && gnorm != 0.0 && k < maxiter) {
        Matrix H = problem.has_hess() ? problem.hess(x) : fd_hessian(problem.grad, x);
        res.counters.n_h += 1;

        Eigen::PartialPivLU<Matrix> lu(H);
        Vector d = lu.solve(-g);
        if (!d.allFinite()) d = newton_dir(H, g);  // singular H, shifted repair

        res.trace.push_back({static_cast<int>(k), f, gnorm, 1.0, 0, f});

        x += d;
        f = problem.f(x);
        res.counters.n_f += 1;
        g = problem.grad(x);
        res.counters.n_g += 1;
        gnorm = g.norm();
        if (!std::isfinite(f) || !g.allFinite()) {
            res.status = Status::LineSearchFail;
            res.diagnostic = "non-finite value along the Newton path";
            res.x_b = x;
            res.f_b = f;
            res.g_norm = gnorm;
            return res;
        }
        k += 1;
        res.counters.n_iter = k;
    }

    res.status = (gnorm < eps || gnorm == 0.0) ? Status::Converged : Status::MaxIter;
    res.x_b = std::move(x);
    res.f_b = f;
    res.g_norm = gnorm;
    return res;
}

}  // namespace nmopt
