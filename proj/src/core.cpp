#include "nmopt/core.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace nmopt {

const char* to_string(TermKind k) {
    switch (k) {
        case TermKind::MONO: return "MONO";
        case TermKind::G: return "G";
        case TermKind::H: return "H";
        case TermKind::N: return "N";
        case TermKind::M: return "M";
        case TermKind::NM1: return "NM1";
        case TermKind::NM2: return "NM2";
    }
    return "?";
}

const char* to_string(DirectionKind k) {
    switch (k) {
        case DirectionKind::GD: return "GD";
        case DirectionKind::NEWTON: return "NEWTON";
        case DirectionKind::BFGS: return "BFGS";
        case DirectionKind::LBFGS: return "LBFGS";
        case DirectionKind::BB1: return "BB1";
        case DirectionKind::BB2: return "BB2";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Converged: return "Converged";
        case Status::MaxIter: return "MaxIter";
        case Status::LineSearchFail: return "LineSearchFail";
    }
    return "?";
}

TermKind term_from_string(const std::string& s) {
    if (s == "MONO") return TermKind::MONO;
    if (s == "G") return TermKind::G;
    if (s == "H") return TermKind::H;
    if (s == "N") return TermKind::N;
    if (s == "M") return TermKind::M;
    if (s == "NM1") return TermKind::NM1;
    if (s == "NM2") return TermKind::NM2;
    throw std::invalid_argument("unknown term kind: " + s);
}

DirectionKind direction_from_string(const std::string& s) {
    if (s == "GD") return DirectionKind::GD;
    if (s == "NEWTON") return DirectionKind::NEWTON;
    if (s == "BFGS") return DirectionKind::BFGS;
    if (s == "LBFGS") return DirectionKind::LBFGS;
    if (s == "BB1") return DirectionKind::BB1;
    if (s == "BB2") return DirectionKind::BB2;
    throw std::invalid_argument("unknown direction kind: " + s);
}

void SolverConfig::validate() const {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
    if (!(sigma > 0.0 && sigma < 0.5)) throw std::invalid_argument("sigma must lie in (0,1/2)");
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in (0,1]");
    if (!(eta0 >= 0.0 && eta0 < 1.0)) throw std::invalid_argument("eta0 must lie in [0,1)");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
    if (maxiter < 0) throw std::invalid_argument("maxiter must be >= 0");
    if (lbfgs_m_cap < 1) throw std::invalid_argument("lbfgs_m_cap must be >= 1");
    if (max_backtracks < 1) throw std::invalid_argument("max_backtracks must be >= 1");
}

SolverConfig default_config(TermKind term, DirectionKind direction) {
    SolverConfig cfg;
    cfg.term = term;
    cfg.direction = direction;
    const bool bb = direction == DirectionKind::BB1 || direction == DirectionKind::BB2;
    cfg.sigma = bb ? 1e-4 : 0.01;
    if (term == TermKind::H) {
        cfg.eta0 = 0.85;
    } else if (direction == DirectionKind::BB1) {
        cfg.eta0 = 0.80;
    } else if (direction == DirectionKind::BB2) {
        cfg.eta0 = 0.90;
    } else {
        cfg.eta0 = 0.75;
    }
    return cfg;
}

Vector finite_diff_grad(const Problem& problem, const Vector& x) {
    const int n = static_cast<int>(x.size());
    Vector g(n);
    Vector xp = x;
    for (int i = 0; i < n; ++i) {
        const double h = 1e-6 * (1.0 + std::abs(x[i]));
        const double xi = x[i];
        xp[i] = xi + h;
        const double fp = problem.f(xp);
        xp[i] = xi - h;
        const double fm = problem.f(xp);
        xp[i] = xi;
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::domain_error("evaluation domain: non-finite objective at finite-difference probe");
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

Matrix fd_hessian(const std::function<Vector(const Vector&)>& grad, const Vector& x) {
    const int n = static_cast<int>(x.size());
    const Vector g0 = grad(x);
    Matrix H(n, n);
    Vector xp = x;
    for (int j = 0; j < n; ++j) {
        const double h = 1e-6 * (1.0 + std::abs(x[j]));
        xp[j] = x[j] + h;
        H.col(j) = (grad(xp) - g0) / h;
        xp[j] = x[j];
    }
    return 0.5 * (H + H.transpose());
}

GradCheckReport grad_check(const Problem& problem, int n_points, std::uint64_t seed) {
    if (!problem.grad) throw std::invalid_argument("grad_check: problem has no gradient");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    GradCheckReport rep;
    rep.points = n_points;
    Vector x(problem.n);
    for (int p = 0; p < n_points; ++p) {
        for (int i = 0; i < problem.n; ++i)
            x[i] = problem.x0[i] + u(rng) * (1.0 + std::abs(problem.x0[i]));
        const Vector ga = problem.grad(x);
        const Vector gf = finite_diff_grad(problem, x);
        const double err = (ga - gf).norm() / (1.0 + ga.norm());
        rep.max_rel_err = std::max(rep.max_rel_err, err);
    }
    return rep;
}

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace nmopt
