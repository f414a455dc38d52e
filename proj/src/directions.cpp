#include "nmopt/directions.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>

namespace nmopt {

Vector descent_safeguard(const Vector& d, const Vector& g) {
    return g.dot(d) <= -1e-14 ? d : Vector(-g);
}

Vector gradient_dir(const Vector& g) { return -g; }

Vector newton_dir(const Matrix& H, const Vector& g, std::string* diagnostic) {
    // positive definite H: the plain Newton step
    Eigen::LLT<Matrix> llt(H);
    if (llt.info() == Eigen::Success) {
        Vector d = llt.solve(-g);
        if (d.allFinite()) return descent_safeguard(d, g);
    }

    // indefinite H: keep the raw solve while it makes a healthy descent
    // angle with -g; nearly orthogonal or uphill solves are the signature
    // of a Newton model wrecked by tiny eigenvalues
    {
        Eigen::PartialPivLU<Matrix> lu(H);
        Vector d = lu.solve(-g);
        if (d.allFinite() && g.dot(d) <= -0.05 * g.norm() * d.norm() && g.dot(d) <= -1e-14)
            return d;
    }

    // repair by the smallest diagonal shift that restores positive
    // definiteness
    const double scale = 1.0 + H.cwiseAbs().rowwise().sum().maxCoeff();
    static const double ladder[] = {1e-8, 1e-6, 1e-4, 1e-2, 1.0, 1e1,
                                    1e2,  1e3,  1e4,  1e5,  1e6, 1e7, 1e8};
    for (double fac : ladder) {
        Matrix M = H;
        M.diagonal().array() += fac * scale;
        Eigen::LLT<Matrix> shifted(M);
        if (shifted.info() != Eigen::Success) continue;
        Vector d = shifted.solve(-g);
        if (d.allFinite()) return descent_safeguard(d, g);
    }
    if (diagnostic) *diagnostic = "newton_dir: factorization failed for every shift, using -g";
    return -g;
}

void bfgs_update(Matrix& Hinv, const Vector& s, const Vector& y) {
    const double ys = y.dot(s);
    if (ys <= 1e-10 * y.norm() * s.norm()) return;  // curvature too weak, skip
    const double rho = 1.0 / ys;
    const Vector Hy = Hinv * y;
    const double yHy = y.dot(Hy);
    Hinv.noalias() -= rho * (s * Hy.transpose() + Hy * s.transpose());
    Hinv.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
    Hinv = 0.5 * (Hinv + Hinv.transpose()).eval();
}

Vector lbfgs_dir(const std::deque<LbfgsPair>& pairs, const Vector& g, double gamma) {
    if (pairs.empty()) return -g;
    const int m = static_cast<int>(pairs.size());
    std::vector<double> a(m);
    Vector q = g;
    for (int i = m - 1; i >= 0; --i) {
        a[i] = pairs[i].rho * pairs[i].s.dot(q);
        q -= a[i] * pairs[i].y;
    }
    Vector r = gamma * q;
    for (int i = 0; i < m; ++i) {
        const double b = pairs[i].rho * pairs[i].y.dot(r);
        r += (a[i] - b) * pairs[i].s;
    }
    return descent_safeguard(-r, g);
}

namespace {

Vector bb_scaled(double inv_sigma, const Vector& g) {
    if (inv_sigma >= 1e-10 && inv_sigma <= 1e10) return -inv_sigma * g;
    return -g;
}

}  // namespace

Vector bb1_dir(const Vector& s, const Vector& y, const Vector& g) {
    const double ss = s.dot(s);
    if (ss == 0.0) return -g;
    return bb_scaled(ss / s.dot(y), g);
}

Vector bb2_dir(const Vector& s, const Vector& y, const Vector& g) {
    const double yy = y.dot(y);
    if (yy == 0.0) return -g;
    return bb_scaled(yy / y.dot(s), g);
}

DirectionState::DirectionState(DirectionKind kind, int n, int lbfgs_m_cap)
    : kind_(kind), m_cap_(lbfgs_m_cap) {
    if (kind == DirectionKind::BFGS) Hinv_ = Matrix::Identity(n, n);
}

Vector DirectionState::compute(const Problem& problem, const Vector& x, const Vector& g,
                               EvalCounters& counters) {
    switch (kind_) {
        case DirectionKind::GD:
            return gradient_dir(g);
        case DirectionKind::NEWTON: {
            Matrix H = problem.has_hess() ? problem.hess(x) : fd_hessian(problem.grad, x);
            counters.n_h += 1;
            return newton_dir(H, g);
        }
        case DirectionKind::BFGS:
            return descent_safeguard(-(Hinv_ * g), g);
        case DirectionKind::LBFGS: {
            double gamma = 1.0;
            if (!pairs_.empty()) {
                const LbfgsPair& last = pairs_.back();
                gamma = last.s.dot(last.y) / last.y.dot(last.y);
            }
            return lbfgs_dir(pairs_, g, gamma);
        }
        case DirectionKind::BB1:
            if (!have_prev_) return -g;
            return descent_safeguard(bb1_dir(s_prev_, y_prev_, g), g);
        case DirectionKind::BB2:
            if (!have_prev_) return -g;
            return descent_safeguard(bb2_dir(s_prev_, y_prev_, g), g);
    }
    return -g;
}

void DirectionState::push_step(const Vector& x, const Vector& g, const Vector& x_new,
                               const Vector& g_new) {
    switch (kind_) {
        case DirectionKind::BFGS: {
            bfgs_update(Hinv_, x_new - x, g_new - g);
            break;
        }
        case DirectionKind::LBFGS: {
            Vector s = x_new - x;
            Vector y = g_new - g;
            const double ys = y.dot(s);
            if (ys > 1e-10 * y.norm() * s.norm()) {
                pairs_.push_back({std::move(s), std::move(y), 1.0 / ys});
                if (static_cast<int>(pairs_.size()) > m_cap_) pairs_.pop_front();
            }
            break;
        }
        case DirectionKind::BB1:
        case DirectionKind::BB2:
            s_prev_ = x_new - x;
            y_prev_ = g_new - g;
            have_prev_ = true;
            break;
        default:
            break;
    }
}

}  // namespace nmopt
