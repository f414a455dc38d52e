#pragma once

#include "nmopt/core.hpp"

#include <deque>

namespace nmopt {

/// Keep d when g'd <= -1e-14, fall back to the steepest-descent
/// direction otherwise.
Vector descent_safeguard(const Vector& d, const Vector& g);

/// d = -g.
Vector gradient_dir(const Vector& g);

/// Newton direction from H d = -g: Cholesky when H is positive definite,
/// the raw LU solve when it is indefinite, and the smallest diagonal shift
/// from {1e-8, 1e-4, 1, 10, 100, ...} * (1 + ||H||_inf) when it is singular.
/// Falls back to -g (with a note in *diagnostic if given) when every shift
/// fails. The result passes through descent_safeguard.
Vector newton_dir(const Matrix& H, const Vector& g, std::string* diagnostic = nullptr);

/// Inverse-Hessian BFGS update. Skipped (Hinv unchanged) when
/// y's <= 1e-10*||y||*||s||; the result is re-symmetrized.
void bfgs_update(Matrix& Hinv, const Vector& s, const Vector& y);

struct LbfgsPair {
    Vector s, y;
    double rho;  // 1 / y's
};

/// Two-loop recursion with initial scaling H0 = gamma*I; pairs are
/// ordered oldest first. Returns -g when no pairs are stored. The result
/// passes through descent_safeguard.
Vector lbfgs_dir(const std::deque<LbfgsPair>& pairs, const Vector& g, double gamma);

/// Safeguarded Barzilai-Borwein directions: d = -(1/sigma) g when the
/// inverse step lies in [1e-10, 1e10], else -g.
Vector bb1_dir(const Vector& s, const Vector& y, const Vector& g);
Vector bb2_dir(const Vector& s, const Vector& y, const Vector& g);

/// Per-solve mutable state for the direction families.
class DirectionState {
public:
    DirectionState() = default;
    DirectionState(DirectionKind kind, int n, int lbfgs_m_cap);

    /// Direction at x given gradient g. Newton pulls the Hessian from the
    /// problem (or forward differences of the gradient when absent),
    /// counting one Hessian evaluation.
    Vector compute(const Problem& problem, const Vector& x, const Vector& g,
                   EvalCounters& counters);

    /// Feed the accepted step: s = x_new - x, y = g_new - g.
    void push_step(const Vector& x, const Vector& g, const Vector& x_new, const Vector& g_new);

    const Matrix& hinv() const { return Hinv_; }
    const std::deque<LbfgsPair>& pairs() const { return pairs_; }

private:
    DirectionKind kind_ = DirectionKind::GD;
    int m_cap_ = 10;
    Matrix Hinv_;
    std::deque<LbfgsPair> pairs_;
    bool have_prev_ = false;
    Vector s_prev_, y_prev_;
};

}  // namespace nmopt
