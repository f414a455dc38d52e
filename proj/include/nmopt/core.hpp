#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// An unconstrained minimization problem: smooth objective with gradient
/// and (optionally) Hessian evaluators, plus the standard start point.
struct Problem {
    std::string name;
    int n = 0;
    Vector x0;
    std::function<double(const Vector&)> f;
    std::function<Vector(const Vector&)> grad;
    std::function<Matrix(const Vector&)> hess;  // empty if not available
    std::optional<double> f_star;

    bool has_hess() const { return static_cast<bool>(hess); }
};

enum class TermKind { MONO, G, H, N, M, NM1, NM2 };
enum class DirectionKind { GD, NEWTON, BFGS, LBFGS, BB1, BB2 };

const char* to_string(TermKind k);
const char* to_string(DirectionKind k);
TermKind term_from_string(const std::string& s);
DirectionKind direction_from_string(const std::string& s);

/// All tunables of the backtracking solver. Construct via default_config()
/// to pick up the direction/term dependent defaults, then override fields.
struct SolverConfig {
    double rho = 0.5;      // backtracking factor, (0,1)
    double sigma = 0.01;   // sufficient-decrease coefficient, (0,1/2)
    double s = 1.0;        // initial trial step, (0,1]
    double eps = 1e-5;     // gradient-norm tolerance
    long maxiter = 50000;
    int N = 10;            // nonmonotone memory
    double eta0 = 0.75;    // initial weight, [0,1)
    TermKind term = TermKind::MONO;
    DirectionKind direction = DirectionKind::GD;
    int lbfgs_m_cap = 10;
    int max_backtracks = 60;
    double alpha_min = 1e-20;

    void validate() const;
};

/// Defaults keyed on the term/direction pair: sigma drops to 1e-4 for the
/// Barzilai-Borwein directions, eta0 is 0.85 for the H term, 0.80/0.90 for
/// BB1/BB2 and 0.75 otherwise.
SolverConfig default_config(TermKind term, DirectionKind direction);

struct EvalCounters {
    long n_iter = 0;
    long n_f = 0;
    long n_g = 0;
    long n_h = 0;
};

enum class Status { Converged, MaxIter, LineSearchFail };
const char* to_string(Status s);

struct TraceRecord {
    int k = 0;             // iteration index
    double f_k = 0;        // objective at x_k
    double g_norm = 0;     // gradient norm at x_k
    double alpha_k = 0;    // accepted step, s * rho^backtracks
    int backtracks = 0;
    double T_k = 0;        // reference value used in the Armijo test
};

struct SolveResult {
    Status status = Status::MaxIter;
    Vector x_b;
    double f_b = 0;
    double g_norm = 0;
    EvalCounters counters;
    std::vector<TraceRecord> trace;
    long lemma1_violations = 0;  // reference value left [f_k, f_l(k)]
    std::string diagnostic;
};

/// Central-difference gradient with per-coordinate step h_i = 1e-6*(1+|x_i|).
/// Throws std::domain_error if the objective is non-finite at a probe point.
Vector finite_diff_grad(const Problem& problem, const Vector& x);

/// Forward-difference Hessian of the gradient evaluator (n+1 gradient
/// calls), symmetrized. Used as the fallback when a problem has no hess.
Matrix fd_hessian(const std::function<Vector(const Vector&)>& grad, const Vector& x);

struct GradCheckReport {
    double max_rel_err = 0;
    int points = 0;
};

/// Compares the analytic gradient against finite_diff_grad at n_points
/// pseudo-random perturbations of x0 (deterministic for a fixed seed).
/// Error metric per point: ||grad - fd|| / (1 + ||grad||).
GradCheckReport grad_check(const Problem& problem, int n_points, std::uint64_t seed);

/// Shortest round-trippable decimal form used by every CSV writer.
std::string fmt_g17(double v);

}  // namespace nmopt
