#pragma once

#include "nmopt/core.hpp"

#include <deque>

namespace nmopt {

/// Adaptive weight recurrence: eta_1 = eta0/2, eta_k = (eta_{k-1}+eta_{k-2})/2
/// for k >= 2. All values stay in [0,1).
double update_eta(double eta_prev, double eta_prev2, int k, double eta0);

/// Max of the last min(k,N)+1 entries of an accepted-value window
/// (window holds the most recent values, newest last).
double max_term(const std::deque<double>& f_window, int k, int N);

/// Weighted-average recurrence: Q' = eta*Q + 1, C' = (eta*Q*C + f_new)/Q'.
/// eta may equal 1 (plain arithmetic mean).
void zh_update(double& C, double& Q, double eta, double f_new);

/// Convex combination of all former accepted values: D' = f_new + eta*(D - f_new).
double mo_update(double D, double eta, double f_new);

/// Relaxation of the max term: R = eta*flk + (1-eta)*f_k.
double amini_ref(double flk, double f_k, double eta);

/// Recursive convex combination of the last N+1 accepted values.
///
/// Maintains Tbar via
///   Tbar_k = (1-eta_{k-1}) f_k + eta_{k-1} Tbar_{k-1} + xi_k (f_{k-N} - f_{k-N-1})
/// where the correction applies for k >= N and xi_k is the product of the
/// trailing N+1 weights. xi is computed as a windowed product over the ring
/// buffer rather than a ratio recursion, which would divide by zero whenever
/// a weight vanishes. Indices before the start of the run resolve to f_0,
/// so the correction is exactly zero at k = N.
class ConvexTailTerm {
public:
    ConvexTailTerm() = default;
    ConvexTailTerm(int N, double f0);

    /// Advance to iteration k+1 with the newly accepted value and the
    /// weight eta_k used in the combination.
    void push(double f_new, double eta);

    double value() const { return tbar_; }
    double xi() const { return xi_; }
    int iteration() const { return k_; }

private:
    int N_ = 0;
    int k_ = 0;
    double tbar_ = 0;
    double xi_ = 1.0;
    std::deque<double> f_hist_;    // trailing N+2 accepted values
    std::deque<double> eta_hist_;  // trailing N+1 weights, newest last
};

/// Uniform stateful reference-value generator for every term kind.
///
/// The state tracks iteration k with f_k the latest accepted value;
/// reference_value() yields the T_k to hand the line search, accept()
/// consumes the f-value of the next accepted iterate.
class TermState {
public:
    TermState() = default;
    TermState(TermKind kind, int N, double eta0, double f0);

    double reference_value() const;
    void accept(double f_new);

    double current_f() const { return f_curr_; }
    double max_window() const { return flk_; }
    double eta_current() const { return eta_curr_; }
    double zh_C() const { return C_; }
    double zh_Q() const { return Q_; }
    double mo_D() const { return D_; }
    double tbar() const { return tail_.value(); }
    double xi() const { return tail_.xi(); }
    int iteration() const { return k_; }

    /// Lemma 1 inequality f_k <= T_k <= f_l(k), checked with tolerance
    /// 1e-12*(1+|f_k|).
    bool lemma1_ok() const;

private:
    TermKind kind_ = TermKind::MONO;
    int N_ = 1;
    double eta0_ = 0;
    int k_ = 0;
    double f_curr_ = 0;
    double flk_ = 0;
    double eta_curr_ = 0;   // eta_k
    double eta_prev_ = 0;   // eta_{k-1}
    double C_ = 0, Q_ = 1;  // weighted-average accumulators
    double D_ = 0;          // convex-combination accumulator
    ConvexTailTerm tail_;
    std::deque<double> f_window_;  // trailing N+1 accepted values
};

}  // namespace nmopt
