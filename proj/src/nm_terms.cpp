#include "nmopt/nm_terms.hpp"

#include <algorithm>
#include <cmath>

namespace nmopt {

double update_eta(double eta_prev, double eta_prev2, int k, double eta0) {
    if (k < 1) throw std::invalid_argument("update_eta: k must be >= 1");
    if (k == 1) return eta0 / 2.0;
    return (eta_prev + eta_prev2) / 2.0;
}

double max_term(const std::deque<double>& f_window, int k, int N) {
    if (f_window.empty()) throw std::invalid_argument("max_term: empty window");
    const int m = std::min(k, N) + 1;
    const int take = std::min<int>(m, static_cast<int>(f_window.size()));
    double best = f_window.back();
    for (int j = 0; j < take; ++j)
        best = std::max(best, f_window[f_window.size() - 1 - j]);
    return best;
}

void zh_update(double& C, double& Q, double eta, double f_new) {
    const double Qn = eta * Q + 1.0;
    C = (eta * Q * C + f_new) / Qn;
    Q = Qn;
}

double mo_update(double D, double eta, double f_new) {
    return f_new + eta * (D - f_new);
}

double amini_ref(double flk, double f_k, double eta) {
    return eta * flk + (1.0 - eta) * f_k;
}

ConvexTailTerm::ConvexTailTerm(int N, double f0) : N_(N), tbar_(f0) {
    f_hist_.push_back(f0);
}

void ConvexTailTerm::push(double f_new, double eta) {
    k_ += 1;
    eta_hist_.push_back(eta);
    if (static_cast<int>(eta_hist_.size()) > N_ + 1) eta_hist_.pop_front();

    // xi_k = eta_{k-1} * ... * eta_{k-N-1}; weights before the run count as 1,
    // which only ever multiplies a zero correction below.
    xi_ = 1.0;
    for (double e : eta_hist_) xi_ *= e;

    double corr = 0.0;
    if (k_ >= N_) {
        const int sz = static_cast<int>(f_hist_.size());
        const int i1 = sz - N_;      // f_{k-N}
        const int i0 = sz - N_ - 1;  // f_{k-N-1}
        const double f_kmN = f_hist_[std::max(i1, 0)];
        const double f_kmN1 = f_hist_[std::max(i0, 0)];
        corr = xi_ * (f_kmN - f_kmN1);
    }
    tbar_ = (1.0 - eta) * f_new + eta * tbar_ + corr;

    f_hist_.push_back(f_new);
    if (static_cast<int>(f_hist_.size()) > N_ + 2) f_hist_.pop_front();
}

TermState::TermState(TermKind kind, int N, double eta0, double f0)
    : kind_(kind), N_(N), eta0_(eta0) {
    if (!(eta0 >= 0.0 && eta0 < 1.0))
        throw std::invalid_argument("init_term: eta0 must lie in [0,1)");
    if (N < 1) throw std::invalid_argument("init_term: N must be >= 1");
    if (!std::isfinite(f0)) throw std::invalid_argument("init_term: f0 must be finite");
    f_curr_ = flk_ = C_ = D_ = f0;
    Q_ = 1.0;
    eta_curr_ = eta_prev_ = eta0;
    tail_ = ConvexTailTerm(N, f0);
    f_window_.push_back(f0);
}

double TermState::reference_value() const {
    switch (kind_) {
        case TermKind::MONO: return f_curr_;
        case TermKind::G: return flk_;
        case TermKind::H: return C_;
        case TermKind::M: return D_;
        case TermKind::N: return amini_ref(flk_, f_curr_, eta_curr_);
        case TermKind::NM1:
            return k_ < N_ ? flk_ : std::max(tail_.value(), f_curr_);
        case TermKind::NM2:
            return k_ < N_ ? tail_.value() : std::max(tail_.value(), f_curr_);
    }
    return f_curr_;
}

void TermState::accept(double f_new) {
    const double eta_used = eta_curr_;  // eta_k at the old counter
    k_ += 1;
    f_curr_ = f_new;

    f_window_.push_back(f_new);
    if (static_cast<int>(f_window_.size()) > N_ + 1) f_window_.pop_front();
    flk_ = max_term(f_window_, k_, N_);

    zh_update(C_, Q_, eta_used, f_new);
    D_ = mo_update(D_, eta_used, f_new);
    tail_.push(f_new, eta_used);

    switch (kind_) {
        case TermKind::M:
        case TermKind::N:
        case TermKind::NM1:
        case TermKind::NM2: {
            const double next = update_eta(eta_curr_, eta_prev_, k_, eta0_);
            eta_prev_ = eta_curr_;
            eta_curr_ = next;
            break;
        }
        default:
            break;  // MONO and G ignore eta; H keeps it constant
    }
}

bool TermState::lemma1_ok() const {
    const double T = reference_value();
    const double tol = 1e-12 * (1.0 + std::abs(f_curr_));
    return T >= f_curr_ - tol && T <= flk_ + tol;
}

}  // namespace nmopt
