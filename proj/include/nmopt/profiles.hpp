#pragma once

#include "nmopt/core.hpp"

#include <limits>
#include <vector>

namespace nmopt {

enum class Measure { Ni, Nf, Ng, Nf3Ng };
const char* to_string(Measure m);
Measure measure_from_string(const std::string& s);

struct BenchCell {
    long n_i = 0;
    long n_f = 0;
    long n_g = 0;
    bool failed = false;

    double measure(Measure m) const {
        switch (m) {
            case Measure::Ni: return double(n_i);
            case Measure::Nf: return double(n_f);
            case Measure::Ng: return double(n_g);
            case Measure::Nf3Ng: return double(n_f) + 3.0 * double(n_g);
        }
        return 0;
    }
};

/// Results of a problems x solvers run; cells[p][s].
struct BenchMatrix {
    std::vector<std::string> problems;
    std::vector<std::string> solvers;
    std::vector<std::vector<BenchCell>> cells;
};

/// Per-(problem, solver) performance ratios r_ps = t_ps / min_s t_ps.
/// Failed cells take r_failed = 2 * (largest finite ratio); problems where
/// every solver failed are dropped and listed in `dropped`.
struct RatioTable {
    std::vector<std::string> problems;  // kept problems
    std::vector<std::string> solvers;
    std::vector<std::vector<double>> r;  // r[p][s]
    double r_failed = 0;
    std::vector<std::string> dropped;
};

RatioTable performance_ratios(const BenchMatrix& m, Measure measure);

struct ProfileCurve {
    std::string solver;
    std::vector<std::pair<double, double>> points;  // (tau, rho)
};

/// Cumulative distribution rho_s(tau) = #{p : r_ps <= tau} / n_p over the
/// given grid (sorted, starting at 1).
ProfileCurve profile_curve(const RatioTable& ratios, const std::string& solver,
                           const std::vector<double>& tau_grid);

/// Evenly spaced grid from 1 to tau_max inclusive.
std::vector<double> default_tau_grid(double tau_max, int points = 200);

/// CSV with header "solver,tau,rho", one row per curve point, LF endings,
/// full 17-significant-digit reals. Deterministic byte-for-byte.
void emit_profile_csv(const std::vector<ProfileCurve>& curves, const std::string& path);

}  // namespace nmopt
