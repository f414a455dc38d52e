#include "nmopt/profiles.hpp"

#include <algorithm>
#include <fstream>

namespace nmopt {

const char* to_string(Measure m) {
    switch (m) {
        case Measure::Ni: return "Ni";
        case Measure::Nf: return "Nf";
        case Measure::Ng: return "Ng";
        case Measure::Nf3Ng: return "Nf3Ng";
    }
    return "?";
}

Measure measure_from_string(const std::string& s) {
    if (s == "Ni") return Measure::Ni;
    if (s == "Nf") return Measure::Nf;
    if (s == "Ng") return Measure::Ng;
    if (s == "Nf3Ng") return Measure::Nf3Ng;
    throw std::invalid_argument("unknown measure: " + s);
}

RatioTable performance_ratios(const BenchMatrix& m, Measure measure) {
    if (m.problems.empty() || m.solvers.empty())
        throw std::invalid_argument("performance_ratios: empty benchmark matrix");

    RatioTable out;
    out.solvers = m.solvers;
    const size_t ns = m.solvers.size();

    for (size_t p = 0; p < m.problems.size(); ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t s = 0; s < ns; ++s)
            if (!m.cells[p][s].failed) best = std::min(best, m.cells[p][s].measure(measure));
        if (!std::isfinite(best)) {
            out.dropped.push_back(m.problems[p]);
            continue;
        }
        std::vector<double> row(ns, -1.0);  // -1 marks failed, patched below
        for (size_t s = 0; s < ns; ++s)
            if (!m.cells[p][s].failed) row[s] = m.cells[p][s].measure(measure) / best;
        out.problems.push_back(m.problems[p]);
        out.r.push_back(std::move(row));
    }

    double max_finite = 1.0;
    for (const auto& row : out.r)
        for (double v : row)
            if (v > 0) max_finite = std::max(max_finite, v);
    out.r_failed = 2.0 * max_finite;
    for (auto& row : out.r)
        for (double& v : row)
            if (v < 0) v = out.r_failed;
    return out;
}

ProfileCurve profile_curve(const RatioTable& ratios, const std::string& solver,
                           const std::vector<double>& tau_grid) {
    if (!tau_grid.empty() && tau_grid.front() < 1.0)
        throw std::invalid_argument("profile_curve: tau grid must start at 1");
    if (!std::is_sorted(tau_grid.begin(), tau_grid.end()))
        throw std::invalid_argument("profile_curve: tau grid must be sorted");
    const auto it = std::find(ratios.solvers.begin(), ratios.solvers.end(), solver);
    if (it == ratios.solvers.end())
        throw std::invalid_argument("profile_curve: unknown solver " + solver);
    const size_t s = it - ratios.solvers.begin();
    const size_t np = ratios.problems.size();

    ProfileCurve curve;
    curve.solver = solver;
    curve.points.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        size_t count = 0;
        for (size_t p = 0; p < np; ++p)
            if (ratios.r[p][s] <= tau) ++count;
        curve.points.emplace_back(tau, np ? double(count) / double(np) : 0.0);
    }
    return curve;
}

std::vector<double> default_tau_grid(double tau_max, int points) {
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i)
        grid.push_back(1.0 + (tau_max - 1.0) * double(i) / double(points - 1));
    return grid;
}

void emit_profile_csv(const std::vector<ProfileCurve>& curves, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_profile_csv: cannot open " + path);
    out << "solver,tau,rho\n";
    for (const ProfileCurve& c : curves)
        for (const auto& [tau, rho] : c.points)
            out << c.solver << ',' << fmt_g17(tau) << ',' << fmt_g17(rho) << '\n';
    if (!out) throw std::runtime_error("emit_profile_csv: write failed for " + path);
}

}  // namespace nmopt
