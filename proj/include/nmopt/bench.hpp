#pragma once

#include "nmopt/core.hpp"
#include "nmopt/profiles.hpp"

#include <utility>
#include <vector>

namespace nmopt {

struct SolverSpec {
    TermKind term;
    DirectionKind direction;

    std::string id() const {
        return std::string(to_string(term)) + "-" + to_string(direction);
    }
};

struct BenchOptions {
    double eps = 1e-5;
    long maxiter = 50000;
    int N = 10;
    std::optional<double> eta0, sigma, rho, s;
    int threads = 0;  // 0: use NONMONO_OPT_THREADS, default 1
};

struct BenchRun {
    std::string problem;
    int n = 0;
    SolverSpec solver;
    Status status = Status::MaxIter;
    EvalCounters counters;
    double f_b = 0;
    double g_norm = 0;
    long lemma1_violations = 0;
    std::vector<TraceRecord> trace;  // kept only when BenchOptions asks
};

/// Effective config for a run: defaults for the pair, then the bench
/// overrides applied on top.
SolverConfig bench_config(const SolverSpec& spec, const BenchOptions& opt);

/// Runs the full problems x solvers matrix. Rows come back in input order
/// (problems outer, solvers inner) regardless of the worker count; a run
/// that throws is recorded as a LineSearchFail cell rather than aborting
/// the sweep. keep_traces retains the per-iteration records for invariant
/// checks.
std::vector<BenchRun> run_benchmark(const std::vector<std::pair<std::string, int>>& problems,
                                    const std::vector<SolverSpec>& solvers,
                                    const BenchOptions& opt, bool keep_traces = false);

BenchMatrix to_matrix(const std::vector<BenchRun>& runs);

/// One summary line per run: "problem,term,direction,status,N_i,N_f,N_g,f_b,gnorm".
std::string run_summary_line(const BenchRun& run);
std::string runs_csv(const std::vector<BenchRun>& runs);  // header + rows

/// Worker count: NONMONO_OPT_THREADS when set (>= 1), else 1.
int bench_thread_count();

}  // namespace nmopt
