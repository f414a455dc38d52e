#include "nmopt/bench.hpp"

#include "nmopt/problems.hpp"
#include "nmopt/solver.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace nmopt {

SolverConfig bench_config(const SolverSpec& spec, const BenchOptions& opt) {
    SolverConfig cfg = default_config(spec.term, spec.direction);
    cfg.eps = opt.eps;
    cfg.maxiter = opt.maxiter;
    cfg.N = opt.N;
    if (opt.eta0) cfg.eta0 = *opt.eta0;
    if (opt.sigma) cfg.sigma = *opt.sigma;
    if (opt.rho) cfg.rho = *opt.rho;
    if (opt.s) cfg.s = *opt.s;
    return cfg;
}

int bench_thread_count() {
    const char* env = std::getenv("NONMONO_OPT_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

std::vector<BenchRun> run_benchmark(const std::vector<std::pair<std::string, int>>& problems,
                                    const std::vector<SolverSpec>& solvers,
                                    const BenchOptions& opt, bool keep_traces) {
    const size_t total = problems.size() * solvers.size();
    std::vector<BenchRun> runs(total);

    auto execute = [&](size_t idx) {
        const auto& [pname, pn] = problems[idx / solvers.size()];
        const SolverSpec& spec = solvers[idx % solvers.size()];
        BenchRun& run = runs[idx];
        run.problem = pname;
        run.n = pn;
        run.solver = spec;
        try {
            const Problem problem = get_problem(pname, pn);
            const SolverConfig cfg = bench_config(spec, opt);
            SolveResult res = solve(problem, cfg);
            run.status = res.status;
            run.counters = res.counters;
            run.f_b = res.f_b;
            run.g_norm = res.g_norm;
            run.lemma1_violations = res.lemma1_violations;
            if (keep_traces) run.trace = std::move(res.trace);
        } catch (const std::exception&) {
            run.status = Status::LineSearchFail;
        }
    };

    const int threads =
        std::min<int>(opt.threads > 0 ? opt.threads : bench_thread_count(),
                      static_cast<int>(total ? total : 1));
    if (threads <= 1) {
        for (size_t i = 0; i < total; ++i) execute(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) execute(i);
            });
        for (auto& th : pool) th.join();
    }
    return runs;
}

BenchMatrix to_matrix(const std::vector<BenchRun>& runs) {
    BenchMatrix m;
    for (const BenchRun& r : runs) {
        const std::string pid = r.problem + "@" + std::to_string(r.n);
        if (m.problems.empty() || m.problems.back() != pid) {
            if (std::find(m.problems.begin(), m.problems.end(), pid) == m.problems.end())
                m.problems.push_back(pid);
        }
        const std::string sid = r.solver.id();
        if (std::find(m.solvers.begin(), m.solvers.end(), sid) == m.solvers.end())
            m.solvers.push_back(sid);
    }
    m.cells.assign(m.problems.size(), std::vector<BenchCell>(m.solvers.size()));
    for (const BenchRun& r : runs) {
        const std::string pid = r.problem + "@" + std::to_string(r.n);
        const size_t p = std::find(m.problems.begin(), m.problems.end(), pid) - m.problems.begin();
        const size_t s =
            std::find(m.solvers.begin(), m.solvers.end(), r.solver.id()) - m.solvers.begin();
        m.cells[p][s] = {r.counters.n_iter, r.counters.n_f, r.counters.n_g,
                         r.status != Status::Converged};
    }
    return m;
}

std::string run_summary_line(const BenchRun& run) {
    std::ostringstream out;
    out << run.problem << ',' << to_string(run.solver.term) << ','
        << to_string(run.solver.direction) << ',' << to_string(run.status) << ','
        << run.counters.n_iter << ',' << run.counters.n_f << ',' << run.counters.n_g << ','
        << fmt_g17(run.f_b) << ',' << fmt_g17(run.g_norm);
    return out.str();
}

std::string runs_csv(const std::vector<BenchRun>& runs) {
    std::string out = "problem,term,direction,status,N_i,N_f,N_g,f_b,gnorm\n";
    for (const BenchRun& r : runs) {
        out += run_summary_line(r);
        out += '\n';
    }
    return out;
}

}  // namespace nmopt
