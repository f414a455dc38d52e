#include "nmopt/bench.hpp"
#include "nmopt/core.hpp"
#include "nmopt/deblur.hpp"
#include "nmopt/problems.hpp"
#include "nmopt/profiles.hpp"
#include "nmopt/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// flat JSON config, keys mirror SolverConfig fields; CLI flags win over it
struct ConfigFile {
    json data;

    static ConfigFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        ConfigFile cf;
        in >> cf.data;
        return cf;
    }

    void apply(nmopt::SolverConfig& cfg) const {
        if (data.contains("rho")) cfg.rho = data["rho"].get<double>();
        if (data.contains("sigma")) cfg.sigma = data["sigma"].get<double>();
        if (data.contains("s")) cfg.s = data["s"].get<double>();
        if (data.contains("eps")) cfg.eps = data["eps"].get<double>();
        if (data.contains("maxiter")) cfg.maxiter = data["maxiter"].get<long>();
        if (data.contains("N")) cfg.N = data["N"].get<int>();
        if (data.contains("eta0")) cfg.eta0 = data["eta0"].get<double>();
        if (data.contains("term")) cfg.term = nmopt::term_from_string(data["term"].get<std::string>());
        if (data.contains("direction"))
            cfg.direction = nmopt::direction_from_string(data["direction"].get<std::string>());
        if (data.contains("lbfgs_m_cap")) cfg.lbfgs_m_cap = data["lbfgs_m_cap"].get<int>();
        if (data.contains("max_backtracks"))
            cfg.max_backtracks = data["max_backtracks"].get<int>();
        if (data.contains("alpha_min")) cfg.alpha_min = data["alpha_min"].get<double>();
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
}

void write_trace_csv(const fs::path& path, const std::vector<nmopt::TraceRecord>& trace) {
    std::string text = "k,f,gnorm,alpha,backtracks,T\n";
    for (const auto& t : trace) {
        text += std::to_string(t.k) + ',' + nmopt::fmt_g17(t.f_k) + ',' +
                nmopt::fmt_g17(t.g_norm) + ',' + nmopt::fmt_g17(t.alpha_k) + ',' +
                std::to_string(t.backtracks) + ',' + nmopt::fmt_g17(t.T_k) + '\n';
    }
    write_text(path, text);
}

int exit_code_for(nmopt::Status s) {
    switch (s) {
        case nmopt::Status::Converged: return 0;
        case nmopt::Status::MaxIter: return 2;
        case nmopt::Status::LineSearchFail: return 3;
    }
    return 1;
}

int cmd_solve(const std::string& problem_name, std::optional<int> n,
              nmopt::SolverConfig cfg, const std::string& trace_path) {
    const nmopt::Problem problem = nmopt::get_problem(problem_name, n);
    const nmopt::SolveResult res = nmopt::solve(problem, cfg);

    nmopt::BenchRun run;
    run.problem = problem_name;
    run.n = problem.n;
    run.solver = {cfg.term, cfg.direction};
    run.status = res.status;
    run.counters = res.counters;
    run.f_b = res.f_b;
    run.g_norm = res.g_norm;
    std::cout << nmopt::run_summary_line(run) << "\n";

    if (!trace_path.empty()) write_trace_csv(trace_path, res.trace);
    return exit_code_for(res.status);
}

int cmd_bench(const std::string& set_name, const std::vector<std::string>& term_names,
              const std::vector<std::string>& dir_names,
              const std::vector<std::string>& measure_names, const std::string& out_dir,
              const nmopt::BenchOptions& opt) {
    std::vector<std::pair<std::string, int>> rows;
    if (set_name == "small") {
        rows = nmopt::bench_rows(nmopt::SizeClass::Small);
    } else if (set_name == "large") {
        rows = nmopt::bench_rows(nmopt::SizeClass::Large);
    } else {
        std::cerr << "unknown problem set: " << set_name << " (use small|large)\n";
        return 1;
    }

    std::vector<nmopt::SolverSpec> solvers;
    for (const std::string& d : dir_names)
        for (const std::string& t : term_names)
            solvers.push_back({nmopt::term_from_string(t), nmopt::direction_from_string(d)});

    fs::create_directories(out_dir);
    const auto runs = nmopt::run_benchmark(rows, solvers, opt);
    write_text(fs::path(out_dir) / "runs.csv", nmopt::runs_csv(runs));

    const nmopt::BenchMatrix matrix = nmopt::to_matrix(runs);
    for (const std::string& mname : measure_names) {
        const nmopt::Measure measure = nmopt::measure_from_string(mname);
        const nmopt::RatioTable ratios = nmopt::performance_ratios(matrix, measure);
        for (const std::string& dropped : ratios.dropped)
            std::cerr << "warning: no solver finished " << dropped << ", dropped from "
                      << mname << " profile\n";
        const auto grid = nmopt::default_tau_grid(ratios.r_failed);
        std::vector<nmopt::ProfileCurve> curves;
        for (const std::string& sid : ratios.solvers)
            curves.push_back(nmopt::profile_curve(ratios, sid, grid));
        nmopt::emit_profile_csv(curves, (fs::path(out_dir) / ("profile_" + mname + ".csv")).string());
    }

    long failed = 0;
    for (const auto& r : runs)
        if (r.status != nmopt::Status::Converged) ++failed;
    std::cout << "bench: " << runs.size() << " runs, " << failed << " failed, output in "
              << out_dir << "\n";
    return 0;
}

int cmd_deblur(const std::string& input, bool synthetic,
               const std::vector<std::string>& term_names, int iters, double lambda,
               double noise_sigma, std::uint64_t seed, int radius, int ref_iters,
               const std::string& out_dir) {
    using namespace nmopt;
    GrayImage clean = synthetic ? synthetic_image() : pgm_read(input);
    GrayImage blurred = blur_apply(clean, radius);
    GrayImage observed = add_gaussian_noise(blurred, noise_sigma, seed);

    DeblurProblem dp{observed, radius, lambda};
    fs::create_directories(out_dir);
    pgm_write(clean, fs::path(out_dir) / "clean.pgm");
    pgm_write(observed, fs::path(out_dir) / "observed.pgm");

    // reference optimum for the relative-error metric
    DeblurRunOptions ref_opt;
    ref_opt.term = TermKind::G;
    ref_opt.iters = ref_iters;
    const double f_star = run_deblur(dp, ref_opt).result.f_b;

    for (const std::string& tname : term_names) {
        DeblurRunOptions opt;
        opt.term = term_from_string(tname);
        opt.iters = iters;
        opt.x_true = &clean;
        opt.f_star = f_star;
        const DeblurRun run = run_deblur(dp, opt);

        pgm_write(run.restored, fs::path(out_dir) / ("restored_" + tname + ".pgm"));
        std::string csv = "iter,f,rel,isnr\n";
        for (const auto& row : run.metrics)
            csv += std::to_string(row.iter) + ',' + fmt_g17(row.f) + ',' + fmt_g17(row.rel) +
                   ',' + fmt_g17(row.isnr) + '\n';
        write_text(fs::path(out_dir) / ("metrics_" + tname + ".csv"), csv);

        std::cout << tname << ": f=" << fmt_g17(run.result.f_b)
                  << " ISNR=" << fmt_g17(isnr(observed, clean, run.restored))
                  << " PSNR(paper)=" << fmt_g17(psnr_paper(run.restored, clean))
                  << " PSNR(std)=" << fmt_g17(psnr_std(run.restored, clean)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonmonotone Armijo-type line search benchmark harness"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run one solver on one problem");
    std::string problem_name, term_name = "MONO", dir_name = "GD";
    int dim = -1;
    std::string config_path, trace_path;
    double rho = -1, sigma = -1, step = -1, eps = -1, eta0 = -1;
    long maxiter = -1;
    int memory = -1;
    solve_cmd->add_option("--problem", problem_name, "catalog problem name")->required();
    solve_cmd->add_option("--n", dim, "dimension override");
    solve_cmd->add_option("--term", term_name, "MONO|G|H|N|M|NM1|NM2");
    solve_cmd->add_option("--direction", dir_name, "GD|NEWTON|BFGS|LBFGS|BB1|BB2");
    solve_cmd->add_option("--rho", rho, "backtracking factor");
    solve_cmd->add_option("--sigma", sigma, "sufficient-decrease coefficient");
    solve_cmd->add_option("--s", step, "initial trial step");
    solve_cmd->add_option("--eps", eps, "gradient tolerance");
    solve_cmd->add_option("--maxiter", maxiter, "iteration cap");
    solve_cmd->add_option("--N", memory, "nonmonotone memory");
    solve_cmd->add_option("--eta0", eta0, "initial weight");
    solve_cmd->add_option("--config", config_path, "flat JSON config file");
    solve_cmd->add_option("--trace", trace_path, "write per-iteration trace CSV here");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run a problems x solvers matrix");
    std::string set_name = "small";
    std::string terms_arg = "MONO,G,H,N,M,NM1,NM2";
    std::string dirs_arg = "NEWTON";
    std::string measures_arg = "Ni,Nf,Ng,Nf3Ng";
    std::string out_dir = "bench_out";
    std::string bench_config_path;
    double bench_eps = -1;
    long bench_maxiter = -1;
    int bench_memory = -1;
    bench_cmd->add_option("--set", set_name, "small|large");
    bench_cmd->add_option("--terms", terms_arg, "comma-separated term kinds");
    bench_cmd->add_option("--directions", dirs_arg, "comma-separated direction kinds");
    bench_cmd->add_option("--measures", measures_arg, "comma-separated: Ni,Nf,Ng,Nf3Ng");
    bench_cmd->add_option("--out", out_dir, "output directory");
    bench_cmd->add_option("--eps", bench_eps, "gradient tolerance");
    bench_cmd->add_option("--maxiter", bench_maxiter, "iteration cap");
    bench_cmd->add_option("--N", bench_memory, "nonmonotone memory");
    bench_cmd->add_option("--config", bench_config_path, "flat JSON config file");

    // deblur
    auto* deblur_cmd = app.add_subcommand("deblur", "quadratic image restoration demo");
    std::string input_path;
    bool synthetic = false;
    std::string deblur_terms = "MONO,G,H,N,M,NM1,NM2";
    int iters = 25, radius = 3, ref_iters = 2000;
    double lambda = 0.1, noise_sigma = 2.0;
    std::uint64_t seed = 20240915;
    std::string deblur_out = "deblur_out";
    deblur_cmd->add_option("--input", input_path, "clean ground-truth PGM (P5)");
    deblur_cmd->add_flag("--synthetic", synthetic, "use the built-in test scene");
    deblur_cmd->add_option("--terms", deblur_terms, "comma-separated term kinds");
    deblur_cmd->add_option("--iters", iters, "outer iterations per term");
    deblur_cmd->add_option("--lambda", lambda, "regularization weight");
    deblur_cmd->add_option("--noise-sigma", noise_sigma, "Gaussian noise level (0..255 scale)");
    deblur_cmd->add_option("--seed", seed, "noise seed");
    deblur_cmd->add_option("--radius", radius, "disk blur radius");
    deblur_cmd->add_option("--ref-iters", ref_iters, "iterations of the reference solve");
    deblur_cmd->add_option("--out", deblur_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            nmopt::SolverConfig cfg = nmopt::default_config(
                nmopt::term_from_string(term_name), nmopt::direction_from_string(dir_name));
            if (!config_path.empty()) ConfigFile::load(config_path).apply(cfg);
            // flags override the config file; term/direction flags always win
            cfg.term = nmopt::term_from_string(term_name);
            cfg.direction = nmopt::direction_from_string(dir_name);
            if (rho >= 0) cfg.rho = rho;
            if (sigma >= 0) cfg.sigma = sigma;
            if (step >= 0) cfg.s = step;
            if (eps >= 0) cfg.eps = eps;
            if (maxiter >= 0) cfg.maxiter = maxiter;
            if (memory >= 0) cfg.N = memory;
            if (eta0 >= 0) cfg.eta0 = eta0;
            return cmd_solve(problem_name, dim > 0 ? std::optional<int>(dim) : std::nullopt,
                             cfg, trace_path);
        }
        if (bench_cmd->parsed()) {
            nmopt::BenchOptions opt;
            if (!bench_config_path.empty()) {
                nmopt::SolverConfig base;
                ConfigFile::load(bench_config_path).apply(base);
                opt.eps = base.eps;
                opt.maxiter = base.maxiter;
                opt.N = base.N;
            }
            if (bench_eps >= 0) opt.eps = bench_eps;
            if (bench_maxiter >= 0) opt.maxiter = bench_maxiter;
            if (bench_memory >= 0) opt.N = bench_memory;
            return cmd_bench(set_name, split_list(terms_arg), split_list(dirs_arg),
                             split_list(measures_arg), out_dir, opt);
        }
        if (deblur_cmd->parsed()) {
            if (!synthetic && input_path.empty()) {
                std::cerr << "deblur: need --input PGM or --synthetic\n";
                return 1;
            }
            return cmd_deblur(input_path, synthetic, split_list(deblur_terms), iters, lambda,
                              noise_sigma, seed, radius, ref_iters, deblur_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
