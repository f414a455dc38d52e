#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

// end-to-end checks against the built command-line binary

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NMOPT_BIN_PATH) + " " + args + " 2>/dev/null";
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("nmopt_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("solve emits one summary row and the status exit code") {
    auto res = run_cli("solve --problem quadratic --direction NEWTON --term MONO");
    CHECK(res.exit_code == 0);
    auto fields = split(split(res.out, '\n')[0], ',');
    REQUIRE(fields.size() == 9);
    CHECK(fields[0] == "quadratic");
    CHECK(fields[1] == "MONO");
    CHECK(fields[2] == "NEWTON");
    CHECK(fields[3] == "Converged");
    CHECK(std::stol(fields[4]) == 1);  // one iteration on a quadratic
}

TEST_CASE("solve reproduces the banana benchmarks") {
    auto bb = run_cli("solve --problem rosenbrock2 --term G --direction BB1");
    CHECK(bb.exit_code == 0);
    const long ni = std::stol(split(split(bb.out, '\n')[0], ',')[4]);
    CHECK(ni >= 20);
    CHECK(ni <= 70);

    auto beale = run_cli("solve --problem beale --term NM1 --direction NEWTON --eta0 0.75");
    CHECK(beale.exit_code == 0);
    const long ni2 = std::stol(split(split(beale.out, '\n')[0], ',')[4]);
    CHECK(ni2 >= 7);   // within 2x of the reference count of 13
    CHECK(ni2 <= 26);
}

TEST_CASE("usage and status exit codes") {
    CHECK(run_cli("solve --problem no_such_problem").exit_code == 1);
    CHECK(run_cli("solve --problem rosenbrock2 --term G --direction GD --maxiter 3")
              .exit_code == 2);  // MaxIter
    CHECK(run_cli("nonsense-subcommand").exit_code != 0);
}

TEST_CASE("trace csv has the documented schema") {
    TempDir dir;
    const auto trace = dir.path / "trace.csv";
    auto res = run_cli("solve --problem beale --term G --direction NEWTON --trace " +
                       trace.string());
    CHECK(res.exit_code == 0);
    const std::string text = slurp(trace);
    CHECK(text.rfind("k,f,gnorm,alpha,backtracks,T\n", 0) == 0);
    const long ni = std::stol(split(split(res.out, '\n')[0], ',')[4]);
    CHECK(std::count(text.begin(), text.end(), '\n') == ni + 1);
}

TEST_CASE("config file feeds defaults and flags override it") {
    TempDir dir;
    const auto cfg = dir.path / "cfg.json";
    std::ofstream(cfg) << R"({"maxiter": 3, "eps": 1e-5})";
    // config caps the run at 3 iterations
    auto limited = run_cli("solve --problem rosenbrock2 --term G --direction GD --config " +
                           cfg.string());
    CHECK(limited.exit_code == 2);
    // explicit flag wins over the file
    auto freed = run_cli("solve --problem rosenbrock2 --term G --direction BB1 --maxiter 50000 --config " +
                         cfg.string());
    CHECK(freed.exit_code == 0);
}

TEST_CASE("bench writes runs and profile csvs deterministically") {
    TempDir dir;
    const std::string args = "bench --set small --terms G --directions NEWTON "
                             "--measures Ni,Nf3Ng --out " + dir.path.string();
    CHECK(run_cli(args).exit_code == 0);
    const std::string runs = slurp(dir.path / "runs.csv");
    CHECK(runs.rfind("problem,term,direction,status,N_i,N_f,N_g,f_b,gnorm\n", 0) == 0);
    CHECK(std::count(runs.begin(), runs.end(), '\n') == 19 + 1);  // the full small set
    CHECK(fs::exists(dir.path / "profile_Ni.csv"));
    CHECK(fs::exists(dir.path / "profile_Nf3Ng.csv"));

    TempDir dir2;
    const std::string args2 = "bench --set small --terms G --directions NEWTON "
                              "--measures Ni,Nf3Ng --out " + dir2.path.string();
    CHECK(run_cli(args2).exit_code == 0);
    CHECK(slurp(dir2.path / "runs.csv") == runs);
    CHECK(slurp(dir2.path / "profile_Nf3Ng.csv") == slurp(dir.path / "profile_Nf3Ng.csv"));
}

TEST_CASE("bench rows agree with standalone solve output") {
    TempDir dir;
    CHECK(run_cli("bench --set small --terms NM2 --directions NEWTON --measures Ni --out " +
                  dir.path.string())
              .exit_code == 0);
    const std::string runs = slurp(dir.path / "runs.csv");
    auto solo = run_cli("solve --problem beale --term NM2 --direction NEWTON");
    const std::string line = split(solo.out, '\n')[0];
    CHECK(runs.find(line + "\n") != std::string::npos);
}

TEST_CASE("deblur pipeline writes images, metrics and a summary") {
    TempDir dir;
    auto res = run_cli("deblur --synthetic --terms NM1 --iters 1 --ref-iters 5 --out " +
                       dir.path.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("NM1:") != std::string::npos);
    CHECK(res.out.find("PSNR") != std::string::npos);
    CHECK(fs::exists(dir.path / "restored_NM1.pgm"));
    CHECK(fs::exists(dir.path / "clean.pgm"));
    CHECK(fs::exists(dir.path / "observed.pgm"));
    const std::string metrics = slurp(dir.path / "metrics_NM1.csv");
    CHECK(metrics.rfind("iter,f,rel,isnr\n", 0) == 0);
    CHECK(std::count(metrics.begin(), metrics.end(), '\n') == 2 + 1);  // iters 0 and 1

    CHECK(run_cli("deblur --terms NM1 --out " + dir.path.string()).exit_code == 1);  // no input
}
