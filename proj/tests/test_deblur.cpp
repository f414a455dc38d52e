#include "nmopt/deblur.hpp"
#include "nmopt/core.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

using namespace nmopt;

namespace {

GrayImage random_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 255.0);
    GrayImage img(w, h);
    for (double& v : img.pixels) v = u(rng);
    return img;
}

double dot(const GrayImage& a, const GrayImage& b) {
    double s = 0;
    for (size_t i = 0; i < a.pixels.size(); ++i) s += a.pixels[i] * b.pixels[i];
    return s;
}

double norm(const GrayImage& a) { return std::sqrt(dot(a, a)); }

}  // namespace

TEST_CASE("disk blur preserves constants and is a proper average") {
    GrayImage c(40, 32, 7.75);
    GrayImage out = blur_apply(c, 3);
    for (double v : out.pixels) CHECK(v == doctest::Approx(7.75).epsilon(1e-14));
}

TEST_CASE("a point source spreads into an equal-weight disk") {
    GrayImage img(33, 33, 0.0);
    img.at(16, 16) = 1.0;
    GrayImage out = blur_apply(img, 3);
    int hits = 0;
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j) {
            const int di = i - 16, dj = j - 16;
            if (di * di + dj * dj <= 9) {
                CHECK(out.at(i, j) == doctest::Approx(1.0 / 29.0).epsilon(1e-14));
                ++hits;
            } else {
                CHECK(out.at(i, j) == 0.0);
            }
        }
    CHECK(hits == 29);
}

TEST_CASE("blur argument validation") {
    GrayImage img(8, 8, 1.0);
    CHECK_THROWS_AS(blur_apply(img, 5), std::invalid_argument);
    CHECK_THROWS_AS(blur_apply(img, -1), std::invalid_argument);
    GrayImage same = blur_apply(img, 0);
    CHECK(same.pixels == img.pixels);
}

TEST_CASE("blur operator is self-adjoint under reflective padding") {
    for (int rep = 0; rep < 20; ++rep) {
        GrayImage x = random_image(24, 17, 100 + rep);
        GrayImage z = random_image(24, 17, 200 + rep);
        GrayImage Ax = blur_apply(x, 3);
        GrayImage Az = blur_apply(z, 3);
        CHECK(std::abs(dot(Ax, z) - dot(x, Az)) <= 1e-8 * norm(x) * norm(z));
    }
}

TEST_CASE("gradient operator basics") {
    GrayImage c(12, 9, 3.0);
    GradientField f = reg_apply(c);
    for (double v : f.dx.pixels) CHECK(v == 0.0);
    for (double v : f.dy.pixels) CHECK(v == 0.0);
    GrayImage lap = reg_adjoint(f);
    for (double v : lap.pixels) CHECK(v == 0.0);

    // linear ramp: zero second difference away from the boundary
    GrayImage ramp(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) ramp.at(i, j) = 2.0 * i + 3.0 * j;
    GrayImage rl = reg_adjoint(reg_apply(ramp));
    for (int i = 1; i < 9; ++i)
        for (int j = 1; j < 9; ++j) CHECK(rl.at(i, j) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("gradient operator adjoint identity") {
    for (int rep = 0; rep < 20; ++rep) {
        GrayImage x = random_image(19, 23, 300 + rep);
        GradientField p;
        p.dx = random_image(19, 23, 400 + rep);
        p.dy = random_image(19, 23, 500 + rep);
        // zero out the components the forward operator never produces
        for (int i = 0; i < 23; ++i) p.dx.at(i, 18) = 0.0;
        for (int j = 0; j < 19; ++j) p.dy.at(22, j) = 0.0;
        GradientField Wx = reg_apply(x);
        GrayImage Wtp = reg_adjoint(p);
        const double lhs = dot(Wx.dx, p.dx) + dot(Wx.dy, p.dy);
        const double rhs = dot(x, Wtp);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * norm(x) * (norm(p.dx) + norm(p.dy)));
    }
}

TEST_CASE("fused laplacian equals the operator composition") {
    GrayImage x = random_image(21, 15, 999);
    GrayImage composed = reg_adjoint(reg_apply(x));
    GrayImage fused = neumann_laplacian(x);
    for (size_t i = 0; i < x.pixels.size(); ++i)
        CHECK(fused.pixels[i] == doctest::Approx(composed.pixels[i]).epsilon(1e-12));
}

TEST_CASE("objective vanishes on a perfect identity fit") {
    GrayImage y = random_image(16, 16, 1);
    DeblurProblem p{y, 0, 0.0};
    Vector x = image_to_vector(y);
    Vector g;
    CHECK(deblur_objective(x, p, &g) == 0.0);
    CHECK(g.norm() == 0.0);
}

TEST_CASE("objective gradient passes the finite-difference screen") {
    GrayImage clean = synthetic_image(16, 16);
    GrayImage observed = add_gaussian_noise(blur_apply(clean, 3), 2.0, 77);
    DeblurProblem dp{observed, 3, 0.1};
    Problem prob = make_deblur_objective_problem(dp);
    REQUIRE(prob.n == 256);
    CHECK(grad_check(prob, 3, 4321).max_rel_err <= 1e-5);
    CHECK(prob.f(prob.x0) >= 0.0);
}

TEST_CASE("objective curvature is positive along random rays") {
    GrayImage observed = add_gaussian_noise(blur_apply(synthetic_image(24, 24), 3), 2.0, 5);
    DeblurProblem dp{observed, 3, 0.1};
    Problem prob = make_deblur_objective_problem(dp);
    std::mt19937_64 rng(6);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        Vector v(prob.n);
        for (int i = 0; i < prob.n; ++i) v[i] = gauss(rng);
        v.normalize();
        const double t = 1e-3;
        Vector g0 = prob.grad(prob.x0);
        Vector g1 = prob.grad(prob.x0 + t * v);
        CHECK((g1 - g0).dot(v) / t > 0.0);
    }
}

TEST_CASE("stronger regularization flattens the restored image") {
    GrayImage observed = add_gaussian_noise(blur_apply(synthetic_image(32, 32), 3), 2.0, 9);
    auto variance = [](const GrayImage& img) {
        double mean = 0;
        for (double v : img.pixels) mean += v;
        mean /= img.count();
        double var = 0;
        for (double v : img.pixels) var += (v - mean) * (v - mean);
        return var / img.count();
    };
    double prev = std::numeric_limits<double>::infinity();
    for (double lambda : {0.1, 1.0, 10.0}) {
        DeblurProblem dp{observed, 3, lambda};
        DeblurRunOptions opt;
        opt.term = TermKind::G;
        opt.iters = 60;
        const double var = variance(run_deblur(dp, opt).restored);
        CHECK(var < prev);
        prev = var;
    }
}

TEST_CASE("small synthetic restoration improves on the observation") {
    GrayImage clean = synthetic_image(64, 64);
    GrayImage observed = add_gaussian_noise(blur_apply(clean, 3), 2.0, 31);
    DeblurProblem dp{observed, 3, 0.1};
    DeblurRunOptions opt;
    opt.term = TermKind::NM1;
    opt.iters = 25;
    opt.x_true = &clean;
    DeblurRun run = run_deblur(dp, opt);
    REQUIRE(run.metrics.size() == 26);  // iterations 0..25
    CHECK(run.metrics.front().iter == 0);
    CHECK(run.metrics.front().isnr == 0.0);  // x0 = y
    CHECK(run.metrics.back().isnr > 0.0);
    CHECK(isnr(observed, clean, run.restored) > 0.0);

    DeblurRunOptions one = opt;
    one.iters = 1;
    CHECK(run_deblur(dp, one).metrics.size() == 2);
}

TEST_CASE("metric formulas") {
    GrayImage truth(4, 4, 100.0);
    GrayImage y = truth;
    y.at(0, 0) += 8.0;

    SUBCASE("isnr zero when the output equals the observation") {
        CHECK(isnr(y, truth, y) == 0.0);
    }
    SUBCASE("halving the error distance gives about 6.02 dB") {
        GrayImage xb = truth;
        xb.at(0, 0) += 4.0;
        CHECK(isnr(y, truth, xb) == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
    }
    SUBCASE("moving farther than the observation goes negative") {
        GrayImage xb = truth;
        xb.at(0, 0) += 20.0;
        CHECK(isnr(y, truth, xb) < 0.0);
    }
    SUBCASE("perfect recovery reports the infinity sentinel") {
        CHECK(std::isinf(isnr(y, truth, truth)));
        CHECK(std::isinf(psnr_paper(truth, truth)));
    }
    SUBCASE("psnr anchor points") {
        const int n = 16;
        GrayImage ref(4, 4, 0.0);
        GrayImage far(4, 4, 0.0);
        far.pixels[0] = 255.0 * n;  // distance 255 n
        CHECK(psnr_paper(far, ref) == doctest::Approx(0.0).scale(1.0));
        GrayImage mid(4, 4, 0.0);
        mid.pixels[0] = 25.5 * n;
        CHECK(psnr_paper(mid, ref) == doctest::Approx(20.0).epsilon(1e-12));
        GrayImage any(4, 4, 0.0);
        any.pixels[5] = 99.0;
        CHECK(psnr_std(any, ref) - psnr_paper(any, ref) ==
              doctest::Approx(20.0 * std::log10(std::sqrt(double(n)) / n)).epsilon(1e-12));
    }
}

TEST_CASE("pgm round trip and error handling") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "nmopt_pgm_test";
    fs::create_directories(dir);

    SUBCASE("integer images round-trip exactly") {
        GrayImage img(2, 2);
        img.at(0, 0) = 0;
        img.at(0, 1) = 255;
        img.at(1, 0) = 128;
        img.at(1, 1) = 64;
        const std::string path = (dir / "roundtrip.pgm").string();
        pgm_write(img, path);
        GrayImage back = pgm_read(path);
        CHECK(back.width == 2);
        CHECK(back.height == 2);
        CHECK(back.pixels == img.pixels);
    }
    SUBCASE("writing clamps and rounds") {
        GrayImage img(2, 1);
        img.at(0, 0) = -5.0;
        img.at(0, 1) = 300.2;
        const std::string path = (dir / "clamp.pgm").string();
        pgm_write(img, path);
        GrayImage back = pgm_read(path);
        CHECK(back.at(0, 0) == 0.0);
        CHECK(back.at(0, 1) == 255.0);
    }
    SUBCASE("ascii pgm is rejected by name") {
        const std::string path = (dir / "ascii.pgm").string();
        std::ofstream(path) << "P2\n2 2\n255\n0 0 0 0\n";
        CHECK_THROWS_WITH_AS(pgm_read(path),
                             doctest::Contains("unsupported format P2"), std::runtime_error);
    }
    SUBCASE("non-255 maxval is rejected") {
        const std::string path = (dir / "maxval.pgm").string();
        std::ofstream(path, std::ios::binary) << "P5\n2 1\n128\n" << "ab";
        CHECK_THROWS_WITH_AS(pgm_read(path), doctest::Contains("maxval"), std::runtime_error);
    }
    SUBCASE("truncated payloads name the missing bytes") {
        const std::string path = (dir / "short.pgm").string();
        std::ofstream(path, std::ios::binary) << "P5\n4 4\n255\n" << "abc";
        CHECK_THROWS_WITH_AS(pgm_read(path),
                             doctest::Contains("expected 16 bytes, got 3"), std::runtime_error);
    }
    SUBCASE("comments in the header are skipped") {
        const std::string path = (dir / "comment.pgm").string();
        std::ofstream(path, std::ios::binary) << "P5\n# a comment\n2 1\n255\n" << "xy";
        GrayImage img = pgm_read(path);
        CHECK(img.width == 2);
        CHECK(img.at(0, 0) == double('x'));
    }
    fs::remove_all(dir);
}

TEST_CASE("synthetic scene and noise are deterministic") {
    GrayImage a = synthetic_image(32, 32);
    GrayImage b = synthetic_image(32, 32);
    CHECK(a.pixels == b.pixels);
    for (double v : a.pixels) {
        CHECK(v >= 0.0);
        CHECK(v <= 255.0);
    }
    GrayImage n1 = add_gaussian_noise(a, 2.0, 42);
    GrayImage n2 = add_gaussian_noise(a, 2.0, 42);
    CHECK(n1.pixels == n2.pixels);
    CHECK(n1.pixels != a.pixels);
}

TEST_CASE("image/vector round trip") {
    GrayImage img = random_image(7, 5, 3);
    Vector v = image_to_vector(img);
    GrayImage back = vector_to_image(v, 7, 5);
    CHECK(back.pixels == img.pixels);
}
