#pragma once

#include "nmopt/core.hpp"

#include <cstdint>

namespace nmopt {

/// Row-major grayscale image with values on the 0..255 scale.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(size_t(w) * h, fill) {}

    double& at(int row, int col) { return pixels[size_t(row) * width + col]; }
    double at(int row, int col) const { return pixels[size_t(row) * width + col]; }
    int count() const { return width * height; }
};

/// Out-of-focus blur: normalized disk kernel of the given radius applied
/// with symmetric (reflective) padding, which makes the operator
/// self-adjoint. radius 0 is the identity.
GrayImage blur_apply(const GrayImage& img, int radius);

/// Forward-difference gradient field (x and y channels stacked), zero
/// difference at the far boundary.
struct GradientField {
    GrayImage dx, dy;
};
GradientField reg_apply(const GrayImage& img);

/// Adjoint of reg_apply; reg_adjoint(reg_apply(x)) is the 5-point Neumann
/// Laplacian of x.
GrayImage reg_adjoint(const GradientField& field);

/// The composition reg_adjoint(reg_apply(x)) in one pass.
GrayImage neumann_laplacian(const GrayImage& img);

/// Quadratic restoration model: minimize 1/2||Ax-y||^2 + lambda/2 ||Wx||^2.
struct DeblurProblem {
    GrayImage y;
    int kernel_radius = 3;
    double lambda = 0.1;

    int n() const { return y.count(); }
};

/// Objective value and gradient at x (image flattened row-major).
double deblur_objective(const Vector& x, const DeblurProblem& p, Vector* grad);

/// Wrap the model as a solver Problem; the start point is the observation.
Problem make_deblur_objective_problem(const DeblurProblem& p);

struct DeblurMetricsRow {
    int iter = 0;
    double f = 0;
    double rel = 0;   // (f_k - f*) / (f_0 - f*), NaN when f* unknown
    double isnr = 0;  // NaN when the clean image is unknown
};

struct DeblurRun {
    GrayImage restored;
    std::vector<DeblurMetricsRow> metrics;
    SolveResult result;
};

struct DeblurRunOptions {
    TermKind term = TermKind::NM1;
    int iters = 25;
    const GrayImage* x_true = nullptr;  // optional clean image for ISNR
    std::optional<double> f_star;       // optional reference optimum for rel
};

/// Runs the solver with the BB2 direction on a pure iteration budget
/// (eps = 0) and records per-iteration metrics.
DeblurRun run_deblur(const DeblurProblem& p, const DeblurRunOptions& opt);

/// 20*log10(||y - x_true|| / ||x_b - x_true||); +inf when x_b == x_true.
double isnr(const GrayImage& y, const GrayImage& x_true, const GrayImage& x_b);

/// 20*log10(255*n / ||x_b - x0||) with n the pixel count; psnr_std uses the
/// conventional 255*sqrt(n) numerator instead.
double psnr_paper(const GrayImage& x_b, const GrayImage& x0);
double psnr_std(const GrayImage& x_b, const GrayImage& x0);

/// Binary PGM (P5, maxval 255) I/O. ASCII P2 input is rejected explicitly;
/// write clamps and rounds to 0..255.
GrayImage pgm_read(const std::string& path);
void pgm_write(const GrayImage& img, const std::string& path);

/// Deterministic 256x256-style test scene: gradient background, blocks
/// and a disk, values in [0,255].
GrayImage synthetic_image(int width = 256, int height = 256);

/// Additive Gaussian noise on the 0..255 scale, clamped back to range.
GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

Vector image_to_vector(const GrayImage& img);
GrayImage vector_to_image(const Vector& v, int width, int height);

}  // namespace nmopt
