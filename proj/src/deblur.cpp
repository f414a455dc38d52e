#include "nmopt/deblur.hpp"

#include "nmopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace nmopt {
namespace {

// half-sample symmetric reflection: ..., x1, x0 | x0, x1, ...
inline int reflect(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

struct DiskKernel {
    int radius;
    std::vector<std::pair<int, int>> taps;
    double weight;

    explicit DiskKernel(int r) : radius(r) {
        for (int di = -r; di <= r; ++di)
            for (int dj = -r; dj <= r; ++dj)
                if (di * di + dj * dj <= r * r) taps.emplace_back(di, dj);
        weight = 1.0 / double(taps.size());
    }
};

}  // namespace

GrayImage blur_apply(const GrayImage& img, int radius) {
    if (radius < 0) throw std::invalid_argument("blur_apply: radius must be >= 0");
    if (2 * radius > std::min(img.width, img.height))
        throw std::invalid_argument("blur_apply: radius larger than half the image side");
    if (radius == 0) return img;
    const DiskKernel k(radius);
    const int w = img.width, h = img.height;
    GrayImage out(w, h);
    // shift-and-add per tap; only the first/last `radius` columns need
    // reflected indexing, the middle run is a contiguous vector add
    for (const auto& [di, dj] : k.taps) {
        const int j_lo = std::max(0, -dj);
        const int j_hi = std::min(w, w - dj);  // [j_lo, j_hi) stays in range
        for (int i = 0; i < h; ++i) {
            const double* src = &img.pixels[size_t(reflect(i + di, h)) * w];
            double* dst = &out.pixels[size_t(i) * w];
            for (int j = 0; j < j_lo; ++j) dst[j] += src[reflect(j + dj, w)];
            for (int j = j_lo; j < j_hi; ++j) dst[j] += src[j + dj];
            for (int j = j_hi; j < w; ++j) dst[j] += src[reflect(j + dj, w)];
        }
    }
    for (double& v : out.pixels) v *= k.weight;
    return out;
}

GradientField reg_apply(const GrayImage& img) {
    GradientField f;
    f.dx = GrayImage(img.width, img.height);
    f.dy = GrayImage(img.width, img.height);
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j) {
            f.dx.at(i, j) = j + 1 < img.width ? img.at(i, j + 1) - img.at(i, j) : 0.0;
            f.dy.at(i, j) = i + 1 < img.height ? img.at(i + 1, j) - img.at(i, j) : 0.0;
        }
    return f;
}

GrayImage reg_adjoint(const GradientField& field) {
    const int w = field.dx.width, h = field.dx.height;
    GrayImage out(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double v = 0;
            if (j + 1 < w) v -= field.dx.at(i, j);
            if (j >= 1) v += field.dx.at(i, j - 1);
            if (i + 1 < h) v -= field.dy.at(i, j);
            if (i >= 1) v += field.dy.at(i - 1, j);
            out.at(i, j) = v;
        }
    return out;
}

Vector image_to_vector(const GrayImage& img) {
    return Eigen::Map<const Vector>(img.pixels.data(), img.count());
}

GrayImage vector_to_image(const Vector& v, int width, int height) {
    GrayImage img(width, height);
    Eigen::Map<Vector>(img.pixels.data(), img.count()) = v;
    return img;
}

GrayImage neumann_laplacian(const GrayImage& img) {
    const int w = img.width, h = img.height;
    GrayImage out(w, h);
    for (int i = 0; i < h; ++i) {
        const double* row = &img.pixels[size_t(i) * w];
        const double* up = i > 0 ? row - w : nullptr;
        const double* dn = i + 1 < h ? row + w : nullptr;
        double* o = &out.pixels[size_t(i) * w];
        for (int j = 0; j < w; ++j) {
            double acc = 0;
            if (j > 0) acc += row[j] - row[j - 1];
            if (j + 1 < w) acc += row[j] - row[j + 1];
            if (up) acc += row[j] - up[j];
            if (dn) acc += row[j] - dn[j];
            o[j] = acc;
        }
    }
    return out;
}

double deblur_objective(const Vector& x, const DeblurProblem& p, Vector* grad) {
    const int w = p.y.width, h = p.y.height;
    GrayImage xi = vector_to_image(x, w, h);
    GrayImage Ax = blur_apply(xi, p.kernel_radius);
    for (int i = 0; i < Ax.count(); ++i) Ax.pixels[i] -= p.y.pixels[i];  // residual

    double fit = 0;
    for (double v : Ax.pixels) fit += v * v;
    double reg = 0;
    for (int i = 0; i < h; ++i) {
        const double* row = &xi.pixels[size_t(i) * w];
        const double* dn = i + 1 < h ? row + w : nullptr;
        for (int j = 0; j < w; ++j) {
            if (j + 1 < w) {
                const double d = row[j + 1] - row[j];
                reg += d * d;
            }
            if (dn) {
                const double d = dn[j] - row[j];
                reg += d * d;
            }
        }
    }
    const double f = 0.5 * fit + 0.5 * p.lambda * reg;

    if (grad) {
        GrayImage At_r = blur_apply(Ax, p.kernel_radius);  // A is self-adjoint
        GrayImage lap = neumann_laplacian(xi);
        grad->resize(x.size());
        for (int i = 0; i < At_r.count(); ++i)
            (*grad)[i] = At_r.pixels[i] + p.lambda * lap.pixels[i];
    }
    return f;
}

Problem make_deblur_objective_problem(const DeblurProblem& p) {
    Problem prob;
    prob.name = "deblur";
    prob.n = p.n();
    prob.x0 = image_to_vector(p.y);
    prob.f = [p](const Vector& x) { return deblur_objective(x, p, nullptr); };
    prob.grad = [p](const Vector& x) {
        Vector g;
        deblur_objective(x, p, &g);
        return g;
    };
    return prob;
}

DeblurRun run_deblur(const DeblurProblem& p, const DeblurRunOptions& opt) {
    if (opt.iters < 1) throw std::invalid_argument("run_deblur: iters must be >= 1");
    Problem prob = make_deblur_objective_problem(p);

    SolverConfig cfg = default_config(opt.term, DirectionKind::BB2);
    cfg.eps = 0.0;  // pure iteration budget
    cfg.maxiter = opt.iters;

    DeblurRun run;
    double f0 = 0;
    run.metrics.reserve(opt.iters + 1);
    const auto on_iterate = [&](int k, const Vector& x, double f) {
        if (k == 0) f0 = f;
        DeblurMetricsRow row;
        row.iter = k;
        row.f = f;
        row.rel = opt.f_star ? (f - *opt.f_star) / (f0 - *opt.f_star)
                             : std::numeric_limits<double>::quiet_NaN();
        if (opt.x_true) {
            GrayImage xk = vector_to_image(x, p.y.width, p.y.height);
            row.isnr = isnr(p.y, *opt.x_true, xk);
        } else {
            row.isnr = std::numeric_limits<double>::quiet_NaN();
        }
        run.metrics.push_back(row);
    };

    run.result = solve(prob, cfg, on_iterate);
    run.restored = vector_to_image(run.result.x_b, p.y.width, p.y.height);
    return run;
}

namespace {

double img_dist(const GrayImage& a, const GrayImage& b) {
    double s = 0;
    for (size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = a.pixels[i] - b.pixels[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

double isnr(const GrayImage& y, const GrayImage& x_true, const GrayImage& x_b) {
    const double den = img_dist(x_b, x_true);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(img_dist(y, x_true) / den);
}

double psnr_paper(const GrayImage& x_b, const GrayImage& x0) {
    const double den = img_dist(x_b, x0);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(255.0 * x_b.count() / den);
}

double psnr_std(const GrayImage& x_b, const GrayImage& x0) {
    const double den = img_dist(x_b, x0);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(255.0 * std::sqrt(double(x_b.count())) / den);
}

namespace {

// next whitespace-delimited token, skipping '#' comments
std::string pgm_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(char(ch));
    }
    return tok;
}

}  // namespace

GrayImage pgm_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm_read: cannot open " + path);
    std::string magic = pgm_token(in);
    if (magic == "P2")
        throw std::runtime_error("pgm_read: unsupported format P2 (ASCII); only binary P5");
    if (magic != "P5") throw std::runtime_error("pgm_read: malformed header, expected P5");
    const std::string ws = pgm_token(in), hs = pgm_token(in), ms = pgm_token(in);
    int w = 0, h = 0, maxval = 0;
    try {
        w = std::stoi(ws);
        h = std::stoi(hs);
        maxval = std::stoi(ms);
    } catch (const std::exception&) {
        throw std::runtime_error("pgm_read: malformed header dimensions");
    }
    if (w <= 0 || h <= 0) throw std::runtime_error("pgm_read: malformed header dimensions");
    if (maxval != 255)
        throw std::runtime_error("pgm_read: unsupported maxval " + ms + ", expected 255");

    std::vector<unsigned char> raw(size_t(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), raw.size());
    const auto got = in.gcount();
    if (got != static_cast<std::streamsize>(raw.size())) {
        std::ostringstream msg;
        msg << "pgm_read: truncated payload, expected " << raw.size() << " bytes, got " << got;
        throw std::runtime_error(msg.str());
    }
    GrayImage img(w, h);
    for (size_t i = 0; i < raw.size(); ++i) img.pixels[i] = double(raw[i]);
    return img;
}

void pgm_write(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("pgm_write: cannot open " + path);
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    std::vector<unsigned char> raw(img.pixels.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        const double v = std::clamp(img.pixels[i], 0.0, 255.0);
        raw[i] = static_cast<unsigned char>(std::lround(v));
    }
    out.write(reinterpret_cast<const char*>(raw.data()), raw.size());
    if (!out) throw std::runtime_error("pgm_write: write failed for " + path);
}

GrayImage synthetic_image(int width, int height) {
    GrayImage img(width, height);
    const double cx = 0.62 * width, cy = 0.38 * height;
    const double r = 0.18 * std::min(width, height);
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j) {
            double v = 40.0 + 120.0 * (double(i) + j) / (width + height - 2);
            if (((i / 32) + (j / 32)) % 2 == 0) v += 45.0;
            const double d = std::hypot(j - cx, i - cy);
            if (d < r) v = 230.0 - 60.0 * d / r;
            if (j > 0.15 * width && j < 0.25 * width && i > 0.55 * height && i < 0.9 * height)
                v = 25.0;
            img.at(i, j) = std::clamp(v, 0.0, 255.0);
        }
    return img;
}

GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    GrayImage out = img;
    for (double& v : out.pixels) v = std::clamp(v + noise(rng), 0.0, 255.0);
    return out;
}

}  // namespace nmopt
