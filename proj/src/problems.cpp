#include "nmopt/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nmopt {
namespace {

Vector constant_vec(int n, double v) { return Vector::Constant(n, v); }

Vector pattern_vec(int n, std::initializer_list<double> pat) {
    Vector x(n);
    const int p = static_cast<int>(pat.size());
    int i = 0;
    for (;;)
        for (double v : pat) {
            if (i >= n) return x;
            x[i++] = v;
        }
}

// wraps the problem's own gradient into a forward-difference Hessian so
// Newton works on problems whose second derivatives are not worth writing out
std::function<Matrix(const Vector&)> fd_hess_of(std::function<Vector(const Vector&)> grad) {
    return [grad = std::move(grad)](const Vector& x) { return fd_hessian(grad, x); };
}

// ---------------------------------------------------------------------------
// Small-scale set (More-Garbow-Hillstrom)
// ---------------------------------------------------------------------------

Problem make_rosenbrock_family(std::string name, int n, Vector x0) {
    Problem p;
    p.name = std::move(name);
    p.n = n;
    p.x0 = std::move(x0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            const double t = b - a * a;
            f += 100.0 * t * t + (1.0 - a) * (1.0 - a);
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            const double t = b - a * a;
            g[i] = -400.0 * a * t - 2.0 * (1.0 - a);
            g[i + 1] = 200.0 * t;
        }
        return g;
    };
    p.hess = [](const Vector& x) {
        Matrix H = Matrix::Zero(x.size(), x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            H(i, i) = 1200.0 * a * a - 400.0 * b + 2.0;
            H(i, i + 1) = H(i + 1, i) = -400.0 * a;
            H(i + 1, i + 1) = 200.0;
        }
        return H;
    };
    return p;
}

Problem make_beale_family(std::string name, int n, Vector x0, bool analytic_hess) {
    static const double y[3] = {1.5, 2.25, 2.625};
    Problem p;
    p.name = std::move(name);
    p.n = n;
    p.x0 = std::move(x0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            double bp = 1.0;
            for (int j = 1; j <= 3; ++j) {
                bp *= b;
                const double r = y[j - 1] - a * (1.0 - bp);
                f += r * r;
            }
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            for (int j = 1; j <= 3; ++j) {
                const double bj = std::pow(b, j);
                const double r = y[j - 1] - a * (1.0 - bj);
                g[i] += 2.0 * r * (-(1.0 - bj));
                g[i + 1] += 2.0 * r * (a * j * std::pow(b, j - 1));
            }
        }
        return g;
    };
    if (analytic_hess) {
        p.hess = [](const Vector& x) {
            Matrix H = Matrix::Zero(x.size(), x.size());
            for (int i = 0; i + 1 < x.size(); i += 2) {
                const double a = x[i], b = x[i + 1];
                for (int j = 1; j <= 3; ++j) {
                    const double bj = std::pow(b, j);
                    const double dbj = j * std::pow(b, j - 1);
                    const double d2bj = j * (j - 1) * (j >= 2 ? std::pow(b, j - 2) : 0.0);
                    const double r = y[j - 1] - a * (1.0 - bj);
                    const double ra = -(1.0 - bj), rb = a * dbj;
                    H(i, i) += 2.0 * ra * ra;
                    H(i, i + 1) += 2.0 * (ra * rb + r * dbj);
                    H(i + 1, i + 1) += 2.0 * (rb * rb + r * a * d2bj);
                }
                H(i + 1, i) = H(i, i + 1);
            }
            return H;
        };
    } else {
        p.hess = fd_hess_of(p.grad);
    }
    return p;
}

Problem make_brown_badly_scaled() {
    Problem p;
    p.name = "brown_badly_scaled";
    p.n = 2;
    p.x0 = constant_vec(2, 1.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        const double r1 = x[0] - 1e6, r2 = x[1] - 2e-6, r3 = x[0] * x[1] - 2.0;
        return r1 * r1 + r2 * r2 + r3 * r3;
    };
    p.grad = [](const Vector& x) {
        const double r1 = x[0] - 1e6, r2 = x[1] - 2e-6, r3 = x[0] * x[1] - 2.0;
        Vector g(2);
        g[0] = 2.0 * (r1 + r3 * x[1]);
        g[1] = 2.0 * (r2 + r3 * x[0]);
        return g;
    };
    p.hess = [](const Vector& x) {
        const double r3 = x[0] * x[1] - 2.0;
        Matrix H(2, 2);
        H(0, 0) = 2.0 * (1.0 + x[1] * x[1]);
        H(0, 1) = H(1, 0) = 2.0 * (x[0] * x[1] + r3);
        H(1, 1) = 2.0 * (1.0 + x[0] * x[0]);
        return H;
    };
    return p;
}

Problem make_powell_badly_scaled() {
    Problem p;
    p.name = "powell_badly_scaled";
    p.n = 2;
    p.x0 = pattern_vec(2, {0.0, 1.0});
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        const double r1 = 1e4 * x[0] * x[1] - 1.0;
        const double r2 = std::exp(-x[0]) + std::exp(-x[1]) - 1.0001;
        return r1 * r1 + r2 * r2;
    };
    p.grad = [](const Vector& x) {
        const double e0 = std::exp(-x[0]), e1 = std::exp(-x[1]);
        const double r1 = 1e4 * x[0] * x[1] - 1.0;
        const double r2 = e0 + e1 - 1.0001;
        Vector g(2);
        g[0] = 2.0 * (r1 * 1e4 * x[1] - r2 * e0);
        g[1] = 2.0 * (r1 * 1e4 * x[0] - r2 * e1);
        return g;
    };
    p.hess = [](const Vector& x) {
        const double e0 = std::exp(-x[0]), e1 = std::exp(-x[1]);
        const double r1 = 1e4 * x[0] * x[1] - 1.0;
        const double r2 = e0 + e1 - 1.0001;
        Matrix H(2, 2);
        H(0, 0) = 2.0 * (1e8 * x[1] * x[1] + e0 * e0 + r2 * e0);
        H(0, 1) = H(1, 0) = 2.0 * (1e8 * x[0] * x[1] + 1e4 * r1 + e0 * e1);
        H(1, 1) = 2.0 * (1e8 * x[0] * x[0] + e1 * e1 + r2 * e1);
        return H;
    };
    return p;
}

Problem make_variably_dim(int n) {
    Problem p;
    p.name = "variably_dim";
    p.n = n;
    p.x0.resize(n);
    for (int j = 0; j < n; ++j) p.x0[j] = 1.0 - double(j + 1) / n;
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0, s = 0;
        for (int j = 0; j < x.size(); ++j) {
            const double r = x[j] - 1.0;
            f += r * r;
            s += (j + 1) * r;
        }
        return f + s * s + s * s * s * s;
    };
    p.grad = [](const Vector& x) {
        double s = 0;
        for (int j = 0; j < x.size(); ++j) s += (j + 1) * (x[j] - 1.0);
        Vector g(x.size());
        for (int j = 0; j < x.size(); ++j)
            g[j] = 2.0 * (x[j] - 1.0) + (j + 1) * (2.0 * s + 4.0 * s * s * s);
        return g;
    };
    p.hess = [](const Vector& x) {
        double s = 0;
        for (int j = 0; j < x.size(); ++j) s += (j + 1) * (x[j] - 1.0);
        const int n = static_cast<int>(x.size());
        Matrix H(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                H(i, j) = double(i + 1) * (j + 1) * (2.0 + 12.0 * s * s) + (i == j ? 2.0 : 0.0);
        return H;
    };
    return p;
}

Problem make_watson(int n) {
    Problem p;
    p.name = "watson";
    p.n = n;
    p.x0 = Vector::Zero(n);
    p.f = [n](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 29; ++i) {
            const double t = i / 29.0;
            double du = 0, u = 0, tp = 1.0;
            for (int j = 0; j < n; ++j) {
                u += x[j] * tp;
                if (j >= 1) du += j * x[j] * tp / t;  // (j)*x_j*t^(j-1), tp = t^j here
                tp *= t;
            }
            const double r = du - u * u - 1.0;
            f += r * r;
        }
        const double r30 = x[0];
        const double r31 = x[1] - x[0] * x[0] - 1.0;
        return f + r30 * r30 + r31 * r31;
    };
    p.grad = [n](const Vector& x) {
        Vector g = Vector::Zero(n);
        for (int i = 1; i <= 29; ++i) {
            const double t = i / 29.0;
            double du = 0, u = 0;
            {
                double tp = 1.0;
                for (int j = 0; j < n; ++j) {
                    u += x[j] * tp;
                    if (j >= 1) du += j * x[j] * tp / t;
                    tp *= t;
                }
            }
            const double r = du - u * u - 1.0;
            double tp = 1.0;
            for (int j = 0; j < n; ++j) {
                const double dr = (j >= 1 ? j * tp / t : 0.0) - 2.0 * u * tp;
                g[j] += 2.0 * r * dr;
                tp *= t;
            }
        }
        g[0] += 2.0 * x[0] + 2.0 * (x[1] - x[0] * x[0] - 1.0) * (-2.0 * x[0]);
        g[1] += 2.0 * (x[1] - x[0] * x[0] - 1.0);
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_box3d() {
    Problem p;
    p.name = "box3d";
    p.n = 3;
    p.x0.resize(3);
    p.x0 << 0.0, 10.0, 20.0;
    p.f_star = 0.0;
    auto res = [](const Vector& x, int i) {
        const double t = 0.1 * i;
        return std::exp(-t * x[0]) - std::exp(-t * x[1]) -
               x[2] * (std::exp(-t) - std::exp(-10.0 * t));
    };
    p.f = [res](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 10; ++i) {
            const double r = res(x, i);
            f += r * r;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(3);
        for (int i = 1; i <= 10; ++i) {
            const double t = 0.1 * i;
            const double e0 = std::exp(-t * x[0]), e1 = std::exp(-t * x[1]);
            const double w = std::exp(-t) - std::exp(-10.0 * t);
            const double r = e0 - e1 - x[2] * w;
            g[0] += 2.0 * r * (-t * e0);
            g[1] += 2.0 * r * (t * e1);
            g[2] += 2.0 * r * (-w);
        }
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_gaussian() {
    static const double y[15] = {0.0009, 0.0044, 0.0175, 0.0540, 0.1295,
                                 0.2420, 0.3521, 0.3989, 0.3521, 0.2420,
                                 0.1295, 0.0540, 0.0175, 0.0044, 0.0009};
    Problem p;
    p.name = "gaussian";
    p.n = 3;
    p.x0.resize(3);
    p.x0 << 0.4, 1.0, 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 15; ++i) {
            const double t = (8.0 - i) / 2.0;
            const double d = t - x[2];
            const double r = x[0] * std::exp(-0.5 * x[1] * d * d) - y[i - 1];
            f += r * r;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(3);
        for (int i = 1; i <= 15; ++i) {
            const double t = (8.0 - i) / 2.0;
            const double d = t - x[2];
            const double E = std::exp(-0.5 * x[1] * d * d);
            const double r = x[0] * E - y[i - 1];
            g[0] += 2.0 * r * E;
            g[1] += 2.0 * r * (-0.5 * d * d * x[0] * E);
            g[2] += 2.0 * r * (x[0] * x[1] * d * E);
        }
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_gulf() {
    Problem p;
    p.name = "gulf";
    p.n = 3;
    p.x0.resize(3);
    p.x0 << 5.0, 2.5, 0.15;
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 99; ++i) {
            const double t = i / 100.0;
            const double yi = 25.0 + std::pow(-50.0 * std::log(t), 2.0 / 3.0);
            const double u = std::abs(yi - x[1]);
            const double r = std::exp(-std::pow(u, x[2]) / x[0]) - t;
            f += r * r;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(3);
        for (int i = 1; i <= 99; ++i) {
            const double t = i / 100.0;
            const double yi = 25.0 + std::pow(-50.0 * std::log(t), 2.0 / 3.0);
            const double diff = yi - x[1];
            const double u = std::abs(diff);
            const double v = std::pow(u, x[2]);
            const double E = std::exp(-v / x[0]);
            const double r = E - t;
            g[0] += 2.0 * r * E * v / (x[0] * x[0]);
            g[1] += 2.0 * r * E * x[2] * std::pow(u, x[2] - 1.0) *
                    (diff >= 0 ? 1.0 : -1.0) / x[0];
            g[2] += 2.0 * r * E * (-v * std::log(u) / x[0]);
        }
        return g;
    };
    // the Hessian has a near-singular eigenvalue along x2; finite differences
    // of the gradient are too noisy there, so spell it out
    p.hess = [](const Vector& x) {
        Matrix H = Matrix::Zero(3, 3);
        const double x1 = x[0], x3 = x[2];
        for (int i = 1; i <= 99; ++i) {
            const double t = i / 100.0;
            const double yi = 25.0 + std::pow(-50.0 * std::log(t), 2.0 / 3.0);
            const double diff = yi - x[1];
            const double s = diff >= 0 ? 1.0 : -1.0;
            const double u = std::abs(diff);
            const double lu = std::log(u);
            const double v = std::pow(u, x3);
            const double E = std::exp(-v / x1);
            const double r = E - t;
            Vector J(3);
            J[0] = E * v / (x1 * x1);
            J[1] = E * x3 * std::pow(u, x3 - 1.0) * s / x1;
            J[2] = -E * v * lu / x1;
            Matrix R2(3, 3);
            R2(0, 0) = E * (v * v / (x1 * x1) - 2.0 * v / x1) / (x1 * x1);
            R2(0, 1) = E * x3 * std::pow(u, x3 - 1.0) * s / (x1 * x1) * (v / x1 - 1.0);
            R2(0, 2) = E * v * lu / (x1 * x1) * (1.0 - v / x1);
            R2(1, 1) = E * (x3 * x3 * std::pow(u, 2.0 * x3 - 2.0) / (x1 * x1) -
                            x3 * (x3 - 1.0) * std::pow(u, x3 - 2.0) / x1);
            R2(1, 2) = E * s * std::pow(u, x3 - 1.0) / x1 *
                       (1.0 + x3 * lu - x3 * v * lu / x1);
            R2(2, 2) = E * v * lu * lu / x1 * (v / x1 - 1.0);
            R2(1, 0) = R2(0, 1);
            R2(2, 0) = R2(0, 2);
            R2(2, 1) = R2(1, 2);
            H += 2.0 * (J * J.transpose() + r * R2);
        }
        return H;
    };
    return p;
}

Problem make_helical() {
    Problem p;
    p.name = "helical_valley";
    p.n = 3;
    p.x0.resize(3);
    p.x0 << -1.0, 0.0, 0.0;
    p.f_star = 0.0;
    const double twopi = 2.0 * std::numbers::pi;
    // branch convention from the source collection: continuous across the
    // x2 = 0 line at x1 < 0, where the standard start point sits
    auto theta = [twopi](double a, double b) {
        if (a == 0.0) return b >= 0.0 ? 0.25 : -0.25;
        return std::atan(b / a) / twopi + (a < 0.0 ? 0.5 : 0.0);
    };
    p.f = [theta](const Vector& x) {
        const double r1 = 10.0 * (x[2] - 10.0 * theta(x[0], x[1]));
        const double r2 = 10.0 * (std::hypot(x[0], x[1]) - 1.0);
        return r1 * r1 + r2 * r2 + x[2] * x[2];
    };
    p.grad = [theta, twopi](const Vector& x) {
        const double rho2 = x[0] * x[0] + x[1] * x[1];
        const double rho = std::sqrt(rho2);
        const double r1 = 10.0 * (x[2] - 10.0 * theta(x[0], x[1]));
        const double r2 = 10.0 * (rho - 1.0);
        Vector g(3);
        g[0] = 2.0 * r1 * (100.0 / twopi) * (x[1] / rho2) + 2.0 * r2 * 10.0 * x[0] / rho;
        g[1] = 2.0 * r1 * (-100.0 / twopi) * (x[0] / rho2) + 2.0 * r2 * 10.0 * x[1] / rho;
        g[2] = 2.0 * r1 * 10.0 + 2.0 * x[2];
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_brown_dennis() {
    Problem p;
    p.name = "brown_dennis";
    p.n = 4;
    p.x0.resize(4);
    p.x0 << 25.0, 5.0, -5.0, -1.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 20; ++i) {
            const double t = i / 5.0;
            const double A = x[0] + t * x[1] - std::exp(t);
            const double B = x[2] + x[3] * std::sin(t) - std::cos(t);
            const double r = A * A + B * B;
            f += r * r;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(4);
        for (int i = 1; i <= 20; ++i) {
            const double t = i / 5.0;
            const double A = x[0] + t * x[1] - std::exp(t);
            const double B = x[2] + x[3] * std::sin(t) - std::cos(t);
            const double r = A * A + B * B;
            g[0] += 2.0 * r * 2.0 * A;
            g[1] += 2.0 * r * 2.0 * A * t;
            g[2] += 2.0 * r * 2.0 * B;
            g[3] += 2.0 * r * 2.0 * B * std::sin(t);
        }
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_ext_powell(std::string name, int n, bool analytic_hess) {
    Problem p;
    p.name = std::move(name);
    p.n = n;
    p.x0 = pattern_vec(n, {3.0, -1.0, 0.0, 1.0});
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 3 < x.size(); i += 4) {
            const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
            const double r1 = a + 10.0 * b;
            const double r2 = std::sqrt(5.0) * (c - d);
            const double r3 = (b - 2.0 * c) * (b - 2.0 * c);
            const double r4 = std::sqrt(10.0) * (a - d) * (a - d);
            f += r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 3 < x.size(); i += 4) {
            const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
            const double u = b - 2.0 * c, v = a - d;
            g[i] = 2.0 * (a + 10.0 * b) + 40.0 * v * v * v;
            g[i + 1] = 20.0 * (a + 10.0 * b) + 4.0 * u * u * u;
            g[i + 2] = 10.0 * (c - d) - 8.0 * u * u * u;
            g[i + 3] = -10.0 * (c - d) - 40.0 * v * v * v;
        }
        return g;
    };
    if (analytic_hess) {
        p.hess = [](const Vector& x) {
            Matrix H = Matrix::Zero(x.size(), x.size());
            for (int i = 0; i + 3 < x.size(); i += 4) {
                const double b = x[i + 1], c = x[i + 2];
                const double u = b - 2.0 * c, v = x[i] - x[i + 3];
                H(i, i) = 2.0 + 120.0 * v * v;
                H(i, i + 1) = H(i + 1, i) = 20.0;
                H(i, i + 3) = H(i + 3, i) = -120.0 * v * v;
                H(i + 1, i + 1) = 200.0 + 12.0 * u * u;
                H(i + 1, i + 2) = H(i + 2, i + 1) = -24.0 * u * u;
                H(i + 2, i + 2) = 10.0 + 48.0 * u * u;
                H(i + 2, i + 3) = H(i + 3, i + 2) = -10.0;
                H(i + 3, i + 3) = 10.0 + 120.0 * v * v;
            }
            return H;
        };
    }
    return p;
}

Problem make_penalty1(int n) {
    const double a = 1e-5;
    Problem p;
    p.name = "penalty1";
    p.n = n;
    p.x0.resize(n);
    for (int j = 0; j < n; ++j) p.x0[j] = j + 1;
    p.f = [a](const Vector& x) {
        double f = 0, s = 0;
        for (int j = 0; j < x.size(); ++j) {
            f += a * (x[j] - 1.0) * (x[j] - 1.0);
            s += x[j] * x[j];
        }
        const double r = s - 0.25;
        return f + r * r;
    };
    p.grad = [a](const Vector& x) {
        double s = 0;
        for (int j = 0; j < x.size(); ++j) s += x[j] * x[j];
        const double r = s - 0.25;
        Vector g(x.size());
        for (int j = 0; j < x.size(); ++j) g[j] = 2.0 * a * (x[j] - 1.0) + 4.0 * x[j] * r;
        return g;
    };
    p.hess = [a](const Vector& x) {
        double s = 0;
        for (int j = 0; j < x.size(); ++j) s += x[j] * x[j];
        const double r = s - 0.25;
        const int n = static_cast<int>(x.size());
        Matrix H(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                H(i, j) = 8.0 * x[i] * x[j] + (i == j ? 2.0 * a + 4.0 * r : 0.0);
        return H;
    };
    return p;
}

Problem make_penalty2(int n) {
    const double a = 1e-5;
    Problem p;
    p.name = n == 10 ? "penalty2_10" : "penalty2";
    p.n = n;
    p.x0 = constant_vec(n, 0.5);
    p.f = [a, n](const Vector& x) {
        double f = 0;
        const double r1 = x[0] - 0.2;
        f += r1 * r1;
        for (int i = 2; i <= n; ++i) {
            const double yi = std::exp(i / 10.0) + std::exp((i - 1) / 10.0);
            const double r = std::exp(x[i - 1] / 10.0) + std::exp(x[i - 2] / 10.0) - yi;
            f += a * r * r;
        }
        for (int i = n + 1; i <= 2 * n - 1; ++i) {
            const double r = std::exp(x[i - n] / 10.0) - std::exp(-0.1);
            f += a * r * r;
        }
        double s = 0;
        for (int j = 0; j < n; ++j) s += (n - j) * x[j] * x[j];
        const double r2n = s - 1.0;
        return f + r2n * r2n;
    };
    p.grad = [a, n](const Vector& x) {
        Vector g = Vector::Zero(n);
        g[0] += 2.0 * (x[0] - 0.2);
        for (int i = 2; i <= n; ++i) {
            const double yi = std::exp(i / 10.0) + std::exp((i - 1) / 10.0);
            const double ei = std::exp(x[i - 1] / 10.0), ej = std::exp(x[i - 2] / 10.0);
            const double r = ei + ej - yi;
            g[i - 1] += 2.0 * a * r * ei / 10.0;
            g[i - 2] += 2.0 * a * r * ej / 10.0;
        }
        for (int i = n + 1; i <= 2 * n - 1; ++i) {
            const double ei = std::exp(x[i - n] / 10.0);
            const double r = ei - std::exp(-0.1);
            g[i - n] += 2.0 * a * r * ei / 10.0;
        }
        double s = 0;
        for (int j = 0; j < n; ++j) s += (n - j) * x[j] * x[j];
        const double r2n = s - 1.0;
        for (int j = 0; j < n; ++j) g[j] += 4.0 * r2n * (n - j) * x[j];
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_trigonometric(int n) {
    Problem p;
    p.name = "trigonometric";
    p.n = n;
    p.x0 = constant_vec(n, 1.0 / n);
    auto residuals = [n](const Vector& x, Vector& r) {
        double csum = 0;
        for (int j = 0; j < n; ++j) csum += std::cos(x[j]);
        for (int i = 0; i < n; ++i)
            r[i] = n - csum + (i + 1) * (1.0 - std::cos(x[i])) - std::sin(x[i]);
    };
    p.f = [residuals, n](const Vector& x) {
        Vector r(n);
        residuals(x, r);
        return r.squaredNorm();
    };
    p.grad = [residuals, n](const Vector& x) {
        Vector r(n);
        residuals(x, r);
        const double rsum = r.sum();
        Vector g(n);
        for (int j = 0; j < n; ++j)
            g[j] = 2.0 * (rsum * std::sin(x[j]) +
                          r[j] * ((j + 1) * std::sin(x[j]) - std::cos(x[j])));
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_wood_family(std::string name, int n) {
    Problem p;
    p.name = std::move(name);
    p.n = n;
    p.x0 = pattern_vec(n, {-3.0, -1.0, -3.0, -1.0});
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 3 < x.size(); i += 4) {
            const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
            const double t1 = b - a * a, t2 = d - c * c;
            f += 100.0 * t1 * t1 + (1.0 - a) * (1.0 - a) + 90.0 * t2 * t2 +
                 (1.0 - c) * (1.0 - c) + 10.0 * (b + d - 2.0) * (b + d - 2.0) +
                 0.1 * (b - d) * (b - d);
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 3 < x.size(); i += 4) {
            const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
            const double t1 = b - a * a, t2 = d - c * c;
            g[i] = -400.0 * a * t1 - 2.0 * (1.0 - a);
            g[i + 1] = 200.0 * t1 + 20.0 * (b + d - 2.0) + 0.2 * (b - d);
            g[i + 2] = -360.0 * c * t2 - 2.0 * (1.0 - c);
            g[i + 3] = 180.0 * t2 + 20.0 * (b + d - 2.0) - 0.2 * (b - d);
        }
        return g;
    };
    p.hess = [](const Vector& x) {
        Matrix H = Matrix::Zero(x.size(), x.size());
        for (int i = 0; i + 3 < x.size(); i += 4) {
            const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
            H(i, i) = 1200.0 * a * a - 400.0 * b + 2.0;
            H(i, i + 1) = H(i + 1, i) = -400.0 * a;
            H(i + 1, i + 1) = 220.2;
            H(i + 1, i + 3) = H(i + 3, i + 1) = 19.8;
            H(i + 2, i + 2) = 1080.0 * c * c - 360.0 * d + 2.0;
            H(i + 2, i + 3) = H(i + 3, i + 2) = -360.0 * c;
            H(i + 3, i + 3) = 200.2;
        }
        return H;
    };
    return p;
}

Problem make_biggs_exp6() {
    Problem p;
    p.name = "biggs_exp6";
    p.n = 6;
    p.x0.resize(6);
    p.x0 << 1.0, 2.0, 1.0, 1.0, 1.0, 1.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 1; i <= 13; ++i) {
            const double t = 0.1 * i;
            const double y = std::exp(-t) - 5.0 * std::exp(-10.0 * t) + 3.0 * std::exp(-4.0 * t);
            const double r = x[2] * std::exp(-t * x[0]) - x[3] * std::exp(-t * x[1]) +
                             x[5] * std::exp(-t * x[4]) - y;
            f += r * r;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(6);
        for (int i = 1; i <= 13; ++i) {
            const double t = 0.1 * i;
            const double y = std::exp(-t) - 5.0 * std::exp(-10.0 * t) + 3.0 * std::exp(-4.0 * t);
            const double e0 = std::exp(-t * x[0]), e1 = std::exp(-t * x[1]),
                         e4 = std::exp(-t * x[4]);
            const double r = x[2] * e0 - x[3] * e1 + x[5] * e4 - y;
            g[0] += 2.0 * r * (-t * x[2] * e0);
            g[1] += 2.0 * r * (t * x[3] * e1);
            g[2] += 2.0 * r * e0;
            g[3] += 2.0 * r * (-e1);
            g[4] += 2.0 * r * (-t * x[5] * e4);
            g[5] += 2.0 * r * e4;
        }
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

Problem make_chebyquad(int n) {
    Problem p;
    p.name = "chebyquad";
    p.n = n;
    p.x0.resize(n);
    for (int i = 0; i < n; ++i) p.x0[i] = double(i + 1) / (n + 1);
    // shifted Chebyshev polynomials evaluated by recurrence; valid for all x
    auto cheb = [n](double xv, std::vector<double>& T, std::vector<double>* dT) {
        const double u = 2.0 * xv - 1.0;
        T.assign(n + 1, 0.0);
        T[0] = 1.0;
        if (n >= 1) T[1] = u;
        if (dT) {
            dT->assign(n + 1, 0.0);
            if (n >= 1) (*dT)[1] = 2.0;
        }
        for (int j = 2; j <= n; ++j) {
            T[j] = 2.0 * u * T[j - 1] - T[j - 2];
            if (dT) (*dT)[j] = 4.0 * T[j - 1] + 2.0 * u * (*dT)[j - 1] - (*dT)[j - 2];
        }
    };
    auto residuals = [n, cheb](const Vector& x, Vector& r) {
        r.setZero(n);
        std::vector<double> T;
        for (int i = 0; i < n; ++i) {
            cheb(x[i], T, nullptr);
            for (int j = 1; j <= n; ++j) r[j - 1] += T[j] / n;
        }
        for (int j = 2; j <= n; j += 2) r[j - 1] += 1.0 / (j * j - 1.0);
    };
    p.f = [residuals, n](const Vector& x) {
        Vector r(n);
        residuals(x, r);
        return r.squaredNorm();
    };
    p.grad = [residuals, cheb, n](const Vector& x) {
        Vector r(n);
        residuals(x, r);
        Vector g = Vector::Zero(n);
        std::vector<double> T, dT;
        for (int i = 0; i < n; ++i) {
            cheb(x[i], T, &dT);
            for (int j = 1; j <= n; ++j) g[i] += 2.0 * r[j - 1] * dT[j] / n;
        }
        return g;
    };
    p.hess = fd_hess_of(p.grad);
    return p;
}

// ---------------------------------------------------------------------------
// Large-scale set (Andrei collection)
// ---------------------------------------------------------------------------

Problem make_dixmaan(char variant, int n) {
    struct Par { double a, b, c, d; int k1, k2, k3, k4; };
    const Par table[12] = {
        {1.0, 0.0,    0.125,  0.125,  0, 0, 0, 0},   // A
        {1.0, 0.0625, 0.0625, 0.0625, 0, 0, 0, 1},   // B
        {1.0, 0.125,  0.125,  0.125,  0, 0, 0, 0},   // C
        {1.0, 0.26,   0.26,   0.26,   0, 0, 0, 0},   // D
        {1.0, 0.0,    0.125,  0.125,  1, 0, 0, 1},   // E
        {1.0, 0.0625, 0.0625, 0.0625, 1, 0, 0, 1},   // F
        {1.0, 0.125,  0.125,  0.125,  1, 0, 0, 1},   // G
        {1.0, 0.26,   0.26,   0.26,   1, 0, 0, 1},   // H
        {1.0, 0.0,    0.125,  0.125,  2, 0, 0, 2},   // I
        {1.0, 0.0625, 0.0625, 0.0625, 2, 0, 0, 2},   // J
        {1.0, 0.125,  0.125,  0.125,  2, 0, 0, 2},   // K
        {1.0, 0.26,   0.26,   0.26,   2, 0, 0, 2},   // L
    };
    const Par par = table[variant - 'a'];
    Problem p;
    p.name = std::string("dixmaan") + variant;
    p.n = n;
    p.x0 = constant_vec(n, 2.0);
    p.f_star = 1.0;
    const int m = n / 3;
    auto powk = [](double base, int k) {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    };
    p.f = [par, n, m, powk](const Vector& x) {
        double f = 1.0;
        for (int i = 0; i < n; ++i)
            f += par.a * x[i] * x[i] * powk(double(i + 1) / n, par.k1);
        for (int i = 0; i + 1 < n; ++i) {
            const double w = x[i + 1] + x[i + 1] * x[i + 1];
            f += par.b * x[i] * x[i] * w * w * powk(double(i + 1) / n, par.k2);
        }
        for (int i = 0; i < 2 * m; ++i) {
            const double x4 = std::pow(x[i + m], 4);
            f += par.c * x[i] * x[i] * x4 * powk(double(i + 1) / n, par.k3);
        }
        for (int i = 0; i < m; ++i)
            f += par.d * x[i] * x[i + 2 * m] * powk(double(i + 1) / n, par.k4);
        return f;
    };
    p.grad = [par, n, m, powk](const Vector& x) {
        Vector g = Vector::Zero(n);
        for (int i = 0; i < n; ++i)
            g[i] += 2.0 * par.a * x[i] * powk(double(i + 1) / n, par.k1);
        for (int i = 0; i + 1 < n; ++i) {
            const double xn = x[i + 1];
            const double w = xn + xn * xn;
            const double c = par.b * powk(double(i + 1) / n, par.k2);
            g[i] += 2.0 * c * x[i] * w * w;
            g[i + 1] += c * x[i] * x[i] * 2.0 * w * (1.0 + 2.0 * xn);
        }
        for (int i = 0; i < 2 * m; ++i) {
            const double c = par.c * powk(double(i + 1) / n, par.k3);
            const double xm = x[i + m];
            g[i] += 2.0 * c * x[i] * std::pow(xm, 4);
            g[i + m] += 4.0 * c * x[i] * x[i] * xm * xm * xm;
        }
        for (int i = 0; i < m; ++i) {
            const double c = par.d * powk(double(i + 1) / n, par.k4);
            g[i] += c * x[i + 2 * m];
            g[i + 2 * m] += c * x[i];
        }
        return g;
    };
    return p;
}

Problem make_tridia(int n) {
    Problem p;
    p.name = "tridia";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = (x[0] - 1.0) * (x[0] - 1.0);
        for (int i = 1; i < x.size(); ++i) {
            const double t = 2.0 * x[i] - x[i - 1];
            f += (i + 1) * t * t;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        g[0] = 2.0 * (x[0] - 1.0);
        for (int i = 1; i < x.size(); ++i) {
            const double t = 2.0 * x[i] - x[i - 1];
            g[i] += 4.0 * (i + 1) * t;
            g[i - 1] -= 2.0 * (i + 1) * t;
        }
        return g;
    };
    return p;
}

Problem make_dqdrtic(int n) {
    Problem p;
    p.name = "dqdrtic";
    p.n = n;
    p.x0 = constant_vec(n, 3.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 2 < x.size(); ++i)
            f += x[i] * x[i] + 100.0 * (x[i + 1] * x[i + 1] + x[i + 2] * x[i + 2]);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 2 < x.size(); ++i) {
            g[i] += 2.0 * x[i];
            g[i + 1] += 200.0 * x[i + 1];
            g[i + 2] += 200.0 * x[i + 2];
        }
        return g;
    };
    return p;
}

Problem make_arwhead(int n) {
    Problem p;
    p.name = "arwhead";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        const double xn = x[x.size() - 1];
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double t = x[i] * x[i] + xn * xn;
            f += t * t - 4.0 * x[i] + 3.0;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        const int n = static_cast<int>(x.size());
        Vector g = Vector::Zero(n);
        const double xn = x[n - 1];
        for (int i = 0; i + 1 < n; ++i) {
            const double t = x[i] * x[i] + xn * xn;
            g[i] += 4.0 * x[i] * t - 4.0;
            g[n - 1] += 4.0 * xn * t;
        }
        return g;
    };
    return p;
}

Problem make_liarwhd(int n) {
    Problem p;
    p.name = "liarwhd";
    p.n = n;
    p.x0 = constant_vec(n, 4.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) {
            const double t = x[i] * x[i] - x[0];
            f += 4.0 * t * t + (x[i] - 1.0) * (x[i] - 1.0);
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i < x.size(); ++i) {
            const double t = x[i] * x[i] - x[0];
            g[i] += 16.0 * t * x[i] + 2.0 * (x[i] - 1.0);
            g[0] -= 8.0 * t;
        }
        return g;
    };
    return p;
}

Problem make_nondquar(int n) {
    Problem p;
    p.name = "nondquar";
    p.n = n;
    p.x0 = pattern_vec(n, {1.0, -1.0});
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        const int n = static_cast<int>(x.size());
        double f = (x[0] - x[1]) * (x[0] - x[1]) + (x[n - 2] + x[n - 1]) * (x[n - 2] + x[n - 1]);
        for (int i = 0; i + 2 < n; ++i) {
            const double t = x[i] + x[i + 1] + x[n - 1];
            f += t * t * t * t;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        const int n = static_cast<int>(x.size());
        Vector g = Vector::Zero(n);
        g[0] += 2.0 * (x[0] - x[1]);
        g[1] -= 2.0 * (x[0] - x[1]);
        g[n - 2] += 2.0 * (x[n - 2] + x[n - 1]);
        g[n - 1] += 2.0 * (x[n - 2] + x[n - 1]);
        for (int i = 0; i + 2 < n; ++i) {
            const double t = x[i] + x[i + 1] + x[n - 1];
            const double c = 4.0 * t * t * t;
            g[i] += c;
            g[i + 1] += c;
            g[n - 1] += c;
        }
        return g;
    };
    return p;
}

Problem make_qf1(int n) {
    Problem p;
    p.name = "qf1";
    p.n = n;
    p.x0 = constant_vec(n, 0.5);
    p.f_star = -0.5 / n;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) f += 0.5 * (i + 1) * x[i] * x[i];
        return f - x[x.size() - 1];
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i < x.size(); ++i) g[i] = (i + 1) * x[i];
        g[x.size() - 1] -= 1.0;
        return g;
    };
    return p;
}

Problem make_qf2(int n) {
    Problem p;
    p.name = "qf2";
    p.n = n;
    p.x0 = constant_vec(n, 0.5);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) {
            const double t = x[i] * x[i] - 1.0;
            f += 0.5 * (i + 1) * t * t;
        }
        return f - x[x.size() - 1];
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i < x.size(); ++i)
            g[i] = 2.0 * (i + 1) * x[i] * (x[i] * x[i] - 1.0);
        g[x.size() - 1] -= 1.0;
        return g;
    };
    return p;
}

Problem make_edensch(int n) {
    Problem p;
    p.name = "edensch";
    p.n = n;
    p.x0 = Vector::Zero(n);
    p.f = [](const Vector& x) {
        double f = 16.0;
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double t = x[i] - 2.0;
            const double u = x[i] * x[i + 1] - 2.0 * x[i + 1];
            const double v = x[i + 1] + 1.0;
            f += t * t * t * t + u * u + v * v;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double t = x[i] - 2.0;
            const double u = x[i] * x[i + 1] - 2.0 * x[i + 1];
            g[i] += 4.0 * t * t * t + 2.0 * u * x[i + 1];
            g[i + 1] += 2.0 * u * (x[i] - 2.0) + 2.0 * (x[i + 1] + 1.0);
        }
        return g;
    };
    return p;
}

Problem make_engval1(int n) {
    Problem p;
    p.name = "engval1";
    p.n = n;
    p.x0 = constant_vec(n, 2.0);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double t = x[i] * x[i] + x[i + 1] * x[i + 1];
            f += t * t - 4.0 * x[i] + 3.0;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double t = x[i] * x[i] + x[i + 1] * x[i + 1];
            g[i] += 4.0 * x[i] * t - 4.0;
            g[i + 1] += 4.0 * x[i + 1] * t;
        }
        return g;
    };
    return p;
}

Problem make_bdqrtic(int n) {
    Problem p;
    p.name = "bdqrtic";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f = [](const Vector& x) {
        const int n = static_cast<int>(x.size());
        double f = 0;
        for (int i = 0; i + 4 < n; ++i) {
            const double u = -4.0 * x[i] + 3.0;
            const double v = x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] +
                             3.0 * x[i + 2] * x[i + 2] + 4.0 * x[i + 3] * x[i + 3] +
                             5.0 * x[n - 1] * x[n - 1];
            f += u * u + v * v;
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        const int n = static_cast<int>(x.size());
        Vector g = Vector::Zero(n);
        for (int i = 0; i + 4 < n; ++i) {
            const double u = -4.0 * x[i] + 3.0;
            const double v = x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] +
                             3.0 * x[i + 2] * x[i + 2] + 4.0 * x[i + 3] * x[i + 3] +
                             5.0 * x[n - 1] * x[n - 1];
            g[i] += -8.0 * u + 4.0 * v * x[i];
            g[i + 1] += 8.0 * v * x[i + 1];
            g[i + 2] += 12.0 * v * x[i + 2];
            g[i + 3] += 16.0 * v * x[i + 3];
            g[n - 1] += 20.0 * v * x[n - 1];
        }
        return g;
    };
    return p;
}

Problem make_diagonal2(int n) {
    Problem p;
    p.name = "diagonal2";
    p.n = n;
    p.x0.resize(n);
    for (int i = 0; i < n; ++i) p.x0[i] = 1.0 / (i + 1);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) f += std::exp(x[i]) - x[i] / (i + 1);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i < x.size(); ++i) g[i] = std::exp(x[i]) - 1.0 / (i + 1);
        return g;
    };
    return p;
}

Problem make_diagonal3(int n) {
    Problem p;
    p.name = "diagonal3";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) f += std::exp(x[i]) - (i + 1) * std::sin(x[i]);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i < x.size(); ++i) g[i] = std::exp(x[i]) - (i + 1) * std::cos(x[i]);
        return g;
    };
    return p;
}

Problem make_diagonal4(int n) {
    Problem p;
    p.name = "diagonal4";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); i += 2)
            f += 0.5 * (x[i] * x[i] + 100.0 * x[i + 1] * x[i + 1]);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            g[i] = x[i];
            g[i + 1] = 100.0 * x[i + 1];
        }
        return g;
    };
    return p;
}

Problem make_raydan1(int n) {
    Problem p;
    p.name = "raydan";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i < x.size(); ++i) f += (i + 1) / 10.0 * (std::exp(x[i]) - x[i]);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g(x.size());
        for (int i = 0; i < x.size(); ++i) g[i] = (i + 1) / 10.0 * (std::exp(x[i]) - 1.0);
        return g;
    };
    return p;
}

Problem make_sincos(int n) {
    Problem p;
    p.name = "sincos";
    p.n = n;
    p.x0 = pattern_vec(n, {3.0, 0.1});
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            const double t = a * a + b * b + a * b;
            f += t * t + std::sin(a) * std::sin(a) + std::cos(b) * std::cos(b);
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            const double t = a * a + b * b + a * b;
            g[i] = 2.0 * t * (2.0 * a + b) + 2.0 * std::sin(a) * std::cos(a);
            g[i + 1] = 2.0 * t * (a + 2.0 * b) - 2.0 * std::cos(b) * std::sin(b);
        }
        return g;
    };
    return p;
}

Problem make_cosine(int n) {
    Problem p;
    p.name = "cosine";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f_star = -(n - 1.0);
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); ++i)
            f += std::cos(x[i] * x[i] - 0.5 * x[i + 1]);
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); ++i) {
            const double s = std::sin(x[i] * x[i] - 0.5 * x[i + 1]);
            g[i] += -2.0 * x[i] * s;
            g[i + 1] += 0.5 * s;
        }
        return g;
    };
    return p;
}

Problem make_himmelbg(int n) {
    Problem p;
    p.name = "himmelbg";
    p.n = n;
    p.x0 = constant_vec(n, 1.5);
    p.f_star = 0.0;
    p.f = [](const Vector& x) {
        double f = 0;
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            f += (2.0 * a * a + 3.0 * b * b) * std::exp(-a - b);
        }
        return f;
    };
    p.grad = [](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (int i = 0; i + 1 < x.size(); i += 2) {
            const double a = x[i], b = x[i + 1];
            const double E = std::exp(-a - b);
            g[i] = (4.0 * a - 2.0 * a * a - 3.0 * b * b) * E;
            g[i + 1] = (6.0 * b - 2.0 * a * a - 3.0 * b * b) * E;
        }
        return g;
    };
    return p;
}

Problem make_broyden_tridiagonal(int n) {
    Problem p;
    p.name = "broyden_tridiagonal";
    p.n = n;
    p.x0 = constant_vec(n, -1.0);
    auto res = [n](const Vector& x, Vector& r) {
        for (int i = 0; i < n; ++i) {
            const double xm = i > 0 ? x[i - 1] : 0.0;
            const double xp = i + 1 < n ? x[i + 1] : 0.0;
            r[i] = (3.0 - 2.0 * x[i]) * x[i] - xm - 2.0 * xp + 1.0;
        }
    };
    p.f = [res, n](const Vector& x) {
        Vector r(n);
        res(x, r);
        return r.squaredNorm();
    };
    p.grad = [res, n](const Vector& x) {
        Vector r(n);
        res(x, r);
        Vector g = Vector::Zero(n);
        for (int i = 0; i < n; ++i) {
            g[i] += 2.0 * r[i] * (3.0 - 4.0 * x[i]);
            if (i > 0) g[i - 1] -= 2.0 * r[i];
            if (i + 1 < n) g[i + 1] -= 4.0 * r[i];
        }
        return g;
    };
    return p;
}

Problem make_quadratic(int n) {
    Problem p;
    p.name = "quadratic";
    p.n = n;
    p.x0 = constant_vec(n, 1.0);
    p.f_star = 0.0;
    p.f = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
    p.grad = [](const Vector& x) { return x; };
    p.hess = [](const Vector& x) {
        return Matrix::Identity(x.size(), x.size());
    };
    return p;
}

std::function<bool(int)> any_n() { return [](int n) { return n >= 1; }; }
std::function<bool(int)> min_n(int lo) { return [lo](int n) { return n >= lo; }; }
std::function<bool(int)> mult_of(int m, int lo) {
    return [m, lo](int n) { return n >= lo && n % m == 0; };
}
std::function<bool(int)> fixed_n(int v) { return [v](int n) { return n == v; }; }

std::vector<CatalogEntry> build_catalog() {
    using SC = SizeClass;
    using CD = std::vector<std::pair<SizeClass, int>>;
    std::vector<CatalogEntry> c;
    auto add = [&c](std::string name, int dn, CD cls, std::function<Problem(int)> mk,
                    std::function<bool(int)> vn) {
        c.push_back({std::move(name), dn, std::move(cls), std::move(mk), std::move(vn)});
    };

    // Table-1 rows, standard MGH start points
    add("beale", 2, {{SC::Small, 2}},
        [](int) { return make_beale_family("beale", 2, constant_vec(2, 1.0), true); },
        fixed_n(2));
    add("brown_badly_scaled", 2, {{SC::Small, 2}},
        [](int) { return make_brown_badly_scaled(); }, fixed_n(2));
    add("powell_badly_scaled", 2, {{SC::Small, 2}},
        [](int) { return make_powell_badly_scaled(); }, fixed_n(2));
    add("variably_dim", 2, {{SC::Small, 2}}, make_variably_dim, min_n(1));
    add("watson", 2, {{SC::Small, 2}}, make_watson, [](int n) { return n >= 2 && n <= 31; });
    add("box3d", 3, {{SC::Small, 3}}, [](int) { return make_box3d(); }, fixed_n(3));
    add("gaussian", 3, {{SC::Small, 3}}, [](int) { return make_gaussian(); }, fixed_n(3));
    add("gulf", 3, {{SC::Small, 3}}, [](int) { return make_gulf(); }, fixed_n(3));
    add("helical_valley", 3, {{SC::Small, 3}}, [](int) { return make_helical(); }, fixed_n(3));
    add("brown_dennis", 4, {{SC::Small, 4}}, [](int) { return make_brown_dennis(); },
        fixed_n(4));
    add("ext_rosenbrock", 4, {{SC::Small, 4}, {SC::Large, 100}},
        [](int n) {
            return make_rosenbrock_family("ext_rosenbrock", n, pattern_vec(n, {-1.2, 1.0}));
        },
        mult_of(2, 2));
    add("ext_powell", 4, {{SC::Small, 4}, {SC::Large, 10000}},
        [](int n) { return make_ext_powell("ext_powell", n, n <= 100); }, mult_of(4, 4));
    add("penalty1", 4, {{SC::Small, 4}}, make_penalty1, min_n(1));
    add("penalty2", 4, {{SC::Small, 4}}, make_penalty2, min_n(2));
    add("trigonometric", 4, {{SC::Small, 4}}, make_trigonometric, min_n(1));
    add("wood", 4, {{SC::Small, 4}}, [](int) { return make_wood_family("wood", 4); },
        fixed_n(4));
    add("biggs_exp6", 6, {{SC::Small, 6}}, [](int) { return make_biggs_exp6(); }, fixed_n(6));
    add("chebyquad", 6, {{SC::Small, 6}}, make_chebyquad,
        [](int n) { return n >= 1 && n <= 10; });
    add("penalty2_10", 10, {{SC::Small, 10}}, [](int) { return make_penalty2(10); },
        fixed_n(10));

    // large-scale set
    add("ext_beale", 1000, {{SC::Large, 1000}},
        [](int n) {
            return make_beale_family("ext_beale", n, pattern_vec(n, {1.0, 0.8}), false);
        },
        mult_of(2, 2));
    for (char v = 'a'; v <= 'l'; ++v)
        add(std::string("dixmaan") + v, 9000, {{SC::Large, 9000}},
            [v](int n) { return make_dixmaan(v, n); }, mult_of(3, 6));
    add("tridia", 5000, {{SC::Large, 5000}}, make_tridia, min_n(2));
    add("dqdrtic", 10000, {{SC::Large, 10000}}, make_dqdrtic, min_n(3));
    add("arwhead", 10000, {{SC::Large, 10000}}, make_arwhead, min_n(2));
    add("liarwhd", 5000, {{SC::Large, 5000}}, make_liarwhd, min_n(2));
    add("nondquar", 10000, {{SC::Large, 10000}}, make_nondquar, min_n(3));
    add("qf1", 10000, {{SC::Large, 10000}}, make_qf1, min_n(1));
    add("qf2", 10000, {{SC::Large, 10000}}, make_qf2, min_n(1));
    add("edensch", 10000, {{SC::Large, 10000}}, make_edensch, min_n(2));
    add("engval1", 10000, {{SC::Large, 10000}}, make_engval1, min_n(2));
    add("bdqrtic", 1000, {{SC::Large, 1000}}, make_bdqrtic, min_n(5));
    add("diagonal2", 500, {{SC::Large, 500}}, make_diagonal2, min_n(1));
    add("diagonal3", 100, {{SC::Large, 100}}, make_diagonal3, min_n(1));
    add("diagonal4", 10000, {{SC::Large, 10000}}, make_diagonal4, mult_of(2, 2));
    add("ext_wood", 10000, {{SC::Large, 10000}},
        [](int n) { return make_wood_family("ext_wood", n); }, mult_of(4, 4));
    add("raydan", 10000, {{SC::Large, 10000}}, make_raydan1, min_n(1));
    add("sincos", 10000, {{SC::Large, 10000}}, make_sincos, mult_of(2, 2));
    add("cosine", 10000, {{SC::Large, 10000}}, make_cosine, min_n(2));
    add("himmelbg", 10000, {{SC::Large, 10000}}, make_himmelbg, mult_of(2, 2));
    add("broyden_tridiagonal", 10000, {{SC::Large, 10000}}, make_broyden_tridiagonal,
        min_n(2));

    // extras used by the examples and the CLI
    add("rosenbrock2", 2, {{SC::Extra, 2}},
        [](int) {
            Vector x0(2);
            x0 << -0.1, 0.1;
            return make_rosenbrock_family("rosenbrock2", 2, std::move(x0));
        },
        fixed_n(2));
    add("quadratic", 4, {{SC::Extra, 4}}, make_quadratic, min_n(1));
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

Problem get_problem(const std::string& name, std::optional<int> n) {
    for (const CatalogEntry& e : catalog()) {
        if (e.name != name) continue;
        const int dim = n.value_or(e.default_n);
        if (!e.valid_n(dim))
            throw std::invalid_argument("invalid dimension " + std::to_string(dim) +
                                        " for problem " + name);
        return e.make(dim);
    }
    throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> list_problems(std::optional<SizeClass> filter) {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog())
        if (!filter || e.in_class(*filter)) names.push_back(e.name);
    return names;
}

std::vector<std::pair<std::string, int>> bench_rows(SizeClass cls) {
    std::vector<std::pair<std::string, int>> rows;
    for (const CatalogEntry& e : catalog())
        for (const auto& [c, n] : e.class_dims)
            if (c == cls) rows.emplace_back(e.name, n);
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace nmopt
