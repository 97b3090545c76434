#include "sdpcolor/params.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>

#include "sdpcolor/error.hpp"

namespace sdpcolor::params {

namespace {

constexpr double kGolden = 0.6180339887498949;

template <class F>
double golden_min(F&& f, double lo, double hi, double tol, double* arg) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        }
    }
    // the endpoints of the original bracket are candidates too
    double best_x = 0.5 * (a + b), best = f(best_x);
    for (double x : {lo, hi}) {
        double v = f(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    *arg = best_x;
    return best;
}

}  // namespace

double eta_integrand(double alpha, double c) {
    const double beta = 0.25 + 0.75 * alpha;
    return (9 - 3 * alpha - 6 * std::sqrt((1 - alpha * alpha) * c)) / (4 * std::sqrt(1 - beta * beta));
}

double lambda_integrand(double beta, double gamma, double c, double c_prime, double eta0) {
    (void)c;
    const double r3 = std::sqrt(3.0);
    const double sb = std::sqrt(1 - beta * beta);
    const double inner = std::max(0.0, 1 - gamma * gamma / (1 - beta * beta));
    const double coef = 0.5 * sb + r3 / 2 * beta / sb * gamma - r3 / 2 * std::sqrt(c_prime) * std::sqrt(inner);
    const double x = -0.5 * beta + r3 / 2 * gamma;
    return (coef * eta0 + 1.5) / std::sqrt(1 - x * x);
}

Infimum1 eta0(double c, int grid) {
    if (c < 0) throw PreconditionError("eta0 needs c >= 0");
    const double hi = c / (1 + c);
    if (hi == 0) return {eta_integrand(0, c), 0};
    auto f = [c](double a) { return eta_integrand(a, c); };
    int best = 0;
    double best_v = f(0);
    for (int k = 1; k <= grid; ++k) {
        double v = f(hi * k / grid);
        if (v < best_v) {
            best_v = v;
            best = k;
        }
    }
    double lo = hi * std::max(0, best - 1) / grid;
    double up = hi * std::min(grid, best + 1) / grid;
    double arg;
    double v = golden_min(f, lo, up, 1e-10, &arg);
    if (best_v < v) return {best_v, hi * best / grid};
    return {v, arg};
}

Infimum2 lambda0(double c, double c_prime, int grid) {
    if (c < 0 || c_prime < 0) throw PreconditionError("lambda0 needs c, c' >= 0");
    const double e0 = eta0(c).value;
    const double r3 = std::sqrt(3.0);
    const double b_lo = 0.25, b_hi = 0.25 + 3 * c / (4 * (1 + c));
    const double g_lo = -3 * r3 * c / (4 * (1 + c)), g_hi = r3 * c / (2 * (1 + c));
    auto f = [&](double b, double g) { return lambda_integrand(b, g, c, c_prime, e0); };
    int bi = 0, gi = 0;
    double best = f(b_lo, g_lo);
    for (int p = 0; p <= grid; ++p)
        for (int q = 0; q <= grid; ++q) {
            double v = f(b_lo + (b_hi - b_lo) * p / grid, g_lo + (g_hi - g_lo) * q / grid);
            if (v < best) {
                best = v;
                bi = p;
                gi = q;
            }
        }
    // coordinate-wise golden refinement inside the neighbouring grid cell
    double b = b_lo + (b_hi - b_lo) * bi / grid, g = g_lo + (g_hi - g_lo) * gi / grid;
    double b_a = b_lo + (b_hi - b_lo) * std::max(0, bi - 1) / grid;
    double b_b = b_lo + (b_hi - b_lo) * std::min(grid, bi + 1) / grid;
    double g_a = g_lo + (g_hi - g_lo) * std::max(0, gi - 1) / grid;
    double g_b = g_lo + (g_hi - g_lo) * std::min(grid, gi + 1) / grid;
    for (int round = 0; round < 25; ++round) {
        double nb, ng;
        double vb = golden_min([&](double x) { return f(x, g); }, b_a, b_b, 1e-12, &nb);
        if (vb <= best) {
            best = vb;
            b = nb;
        }
        double vg = golden_min([&](double y) { return f(b, y); }, g_a, g_b, 1e-12, &ng);
        if (vg <= best) {
            best = vg;
            g = ng;
        }
    }
    return {best, b, g};
}

double degree_to_n(double c) { return (3 + 3 * c) / (5 + 3 * c); }
double coloring_exponent(double c) { return 1 / (5 + 3 * c); }
double progress_target(double c) { return (4 + 3 * c) / (5 + 3 * c); }

ParamPoint exponents(double c, double c_prime, int eta_grid, int lambda_grid) {
    ParamPoint p;
    p.c = c;
    p.c_prime = c_prime;
    p.eta0 = eta0(c, eta_grid).value;
    p.lambda0 = lambda0(c, c_prime, lambda_grid).value;
    p.f_delta = p.eta0 * p.eta0 * (1 + c_prime) / (3 * (1 + c));
    p.g_delta = p.lambda0 * p.lambda0 / (3 * (1 + c)) - (1 + 3 * c) / (5 - c);
    p.f_n = p.f_delta * degree_to_n(c);
    p.g_n = p.g_delta * degree_to_n(c);
    p.n_exponent = std::min(p.f_n, p.g_n);
    p.coloring_exponent = coloring_exponent(c);
    p.target = progress_target(c);
    return p;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v;
    for (int k = 0; k < count; ++k) v.push_back(count == 1 ? lo : lo + (hi - lo) * k / (count - 1));
    return v;
}

namespace {

// best c' for a fixed c: f grows and g shrinks with c', so the optimum
// balances them; bisection on the sign of f - g.
ParamPoint balance_c_prime(double c, int lambda_grid) {
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        ParamPoint p = exponents(c, mid, 2000, lambda_grid);
        (p.f_n < p.g_n ? lo : hi) = mid;
    }
    return exponents(c, 0.5 * (lo + hi), 10000, lambda_grid);
}

}  // namespace

OptimizeResult optimize(const std::vector<double>& c_grid, const std::vector<double>& c_prime_grid,
                        int lambda_grid) {
    if (c_grid.empty() || c_prime_grid.empty()) throw PreconditionError("optimize needs nonempty grids");
    OptimizeResult res;
    bool found = false;
    for (double c : c_grid) {
        ParamPoint best_here;
        bool any = false;
        for (double cp : c_prime_grid) {
            ParamPoint p = exponents(c, cp, 2000, lambda_grid);
            if (!any || p.n_exponent > best_here.n_exponent) {
                best_here = p;
                any = true;
            }
        }
        res.per_c.push_back(best_here);
        if (best_here.margin() >= 0 && (!found || c > res.best.c)) {
            res.best = best_here;
            found = true;
        }
    }
    if (!found) throw Error("no grid point clears the progress target");

    // refine the feasibility boundary in c between the best grid point and its successor
    double lo = res.best.c, hi = lo;
    for (double c : c_grid)
        if (c > lo && (hi == lo || c < hi)) hi = c;
    if (hi > lo) {
        for (int it = 0; it < 40; ++it) {
            double mid = 0.5 * (lo + hi);
            (balance_c_prime(mid, lambda_grid).margin() >= 0 ? lo : hi) = mid;
        }
    }
    ParamPoint edge = balance_c_prime(lo, lambda_grid);
    res.refined_c = lo;
    res.refined_c_prime = edge.c_prime;
    return res;
}

void write_csv_header(std::ostream& out) {
    out << "c,c_prime,eta0,lambda0,f_n,g_n,min,coloring_exponent\n";
}

void write_csv_row(std::ostream& out, const ParamPoint& p) {
    out << std::setprecision(12) << p.c << ',' << p.c_prime << ',' << p.eta0 << ',' << p.lambda0 << ','
        << p.f_n << ',' << p.g_n << ',' << p.n_exponent << ',' << p.coloring_exponent << '\n';
}

}  // namespace sdpcolor::params
