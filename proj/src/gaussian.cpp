#include "sdpcolor/gaussian.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "sdpcolor/error.hpp"

namespace sdpcolor::gauss {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

double pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); }

double cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw PreconditionError("gaussian quantile needs p in (0,1)");
    return -kSqrt2 * boost::math::erfc_inv(2 * p);
}

double tail_quantile(double p) { return -quantile(p); }

double inverse_mills(double t) { return pdf(t) / tail(t); }

double truncated_tail(double t, std::mt19937_64& rng) {
    if (t > 8.0) throw PreconditionError("truncation threshold above 8 underflows");
    const double mass = tail(t);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x;
    do {
        x = u(rng);
    } while (x == 0.0);
    double s = tail_quantile(x * mass);
    return s < t ? t : s;
}

Eigen::VectorXd normal_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Eigen::VectorXd r(dim);
    for (int k = 0; k < dim; ++k) r[k] = nd(rng);
    return r;
}

ConditionalSampler::ConditionalSampler(Eigen::VectorXd v, double t) : v_(std::move(v)), t_(t) {
    if (std::abs(v_.norm() - 1.0) > 1e-9) throw PreconditionError("conditioning vector is not unit");
    if (t_ > 8.0) throw PreconditionError("truncation threshold above 8 underflows");
}

Eigen::VectorXd ConditionalSampler::operator()(std::mt19937_64& rng) const {
    Eigen::VectorXd g = normal_vector(static_cast<int>(v_.size()), rng);
    double s = truncated_tail(t_, rng);
    g -= g.dot(v_) * v_;
    g += s * v_;
    return g;
}

}  // namespace sdpcolor::gauss
