#pragma once

#include <random>

#include <Eigen/Dense>

namespace sdpcolor::gauss {

double pdf(double x);
double cdf(double x);
double tail(double x);           // 1 - cdf(x), computed without cancellation
double quantile(double p);       // cdf^{-1}
double tail_quantile(double p);  // tail^{-1}

// E[Z | Z >= t] for standard normal Z.
double inverse_mills(double t);

// Draw Z | Z >= t by inversion. Throws for t > 8.
double truncated_tail(double t, std::mt19937_64& rng);

Eigen::VectorXd normal_vector(int dim, std::mt19937_64& rng);

// Exact sampler for r ~ N(0, I) conditioned on r.v >= t, v a unit vector.
class ConditionalSampler {
public:
    ConditionalSampler(Eigen::VectorXd v, double t);
    Eigen::VectorXd operator()(std::mt19937_64& rng) const;
    double threshold() const { return t_; }

private:
    Eigen::VectorXd v_;
    double t_;
};

}  // namespace sdpcolor::gauss
