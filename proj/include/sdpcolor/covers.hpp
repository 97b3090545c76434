#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sdpcolor/graph.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/stats.hpp"
#include "sdpcolor/vector_coloring.hpp"

namespace sdpcolor {

// Rows of X are the cover vectors.
struct CoverEstimate {
    Estimate delta;
    double s = 0;
    long samples = 0;
    std::uint64_t seed = 0;
};

CoverEstimate estimate_cover_prob(const Eigen::MatrixXd& X, double s, long samples, std::uint64_t seed);

// c with |X| = tail(s)^{-(1+c)}.
double inefficiency(long size, double s);

enum class Provenance { GreedyArgmax, KmsPrime, Explicit };
const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct PackingMeasure {
    std::vector<int> indices;  // labels of the measured vectors (row ids or vertex ids)
    std::vector<double> weights;
    double s = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    Provenance provenance = Provenance::Explicit;

    double total() const;
    double mass_of(std::span<const int> positions) const;
};

PackingMeasure explicit_packing(std::vector<double> weights);
PackingMeasure greedy_packing(const Eigen::MatrixXd& X, double s, long samples, std::uint64_t seed);

struct KmsPrimePacking {
    int vertex = -1;
    PackingMeasure mu;      // indices are neighbor vertex ids
    Estimate p;             // removal probability of `vertex`
    std::vector<long> counts;
    bool unestimated = false;
};

KmsPrimePacking packing_from_kms_prime(const Graph& g, const VectorColoring& vc, int i, double t,
                                       long samples, std::uint64_t seed);

// Statistical check of mu(X') <= Pr[exists x in X': r.x >= s] on the given subsets.
struct PackingCheck {
    int subsets = 0;
    int violations = 0;
    double worst_excess = 0;  // max of mu(X') - (estimate + radius)
};
PackingCheck check_packing_property(const Eigen::MatrixXd& X, const PackingMeasure& mu,
                                    const std::vector<std::vector<int>>& subsets, long samples,
                                    std::uint64_t seed);

struct SpreadReport {
    std::vector<double> masses;  // per direction
    int worst = -1;
    double worst_mass = 0;
    bool pass = true;
};

SpreadReport check_spread(const Eigen::MatrixXd& X, std::span<const double> mu, double lambda,
                          double p, const Eigen::MatrixXd& directions);

struct PruneResult {
    std::vector<int> kept;       // surviving row indices, ascending
    std::vector<int> triggered;  // the set T of chosen centers u
    std::vector<double> removed_mass;  // per iteration, measured in mu1
    int iterations = 0;
    bool exhausted = false;
    double lambda_prime = 0;
    double alpha = 0;
};

PruneResult boost_spread(const Eigen::MatrixXd& X, std::span<const double> mu, double lambda,
                         double p, int sigma, double alpha, double lambda_prime);
PruneResult prune_against(const Eigen::MatrixXd& X1, std::span<const double> mu1,
                          const Eigen::MatrixXd& X2, std::span<const double> mu2, double lambda,
                          double p, int sigma, double alpha, double lambda_prime);

double boosted_lambda(double lambda, double c, double eps, int sigma);

struct SymmetricPruneParams {
    double c = 0.0393241;
    double lambda = -1;  // <= 0 selects c/(1+c)
    double p = -1;       // <= 0 uses the measured worst spread mass
};

struct SymmetricPruneResult {
    std::vector<int> kept;  // rows of X1
    Eigen::MatrixXd Y;      // X1 stacked over -X1
    std::vector<double> mu_Y;
    PruneResult boost;
    PruneResult against;
    int sigma = 1;
    double alpha = 0, eps = 0, lambda = 0, lambda_prime = 0, p = 0;
    bool exhausted = false;
    bool post_spread_ok = false;
};

SymmetricPruneResult symmetric_prune(const Eigen::MatrixXd& X1, std::span<const double> mu1,
                                     const Eigen::MatrixXd& X2, std::span<const double> mu2,
                                     double s, const SymmetricPruneParams& params);

double intersection_bound(int ell, int k);
struct IntersectionResult {
    std::vector<int> S;
    double mass = 0;
    double bound = 0;
};
std::optional<IntersectionResult> find_intersection_subset(std::span<const double> mu,
                                                           const std::vector<std::vector<int>>& subsets,
                                                           int ell);

struct CompositionReport {
    Estimate joint;
    Estimate delta1;
    std::vector<Estimate> delta2;
    double a = 0;
    double correction = 0;   // |X| tail(s1) tail(sqrt(c(1+1/s1)) s1)
    double lemma_bound = 0;  // delta1 - correction
    bool meets_delta1 = false;
    bool meets_lemma = false;
};

CompositionReport compose_covers_check(const Eigen::MatrixXd& X, const std::vector<Eigen::MatrixXd>& Y,
                                       double c, double s1, double s2, double delta2, long samples,
                                       std::uint64_t seed);

struct ProjectionReport {
    Estimate before;
    Estimate after;
    double drop = 0;
    double bound = 0;  // 2 tail(rho)
    bool pass = false;
};

ProjectionReport projection_check(const Eigen::MatrixXd& X, const Eigen::VectorXd& v0, double s,
                                  double rho, long samples, std::uint64_t seed);

}  // namespace sdpcolor
