#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sdpcolor/gaussian.hpp"
#include "sdpcolor/graph.hpp"
#include "sdpcolor/stats.hpp"
#include "sdpcolor/vector_coloring.hpp"

namespace sdpcolor {

enum class ThresholdOrigin { Kappa, Inefficient, Explicit };

struct ThresholdParams {
    double t = 0;
    ThresholdOrigin origin = ThresholdOrigin::Explicit;
    double parameter = 0;  // kappa or c, depending on origin
    int delta = 0;
};

ThresholdParams kms_threshold(double kappa, int delta_g);
ThresholdParams inefficient_threshold(double c, int delta_g);

struct RoundingOutcome {
    std::vector<int> S;
    std::vector<Edge> M;
    std::vector<int> returned;
    std::vector<int> removed;
    std::uint64_t seed = 0;
    double t = 0;
};

// KMS: threshold from the induced max degree (clamped to >= 2) and the kappa.
RoundingOutcome kms_round(const Graph& g, const VectorColoring& vc, double kappa, std::uint64_t seed);
inline RoundingOutcome kms_round(const Graph& g, const VectorColoring& vc, std::uint64_t seed) {
    return kms_round(g, vc, vc.kappa, seed);
}
RoundingOutcome kms_round_at(const Graph& g, const VectorColoring& vc, double t, std::uint64_t seed);
RoundingOutcome kms_prime_round(const Graph& g, const VectorColoring& vc, double t,
                                std::uint64_t seed);

gauss::ConditionalSampler conditional_gaussian(const Eigen::VectorXd& v, double t);

// One KMS' execution for a given direction r; reusable across samples.
class KmsPrimeRunner {
public:
    KmsPrimeRunner(const Graph& g, const VectorColoring& vc, double t);
    void run(const Eigen::VectorXd& r, std::uint64_t match_seed, int force_select = -1);
    const std::vector<int>& selected() const { return S_; }
    int partner(int v) const { return partner_[v]; }
    int row_of(int v) const { return row_[v]; }
    const VectorColoring& coloring() const { return vc_; }

private:
    const Graph& g_;
    const VectorColoring& vc_;
    double t_;
    std::vector<int> row_;
    std::vector<int> partner_;
    std::vector<int> S_;
};

struct FailureReport {
    std::vector<int> vertices;
    std::vector<Estimate> p;   // aligned with vertices
    std::vector<char> unestimated;
    int at_least_half = 0;
    bool fails = false;
};

FailureReport estimate_failure(const Graph& g, const VectorColoring& vc, double t, long samples,
                               std::uint64_t seed, std::span<const int> vertices = {});

}  // namespace sdpcolor
