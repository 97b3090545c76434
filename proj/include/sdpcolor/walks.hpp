#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sdpcolor/graph.hpp"
#include "sdpcolor/params.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/stats.hpp"
#include "sdpcolor/vector_coloring.hpp"

namespace sdpcolor {

// Explicit stand-ins for the asymptotic slack terms.
struct SlackConfig {
    double eps_dot = 0.05;     // inner-product window slack
    double mass_floor = 0.02;  // packing-mass floor
    double prune_r = 0.05;     // weighted prune threshold
    long samples = 2000;
    std::uint64_t seed = 1;
    double threshold_slack = 0;  // additive loss in two-step thresholds
    double c = params::kDefaultC;

    // stage-2 boosting; nonpositive values select the default schedule
    double boost_lambda = -1;
    double boost_lambda_prime = -1;
    double boost_alpha = -1;
    int boost_sigma = 0;

    int attempts = 16;  // rounding draws per extraction, best kept
};

void validate_slack(const SlackConfig& s);

struct WalkContext {
    Graph graph;
    StrictVector3Coloring coloring;
    std::shared_ptr<const SosSolution> sos;  // needed for extraction only
    ThresholdParams t;
    SlackConfig slack;
    std::vector<std::vector<double>> mu;  // mu[i][k] = mu_i(graph.neighbors(i)[k])
    std::vector<double> p;                // estimated removal probability per vertex
    std::vector<std::vector<int>> adj;    // pruned subgraph G', sorted lists
    std::map<std::pair<int, int>, std::vector<int>> W;  // W_ij keyed by (i, j)

    int n() const { return graph.n(); }
    double mu_of(int i, int j) const;
    bool alive(int i) const { return !adj[i].empty(); }
    std::vector<int> vertices() const;
    Eigen::VectorXd v(int i) const { return coloring.vectors.row(i).transpose(); }
    Eigen::VectorXd vp(int i, int j) const;  // v_ij
    bool kms_prime_fails() const;
};

// Estimates every mu_i by KMS' simulation.
WalkContext build_context(const Graph& g, const StrictVector3Coloring& coloring, ThresholdParams t,
                          const SlackConfig& slack, std::shared_ptr<const SosSolution> sos = nullptr);
// Uses the given tables instead of sampling.
WalkContext make_context(const Graph& g, const StrictVector3Coloring& coloring, ThresholdParams t,
                         const SlackConfig& slack, std::vector<std::vector<double>> mu,
                         std::shared_ptr<const SosSolution> sos = nullptr);

struct WeightedPruneResult {
    std::vector<int> survivors;
    std::vector<int> removal_order;
    bool exhausted = false;
};

// Weights are aligned with g.neighbors(i) and must be symmetric.
WeightedPruneResult prune_weighted_graph(const Graph& g, const std::vector<std::vector<double>>& w,
                                         double r);

struct PruneTrace {
    bool short_circuit = false;
    std::vector<int> stage1;
    std::vector<Edge> stage2_removed;
    std::vector<int> stage2;
    std::vector<Edge> stage3_removed;
    std::map<int, std::vector<int>> stage3_triggers;  // j -> triggering neighbours i
    std::vector<int> final_vertices;
    int q_max = 0;
    bool certificate_ok = true;
    std::string exhausted_stage;  // empty when every stage kept a vertex
};

PruneTrace second_level_prune(WalkContext& ctx, bool require_failure = true);
void build_w_sets(WalkContext& ctx);

struct Decomposition {
    std::vector<Eigen::VectorXd> components;
    double max_cross = 0;        // largest |inner product| between components
    double reconstruction = 0;   // || sum - v ||
    double coefficient = 0;      // alpha_k (two-step) or gamma (three-step)
    double beta = 0;
    double predicted_ip = 0;     // v_target . v_i predicted from coefficients
    double actual_ip = 0;
};

// v_k = (1/4 + 3a/4) v_i - (sqrt3/4)(1-a) v_ij + (sqrt3/2)(v_jk - a v_ji)
Decomposition two_step_decomposition(const StrictVector3Coloring& col, int i, int j, int k);
// v_l along v_i, v_ik and the remaining orthogonal part
Decomposition third_level_decomposition(const StrictVector3Coloring& col, int i, int k, int l);

struct TwoStepCover {
    std::vector<int> ks;
    std::vector<double> alpha;
    std::vector<double> threshold;
    double max_cross = 0;
    Estimate cover;
    double delta1 = 0;
    bool meets_half = false;
};

TwoStepCover two_step_cover(const WalkContext& ctx, int i, std::span<const int> S,
                            const std::map<int, std::vector<int>>& S_j, double delta1, double delta2);

struct ExtractionResult {
    std::vector<int> U;
    std::vector<int> dropped;
    double t_eff = 0;
    double kappa = 0;
    std::vector<int> independent_set;
};

ExtractionResult second_level_independent_set(const WalkContext& ctx, int i);
// Lemma-3.3 style extraction on an arbitrary candidate set around i.
ExtractionResult positive_extraction(const WalkContext& ctx, int i, std::vector<int> U,
                                     std::uint64_t seed);

bool good_k_check(const WalkContext& ctx, int i, int j, int k);
double score_nu(const WalkContext& ctx, int i, int j);

struct CenterResult {
    int i = -1;
    std::vector<int> S;
    double mass = 0;
    bool clears = false;
};

CenterResult select_center(const WalkContext& ctx);

struct ThirdLevelResult {
    int center = -1;
    std::vector<int> S;
    std::vector<int> W;
    std::map<int, double> alpha, beta;
    std::map<int, std::vector<int>> V;                    // V_ik keyed by k
    std::map<std::pair<int, int>, double> gamma;          // keyed by (k, l)
    std::map<int, double> cover_mass;                     // mu_k(V_ik)
    double beta_residual = 0;
    std::string branch;  // "A", "B" or "none"
    double size_threshold = 0;
    double kappa = 0;
    std::vector<int> candidates;
    std::vector<int> independent_set;
    std::string diagnostics;
};

ThirdLevelResult third_level_sets(const WalkContext& ctx, int i, std::span<const int> S);
// Branch selection only: true selects the second-level branch on W.
bool third_level_branch_a(std::size_t w_size, double eta0, double t, double c_prime);
ThirdLevelResult third_level_independent_set(const WalkContext& ctx, int i, std::span<const int> S,
                                             double c, double c_prime);

double gamma_lower(double c, double eps);
double gamma_upper(double c, double eps);

}  // namespace sdpcolor
