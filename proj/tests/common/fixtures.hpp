#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "sdpcolor/graph.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/stats.hpp"
#include "sdpcolor/walks.hpp"

namespace fixtures {

using namespace sdpcolor;

inline PlantedInstance planted(int n, double degree, std::uint64_t seed,
                               std::array<double, 3> w = {1.0 / 3, 1.0 / 3, 1.0 / 3}) {
    const double ws[3] = {w[0], w[1], w[2]};
    return generate_planted(n, ws, edge_prob_for_degree(n, degree), seed);
}

// A few proper 3-colorings reachable from the planted one, with random weights.
inline ColoringMixture random_mixture(const PlantedInstance& inst, int count, std::uint64_t seed,
                                      bool symmetric) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    ColoringMixture m;
    std::vector<int> cur = inst.planted;
    for (int k = 0; k < count; ++k) {
        m.colorings.push_back(cur);
        m.weights.push_back(u(rng));
        cur = glauber_recolor(inst.graph, cur, 4L * inst.graph.n(), rng());
    }
    double total = 0;
    for (double w : m.weights) total += w;
    for (double& w : m.weights) w /= total;
    return symmetric ? symmetrize(m) : m;
}

inline std::shared_ptr<const SosSolution> sos_of(const Graph& g, const ColoringMixture& m, int k = 3) {
    return std::make_shared<const SosSolution>(g, m, k);
}

// Twelve vertices in three classes {0-3}, {4-7}, {8-11}; symmetric edge weights.
struct PruneFixture {
    Graph graph;
    std::vector<int> coloring;
    std::vector<std::vector<double>> mu;
};

inline PruneFixture prune_fixture() {
    struct W {
        int a, b;
        double w;
    };
    const std::vector<W> ws = {{3, 7, .05},  {7, 11, .03}, {0, 4, .2},   {0, 5, .2},  {0, 8, .3},
                               {1, 4, .25},  {1, 9, .08},  {2, 5, .12},  {2, 6, .05}, {2, 10, .3},
                               {4, 8, .13},  {4, 9, .1},   {5, 9, .11},  {6, 10, .05}, {6, 8, .04}};
    std::vector<Edge> es;
    for (const auto& e : ws) es.emplace_back(e.a, e.b);
    PruneFixture f{Graph(12, es), {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2}, {}};
    f.mu.resize(12);
    for (int i = 0; i < 12; ++i) {
        for (int j : f.graph.neighbors(i)) {
            double w = 0;
            for (const auto& e : ws)
                if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) w = e.w;
            f.mu[i].push_back(w);
        }
    }
    return f;
}

inline SlackConfig prune_fixture_slack() {
    SlackConfig s;
    s.eps_dot = 0.05;
    s.mass_floor = 0.1;
    s.prune_r = 0.1;
    s.boost_lambda = 0.5;
    s.boost_lambda_prime = 0.5;
    s.boost_alpha = 0.2;
    s.boost_sigma = 1;
    return s;
}

}  // namespace fixtures
