#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sdpcolor/graph.hpp"

namespace sdpcolor {

enum Color : int { kRed = 0, kGreen = 1, kBlue = 2 };

struct Assignment {
    int vertex;
    int color;
};

struct ColoringMixture {
    std::vector<std::vector<int>> colorings;
    std::vector<double> weights;
    bool symmetrized = false;

    int n() const { return colorings.empty() ? 0 : static_cast<int>(colorings.front().size()); }
    // Throws PreconditionError naming the offending edge or weight problem.
    void validate(const Graph& g) const;
};

ColoringMixture single_coloring(std::vector<int> coloring);
// Uniform mixture over the given colorings.
ColoringMixture uniform_mixture(std::vector<std::vector<int>> colorings);
// Closes the support under the 6 color permutations with equal orbit weight.
ColoringMixture symmetrize(const ColoringMixture& m);

// Lasserre vectors realized by a coloring distribution: the coordinate for
// coloring chi is sqrt(w_chi) * [chi satisfies every assignment in S].
class SosSolution {
public:
    SosSolution(const Graph& g, ColoringMixture m, int k);

    int round() const { return k_; }
    int dimension() const { return static_cast<int>(mix_.colorings.size()); }
    int n() const { return graph_.n(); }
    const Graph& graph() const { return graph_; }
    const ColoringMixture& mixture() const { return mix_; }

    Eigen::VectorXd empty_vector() const;
    Eigen::VectorXd vec(std::span<const Assignment> S) const;
    Eigen::VectorXd vec(std::initializer_list<Assignment> S) const {
        return vec(std::span<const Assignment>(S.begin(), S.size()));
    }
    // Pr over the mixture that every assignment holds (no round check).
    double joint(std::span<const Assignment> S) const;
    double joint(std::initializer_list<Assignment> S) const {
        return joint(std::span<const Assignment>(S.begin(), S.size()));
    }

private:
    Graph graph_;
    ColoringMixture mix_;
    int k_;
    Eigen::VectorXd sqrt_w_;
};

SosSolution mixture_to_sos(const Graph& g, const ColoringMixture& m, int k);

// v_{S1} . v_{S2} for a split of `assignments`, clamped to [0,1].
double local_prob(const SosSolution& s, std::span<const Assignment> assignments);
inline double local_prob(const SosSolution& s, std::initializer_list<Assignment> a) {
    return local_prob(s, std::span<const Assignment>(a.begin(), a.size()));
}

struct SosResiduals {
    double empty_norm = 0;      // | ||v_0||^2 - 1 |
    double sum_identity = 0;    // || v_iR + v_iG + v_iB - v_0 ||
    double same_vertex = 0;     // | v_iC . v_iC' |, C != C'
    double edge_same_color = 0; // | v_iC . v_jC | on edges
    double consistency = 0;     // | v_S1.v_S2 - v_S3.v_S4 | when unions agree
    double color_symmetry = 0;  // | ||v_iC||^2 - 1/3 |
    double max_relaxation() const;
};

SosResiduals sos_residuals(const SosSolution& s, int quadruples, std::uint64_t seed);

struct StrictVector3Coloring {
    Eigen::MatrixXd vectors;  // row i is v_i
    int n() const { return static_cast<int>(vectors.rows()); }
    int dim() const { return static_cast<int>(vectors.cols()); }
};

StrictVector3Coloring extract_vector3(const SosSolution& s, double tol = 1e-6);

struct GramFactor {
    Eigen::MatrixXd vectors;  // rows reproduce the Gram matrix
    double reconstruction_error = 0;
};

GramFactor gram_factor(const Eigen::MatrixXd& gram, double rank_tol = 1e-9);

struct SdpResult {
    Eigen::MatrixXd vectors;  // unit rows
    double max_edge_violation = 0;
    int iters = 0;
    bool converged = false;
};

SdpResult solve_vector_coloring_sdp(const Graph& g, double kappa, double tol = 1e-7,
                                    int max_iter = 5000, std::uint64_t seed = 0);

}  // namespace sdpcolor
