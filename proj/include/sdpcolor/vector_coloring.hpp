#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sdpcolor/graph.hpp"
#include "sdpcolor/sos.hpp"

namespace sdpcolor {

struct VectorColoring {
    std::vector<int> vertices;
    Eigen::MatrixXd vectors;  // row k belongs to vertices[k]
    double kappa = 3.0;
    std::vector<int> excluded;  // degenerate vertices left out

    int size() const { return static_cast<int>(vertices.size()); }
    int dim() const { return static_cast<int>(vectors.cols()); }
    double edge_bound() const { return -1.0 / (kappa - 1.0); }
};

VectorColoring from_strict(const StrictVector3Coloring& s);
VectorColoring from_vectors(const Eigen::MatrixXd& vectors, double kappa);
VectorColoring restrict_to(const VectorColoring& vc, std::span<const int> subset);
// Zero-pad to `dim` columns.
VectorColoring pad_columns(const VectorColoring& vc, int dim);

struct ProjectionPair {
    Eigen::VectorXd base;
    Eigen::VectorXd target;
    double t = 0;
    Eigen::VectorXd residual;  // unit, orthogonal to base
};

ProjectionPair project_orth(const Eigen::VectorXd& vi, const Eigen::VectorXd& vj);
// The unit part of vj orthogonal to vi.
Eigen::VectorXd orth_unit(const Eigen::VectorXd& vi, const Eigen::VectorXd& vj);

// v_i . v_j of the strict 3-coloring extracted from s, from joint probabilities.
double strict_dot(const SosSolution& s, int i, int j);

double negative_kappa(double t);  // (3-6t)/(1-4t)
double negative_bound(double t);  // -(1-4t)/(2-2t)
double positive_kappa(double t);  // (4+8t)/(1+8t)
double positive_bound(double t);  // -(1+8t)/3
double combinatorial_kappa(double eps);
double combinatorial_bound(double eps);  // -(2-8eps)/(3-4eps)

VectorColoring conditioned_coloring_negative(const SosSolution& s, int i, double t,
                                             std::span<const int> targets, double tol = 1e-9);
std::pair<std::vector<int>, VectorColoring> combinatorial_52_coloring(const SosSolution& s,
                                                                      double eps);
VectorColoring conditioned_coloring_positive(const SosSolution& s, int i, double t,
                                             std::span<const int> targets, double tol = 1e-9);

struct ColoringReport {
    double max_edge_ip = -1.0;
    Edge worst_edge{-1, -1};
    double bound = 0;
    double slack = 0;  // bound - max_edge_ip
    double max_norm_residual = 0;
    bool pass = true;
};

ColoringReport validate_vector_coloring(const Graph& g, const VectorColoring& vc, double tol);

}  // namespace sdpcolor
