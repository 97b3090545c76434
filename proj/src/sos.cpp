#include "sdpcolor/sos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "sdpcolor/error.hpp"

namespace sdpcolor {

void ColoringMixture::validate(const Graph& g) const {
    if (colorings.empty()) throw PreconditionError("mixture support is empty");
    if (colorings.size() != weights.size())
        throw PreconditionError("mixture has mismatched coloring and weight counts");
    double total = 0;
    for (std::size_t s = 0; s < colorings.size(); ++s) {
        const auto& chi = colorings[s];
        if (static_cast<int>(chi.size()) != g.n())
            throw PreconditionError("mixture coloring has wrong length");
        for (int c : chi)
            if (c < 0 || c > 2) throw PreconditionError("mixture coloring uses a color outside {0,1,2}");
        if (auto bad = first_conflict(g, chi))
            throw PreconditionError("mixture coloring " + std::to_string(s) + " is improper on edge " +
                                    std::to_string(bad->first) + "-" + std::to_string(bad->second));
        if (!(weights[s] > 0)) throw PreconditionError("mixture weights must be positive");
        total += weights[s];
    }
    if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("mixture weights must sum to 1");
}

ColoringMixture single_coloring(std::vector<int> coloring) {
    ColoringMixture m;
    m.colorings.push_back(std::move(coloring));
    m.weights.push_back(1.0);
    return m;
}

ColoringMixture uniform_mixture(std::vector<std::vector<int>> colorings) {
    ColoringMixture m;
    const double w = 1.0 / static_cast<double>(colorings.size());
    m.colorings = std::move(colorings);
    m.weights.assign(m.colorings.size(), w);
    return m;
}

ColoringMixture symmetrize(const ColoringMixture& m) {
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::map<std::vector<int>, double> acc;
    for (std::size_t s = 0; s < m.colorings.size(); ++s)
        for (const auto& p : perms) {
            std::vector<int> chi(m.colorings[s].size());
            for (std::size_t v = 0; v < chi.size(); ++v) chi[v] = p[m.colorings[s][v]];
            acc[chi] += m.weights[s] / 6.0;
        }
    ColoringMixture out;
    double total = 0;
    for (auto& [chi, w] : acc) total += w;
    for (auto& [chi, w] : acc) {
        out.colorings.push_back(chi);
        out.weights.push_back(w / total);
    }
    out.symmetrized = true;
    return out;
}

SosSolution::SosSolution(const Graph& g, ColoringMixture m, int k)
    : graph_(g), mix_(std::move(m)), k_(k) {
    if (k < 1) throw PreconditionError("SoS round must be >= 1");
    mix_.validate(graph_);
    sqrt_w_.resize(dimension());
    for (int s = 0; s < dimension(); ++s) sqrt_w_[s] = std::sqrt(mix_.weights[s]);
}

Eigen::VectorXd SosSolution::empty_vector() const { return sqrt_w_; }

Eigen::VectorXd SosSolution::vec(std::span<const Assignment> S) const {
    if (static_cast<int>(S.size()) > k_)
        throw UnsupportedRoundError("assignment set larger than the SoS round");
    Eigen::VectorXd out = sqrt_w_;
    for (int s = 0; s < dimension(); ++s)
        for (const auto& a : S)
            if (mix_.colorings[s][a.vertex] != a.color) {
                out[s] = 0;
                break;
            }
    return out;
}

double SosSolution::joint(std::span<const Assignment> S) const {
    double p = 0;
    for (int s = 0; s < dimension(); ++s) {
        bool ok = true;
        for (const auto& a : S)
            if (mix_.colorings[s][a.vertex] != a.color) {
                ok = false;
                break;
            }
        if (ok) p += mix_.weights[s];
    }
    return p;
}

SosSolution mixture_to_sos(const Graph& g, const ColoringMixture& m, int k) {
    return SosSolution(g, m, k);
}

double local_prob(const SosSolution& s, std::span<const Assignment> assignments) {
    if (static_cast<int>(assignments.size()) > s.round())
        throw UnsupportedRoundError("query larger than the SoS round");
    const std::size_t half = (assignments.size() + 1) / 2;
    double p = s.vec(assignments.first(half)).dot(s.vec(assignments.subspan(half)));
    return std::clamp(p, 0.0, 1.0);
}

double SosResiduals::max_relaxation() const {
    return std::max({empty_norm, sum_identity, same_vertex, edge_same_color, consistency});
}

SosResiduals sos_residuals(const SosSolution& s, int quadruples, std::uint64_t seed) {
    SosResiduals r;
    const Eigen::VectorXd v0 = s.empty_vector();
    r.empty_norm = std::abs(v0.squaredNorm() - 1.0);
    const int n = s.n();
    std::vector<std::array<Eigen::VectorXd, 3>> vc(n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) vc[i][c] = s.vec({{i, c}});
    for (int i = 0; i < n; ++i) {
        r.sum_identity = std::max(r.sum_identity, (vc[i][0] + vc[i][1] + vc[i][2] - v0).norm());
        for (int c = 0; c < 3; ++c) {
            r.color_symmetry = std::max(r.color_symmetry, std::abs(vc[i][c].squaredNorm() - 1.0 / 3));
            for (int d = c + 1; d < 3; ++d)
                r.same_vertex = std::max(r.same_vertex, std::abs(vc[i][c].dot(vc[i][d])));
        }
        for (int j : s.graph().neighbors(i))
            if (i < j)
                for (int c = 0; c < 3; ++c)
                    r.edge_same_color = std::max(r.edge_same_color, std::abs(vc[i][c].dot(vc[j][c])));
    }
    if (n == 0) return r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_v(0, n - 1), pick_c(0, 2), pick_side(0, 2);
    std::uniform_int_distribution<int> pick_size(1, s.round());
    for (int q = 0; q < quadruples; ++q) {
        std::vector<Assignment> U(pick_size(rng));
        for (auto& a : U) a = {pick_v(rng), pick_c(rng)};
        auto split = [&](std::vector<Assignment>& A, std::vector<Assignment>& B) {
            for (const auto& a : U) {
                int side = pick_side(rng);
                if (side != 1) A.push_back(a);
                if (side != 0) B.push_back(a);
            }
        };
        std::vector<Assignment> S1, S2, S3, S4;
        split(S1, S2);
        split(S3, S4);
        double lhs = s.vec(S1).dot(s.vec(S2));
        double rhs = s.vec(S3).dot(s.vec(S4));
        r.consistency = std::max(r.consistency, std::abs(lhs - rhs));
    }
    return r;
}

StrictVector3Coloring extract_vector3(const SosSolution& s, double tol) {
    SosResiduals r = sos_residuals(s, 0, 0);
    auto check = [&](double value, const char* family) {
        if (value > tol)
            throw PreconditionError(std::string("SoS residual too large in family: ") + family + " (" +
                                    std::to_string(value) + ")");
    };
    check(r.empty_norm, "empty-set norm");
    check(r.sum_identity, "color sum identity");
    check(r.same_vertex, "same-vertex orthogonality");
    check(r.edge_same_color, "edge same-color orthogonality");
    check(r.color_symmetry, "color symmetry");

    const double scale = 3.0 / std::sqrt(2.0);
    const Eigen::VectorXd v0 = s.empty_vector();
    StrictVector3Coloring out;
    out.vectors.resize(s.n(), s.dimension());
    for (int i = 0; i < s.n(); ++i)
        out.vectors.row(i) = (scale * (s.vec({{i, kRed}}) - v0 / 3.0)).transpose();
    return out;
}

GramFactor gram_factor(const Eigen::MatrixXd& gram, double rank_tol) {
    if (gram.rows() != gram.cols()) throw PreconditionError("gram matrix must be square");
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, gram.cwiseAbs().maxCoeff()))
        throw PreconditionError("gram matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const Eigen::VectorXd& lam = es.eigenvalues();
    if (lam.size() > 0 && lam.minCoeff() < -rank_tol)
        throw NotPsdError("matrix has eigenvalue " + std::to_string(lam.minCoeff()) + " below -rank_tol");
    std::vector<int> keep;
    for (int k = 0; k < lam.size(); ++k)
        if (lam[k] > rank_tol) keep.push_back(k);
    GramFactor f;
    f.vectors.resize(gram.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        f.vectors.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]) * std::sqrt(lam[keep[c]]);
    f.reconstruction_error = (f.vectors * f.vectors.transpose() - gram).cwiseAbs().maxCoeff();
    return f;
}

namespace {

Eigen::MatrixXd psd_project(const Eigen::MatrixXd& X) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd unit_diagonal(const Eigen::MatrixXd& X) {
    Eigen::VectorXd d = X.diagonal().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    return d.asDiagonal() * X * d.asDiagonal();
}

double edge_violation(const Graph& g, const Eigen::MatrixXd& X, double bound) {
    double worst = -std::numeric_limits<double>::infinity();
    for (auto [i, j] : g.edges()) worst = std::max(worst, X(i, j) - bound);
    return g.edge_count() == 0 ? 0.0 : std::max(0.0, worst);
}

}  // namespace

namespace {

// Squared hinge penalty over edges above the bound; fills the Euclidean gradient.
double edge_penalty(const std::vector<Edge>& edges, const Eigen::MatrixXd& V, double bound,
                    Eigen::MatrixXd* grad) {
    double f = 0;
    if (grad) grad->setZero(V.rows(), V.cols());
    for (auto [i, j] : edges) {
        const double h = V.row(i).dot(V.row(j)) - bound;
        if (h <= 0) continue;
        f += h * h;
        if (grad) {
            grad->row(i) += 2 * h * V.row(j);
            grad->row(j) += 2 * h * V.row(i);
        }
    }
    return f;
}

void normalize_rows(Eigen::MatrixXd& V) {
    for (Eigen::Index i = 0; i < V.rows(); ++i) {
        const double nr = V.row(i).norm();
        if (nr > 0) V.row(i) /= nr;
    }
}

}  // namespace

SdpResult solve_vector_coloring_sdp(const Graph& g, double kappa, double tol, int max_iter,
                                    std::uint64_t seed) {
    if (g.n() == 0) throw PreconditionError("SDP needs a nonempty graph");
    if (!(kappa >= 2.0)) throw PreconditionError("kappa must be >= 2");
    const int n = g.n();
    const double bound = -1.0 / (kappa - 1.0);
    const auto edges = g.edges();

    // Phase 1: low-rank factorization, Riemannian gradient steps on the sphere
    // product with Armijo backtracking. The rank covers the Barvinok-Pataki bound.
    const int rank = std::min(n, std::max(3, static_cast<int>(std::ceil(std::sqrt(2.0 * (n + edges.size())))) + 1));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd V(n, rank);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < rank; ++k) V(i, k) = nd(rng);
    normalize_rows(V);

    SdpResult best;
    auto consider = [&](const Eigen::MatrixXd& vectors) {
        double viol = edge_violation(g, vectors * vectors.transpose(), bound);
        if (best.vectors.size() == 0 || viol < best.max_edge_violation) {
            best.vectors = vectors;
            best.max_edge_violation = viol;
        }
        return viol;
    };

    Eigen::MatrixXd grad;
    double f = edge_penalty(edges, V, bound, &grad);
    double eta = 0.1;
    int it = 0;
    for (; it < max_iter && consider(V) > tol; ++it) {
        for (int i = 0; i < n; ++i) grad.row(i) -= grad.row(i).dot(V.row(i)) * V.row(i);
        const double g2 = grad.squaredNorm();
        if (g2 == 0) break;
        bool moved = false;
        while (eta > 1e-14) {
            Eigen::MatrixXd W = V - eta * grad;
            normalize_rows(W);
            if (edge_penalty(edges, W, bound, nullptr) <= f - 1e-4 * eta * g2) {
                V = std::move(W);
                eta *= 1.5;
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!moved) break;
        f = edge_penalty(edges, V, bound, &grad);
    }
    best.iters = it;

    // Phase 2: alternating projections from the phase-1 Gram matrix. Tight
    // instances (a strict coloring is the only solution) converge faster here.
    if (best.max_edge_violation > tol) {
        Eigen::MatrixXd X = best.vectors * best.vectors.transpose();
        for (int k = 0; k < max_iter; ++k, ++best.iters) {
            for (auto [i, j] : edges)
                if (X(i, j) > bound) X(i, j) = X(j, i) = bound;
            X.diagonal().setOnes();
            X = psd_project(X);
            Eigen::MatrixXd N = unit_diagonal(X);
            if (edge_violation(g, N, bound) >= best.max_edge_violation) continue;
            GramFactor fct = gram_factor(psd_project(N), 1e-12);
            normalize_rows(fct.vectors);
            if (consider(fct.vectors) <= tol) break;
        }
    }
    best.converged = best.max_edge_violation <= tol;
    return best;
}

}  // namespace sdpcolor
