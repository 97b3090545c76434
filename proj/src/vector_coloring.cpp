#include "sdpcolor/vector_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sdpcolor/error.hpp"

namespace sdpcolor {

VectorColoring from_strict(const StrictVector3Coloring& s) { return from_vectors(s.vectors, 3.0); }

VectorColoring from_vectors(const Eigen::MatrixXd& vectors, double kappa) {
    VectorColoring vc;
    vc.vertices.resize(vectors.rows());
    std::iota(vc.vertices.begin(), vc.vertices.end(), 0);
    vc.vectors = vectors;
    vc.kappa = kappa;
    return vc;
}

VectorColoring restrict_to(const VectorColoring& vc, std::span<const int> subset) {
    std::vector<int> pos;
    for (int k = 0; k < vc.size(); ++k) {
        int v = vc.vertices[k];
        if (v >= static_cast<int>(pos.size())) pos.resize(v + 1, -1);
        pos[v] = k;
    }
    VectorColoring out;
    out.kappa = vc.kappa;
    out.vectors.resize(static_cast<Eigen::Index>(subset.size()), vc.dim());
    for (int v : subset) {
        if (v >= static_cast<int>(pos.size()) || pos[v] < 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is not covered by the coloring");
        out.vectors.row(static_cast<Eigen::Index>(out.vertices.size())) = vc.vectors.row(pos[v]);
        out.vertices.push_back(v);
    }
    return out;
}

VectorColoring pad_columns(const VectorColoring& vc, int dim) {
    if (dim < vc.dim()) throw PreconditionError("cannot pad to a smaller dimension");
    VectorColoring out = vc;
    out.vectors = Eigen::MatrixXd::Zero(vc.size(), dim);
    out.vectors.leftCols(vc.dim()) = vc.vectors;
    return out;
}

ProjectionPair project_orth(const Eigen::VectorXd& vi, const Eigen::VectorXd& vj) {
    const double t = vi.dot(vj);
    if (std::abs(t) >= 1.0 - 1e-9) throw DegenerateError("projection of (anti)parallel vectors");
    Eigen::VectorXd r = vj - t * vi;
    r /= r.norm();
    return {vi, vj, t, r};
}

Eigen::VectorXd orth_unit(const Eigen::VectorXd& vi, const Eigen::VectorXd& vj) {
    return project_orth(vi, vj).residual;
}

double strict_dot(const SosSolution& s, int i, int j) {
    const double pij = s.joint({{i, kRed}, {j, kRed}});
    const double pi = s.joint({{i, kRed}});
    const double pj = s.joint({{j, kRed}});
    return 4.5 * (pij - pi / 3 - pj / 3 + 1.0 / 9);
}

double negative_kappa(double t) { return (3 - 6 * t) / (1 - 4 * t); }
double negative_bound(double t) { return -(1 - 4 * t) / (2 - 2 * t); }
double positive_kappa(double t) { return (4 + 8 * t) / (1 + 8 * t); }
double positive_bound(double t) { return -(1 + 8 * t) / 3; }
double combinatorial_kappa(double eps) { return (5 - 12 * eps) / (2 - 8 * eps); }
double combinatorial_bound(double eps) { return -(2 - 8 * eps) / (3 - 4 * eps); }

namespace {

template <class F>
VectorColoring build(const std::vector<int>& targets, double kappa, F&& make) {
    VectorColoring vc;
    vc.kappa = kappa;
    std::vector<Eigen::VectorXd> rows;
    for (int j : targets) {
        Eigen::VectorXd u = make(j);
        double nr = u.norm();
        if (nr < 1e-12) {
            vc.excluded.push_back(j);
            continue;
        }
        rows.push_back(u / nr);
        vc.vertices.push_back(j);
    }
    vc.vectors.resize(static_cast<Eigen::Index>(rows.size()),
                      rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t k = 0; k < rows.size(); ++k) vc.vectors.row(static_cast<Eigen::Index>(k)) = rows[k];
    return vc;
}

void require_round3(const SosSolution& s) {
    if (s.round() < 3) throw UnsupportedRoundError("conditioned colorings need an SoS round of at least 3");
}

std::vector<int> sorted_unique(std::span<const int> v) {
    std::vector<int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

VectorColoring conditioned_coloring_negative(const SosSolution& s, int i, double t,
                                             std::span<const int> targets, double tol) {
    require_round3(s);
    if (!(t <= 0)) throw PreconditionError("negative conditioning needs t <= 0");
    auto tg = sorted_unique(targets);
    std::vector<int> bad;
    for (int j : tg)
        if (j == i || strict_dot(s, i, j) > t + tol) bad.push_back(j);
    if (!bad.empty()) {
        std::string msg = "targets violate v_i.v_j <= t:";
        for (int j : bad) msg += " " + std::to_string(j);
        throw PreconditionError(msg);
    }
    return build(tg, negative_kappa(t), [&](int j) -> Eigen::VectorXd {
        return s.vec({{i, kRed}, {j, kGreen}}) - s.vec({{i, kRed}, {j, kBlue}});
    });
}

std::pair<std::vector<int>, VectorColoring> combinatorial_52_coloring(const SosSolution& s,
                                                                      double eps) {
    if (!(eps > 0 && eps < 0.25)) throw PreconditionError("epsilon must lie in (0, 1/4)");
    std::vector<double> red(s.n());
    double total = 0;
    for (int i = 0; i < s.n(); ++i) total += red[i] = s.joint({{i, kRed}});
    if (total > s.n() / 4.0 + 1e-12)
        throw PreconditionError("sum of red marginals exceeds n/4");
    std::vector<int> A;
    for (int i = 0; i < s.n(); ++i)
        if (red[i] <= 0.25 + eps) A.push_back(i);
    VectorColoring vc = build(A, combinatorial_kappa(eps), [&](int j) -> Eigen::VectorXd {
        return s.vec({{j, kGreen}}) - s.vec({{j, kBlue}});
    });
    return {A, vc};
}

VectorColoring conditioned_coloring_positive(const SosSolution& s, int i, double t,
                                             std::span<const int> targets, double tol) {
    require_round3(s);
    if (!(t >= 1.0 / 16 - 1e-12 && t <= 0.25 + 1e-12))
        throw PreconditionError("positive conditioning needs t in [1/16, 1/4]");
    auto tg = sorted_unique(targets);
    std::vector<int> bad;
    for (int j : tg)
        if (j == i || strict_dot(s, i, j) < t - tol) bad.push_back(j);
    if (!bad.empty()) {
        std::string msg = "targets violate v_i.v_j >= t:";
        for (int j : bad) msg += " " + std::to_string(j);
        throw PreconditionError(msg);
    }
    const double r3 = std::sqrt(3.0);
    return build(tg, positive_kappa(t), [&](int j) -> Eigen::VectorXd {
        return r3 * (s.vec({{i, kRed}, {j, kRed}}) - s.vec({{i, kRed}, {j, kGreen}}) -
                     s.vec({{i, kRed}, {j, kBlue}}));
    });
}

ColoringReport validate_vector_coloring(const Graph& g, const VectorColoring& vc, double tol) {
    ColoringReport rep;
    rep.bound = vc.edge_bound();
    std::vector<int> pos(g.n(), -1);
    for (int k = 0; k < vc.size(); ++k) {
        if (vc.vertices[k] < 0 || vc.vertices[k] >= g.n())
            throw PreconditionError("coloring vertex outside the graph");
        pos[vc.vertices[k]] = k;
        rep.max_norm_residual =
            std::max(rep.max_norm_residual, std::abs(vc.vectors.row(k).norm() - 1.0));
    }
    for (int k = 0; k < vc.size(); ++k) {
        int a = vc.vertices[k];
        for (int b : g.neighbors(a)) {
            if (b <= a || pos[b] < 0) continue;
            double ip = vc.vectors.row(k).dot(vc.vectors.row(pos[b]));
            if (ip > rep.max_edge_ip || rep.worst_edge.first < 0) {
                rep.max_edge_ip = ip;
                rep.worst_edge = {a, b};
            }
        }
    }
    rep.slack = rep.bound - rep.max_edge_ip;
    rep.pass = rep.max_edge_ip <= rep.bound + tol && rep.max_norm_residual <= std::max(tol, 1e-9);
    return rep;
}

}  // namespace sdpcolor
