#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/vector_coloring.hpp"

using namespace sdpcolor;
using doctest::Approx;

namespace {

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

double worst_edge(const Graph& g, const VectorColoring& vc) {
    return validate_vector_coloring(g, vc, 1e-8).max_edge_ip;
}

// Mixture on i=0, j=1, l=2 with the single edge {1,2} placing both dots at t.
SosSolution tight_mixture(double t) {
    double x = (1 + 2 * t) / 3;
    ColoringMixture m;
    m.colorings = {{0, 0, 1}, {0, 1, 0}, {0, 1, 2}};
    m.weights = {x, x, 1 - 2 * x};
    Graph g(3, {{1, 2}});
    return SosSolution(g, symmetrize(m), 3);
}

}  // namespace

TEST_SUITE("vector-coloring") {
TEST_CASE("projection examples") {
    ProjectionPair p = project_orth(vec2(1, 0), vec2(0, 1));
    CHECK((p.residual - vec2(0, 1)).norm() < 1e-12);
    Eigen::VectorXd vi = vec2(1, 0), vj = vec2(0.6, 0.8);
    Eigen::VectorXd vij = orth_unit(vi, vj), vji = orth_unit(vj, vi);
    CHECK((vij - vec2(0, 1)).norm() < 1e-12);
    CHECK((vji - vec2(0.8, -0.6)).norm() < 1e-12);
    CHECK((0.8 * vj - 0.6 * vji - vij).norm() < 1e-12);
    CHECK_THROWS_AS(project_orth(vi, vi), DegenerateError);
    CHECK_THROWS_AS(project_orth(vi, -vi), DegenerateError);
}

TEST_CASE("strict edge decomposes with coefficients -1/2 and sqrt3/2") {
    Eigen::VectorXd vi = vec2(1, 0), vj = vec2(-0.5, std::sqrt(3.0) / 2);
    ProjectionPair p = project_orth(vi, vj);
    CHECK((vj - (-0.5 * vi + std::sqrt(3.0) / 2 * p.residual)).norm() < 1e-12);
}

TEST_CASE("kappa formulas") {
    CHECK(negative_kappa(0) == Approx(3));
    CHECK(negative_kappa(-0.125) == Approx(2.5));
    CHECK(negative_kappa(-0.5) == Approx(2));
    CHECK(positive_kappa(0.25) == Approx(2));
    CHECK(positive_kappa(1.0 / 16) == Approx(3));
    CHECK(positive_bound(0.25) == Approx(-1));
    CHECK(combinatorial_bound(0.0) == Approx(-2.0 / 3));
    CHECK(std::abs(combinatorial_bound(0.25 - 1e-12)) < 1e-10);
}

TEST_CASE("validation examples") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    Eigen::MatrixXd simplex(3, 2);
    simplex << 1, 0, -0.5, std::sqrt(3.0) / 2, -0.5, -std::sqrt(3.0) / 2;
    CHECK(validate_vector_coloring(k3, from_vectors(simplex, 3.0), 1e-9).pass);
    ColoringReport bad = validate_vector_coloring(k3, from_vectors(simplex, 2.5), 1e-9);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_edge_ip == Approx(-0.5));
    Graph k2(2, {{0, 1}});
    Eigen::MatrixXd anti(2, 1);
    anti << 1, -1;
    ColoringReport r = validate_vector_coloring(k2, from_vectors(anti, 2.0), 1e-12);
    CHECK(r.pass);
    CHECK(r.slack == Approx(0.0));
}

TEST_CASE("negative conditioning on the planted simplex gives a 2-coloring") {
    auto inst = fixtures::planted(45, 6, 2);
    SosSolution s(inst.graph, symmetrize(single_coloring(inst.planted)), 3);
    int i = 0;
    std::vector<int> targets;
    for (int v = 0; v < 45; ++v)
        if (inst.planted[v] != inst.planted[i]) targets.push_back(v);
    VectorColoring vc = conditioned_coloring_negative(s, i, -0.5, targets);
    CHECK(vc.kappa == Approx(2));
    int cross = 0;
    for (auto [a, b] : inst.graph.edges()) {
        auto ia = std::find(vc.vertices.begin(), vc.vertices.end(), a);
        auto ib = std::find(vc.vertices.begin(), vc.vertices.end(), b);
        if (ia == vc.vertices.end() || ib == vc.vertices.end()) continue;
        ++cross;
        CHECK(vc.vectors.row(ia - vc.vertices.begin()).dot(vc.vectors.row(ib - vc.vertices.begin())) ==
              Approx(-1).epsilon(1e-8));
    }
    CHECK(cross > 0);
}

TEST_CASE("negative conditioning rejects violating targets") {
    auto inst = fixtures::planted(30, 4, 1);
    SosSolution s(inst.graph, symmetrize(single_coloring(inst.planted)), 3);
    std::vector<int> same;
    for (int v = 1; v < 30; ++v)
        if (inst.planted[v] == inst.planted[0]) same.push_back(v);
    CHECK_THROWS_AS(conditioned_coloring_negative(s, 0, -0.1, same), PreconditionError);
    SosSolution low(inst.graph, symmetrize(single_coloring(inst.planted)), 2);
    CHECK_THROWS_AS(conditioned_coloring_negative(low, 0, -0.5, std::vector<int>{}), PreconditionError);
}

TEST_CASE("constructions hold their bounds on random mixtures") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = fixtures::planted(30, 4, 100 + trial);
        auto m = fixtures::random_mixture(inst, 4, trial, true);
        SosSolution s(inst.graph, m, 3);
        StrictVector3Coloring v = extract_vector3(s);
        int i = static_cast<int>(rng() % 30);

        double tn = -0.5 * U(rng);
        std::vector<int> neg;
        for (int j = 0; j < 30; ++j)
            if (j != i && v.vectors.row(i).dot(v.vectors.row(j)) <= tn) neg.push_back(j);
        VectorColoring a = conditioned_coloring_negative(s, i, tn, neg);
        CHECK(worst_edge(inst.graph, a) <= negative_bound(tn) + 1e-8);
        for (int k = 0; k < a.size(); ++k) CHECK(a.vectors.row(k).norm() == Approx(1.0).epsilon(1e-9));

        double tp = 1.0 / 16 + (0.25 - 1.0 / 16) * U(rng);
        std::vector<int> pos;
        for (int j = 0; j < 30; ++j)
            if (j != i && v.vectors.row(i).dot(v.vectors.row(j)) >= tp) pos.push_back(j);
        VectorColoring b = conditioned_coloring_positive(s, i, tp, pos);
        CHECK(worst_edge(inst.graph, b) <= positive_bound(tp) + 1e-8);
        for (int k = 0; k < b.size(); ++k) CHECK(b.vectors.row(k).norm() == Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("positive conditioning at t = 1/4 yields antipodal edges") {
    auto inst = fixtures::planted(36, 5, 4);
    auto m = fixtures::random_mixture(inst, 3, 9, true);
    SosSolution mixed(inst.graph, m, 3);
    StrictVector3Coloring v = extract_vector3(mixed);
    for (int i = 0; i < 36; ++i) {
        std::vector<int> tg;
        for (int j = 0; j < 36; ++j)
            if (j != i && v.vectors.row(i).dot(v.vectors.row(j)) >= 0.25 - 1e-12) tg.push_back(j);
        VectorColoring vc = conditioned_coloring_positive(mixed, i, 0.25, tg, 1e-9);
        CHECK(vc.kappa == Approx(2));
        ColoringReport r = validate_vector_coloring(inst.graph, vc, 1e-8);
        if (r.worst_edge.first >= 0) CHECK(r.max_edge_ip == Approx(-1).epsilon(1e-8));
    }
}

TEST_CASE("tightness of the negative bound") {
    for (double t : {0.0, -0.1, -0.25, -0.4}) {
        SosSolution s = tight_mixture(t);
        CHECK(strict_dot(s, 0, 1) == Approx(t).epsilon(1e-12));
        VectorColoring vc = conditioned_coloring_negative(s, 0, t, std::vector<int>{1, 2});
        CHECK(vc.vectors.row(0).dot(vc.vectors.row(1)) == Approx(negative_bound(t)).epsilon(1e-6));
    }
}

TEST_CASE("exchange identity on mixtures") {
    auto inst = fixtures::planted(24, 4, 8);
    auto m = fixtures::random_mixture(inst, 4, 3, true);
    SosSolution s(inst.graph, m, 3);
    for (int i = 0; i < 24; i += 5)
        for (auto [j, l] : inst.graph.edges()) {
            if (j == i || l == i) continue;
            double lhs = s.joint({{i, kRed}, {j, kGreen}, {l, kBlue}}) + s.joint({{i, kRed}, {j, kBlue}, {l, kGreen}});
            double rhs = 1.0 / 3 - s.joint({{i, kRed}, {j, kRed}}) - s.joint({{i, kRed}, {l, kRed}});
            CHECK(lhs == Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("combinatorial construction") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<std::vector<int>> cols;
    for (int k = 0; k < 4; ++k)
        for (int swap = 0; swap < 2; ++swap) {
            const int pat[4] = {kRed, swap ? kBlue : kGreen, swap ? kGreen : kBlue, swap ? kBlue : kGreen};
            std::vector<int> c(4);
            for (int v = 0; v < 4; ++v) c[v] = pat[(v + k) % 4];
            cols.push_back(c);
        }
    SosSolution s(c4, uniform_mixture(cols), 3);
    for (double eps : {0.01, 0.1, 0.2}) {
        auto [A, vc] = combinatorial_52_coloring(s, eps);
        CHECK(A.size() == 4);
        CHECK(worst_edge(c4, vc) == Approx(-2.0 / 3).epsilon(1e-9));
        CHECK(worst_edge(c4, vc) <= combinatorial_bound(eps) + 1e-8);
    }

    // no vertex ever red: a two-coloring mixture
    SosSolution two(c4, uniform_mixture({{1, 2, 1, 2}, {2, 1, 2, 1}}), 3);
    auto [A2, vc2] = combinatorial_52_coloring(two, 0.05);
    CHECK(A2.size() == 4);
    CHECK(worst_edge(c4, vc2) == Approx(-1));

    // too much red violates the added constraint
    SosSolution red(c4, uniform_mixture({{0, 1, 0, 1}}), 3);
    CHECK_THROWS_AS(combinatorial_52_coloring(red, 0.05), PreconditionError);
}
}
