#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/sos.hpp"

using namespace sdpcolor;
using doctest::Approx;

TEST_SUITE("sos") {
TEST_CASE("mixture validation") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_NOTHROW(single_coloring({0, 1, 2}).validate(k3));
    CHECK_THROWS_AS(single_coloring({0, 1, 1}).validate(k3), PreconditionError);
    ColoringMixture bad = uniform_mixture({{0, 1, 2}, {1, 2, 0}});
    bad.weights[0] = 0.7;
    CHECK_THROWS_AS(bad.validate(k3), PreconditionError);
}

TEST_CASE("symmetrization yields six permutations with uniform color marginals") {
    ColoringMixture m = symmetrize(single_coloring({0, 1, 2}));
    CHECK(m.colorings.size() == 6);
    for (double w : m.weights) CHECK(w == Approx(1.0 / 6));
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    SosSolution s(k3, m, 3);
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) CHECK(s.vec({{i, c}}).squaredNorm() == Approx(1.0 / 3));
}

TEST_CASE("residuals vanish on random mixtures") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto inst = fixtures::planted(30, 4, seed);
        auto m = fixtures::random_mixture(inst, 3, seed, seed % 2 == 0);
        SosSolution s(inst.graph, m, 3);
        SosResiduals r = sos_residuals(s, 100, seed);
        CHECK(r.max_relaxation() < 1e-10);
        if (m.symmetrized) CHECK(r.color_symmetry < 1e-10);
    }
}

TEST_CASE("round limit is enforced") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    SosSolution s(k3, symmetrize(single_coloring({0, 1, 2})), 2);
    CHECK_NOTHROW(s.vec({{0, 0}, {1, 1}}));
    CHECK_THROWS_AS(s.vec({{0, 0}, {1, 1}, {2, 2}}), UnsupportedRoundError);
}

TEST_CASE("local probabilities and joints agree") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    SosSolution s(k3, symmetrize(single_coloring({0, 1, 2})), 3);
    CHECK(local_prob(s, {{0, 0}, {1, 1}}) == Approx(1.0 / 6));
    CHECK(local_prob(s, {{0, 0}, {1, 0}}) == Approx(0.0));
    CHECK(s.joint({{0, 0}, {1, 1}, {2, 2}}) == Approx(1.0 / 6));
}

TEST_CASE("strict vectors of the symmetrized planted coloring form a simplex") {
    auto inst = fixtures::planted(60, 6, 3);
    SosSolution s(inst.graph, symmetrize(single_coloring(inst.planted)), 3);
    StrictVector3Coloring v = extract_vector3(s);
    for (int i = 0; i < 60; ++i) CHECK(v.vectors.row(i).norm() == Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 60; ++i)
        for (int j = i + 1; j < 60; ++j) {
            double d = v.vectors.row(i).dot(v.vectors.row(j));
            CHECK(d == Approx(inst.planted[i] == inst.planted[j] ? 1.0 : -0.5).epsilon(1e-12));
        }
}

TEST_CASE("extraction rejects solutions without color symmetry") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    SosSolution s(k3, single_coloring({0, 1, 2}), 3);
    CHECK_THROWS_AS(extract_vector3(s), PreconditionError);
}

TEST_CASE("gram factorization") {
    Eigen::MatrixXd A(3, 2);
    A << 1, 0, 0.5, 0.5, -1, 2;
    GramFactor f = gram_factor(A * A.transpose());
    CHECK(f.vectors.cols() == 2);
    CHECK(f.reconstruction_error < 1e-12);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(gram_factor(bad), NotPsdError);
}

TEST_CASE("SDP: triangle reaches the simplex") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    SdpResult r = solve_vector_coloring_sdp(k3, 3.0);
    CHECK(r.converged);
    CHECK(r.max_edge_violation < 1e-7);
    for (int i = 0; i < 3; ++i) CHECK(r.vectors.row(i).norm() == Approx(1.0));
}

TEST_CASE("SDP: bipartite graphs with kappa 2") {
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    SdpResult r = solve_vector_coloring_sdp(c6, 2.0);
    CHECK(r.converged);
    CHECK(r.max_edge_violation < 1e-7);
    auto inst = fixtures::planted(24, 3, 5, {0.5, 0.5, 0.0});
    SdpResult r2 = solve_vector_coloring_sdp(inst.graph, 2.0);
    CHECK(r2.max_edge_violation < 1e-7);
}

TEST_CASE("SDP rejects bad kappa") {
    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(solve_vector_coloring_sdp(k2, 1.5), PreconditionError);
}
}
