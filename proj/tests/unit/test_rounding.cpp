#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/covers.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/rounding.hpp"

using namespace sdpcolor;
using doctest::Approx;

namespace {

VectorColoring planted_vc(const PlantedInstance& inst) {
    SosSolution s(inst.graph, symmetrize(single_coloring(inst.planted)), 3);
    return from_strict(extract_vector3(s));
}

VectorColoring edge_vc(double dot) {
    Eigen::MatrixXd v(2, 2);
    v << 1, 0, dot, std::sqrt(1 - dot * dot);
    return from_vectors(v, 3.0);
}

}  // namespace

TEST_SUITE("rounding") {
TEST_CASE("threshold oracles") {
    CHECK(kms_threshold(3, 1000).t == Approx(2.145966026).epsilon(1e-9));
    CHECK(inefficient_threshold(0, 1000000).t == Approx(2.3263478740).epsilon(1e-9));
    ThresholdParams p = inefficient_threshold(0.0393241, 1000000);
    CHECK(p.t == Approx(2.26023164).epsilon(1e-8));
    CHECK(gauss::tail(p.t) == Approx(0.0119034).epsilon(1e-5));
    CHECK(p.origin == ThresholdOrigin::Inefficient);
    CHECK_THROWS_AS(kms_threshold(3, 1), DegenerateError);
    CHECK_THROWS_AS(inefficient_threshold(0, 2), DegenerateError);
}

TEST_CASE("KMS returns independent sets and is seed-deterministic") {
    auto inst = fixtures::planted(400, 15, 21);
    VectorColoring vc = planted_vc(inst);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RoundingOutcome r = kms_round(inst.graph, vc, 3.0, seed);
        CHECK(is_independent_set(inst.graph, r.returned));
        CHECK(r.returned.size() + r.removed.size() == r.S.size());
        for (auto [a, b] : r.M) {
            CHECK(std::binary_search(r.S.begin(), r.S.end(), a));
            CHECK(std::binary_search(r.S.begin(), r.S.end(), b));
        }
    }
    CHECK(kms_round(inst.graph, vc, 3.0, 5).returned == kms_round(inst.graph, vc, 3.0, 5).returned);
}

TEST_CASE("KMS' with an explicit threshold") {
    auto inst = fixtures::planted(300, 10, 3);
    VectorColoring vc = planted_vc(inst);
    RoundingOutcome r = kms_prime_round(inst.graph, vc, 1.0, 9);
    CHECK(r.t == 1.0);
    CHECK(is_independent_set(inst.graph, r.returned));
    RoundingOutcome none = kms_prime_round(inst.graph, vc, 50.0, 9);
    CHECK(none.S.empty());
    CHECK(none.returned.empty());
}

TEST_CASE("single edge at t = 0 is removed with probability 1/3") {
    Graph g(2, {{0, 1}});
    VectorColoring vc = edge_vc(-0.5);
    FailureReport fr = estimate_failure(g, vc, 0.0, 40000, 3);
    REQUIRE(fr.p.size() == 2);
    for (const auto& e : fr.p) {
        Estimate w = wilson(e.successes, e.trials, 3.29);
        CHECK(w.lo <= 1.0 / 3);
        CHECK(w.hi >= 1.0 / 3);
    }
    CHECK_FALSE(fr.fails);
    CHECK_THROWS_AS(estimate_failure(g, vc, 0.0, 50, 3), PreconditionError);
}

TEST_CASE("antipodal neighbour is never matched at t > 0") {
    Graph g(2, {{0, 1}});
    VectorColoring vc = edge_vc(-1.0);
    KmsPrimePacking p = packing_from_kms_prime(g, vc, 0, 0.5, 2000, 1);
    CHECK(p.mu.total() == 0.0);
    CHECK(p.p.p == 0.0);
}

TEST_CASE("forced selection in the runner") {
    Graph g(3, {{0, 1}, {1, 2}});
    Eigen::MatrixXd v(3, 2);
    v << 1, 0, -1, 0, 1, 0;
    VectorColoring vc = from_vectors(v, 2.0);
    KmsPrimeRunner run(g, vc, 0.5);
    Eigen::VectorXd r(2);
    r << -1, 0;  // only vertex 1 passes the threshold
    run.run(r, 1, 0);
    CHECK(std::find(run.selected().begin(), run.selected().end(), 0) != run.selected().end());
    CHECK(run.partner(0) == 1);
    CHECK(run.partner(2) == -1);
}
}
