#include <cmath>
#include <random>

#include "doctest.h"
#include "sdpcolor/error.hpp"
#include "sdpcolor/gaussian.hpp"
#include "sdpcolor/stats.hpp"
#include "sdpcolor/vector_coloring.hpp"

using namespace sdpcolor;
using doctest::Approx;

TEST_SUITE("gaussian") {
TEST_CASE("reference values") {
    CHECK(gauss::pdf(2.0) == Approx(0.05399096651).epsilon(1e-10));
    CHECK(gauss::tail(2.0) == Approx(0.02275013195).epsilon(1e-10));
    CHECK(gauss::quantile(0.01) == Approx(-2.32634787404).epsilon(1e-10));
    CHECK(gauss::inverse_mills(1.0) == Approx(1.525135276).epsilon(1e-9));
    CHECK(gauss::tail(37.0) > 0.0);
}

TEST_CASE("quantile inverts the tail on [-6, 6]") {
    for (double t = -6; t <= 6; t += 0.25) {
        // invert on the side where the probability carries full relative precision
        if (t <= 0)
            CHECK(gauss::quantile(gauss::cdf(t)) == Approx(t).epsilon(1e-9));
        else
            CHECK(gauss::tail_quantile(gauss::tail(t)) == Approx(t).epsilon(1e-9));
        CHECK(gauss::tail(t) + gauss::cdf(t) == Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(gauss::quantile(0.0), PreconditionError);
    CHECK_THROWS_AS(gauss::quantile(1.0), PreconditionError);
}

TEST_CASE("tail sandwich at t = 2") {
    const double t = 2;
    double lower = (1 / t - 1 / (t * t * t)) * gauss::pdf(t);
    double upper = gauss::pdf(t) / t;
    CHECK(lower == Approx(0.02024661244).epsilon(1e-9));
    CHECK(upper == Approx(0.02699548326).epsilon(1e-9));
    CHECK(lower < gauss::tail(t));
    CHECK(gauss::tail(t) < upper);
}

TEST_CASE("truncated tail draws stay above the threshold with the right mean") {
    std::mt19937_64 rng(4);
    double sum = 0;
    const int N = 20000;
    for (int k = 0; k < N; ++k) {
        double z = gauss::truncated_tail(1.0, rng);
        REQUIRE(z >= 1.0);
        sum += z;
    }
    CHECK(sum / N == Approx(gauss::inverse_mills(1.0)).epsilon(0.01));
    CHECK_THROWS(gauss::truncated_tail(9.0, rng));
}

TEST_CASE("conditional sampler respects the condition and leaves the orthogonal part standard") {
    Eigen::VectorXd v(3);
    v << 1, 2, 2;
    v /= 3;
    Eigen::VectorXd w(3);
    w << 2, -1, 0;
    w.normalize();
    gauss::ConditionalSampler s(v, 1.5);
    std::mt19937_64 rng(8);
    double m = 0, sq = 0;
    const int N = 20000;
    for (int k = 0; k < N; ++k) {
        Eigen::VectorXd r = s(rng);
        REQUIRE(r.dot(v) >= 1.5 - 1e-12);
        m += r.dot(w);
        sq += r.dot(w) * r.dot(w);
    }
    CHECK(std::abs(m / N) < 0.03);
    CHECK(sq / N == Approx(1.0).epsilon(0.04));
}

TEST_CASE("projection identity on random pairs") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 1000; ++k) {
        Eigen::VectorXd a = gauss::normal_vector(5, rng).normalized();
        Eigen::VectorXd b = gauss::normal_vector(5, rng).normalized();
        double t = a.dot(b);
        Eigen::VectorXd vij = orth_unit(a, b), vji = orth_unit(b, a);
        CHECK((std::sqrt(1 - t * t) * b - t * vji - vij).norm() < 1e-9);
    }
}
}

TEST_SUITE("stats") {
TEST_CASE("wilson interval") {
    Estimate e = wilson(50, 100);
    CHECK(e.p == Approx(0.5));
    CHECK(e.lo == Approx(0.4038).epsilon(1e-3));
    CHECK(e.hi == Approx(0.5962).epsilon(1e-3));
    Estimate z = wilson(0, 100);
    CHECK(z.lo == 0.0);
    CHECK(z.hi > 0.0);
}

TEST_CASE("sample streams depend only on master seed and count") {
    auto collect = [](std::uint64_t seed, long n) {
        std::vector<std::uint64_t> out;
        for_each_sample(seed, n, [&](std::mt19937_64& rng, long) { out.push_back(rng()); });
        return out;
    };
    auto a = collect(3, 3000), b = collect(3, 3000), c = collect(4, 3000);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}
}
