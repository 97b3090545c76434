#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "sdpcolor/params.hpp"

using namespace sdpcolor::params;
using doctest::Approx;

TEST_SUITE("params") {
TEST_CASE("closed forms at c = c' = 0") {
    CHECK(eta0(0).value == Approx(9 / std::sqrt(15.0)).epsilon(1e-8));
    CHECK(lambda0(0, 0).value == Approx(std::sqrt(7.0)).epsilon(1e-6));
    ParamPoint p = exponents(0, 0);
    CHECK(p.f_delta == Approx(1.8).epsilon(1e-6));
    CHECK(p.g_delta == Approx(32.0 / 15).epsilon(1e-6));
}

TEST_CASE("reference point") {
    ParamPoint p = exponents(kDefaultC, kDefaultCPrime);
    CHECK(p.eta0 == Approx(2.00357904293).epsilon(1e-9));
    CHECK(p.lambda0 == Approx(2.19560037082).epsilon(1e-9));
    CHECK(p.f_n == Approx(0.804610399503).epsilon(1e-9));
    CHECK(p.g_n == Approx(0.804610283295).epsilon(1e-9));
    CHECK(p.coloring_exponent == Approx(0.195389881262).epsilon(1e-9));
    CHECK(p.target == Approx(0.8046101187).epsilon(1e-9));
    CHECK(p.n_exponent == std::min(p.f_n, p.g_n));
    CHECK(p.margin() > 0);
}

TEST_CASE("helper exponents") {
    const double c = 0.04;
    CHECK(degree_to_n(c) == Approx((3 + 3 * c) / (5 + 3 * c)));
    CHECK(progress_target(c) == Approx((4 + 3 * c) / (5 + 3 * c)));
    CHECK(progress_target(c) + coloring_exponent(c) == Approx(1.0));
    auto ls = linspace(0.03, 0.045, 16);
    REQUIRE(ls.size() == 16);
    CHECK(ls.front() == 0.03);
    CHECK(ls.back() == Approx(0.045));
    CHECK(ls[1] - ls[0] == Approx(0.001));
}

TEST_CASE("integrands are positive on the sampled range") {
    for (double a = -0.5; a <= 0.99; a += 0.1) CHECK(eta_integrand(a, kDefaultC) > 0);
}

TEST_CASE("optimizer finds a feasible point near the reference") {
    auto r = optimize(linspace(0.030, 0.045, 16), linspace(0.015, 0.035, 21), 60);
    CHECK(r.per_c.size() == 16);
    CHECK(r.best.margin() >= 0);
    CHECK(r.best.c == Approx(0.039).epsilon(0.03));
    CHECK(std::abs(r.refined_c - kDefaultC) < 1e-3);
}

TEST_CASE("csv rows") {
    std::ostringstream out;
    write_csv_header(out);
    write_csv_row(out, exponents(kDefaultC, kDefaultCPrime));
    std::string s = out.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 2);
}
}
