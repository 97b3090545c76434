#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/io.hpp"

using namespace sdpcolor;

TEST_SUITE("io") {
TEST_CASE("mixture round trip") {
    auto inst = fixtures::planted(20, 4, 1);
    auto m = fixtures::random_mixture(inst, 3, 2, false);
    auto back = io::mixture_from_json(io::to_json(m));
    CHECK(back.colorings == m.colorings);
    CHECK(back.weights == m.weights);
    CHECK_THROWS_AS(io::mixture_from_json(io::json::object()), PreconditionError);
}

TEST_CASE("vector coloring round trip") {
    Eigen::MatrixXd v(3, 2);
    v << 1, 0, -0.5, std::sqrt(0.75), -0.5, -std::sqrt(0.75);
    VectorColoring vc = from_vectors(v, 3);
    auto back = io::vector_coloring_from_json(io::json::parse(io::to_json(vc).dump()));
    CHECK(back.vertices == vc.vertices);
    CHECK((back.vectors - vc.vectors).norm() == 0);
    CHECK(back.kappa == vc.kappa);
}

TEST_CASE("packing round trip and provenance") {
    PackingMeasure p = explicit_packing({0.1, 0.2});
    p.s = 1.5;
    p.provenance = Provenance::KmsPrime;
    auto back = io::packing_from_json(io::to_json(p));
    CHECK(back.weights == p.weights);
    CHECK(back.provenance == Provenance::KmsPrime);
    io::json bad = io::to_json(p);
    bad["weights"] = {0.1};
    CHECK_THROWS_AS(io::packing_from_json(bad), PreconditionError);
}

TEST_CASE("experiment config round trip and defaults") {
    ExperimentConfig c;
    c.n = 77;
    c.degrees = {5, 9};
    c.seeds = {3, 4};
    c.policy = ThresholdPolicy::Kappa;
    c.slack.eps_dot = 0.1;
    auto back = io::experiment_from_json(io::to_json(c));
    CHECK(io::to_json(back) == io::to_json(c));
    auto partial = io::experiment_from_json(io::json{{"n", 50}});
    CHECK(partial.n == 50);
    CHECK(partial.degrees == ExperimentConfig{}.degrees);
    CHECK_THROWS_AS(io::experiment_from_json(io::json{{"n", -1}}), PreconditionError);
}

TEST_CASE("event round trip") {
    ProgressEvent e;
    e.kind = EventKind::Wigderson2Color;
    e.vertices = {1, 2};
    e.sides = {0, 1};
    e.center = 0;
    e.first_color = 3;
    e.colors_consumed = 2;
    auto back = io::event_from_json(io::to_json(e));
    CHECK(back.vertices == e.vertices);
    CHECK(back.sides == e.sides);
    CHECK(back.center == 0);
    CHECK(back.kind == e.kind);
}

TEST_CASE("files") {
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/x.json"), PreconditionError);
    auto path = (std::filesystem::temp_directory_path() / "sdpcolor_io_test.json").string();
    io::write_text_file(path, "{\"a\": 1}");
    CHECK(io::read_json_file(path).at("a") == 1);
    io::write_text_file(path, "{not json");
    CHECK_THROWS_AS(io::read_json_file(path), PreconditionError);
    std::remove(path.c_str());
}
}
