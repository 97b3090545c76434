#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/pipeline.hpp"

using namespace sdpcolor;

TEST_SUITE("pipeline") {
TEST_CASE("Wigderson step on a star") {
    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto ev = wigderson_dense_step(star, 3, 7);
    REQUIRE(ev.has_value());
    CHECK(ev->center == 0);
    CHECK(ev->vertices == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(ev->colors_consumed == 2);
    CHECK(ev->first_color == 7);
    CHECK(ev->kind == EventKind::Wigderson2Color);
    CHECK_FALSE(wigderson_dense_step(star, 6).has_value());
}

TEST_CASE("Wigderson step 2-colors a path neighbourhood") {
    // center 0 adjacent to the path 1-2-3-4
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    auto ev = wigderson_dense_step(g, 2);
    REQUIRE(ev.has_value());
    for (std::size_t a = 0; a < ev->vertices.size(); ++a)
        for (std::size_t b = 0; b < ev->vertices.size(); ++b)
            if (g.has_edge(ev->vertices[a], ev->vertices[b])) CHECK(ev->sides[a] != ev->sides[b]);
}

TEST_CASE("Wigderson step reports an odd cycle") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    try {
        wigderson_dense_step(k4, 2);
        FAIL("expected an odd cycle");
    } catch (const NotThreeColorableError& e) {
        const auto& cyc = e.odd_cycle;
        CHECK(cyc.size() % 2 == 1);
        for (std::size_t k = 0; k < cyc.size(); ++k)
            CHECK(k4.has_edge(cyc[k], cyc[(k + 1) % cyc.size()]));
    }
}

TEST_CASE("trivial graphs") {
    ColorConfig cfg;
    CHECK(color_graph(Graph(0, {}), cfg).colors == 0);
    auto r = color_graph(Graph(5, {}), cfg);
    CHECK(r.colors == 1);
    CHECK(r.events.size() == 1);
}

TEST_CASE("planted graphs are colored properly and replay matches") {
    for (std::uint64_t seed : {1, 2, 3}) {
        auto inst = fixtures::planted(300, 12, seed);
        ColorConfig cfg;
        cfg.seed = seed;
        auto r = color_graph(inst.graph, cfg, inst.planted);
        CHECK(r.assignment.is_proper(inst.graph));
        CHECK(r.assignment.colored_count() == inst.graph.n());
        CHECK(replay_events(inst.graph.n(), r.events).color == r.assignment.color);
        CHECK(r.colors == r.assignment.palette_size());
        CHECK(r.colors <= greedy_color_count(inst.graph) + 2);
    }
}

TEST_CASE("numeric SDP path on a small graph") {
    auto inst = fixtures::planted(40, 4, 9);
    ColorConfig cfg;
    auto r = color_graph(inst.graph, cfg);
    CHECK(r.assignment.is_proper(inst.graph));
    CHECK(r.assignment.colored_count() == inst.graph.n());
}

TEST_CASE("non-3-colorable input is rejected") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ColorConfig cfg;
    cfg.degree_threshold = 2;
    CHECK_THROWS_AS(color_graph(k4, cfg), NotThreeColorableError);
}

TEST_CASE("replay rejects recoloring") {
    ProgressEvent a, b;
    a.vertices = {0, 1};
    b.vertices = {1};
    b.first_color = 1;
    CHECK_THROWS_AS(replay_events(3, {a, b}), PreconditionError);
}

TEST_CASE("experiment output") {
    ExperimentConfig cfg;
    cfg.n = 120;
    cfg.degrees = {6, 10};
    cfg.seeds = {1, 2};
    cfg.draws = 3;
    cfg.context_samples = 100;
    cfg.dry_run = true;
    std::ostringstream dry;
    run_experiment(cfg, dry);
    auto header = experiment_header(cfg);
    CHECK(std::find(header.begin(), header.end(), "ms_kms") == header.end());
    const std::string ds = dry.str();
    CHECK(std::count(ds.begin(), ds.end(), '\n') == 1);

    cfg.dry_run = false;
    std::ostringstream a, b;
    run_experiment(cfg, a);
    run_experiment(cfg, b);
    CHECK(a.str() == b.str());
    const std::string as = a.str();
    CHECK(std::count(as.begin(), as.end(), '\n') == 5);

    cfg.timing = true;
    auto th = experiment_header(cfg);
    CHECK(std::find(th.begin(), th.end(), "ms_kms") != th.end());

    ExperimentConfig bad;
    bad.n = 0;
    CHECK_THROWS_AS(validate_experiment(bad), PreconditionError);
}

TEST_CASE("names round trip") {
    for (auto k : {EventKind::LargeIS, EventKind::SmallNbhd, EventKind::SameColor, EventKind::Wigderson2Color,
                   EventKind::Recurse})
        CHECK(event_kind_from_name(event_kind_name(k)) == k);
    CHECK(policy_from_name(policy_name(ThresholdPolicy::Kappa)) == ThresholdPolicy::Kappa);
    CHECK_THROWS(policy_from_name("nope"));
}
}
