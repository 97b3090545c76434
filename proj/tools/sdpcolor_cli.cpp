#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sdpcolor/covers.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/graph.hpp"
#include "sdpcolor/io.hpp"
#include "sdpcolor/params.hpp"
#include "sdpcolor/pipeline.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/vector_coloring.hpp"
#include "sdpcolor/walks.hpp"

using namespace sdpcolor;
using io::json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    long samples = 2000;
    std::string out;
    std::string format = "json";
    std::string config;
    double eps_dot = -1, mass_floor = -1, prune_r = -1, threshold_slack = 0;
};

Globals G;

void emit(const std::string& text) {
    if (G.out.empty())
        std::cout << text;
    else
        io::write_text_file(G.out, text);
}

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

SlackConfig slack() {
    SlackConfig s;
    if (!G.config.empty()) {
        json j = io::read_json_file(G.config);
        if (j.contains("slack")) s = io::slack_from_json(j.at("slack"));
    }
    s.seed = G.seed;
    s.samples = G.samples;
    if (G.eps_dot > 0) s.eps_dot = G.eps_dot;
    if (G.mass_floor > 0) s.mass_floor = G.mass_floor;
    if (G.prune_r > 0) s.prune_r = G.prune_r;
    s.threshold_slack = G.threshold_slack;
    validate_slack(s);
    return s;
}

// Strict coloring and SoS from the planted coloring stored in the graph file.
struct Planted {
    GraphFile file;
    std::shared_ptr<const SosSolution> sos;
    StrictVector3Coloring strict;
};

Planted load_planted(const std::string& path) {
    Planted p{read_graph_file(path), nullptr, {}};
    if (!p.file.planted) throw PreconditionError("graph file has no planted coloring (c lines)");
    p.sos = planted_sos(p.file.graph, *p.file.planted);
    p.strict = extract_vector3(*p.sos);
    return p;
}

VectorColoring load_vectors(const std::string& path) { return io::vector_coloring_from_json(io::read_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SDP-based coloring of 3-colorable graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", G.seed, "master seed");
    app.add_option("--samples", G.samples, "Monte Carlo samples");
    app.add_option("--out", G.out, "output path (default stdout)");
    app.add_option("--format", G.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--config", G.config, "JSON config mirroring ExperimentConfig");
    app.add_option("--slack-eps-dot", G.eps_dot, "inner-product window slack");
    app.add_option("--slack-mass-floor", G.mass_floor, "packing mass floor");
    app.add_option("--slack-prune-r", G.prune_r, "weighted prune threshold");
    app.add_option("--slack-threshold", G.threshold_slack, "additive two-step threshold slack");

    // generate
    auto* gen = app.add_subcommand("generate", "planted 3-colorable instance");
    int n = 300;
    double degree = 20, edge_p = -1;
    std::vector<double> weights{1.0 / 3, 1.0 / 3, 1.0 / 3};
    gen->add_option("-n,--n", n, "vertices");
    gen->add_option("-d,--degree", degree, "expected degree");
    gen->add_option("-p,--edge-prob", edge_p, "cross-class edge probability (overrides degree)");
    gen->add_option("--weights", weights, "class weights")->expected(3);

    // solve-sdp
    auto* sdp = app.add_subcommand("solve-sdp", "vector coloring from the SDP or a mixture");
    std::string graph_path, mixture_path, report_path;
    double kappa = 3;
    int max_iter = 5000;
    sdp->add_option("graph", graph_path, "graph file")->required();
    sdp->add_option("--mixture", mixture_path, "coloring mixture JSON; extracts strict vectors");
    sdp->add_option("--kappa", kappa, "target vector chromatic number");
    sdp->add_option("--max-iter", max_iter, "projection iterations");
    sdp->add_option("--report", report_path, "write the solver report here");

    // round
    auto* rnd = app.add_subcommand("round", "randomized rounding");
    std::string method, vectors_path;
    double t_explicit = -1;
    rnd->add_option("method", method, "kms or kms-prime")->required()->check(CLI::IsMember({"kms", "kms-prime"}));
    rnd->add_option("graph", graph_path, "graph file")->required();
    rnd->add_option("--vectors", vectors_path, "VectorColoring JSON (default: planted)");
    rnd->add_option("--t", t_explicit, "explicit threshold");
    double round_c = params::kDefaultC;
    rnd->add_option("--c", round_c, "inefficiency c for kms-prime (default the optimized value)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "failure, cover and packing estimates");
    std::string what;
    int vertex = 0;
    double s_thr = 2;
    ana->add_option("what", what, "failure, covers or packing")
        ->required()
        ->check(CLI::IsMember({"failure", "covers", "packing"}));
    ana->add_option("input", graph_path, "graph file (failure, packing) or vectors JSON (covers)")->required();
    ana->add_option("--vectors", vectors_path, "VectorColoring JSON (default: planted)");
    ana->add_option("--t", t_explicit, "KMS' threshold");
    ana->add_option("--vertex", vertex, "vertex for the packing");
    ana->add_option("--s", s_thr, "cover threshold");

    // walks
    auto* w2 = app.add_subcommand("walk2", "second-level pruning and extraction");
    std::string checkpoint_path;
    bool force = false;
    w2->add_option("graph", graph_path, "graph file with planted coloring")->required();
    w2->add_option("--checkpoint", checkpoint_path, "write the pruned context here");
    w2->add_flag("--force", force, "run even when KMS' does not fail");
    w2->add_option("--t", t_explicit, "threshold");
    auto* w3 = app.add_subcommand("walk3", "third-level extraction");
    w3->add_option("graph", graph_path, "graph file with planted coloring")->required();
    w3->add_flag("--force", force, "run even when KMS' does not fail");
    w3->add_option("--t", t_explicit, "threshold");

    // params
    auto* par = app.add_subcommand("params", "exponent calculator");
    double pc = params::kDefaultC, pcp = params::kDefaultCPrime;
    bool grid = false, optimize = false;
    par->add_option("--c", pc);
    par->add_option("--c-prime", pcp);
    par->add_flag("--grid", grid, "sweep c' over a grid for the given c");
    par->add_flag("--optimize", optimize, "grid-search the largest feasible c");

    // color
    auto* col = app.add_subcommand("color", "end-to-end coloring");
    col->add_option("graph", graph_path, "graph file")->required();
    bool ignore_planted = false;
    col->add_flag("--ignore-planted", ignore_planted, "do not use the planted coloring");

    // bench
    auto* bench = app.add_subcommand("bench", "experiment harness (CSV)");
    bool dry = false;
    bench->add_flag("--dry-run", dry, "header only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            const double w[3] = {weights[0], weights[1], weights[2]};
            double p = edge_p > 0 ? edge_p : edge_prob_for_degree(n, degree);
            auto inst = generate_planted(n, w, p, G.seed);
            std::ostringstream os;
            write_graph(os, inst.graph, &inst.planted);
            emit(os.str());
        } else if (*sdp) {
            GraphFile f = read_graph_file(graph_path);
            if (!mixture_path.empty()) {
                auto mix = io::mixture_from_json(io::read_json_file(mixture_path));
                SosSolution s(f.graph, mix, 3);
                emit_json(io::to_json(from_strict(extract_vector3(s))));
            } else {
                SdpResult r = solve_vector_coloring_sdp(f.graph, kappa, 1e-7, max_iter, G.seed);
                if (!report_path.empty()) io::write_text_file(report_path, io::to_json(r).dump(2) + "\n");
                else std::cerr << io::to_json(r).dump() << "\n";
                emit_json(io::to_json(from_vectors(r.vectors, kappa)));
            }
        } else if (*rnd) {
            GraphFile f = read_graph_file(graph_path);
            VectorColoring vc = vectors_path.empty() ? from_strict(load_planted(graph_path).strict)
                                                     : load_vectors(vectors_path);
            RoundingOutcome r;
            if (method == "kms") {
                r = t_explicit > 0 ? kms_round_at(f.graph, vc, t_explicit, G.seed)
                                   : kms_round(f.graph, vc, vc.kappa, G.seed);
            } else {
                double t = t_explicit > 0 ? t_explicit
                                          : choose_threshold(ThresholdPolicy::CInefficient,
                                                             round_c, vc.kappa,
                                                             f.graph.max_degree()).t;
                r = kms_prime_round(f.graph, vc, t, G.seed);
            }
            emit_json(io::to_json(r));
        } else if (*ana) {
            if (what == "covers") {
                VectorColoring X = load_vectors(graph_path);
                CoverEstimate ce = estimate_cover_prob(X.vectors, s_thr, G.samples, G.seed);
                PackingMeasure pk = greedy_packing(X.vectors, s_thr, G.samples, G.seed);
                emit_json({{"delta", ce.delta.p}, {"lo", ce.delta.lo}, {"hi", ce.delta.hi},
                           {"inefficiency", inefficiency(X.size(), s_thr)}, {"packing", io::to_json(pk)}});
            } else {
                GraphFile f = read_graph_file(graph_path);
                VectorColoring vc = vectors_path.empty() ? from_strict(load_planted(graph_path).strict)
                                                         : load_vectors(vectors_path);
                double t = t_explicit > 0 ? t_explicit
                                          : choose_threshold(ThresholdPolicy::CInefficient, params::kDefaultC,
                                                             vc.kappa, f.graph.max_degree()).t;
                if (what == "failure") {
                    FailureReport fr = estimate_failure(f.graph, vc, t, G.samples, G.seed);
                    if (G.format == "csv") {
                        std::ostringstream os;
                        os << "vertex,p,lo,hi\n";
                        for (std::size_t k = 0; k < fr.vertices.size(); ++k)
                            os << fr.vertices[k] << "," << fr.p[k].p << "," << fr.p[k].lo << "," << fr.p[k].hi << "\n";
                        emit(os.str());
                    } else {
                        json ps = json::array();
                        for (const auto& e : fr.p) ps.push_back(e.p);
                        emit_json({{"t", t}, {"vertices", fr.vertices}, {"p", ps},
                                   {"at_least_half", fr.at_least_half}, {"fails", fr.fails}});
                    }
                } else {
                    KmsPrimePacking pk = packing_from_kms_prime(f.graph, vc, vertex, t, G.samples, G.seed);
                    emit_json({{"vertex", pk.vertex}, {"p", pk.p.p}, {"packing", io::to_json(pk.mu)}});
                }
            }
        } else if (*w2 || *w3) {
            Planted p = load_planted(graph_path);
            const Graph& g = p.file.graph;
            SlackConfig sl = slack();
            ThresholdParams t = t_explicit > 0 ? ThresholdParams{t_explicit, ThresholdOrigin::Explicit, 0, 0}
                                               : choose_threshold(ThresholdPolicy::CInefficient, sl.c, 3.0,
                                                                  g.max_degree());
            WalkContext ctx = build_context(g, p.strict, t, sl, p.sos);
            PruneTrace tr = second_level_prune(ctx, !force);
            json out = {{"t", t.t},
                        {"kms_prime_fails", ctx.kms_prime_fails()},
                        {"short_circuit", tr.short_circuit},
                        {"stage1", tr.stage1.size()},
                        {"stage2", tr.stage2.size()},
                        {"final", tr.final_vertices.size()},
                        {"q_max", tr.q_max},
                        {"certificate_ok", tr.certificate_ok},
                        {"exhausted_stage", tr.exhausted_stage}};
            if (*w2) {
                if (!checkpoint_path.empty()) io::write_text_file(checkpoint_path, io::checkpoint(ctx).dump() + "\n");
                std::vector<int> best;
                int center = -1;
                for (int i : tr.final_vertices) {
                    auto r = second_level_independent_set(ctx, i);
                    if (r.independent_set.size() > best.size()) {
                        best = r.independent_set;
                        center = i;
                    }
                }
                out["center"] = center;
                out["independent_set"] = best;
            } else if (!tr.short_circuit && tr.exhausted_stage.empty()) {
                CenterResult c = select_center(ctx);
                out["center"] = c.i;
                out["center_mass"] = c.mass;
                out["clears"] = c.clears;
                if (c.i >= 0) {
                    auto r = third_level_independent_set(ctx, c.i, c.S, sl.c, params::kDefaultCPrime);
                    out["W"] = r.W.size();
                    out["branch"] = r.branch;
                    out["size_threshold"] = r.size_threshold;
                    out["independent_set"] = r.independent_set;
                    out["diagnostics"] = r.diagnostics;
                }
            }
            emit_json(out);
        } else if (*par) {
            std::vector<params::ParamPoint> pts;
            if (optimize) {
                auto r = params::optimize(params::linspace(0.030, 0.045, 16), params::linspace(0.015, 0.035, 21));
                pts.push_back(r.best);
            } else if (grid) {
                for (double cp : params::linspace(0.0, 2 * pcp, 11)) pts.push_back(params::exponents(pc, cp));
            } else {
                pts.push_back(params::exponents(pc, pcp));
            }
            if (G.format == "json") {
                json arr = json::array();
                for (const auto& p : pts) arr.push_back(io::to_json(p));
                emit_json(pts.size() == 1 ? arr[0] : arr);
            } else {
                std::ostringstream os;
                params::write_csv_header(os);
                for (const auto& p : pts) params::write_csv_row(os, p);
                emit(os.str());
            }
        } else if (*col) {
            GraphFile f = read_graph_file(graph_path);
            ColorConfig cfg;
            cfg.seed = G.seed;
            cfg.ladder.slack = slack();
            if (!G.config.empty()) {
                json j = io::read_json_file(G.config);
                if (j.contains("policy")) cfg.ladder.policy = policy_from_name(j.at("policy").get<std::string>());
                cfg.ladder.c = j.value("c", cfg.ladder.c);
                cfg.ladder.c_prime = j.value("c_prime", cfg.ladder.c_prime);
                cfg.walk_max_n = j.value("walk_max_n", cfg.walk_max_n);
                cfg.ladder.context_samples = j.value("context_samples", cfg.ladder.context_samples);
            }
            ColorResult r = color_graph(f.graph, cfg, ignore_planted ? std::nullopt : f.planted);
            if (G.format == "csv") {
                std::ostringstream os;
                os << "vertex,color\n";
                for (std::size_t v = 0; v < r.assignment.color.size(); ++v) os << v << "," << r.assignment.color[v] << "\n";
                emit(os.str());
            } else {
                json j = io::to_json(r);
                j["greedy_colors"] = greedy_color_count(f.graph);
                emit_json(j);
            }
        } else if (*bench) {
            ExperimentConfig cfg;
            if (!G.config.empty()) cfg = io::experiment_from_json(io::read_json_file(G.config));
            if (dry) cfg.dry_run = true;
            if (!G.out.empty()) cfg.out = G.out;
            std::ostringstream os;
            run_experiment(cfg, os);
            if (cfg.out.empty())
                std::cout << os.str();
            else
                io::write_text_file(cfg.out, os.str());
        }
    } catch (const NotThreeColorableError& e) {
        std::cerr << "not 3-colorable: " << e.what() << "\n";
        json w = {{"odd_cycle", e.odd_cycle}};
        std::cout << w.dump() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
