#include "sdpcolor/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "sdpcolor/error.hpp"

namespace sdpcolor {

std::string event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::LargeIS: return "Large-IS";
        case EventKind::SmallNbhd: return "Small-Nbhd";
        case EventKind::SameColor: return "Same-Color";
        case EventKind::Wigderson2Color: return "Wigderson-2color";
        case EventKind::Recurse: return "Recurse";
    }
    return "?";
}

EventKind event_kind_from_name(const std::string& s) {
    for (EventKind k : {EventKind::LargeIS, EventKind::SmallNbhd, EventKind::SameColor,
                        EventKind::Wigderson2Color, EventKind::Recurse})
        if (event_kind_name(k) == s) return k;
    throw PreconditionError("unknown event kind: " + s);
}

std::string policy_name(ThresholdPolicy p) {
    return p == ThresholdPolicy::Kappa ? "kappa" : "c-inefficient";
}

ThresholdPolicy policy_from_name(const std::string& s) {
    if (s == "kappa") return ThresholdPolicy::Kappa;
    if (s == "c-inefficient") return ThresholdPolicy::CInefficient;
    throw PreconditionError("unknown threshold policy: " + s);
}

ThresholdParams choose_threshold(ThresholdPolicy policy, double c, double kappa, int delta) {
    delta = std::max(delta, 2);
    if (policy == ThresholdPolicy::CInefficient) {
        try {
            return inefficient_threshold(c, delta);
        } catch (const DegenerateError&) {
        }
    }
    return kms_threshold(std::max(kappa, 2.0), delta);
}

namespace {

std::vector<int> best_of(int attempts, std::uint64_t seed,
                         const std::function<RoundingOutcome(std::uint64_t)>& draw) {
    std::vector<int> best;
    for (int a = 0; a < std::max(1, attempts); ++a) {
        auto out = draw(derive_seed(seed, static_cast<std::uint64_t>(a)));
        if (out.returned.size() > best.size()) best = out.returned;
    }
    return best;
}

// Walk levels on h; fills level2/level3 of `out` and returns candidate sets.
void walk_levels(const Graph& h, const StrictVector3Coloring& strict,
                 std::shared_ptr<const SosSolution> sos, const ThresholdParams& t,
                 const LadderConfig& cfg, std::uint64_t seed, LadderOutcome& out,
                 std::vector<int>& l3, std::vector<int>& l2) {
    SlackConfig sl = cfg.slack;
    sl.samples = cfg.context_samples;
    sl.seed = derive_seed(seed, 11);
    sl.c = cfg.c;
    WalkContext ctx = build_context(h, strict, t, sl, std::move(sos));
    PruneTrace tr = second_level_prune(ctx, false);
    if (!tr.exhausted_stage.empty()) {
        out.diagnostics.push_back("pruning exhausted at " + tr.exhausted_stage);
        out.level3 = out.level2 = 0;
        return;
    }
    CenterResult center = select_center(ctx);
    if (center.i >= 0 && center.clears) {
        ThirdLevelResult r3 = third_level_independent_set(ctx, center.i, center.S, cfg.c, cfg.c_prime);
        l3 = r3.independent_set;
        out.branch = r3.branch;
        if (!r3.diagnostics.empty()) out.diagnostics.push_back("level-3: " + r3.diagnostics);
    } else {
        out.diagnostics.push_back("level-3: no center clears the mass floor");
    }
    out.level3 = static_cast<long>(l3.size());
    for (int i : tr.final_vertices) {
        ExtractionResult r2 = second_level_independent_set(ctx, i);
        if (r2.independent_set.size() > l2.size()) l2 = r2.independent_set;
    }
    out.level2 = static_cast<long>(l2.size());
}

}  // namespace

LadderOutcome run_ladder(const Graph& h, const VectorColoring& vc, const StrictVector3Coloring* strict,
                         std::shared_ptr<const SosSolution> sos, const LadderConfig& cfg,
                         std::uint64_t seed) {
    LadderOutcome out;
    if (vc.size() != h.n()) throw PreconditionError("vector coloring must cover the graph");
    const int delta = h.max_degree();
    ThresholdParams t = choose_threshold(cfg.policy, cfg.c, vc.kappa, delta);
    out.t = t.t;

    std::vector<int> l3, l2;
    if (cfg.walks && strict && sos && h.edge_count() > 0) {
        bool run = cfg.force_walks;
        if (!run) {
            std::vector<int> probe(h.n());
            std::iota(probe.begin(), probe.end(), 0);
            if (static_cast<int>(probe.size()) > cfg.failure_vertices) {
                std::mt19937_64 rng(derive_seed(seed, 5));
                std::shuffle(probe.begin(), probe.end(), rng);
                probe.resize(cfg.failure_vertices);
                std::sort(probe.begin(), probe.end());
            }
            FailureReport fr = estimate_failure(h, vc, t.t, cfg.failure_samples, derive_seed(seed, 6), probe);
            run = fr.fails;
            if (!run) out.diagnostics.push_back("KMS' succeeds on the probe; walk levels skipped");
        }
        if (run) {
            try {
                walk_levels(h, *strict, sos, t, cfg, seed, out, l3, l2);
            } catch (const Error& e) {
                out.diagnostics.push_back(std::string("walk levels failed: ") + e.what());
            }
        }
    }

    std::vector<int> kp = best_of(cfg.attempts, derive_seed(seed, 7),
                                  [&](std::uint64_t s) { return kms_prime_round(h, vc, t.t, s); });
    std::vector<int> km = best_of(cfg.attempts, derive_seed(seed, 8),
                                  [&](std::uint64_t s) { return kms_round(h, vc, vc.kappa, s); });
    out.kms_prime = static_cast<long>(kp.size());
    out.kms = static_cast<long>(km.size());

    const std::pair<const char*, std::vector<int>*> ladder[] = {
        {"level-3", &l3}, {"level-2", &l2}, {"kms-prime", &kp}, {"kms", &km}};
    for (const auto& [name, set] : ladder)
        if (set->size() > out.set.size()) {
            out.set = *set;
            out.method = name;
        }
    return out;
}

std::optional<ProgressEvent> wigderson_dense_step(const Graph& g, double degree_threshold, int first_color) {
    int center = -1;
    for (int v = 0; v < g.n(); ++v)
        if (center < 0 || g.degree(v) > g.degree(center)) center = v;
    if (center < 0 || g.degree(center) < degree_threshold) return std::nullopt;

    const auto& nb = g.neighbors(center);
    std::vector<int> side(g.n(), -1), parent(g.n(), -1);
    std::vector<char> in(g.n(), 0);
    for (int u : nb) in[u] = 1;
    for (int root : nb) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b : g.neighbors(a)) {
                if (!in[b]) continue;
                if (side[b] < 0) {
                    side[b] = 1 - side[a];
                    parent[b] = a;
                    queue.push_back(b);
                } else if (side[b] == side[a]) {
                    // tree paths from a and b meet at their common ancestor
                    std::vector<int> pa{a}, pb{b};
                    while (parent[pa.back()] >= 0) pa.push_back(parent[pa.back()]);
                    while (parent[pb.back()] >= 0) pb.push_back(parent[pb.back()]);
                    while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
                        pa.pop_back();
                        pb.pop_back();
                    }
                    std::vector<int> cycle(pa.begin(), pa.end());
                    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) cycle.push_back(*it);
                    throw NotThreeColorableError(
                        "neighbourhood of vertex " + std::to_string(center) + " contains an odd cycle",
                        cycle);
                }
            }
        }
    }
    ProgressEvent ev;
    ev.kind = EventKind::Wigderson2Color;
    ev.center = center;
    ev.vertices = nb;
    for (int u : nb) ev.sides.push_back(side[u]);
    ev.first_color = first_color;
    ev.colors_consumed = 2;
    ev.method = "wigderson";
    return ev;
}

double default_degree_threshold(int n, double c) {
    return std::pow(static_cast<double>(std::max(n, 1)), (3 + 3 * c) / (5 + 3 * c));
}

std::shared_ptr<const SosSolution> planted_sos(const Graph& g, const std::vector<int>& planted) {
    return std::make_shared<const SosSolution>(g, symmetrize(single_coloring(planted)), 3);
}

ColorAssignment replay_events(int n, const std::vector<ProgressEvent>& events) {
    ColorAssignment a;
    a.color.assign(n, -1);
    for (const auto& ev : events) {
        for (std::size_t k = 0; k < ev.vertices.size(); ++k) {
            int v = ev.vertices[k];
            if (v < 0 || v >= n) throw PreconditionError("event vertex out of range");
            if (a.color[v] >= 0) throw PreconditionError("event recolors vertex " + std::to_string(v));
            a.color[v] = ev.first_color + (ev.sides.empty() ? 0 : ev.sides[k]);
        }
    }
    return a;
}

ColorResult color_graph(const Graph& g, const ColorConfig& cfg, const std::optional<std::vector<int>>& planted) {
    ColorResult res;
    res.assignment.color.assign(g.n(), -1);
    const double threshold =
        cfg.degree_threshold > 0 ? cfg.degree_threshold : default_degree_threshold(g.n(), cfg.ladder.c);

    std::optional<VectorColoring> global_vc;
    if (planted) {
        if (static_cast<int>(planted->size()) != g.n()) throw PreconditionError("planted coloring size mismatch");
        if (!is_proper_coloring(g, *planted)) throw PreconditionError("planted coloring is not proper");
    } else if (g.n() <= cfg.sdp_max_n && g.edge_count() > 0) {
        SdpResult sdp = solve_vector_coloring_sdp(g, 3.0, 1e-7, 5000, cfg.seed);
        double worst = -1;
        for (const auto& [a, b] : g.edges()) worst = std::max(worst, sdp.vectors.row(a).dot(sdp.vectors.row(b)));
        if (worst < -1e-6) {
            global_vc = from_vectors(sdp.vectors, 1.0 - 1.0 / worst);
        } else {
            res.diagnostics.push_back("SDP found no useful vector coloring");
        }
    } else if (g.edge_count() > 0) {
        res.diagnostics.push_back("no vector coloring available for this size; greedy only");
    }

    int next_color = 0;
    std::vector<int> remaining(g.n());
    std::iota(remaining.begin(), remaining.end(), 0);
    auto apply = [&](ProgressEvent ev) {
        for (std::size_t k = 0; k < ev.vertices.size(); ++k)
            res.assignment.color[ev.vertices[k]] = ev.first_color + (ev.sides.empty() ? 0 : ev.sides[k]);
        next_color += ev.colors_consumed;
        res.events.push_back(std::move(ev));
        std::vector<int> rest;
        for (int v : remaining)
            if (res.assignment.color[v] < 0) rest.push_back(v);
        if (rest.size() >= remaining.size()) throw Error("progress step colored no vertex");
        remaining = std::move(rest);
    };
    auto large_is = [&](std::vector<int> vs, std::string method) {
        ProgressEvent ev;
        ev.kind = EventKind::LargeIS;
        std::sort(vs.begin(), vs.end());
        ev.vertices = std::move(vs);
        ev.first_color = next_color;
        ev.colors_consumed = 1;
        ev.method = std::move(method);
        apply(std::move(ev));
    };
    auto to_global = [&](const std::vector<int>& local) {
        std::vector<int> out;
        for (int v : local) out.push_back(remaining[v]);
        return out;
    };

    for (int iter = 0; !remaining.empty(); ++iter) {
        Graph h = g.induced(remaining);
        if (h.edge_count() == 0) {
            large_is(remaining, "edgeless");
            break;
        }
        if (auto ev = wigderson_dense_step(h, threshold, next_color)) {
            ev->center = remaining[ev->center];
            ev->vertices = to_global(ev->vertices);
            apply(std::move(*ev));
            continue;
        }

        std::shared_ptr<const SosSolution> sos;
        std::optional<StrictVector3Coloring> strict;
        VectorColoring vc;
        if (planted) {
            std::vector<int> local;
            for (int v : remaining) local.push_back((*planted)[v]);
            sos = planted_sos(h, local);
            strict = extract_vector3(*sos);
            vc = from_strict(*strict);
        } else if (global_vc) {
            VectorColoring r = restrict_to(*global_vc, remaining);
            vc = from_vectors(r.vectors, r.kappa);
        }

        std::vector<int> set;
        if (vc.size() == h.n()) {
            LadderConfig lc = cfg.ladder;
            lc.walks = lc.walks && h.n() <= cfg.walk_max_n;
            LadderOutcome lo = run_ladder(h, vc, strict ? &*strict : nullptr, sos, lc,
                                          derive_seed(cfg.seed, static_cast<std::uint64_t>(iter)));
            for (auto& d : lo.diagnostics) res.diagnostics.push_back("step " + std::to_string(iter) + ": " + d);
            if (!lo.set.empty()) {
                if (!is_independent_set(h, lo.set)) throw Error("ladder returned a dependent set");
                large_is(to_global(lo.set), lo.method);
                continue;
            }
            res.diagnostics.push_back("step " + std::to_string(iter) + ": ladder empty; greedy fallback");
        }
        // greedy on the remainder, one event per color class
        std::vector<int> gc = greedy_coloring(h);
        int k = *std::max_element(gc.begin(), gc.end()) + 1;
        std::vector<std::vector<int>> classes(k);
        for (int v = 0; v < h.n(); ++v) classes[gc[v]].push_back(remaining[v]);
        for (auto& cls : classes) large_is(cls, "greedy");
        break;
    }

    if (auto bad = first_conflict(g, res.assignment.color))
        throw Error("coloring conflict on edge " + std::to_string(bad->first) + "-" + std::to_string(bad->second));
    res.colors = res.assignment.palette_size();
    return res;
}

int greedy_color_count(const Graph& g) {
    ColorAssignment a;
    a.color = greedy_coloring(g);
    return a.palette_size();
}

ColorAssignment kms_coloring(const Graph& g, const VectorColoring& vc, std::uint64_t seed, int attempts) {
    ColorAssignment a;
    a.color.assign(g.n(), -1);
    std::vector<int> remaining(g.n());
    std::iota(remaining.begin(), remaining.end(), 0);
    int color = 0;
    for (int iter = 0; !remaining.empty(); ++iter) {
        Graph h = g.induced(remaining);
        std::vector<int> set;
        if (h.edge_count() == 0) {
            set.resize(h.n());
            std::iota(set.begin(), set.end(), 0);
        } else {
            VectorColoring r = restrict_to(vc, remaining);
            VectorColoring local = from_vectors(r.vectors, r.kappa);
            set = best_of(attempts, derive_seed(seed, static_cast<std::uint64_t>(iter)),
                          [&](std::uint64_t s) { return kms_round(h, local, local.kappa, s); });
        }
        if (set.empty()) {
            std::vector<int> gc = greedy_coloring(h);
            for (int v = 0; v < h.n(); ++v) a.color[remaining[v]] = color + gc[v];
            break;
        }
        for (int v : set) a.color[remaining[v]] = color;
        ++color;
        std::vector<int> rest;
        for (int v : remaining)
            if (a.color[v] < 0) rest.push_back(v);
        remaining = std::move(rest);
    }
    return a;
}

void validate_experiment(const ExperimentConfig& cfg) {
    if (cfg.seeds.empty()) throw PreconditionError("experiment needs at least one seed");
    if (cfg.degrees.empty()) throw PreconditionError("experiment needs at least one degree");
    if (cfg.n < 3) throw PreconditionError("experiment needs n >= 3");
    if (cfg.draws < 1) throw PreconditionError("draws must be >= 1");
    for (double d : cfg.degrees)
        if (!(d > 0)) throw PreconditionError("degrees must be positive");
    validate_slack(cfg.slack);
}

std::vector<std::string> experiment_header(const ExperimentConfig& cfg) {
    std::vector<std::string> h{"degree_target", "seed", "n", "m", "max_degree", "t", "branch",
                               "is_kms", "is_kms_prime", "is_level2", "is_level3"};
    if (cfg.timing)
        for (const char* s : {"ms_kms", "ms_kms_prime", "ms_walks"}) h.push_back(s);
    return h;
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& out) {
    validate_experiment(cfg);
    auto header = experiment_header(cfg);
    for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
    out << "\n";
    if (cfg.dry_run) return;

    using Clock = std::chrono::steady_clock;
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };
    for (double d : cfg.degrees)
        for (std::uint64_t seed : cfg.seeds) {
            const double w[3] = {cfg.weights[0], cfg.weights[1], cfg.weights[2]};
            auto inst = generate_planted(cfg.n, w, edge_prob_for_degree(cfg.n, d),
                                         derive_seed(seed, static_cast<std::uint64_t>(std::llround(d * 1000))));
            const Graph& g = inst.graph;
            auto sos = planted_sos(g, inst.planted);
            StrictVector3Coloring strict = extract_vector3(*sos);
            VectorColoring vc = from_strict(strict);
            const int delta = g.max_degree();
            ThresholdParams t = choose_threshold(cfg.policy, cfg.c, vc.kappa, delta);

            auto t0 = Clock::now();
            double kms = 0;
            for (int k = 0; k < cfg.draws; ++k)
                kms += static_cast<double>(
                    kms_round(g, vc, 3.0, derive_seed(seed, 1000 + static_cast<std::uint64_t>(k))).returned.size());
            double ms_kms = ms_since(t0);
            t0 = Clock::now();
            double kmsp = 0;
            for (int k = 0; k < cfg.draws; ++k)
                kmsp += static_cast<double>(
                    kms_prime_round(g, vc, t.t, derive_seed(seed, 2000 + static_cast<std::uint64_t>(k))).returned.size());
            double ms_kmsp = ms_since(t0);

            std::string l2 = "NA", l3 = "NA", branch = "NA";
            t0 = Clock::now();
            if (g.n() <= cfg.walk_max_n && g.edge_count() > 0) {
                LadderConfig lc;
                lc.policy = cfg.policy;
                lc.c = cfg.c;
                lc.c_prime = cfg.c_prime;
                lc.slack = cfg.slack;
                lc.force_walks = true;
                lc.context_samples = cfg.context_samples;
                lc.attempts = 1;
                LadderOutcome lo = run_ladder(g, vc, &strict, sos, lc, derive_seed(seed, 3000));
                if (lo.level2 >= 0) l2 = std::to_string(lo.level2);
                if (lo.level3 >= 0) l3 = std::to_string(lo.level3);
                branch = lo.branch;
            }
            double ms_walks = ms_since(t0);

            std::ostringstream row;
            row << std::setprecision(10) << d << "," << seed << "," << g.n() << "," << g.edge_count() << ","
                << delta << "," << t.t << "," << branch << "," << kms / cfg.draws << ","
                << kmsp / cfg.draws << "," << l2 << "," << l3;
            if (cfg.timing) row << "," << ms_kms << "," << ms_kmsp << "," << ms_walks;
            out << row.str() << "\n";
        }
}

}  // namespace sdpcolor
