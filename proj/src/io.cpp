#include "sdpcolor/io.hpp"

#include <fstream>
#include <sstream>

#include "sdpcolor/error.hpp"

namespace sdpcolor::io {

namespace {

json matrix_rows(const Eigen::MatrixXd& m) {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
    return flat;
}

Eigen::MatrixXd matrix_from(const json& flat, int rows, int cols) {
    if (static_cast<long>(flat.size()) != static_cast<long>(rows) * cols)
        throw PreconditionError("vector array has the wrong length");
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = flat.at(static_cast<std::size_t>(r) * cols + c).get<double>();
    return m;
}

const char* origin_name(ThresholdOrigin o) {
    switch (o) {
        case ThresholdOrigin::Kappa: return "kappa";
        case ThresholdOrigin::Inefficient: return "inefficient";
        case ThresholdOrigin::Explicit: return "explicit";
    }
    return "explicit";
}

ThresholdOrigin origin_from(const std::string& s) {
    if (s == "kappa") return ThresholdOrigin::Kappa;
    if (s == "inefficient") return ThresholdOrigin::Inefficient;
    return ThresholdOrigin::Explicit;
}

template <class T>
void take(const json& j, const char* key, T& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

}  // namespace

json to_json(const ColoringMixture& m) {
    json arr = json::array();
    for (std::size_t k = 0; k < m.colorings.size(); ++k)
        arr.push_back({{"coloring", m.colorings[k]}, {"weight", m.weights[k]}});
    return arr;
}

ColoringMixture mixture_from_json(const json& j) {
    if (!j.is_array()) throw PreconditionError("mixture JSON must be an array");
    ColoringMixture m;
    for (const auto& e : j) {
        m.colorings.push_back(e.at("coloring").get<std::vector<int>>());
        m.weights.push_back(e.at("weight").get<double>());
    }
    return m;
}

json to_json(const SdpResult& r) {
    return {{"max_edge_violation", r.max_edge_violation}, {"iters", r.iters}, {"converged", r.converged}};
}

json to_json(const VectorColoring& vc) {
    return {{"vertices", vc.vertices}, {"dim", vc.dim()}, {"vectors", matrix_rows(vc.vectors)},
            {"kappa", vc.kappa}, {"excluded", vc.excluded}};
}

VectorColoring vector_coloring_from_json(const json& j) {
    VectorColoring vc;
    vc.vertices = j.at("vertices").get<std::vector<int>>();
    vc.vectors = matrix_from(j.at("vectors"), static_cast<int>(vc.vertices.size()), j.at("dim").get<int>());
    vc.kappa = j.at("kappa").get<double>();
    take(j, "excluded", vc.excluded);
    return vc;
}

json to_json(const RoundingOutcome& r) {
    return {{"seed", r.seed}, {"t", r.t}, {"|S|", r.S.size()}, {"|M|", r.M.size()}, {"returned", r.returned}};
}

json to_json(const PackingMeasure& p) {
    return {{"indices", p.indices}, {"weights", p.weights}, {"s", p.s},
            {"samples", p.samples}, {"seed", p.seed}, {"provenance", provenance_name(p.provenance)}};
}

PackingMeasure packing_from_json(const json& j) {
    PackingMeasure p;
    p.indices = j.at("indices").get<std::vector<int>>();
    p.weights = j.at("weights").get<std::vector<double>>();
    if (p.indices.size() != p.weights.size()) throw PreconditionError("indices and weights differ in length");
    take(j, "s", p.s);
    take(j, "samples", p.samples);
    take(j, "seed", p.seed);
    if (j.contains("provenance")) p.provenance = provenance_from_name(j.at("provenance").get<std::string>());
    return p;
}

json to_json(const SlackConfig& s) {
    return {{"eps_dot", s.eps_dot},
            {"mass_floor", s.mass_floor},
            {"prune_r", s.prune_r},
            {"samples", s.samples},
            {"seed", s.seed},
            {"threshold_slack", s.threshold_slack},
            {"c", s.c},
            {"boost_lambda", s.boost_lambda},
            {"boost_lambda_prime", s.boost_lambda_prime},
            {"boost_alpha", s.boost_alpha},
            {"boost_sigma", s.boost_sigma},
            {"attempts", s.attempts}};
}

SlackConfig slack_from_json(const json& j, SlackConfig s) {
    take(j, "eps_dot", s.eps_dot);
    take(j, "mass_floor", s.mass_floor);
    take(j, "prune_r", s.prune_r);
    take(j, "samples", s.samples);
    take(j, "seed", s.seed);
    take(j, "threshold_slack", s.threshold_slack);
    take(j, "c", s.c);
    take(j, "boost_lambda", s.boost_lambda);
    take(j, "boost_lambda_prime", s.boost_lambda_prime);
    take(j, "boost_alpha", s.boost_alpha);
    take(j, "boost_sigma", s.boost_sigma);
    take(j, "attempts", s.attempts);
    validate_slack(s);
    return s;
}

json to_json(const ExperimentConfig& c) {
    return {{"n", c.n},
            {"degrees", c.degrees},
            {"weights", c.weights},
            {"seeds", c.seeds},
            {"policy", policy_name(c.policy)},
            {"c", c.c},
            {"c_prime", c.c_prime},
            {"slack", to_json(c.slack)},
            {"draws", c.draws},
            {"walk_max_n", c.walk_max_n},
            {"context_samples", c.context_samples},
            {"dry_run", c.dry_run},
            {"timing", c.timing},
            {"out", c.out}};
}

ExperimentConfig experiment_from_json(const json& j) {
    ExperimentConfig c;
    take(j, "n", c.n);
    take(j, "degrees", c.degrees);
    take(j, "weights", c.weights);
    take(j, "seeds", c.seeds);
    if (j.contains("policy")) c.policy = policy_from_name(j.at("policy").get<std::string>());
    take(j, "c", c.c);
    take(j, "c_prime", c.c_prime);
    if (j.contains("slack")) c.slack = slack_from_json(j.at("slack"));
    take(j, "draws", c.draws);
    take(j, "walk_max_n", c.walk_max_n);
    take(j, "context_samples", c.context_samples);
    take(j, "dry_run", c.dry_run);
    take(j, "timing", c.timing);
    take(j, "out", c.out);
    validate_experiment(c);
    return c;
}

json to_json(const ProgressEvent& e) {
    json j = {{"kind", event_kind_name(e.kind)},
              {"vertices", e.vertices},
              {"first_color", e.first_color},
              {"colors_consumed", e.colors_consumed},
              {"method", e.method}};
    if (!e.sides.empty()) j["sides"] = e.sides;
    if (e.center >= 0) j["center"] = e.center;
    return j;
}

ProgressEvent event_from_json(const json& j) {
    ProgressEvent e;
    e.kind = event_kind_from_name(j.at("kind").get<std::string>());
    e.vertices = j.at("vertices").get<std::vector<int>>();
    e.first_color = j.at("first_color").get<int>();
    e.colors_consumed = j.at("colors_consumed").get<int>();
    take(j, "method", e.method);
    take(j, "sides", e.sides);
    take(j, "center", e.center);
    if (!e.sides.empty() && e.sides.size() != e.vertices.size())
        throw PreconditionError("event sides do not match its vertices");
    return e;
}

json to_json(const ColorResult& r) {
    json events = json::array();
    for (const auto& e : r.events) events.push_back(to_json(e));
    return {{"colors", r.colors}, {"coloring", r.assignment.color}, {"events", events},
            {"diagnostics", r.diagnostics}};
}

json to_json(const params::ParamPoint& p) {
    return {{"c", p.c},       {"c_prime", p.c_prime}, {"eta0", p.eta0},
            {"lambda0", p.lambda0}, {"f_n", p.f_n},     {"g_n", p.g_n},
            {"min", p.n_exponent},  {"coloring_exponent", p.coloring_exponent},
            {"target", p.target}};
}

json checkpoint(const WalkContext& ctx) {
    json w = json::array();
    for (const auto& [key, members] : ctx.W) w.push_back({{"i", key.first}, {"j", key.second}, {"members", members}});
    json edges = json::array();
    for (const auto& [a, b] : ctx.graph.edges()) edges.push_back({a, b});
    return {{"graph", {{"n", ctx.n()}, {"edges", edges}}},
            {"t", {{"t", ctx.t.t}, {"origin", origin_name(ctx.t.origin)},
                   {"parameter", ctx.t.parameter}, {"delta", ctx.t.delta}}},
            {"slack", to_json(ctx.slack)},
            {"mu", ctx.mu},
            {"p", ctx.p},
            {"adj", ctx.adj},
            {"W", w},
            {"dim", ctx.coloring.dim()},
            {"vectors", matrix_rows(ctx.coloring.vectors)}};
}

WalkContext restore_checkpoint(const json& j) {
    const auto& gj = j.at("graph");
    std::vector<Edge> edges;
    for (const auto& e : gj.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Graph g(gj.at("n").get<int>(), edges);
    StrictVector3Coloring col;
    col.vectors = matrix_from(j.at("vectors"), g.n(), j.at("dim").get<int>());
    const auto& tj = j.at("t");
    ThresholdParams t;
    t.t = tj.at("t").get<double>();
    t.origin = origin_from(tj.value("origin", "explicit"));
    t.parameter = tj.value("parameter", 0.0);
    t.delta = tj.value("delta", 0);
    WalkContext ctx = make_context(g, col, t, slack_from_json(j.at("slack")),
                                   j.at("mu").get<std::vector<std::vector<double>>>());
    if (j.contains("p")) ctx.p = j.at("p").get<std::vector<double>>();
    if (j.contains("adj")) ctx.adj = j.at("adj").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(ctx.adj.size()) != g.n()) throw PreconditionError("checkpoint adjacency size mismatch");
    for (const auto& e : j.at("W"))
        ctx.W[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("members").get<std::vector<int>>();
    return ctx;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace sdpcolor::io
