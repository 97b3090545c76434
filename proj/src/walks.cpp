#include "sdpcolor/walks.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <set>

#include "sdpcolor/covers.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/gaussian.hpp"

namespace sdpcolor {

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void erase_sorted(std::vector<int>& sorted, int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it != sorted.end() && *it == x) sorted.erase(it);
}

void remove_edge(std::vector<std::vector<int>>& adj, int a, int b) {
    erase_sorted(adj[a], b);
    erase_sorted(adj[b], a);
}

// Lemma-A.1 style fixpoint on adjacency lists with a symmetric weight.
template <class W>
std::vector<int> prune_adjacency(std::vector<std::vector<int>>& adj, W&& weight, double r) {
    const int n = static_cast<int>(adj.size());
    std::vector<double> sum(n, 0.0);
    std::vector<char> alive(n, 0);
    for (int v = 0; v < n; ++v) {
        alive[v] = !adj[v].empty();
        for (int u : adj[v]) sum[v] += weight(v, u);
    }
    std::set<int> pending;
    for (int v = 0; v < n; ++v)
        if (alive[v] && sum[v] < r) pending.insert(v);
    std::vector<int> order;
    while (!pending.empty()) {
        int v = *pending.begin();
        pending.erase(pending.begin());
        alive[v] = 0;
        order.push_back(v);
        for (int u : adj[v]) {
            if (!alive[u]) continue;
            sum[u] -= weight(u, v);
            if (sum[u] < r) pending.insert(u);
            erase_sorted(adj[u], v);
        }
        adj[v].clear();
    }
    return order;
}

std::vector<int> alive_list(const std::vector<std::vector<int>>& adj) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (!adj[v].empty()) out.push_back(v);
    return out;
}

double window_hi(const WalkContext& ctx) {
    return ctx.slack.c / (1 + ctx.slack.c) + ctx.slack.eps_dot;
}

std::vector<int> best_rounding(const Graph& g, const VectorColoring& vc, int attempts, std::uint64_t seed) {
    std::vector<int> best;
    if (vc.size() == 0) return best;
    for (int a = 0; a < std::max(1, attempts); ++a) {
        RoundingOutcome out = kms_round(g, vc, vc.kappa, derive_seed(seed, static_cast<std::uint64_t>(a)));
        if (out.returned.size() > best.size()) best = out.returned;
    }
    return best;
}

}  // namespace

void validate_slack(const SlackConfig& s) {
    if (!(s.eps_dot > 0 && s.mass_floor > 0 && s.prune_r > 0 && s.samples > 0))
        throw PreconditionError("slack values must be positive");
    if (s.mass_floor > 1) throw PreconditionError("mass_floor must be <= 1");
    if (s.c < 0) throw PreconditionError("c must be >= 0");
}

double WalkContext::mu_of(int i, int j) const {
    const auto& nb = graph.neighbors(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j) return 0.0;
    return mu[i][it - nb.begin()];
}

std::vector<int> WalkContext::vertices() const { return alive_list(adj); }

Eigen::VectorXd WalkContext::vp(int i, int j) const { return orth_unit(v(i), v(j)); }

bool WalkContext::kms_prime_fails() const {
    int half = 0;
    for (double x : p) half += x >= 0.5;
    return n() > 0 && 2 * half >= n();
}

WalkContext make_context(const Graph& g, const StrictVector3Coloring& coloring, ThresholdParams t,
                         const SlackConfig& slack, std::vector<std::vector<double>> mu,
                         std::shared_ptr<const SosSolution> sos) {
    validate_slack(slack);
    if (coloring.n() != g.n()) throw PreconditionError("coloring size does not match the graph");
    if (static_cast<int>(mu.size()) != g.n()) throw PreconditionError("one mu table per vertex required");
    WalkContext ctx;
    ctx.graph = g;
    ctx.coloring = coloring;
    ctx.sos = std::move(sos);
    ctx.t = t;
    ctx.slack = slack;
    ctx.p.assign(g.n(), 0.0);
    for (int i = 0; i < g.n(); ++i) {
        if (mu[i].size() != g.neighbors(i).size())
            throw PreconditionError("mu table for vertex " + std::to_string(i) + " has wrong length");
        for (double w : mu[i])
            if (w < 0) throw PreconditionError("mu weights must be nonnegative");
        for (double w : mu[i]) ctx.p[i] += w;
    }
    ctx.mu = std::move(mu);
    ctx.adj.resize(g.n());
    for (int i = 0; i < g.n(); ++i) ctx.adj[i] = g.neighbors(i);
    return ctx;
}

WalkContext build_context(const Graph& g, const StrictVector3Coloring& coloring, ThresholdParams t,
                          const SlackConfig& slack, std::shared_ptr<const SosSolution> sos) {
    validate_slack(slack);
    VectorColoring vc = from_strict(coloring);
    std::vector<std::vector<double>> mu(g.n());
    for (int i = 0; i < g.n(); ++i) {
        if (g.degree(i) == 0) continue;
        auto pk = packing_from_kms_prime(g, vc, i, t.t, slack.samples,
                                         derive_seed(slack.seed, static_cast<std::uint64_t>(i)));
        mu[i] = pk.mu.weights;
    }
    return make_context(g, coloring, t, slack, std::move(mu), std::move(sos));
}

WeightedPruneResult prune_weighted_graph(const Graph& g, const std::vector<std::vector<double>>& w,
                                         double r) {
    if (static_cast<int>(w.size()) != g.n()) throw PreconditionError("weight table size mismatch");
    auto weight = [&](int a, int b) {
        const auto& nb = g.neighbors(a);
        return w[a][std::lower_bound(nb.begin(), nb.end(), b) - nb.begin()];
    };
    for (int a = 0; a < g.n(); ++a) {
        if (w[a].size() != g.neighbors(a).size()) throw PreconditionError("weight row size mismatch");
        for (int b : g.neighbors(a)) {
            if (weight(a, b) < 0) throw PreconditionError("weights must be nonnegative");
            if (std::abs(weight(a, b) - weight(b, a)) > 1e-12) throw PreconditionError("weights must be symmetric");
        }
    }
    std::vector<std::vector<int>> adj(g.n());
    for (int a = 0; a < g.n(); ++a) adj[a] = g.neighbors(a);
    WeightedPruneResult res;
    // isolated vertices carry zero incident weight and go first
    for (int a = 0; a < g.n(); ++a)
        if (adj[a].empty() && r > 0) res.removal_order.push_back(a);
    auto order = prune_adjacency(adj, weight, r);
    res.removal_order.insert(res.removal_order.end(), order.begin(), order.end());
    res.survivors = alive_list(adj);
    if (r <= 0) {
        res.survivors.clear();
        for (int a = 0; a < g.n(); ++a) res.survivors.push_back(a);
    }
    res.exhausted = res.survivors.empty();
    return res;
}

PruneTrace second_level_prune(WalkContext& ctx, bool require_failure) {
    PruneTrace tr;
    if (require_failure && !ctx.kms_prime_fails()) {
        tr.short_circuit = true;
        return tr;
    }
    const auto& sl = ctx.slack;
    auto sym = [&](int a, int b) { return 0.5 * (ctx.mu_of(a, b) + ctx.mu_of(b, a)); };

    prune_adjacency(ctx.adj, sym, sl.prune_r);
    tr.stage1 = alive_list(ctx.adj);
    if (tr.stage1.empty()) {
        tr.exhausted_stage = "stage1";
        return tr;
    }

    // stage 2: spread boosting of each neighbourhood packing
    const double ts = std::max(ctx.t.t, std::numbers::e);
    const double ln = std::log(ts);
    const int sigma = sl.boost_sigma > 0 ? sl.boost_sigma : std::max(1, static_cast<int>(std::floor(ln)));
    const double eps = ln / ts;
    const double lambda = sl.boost_lambda > 0 ? sl.boost_lambda : sl.c / (1 + sl.c) + sl.eps_dot;
    std::vector<std::vector<int>> kept(ctx.n());
    for (int i : tr.stage1) {
        const auto& nb = ctx.adj[i];
        Eigen::MatrixXd X(static_cast<Eigen::Index>(nb.size()), ctx.coloring.dim());
        std::vector<double> w;
        for (std::size_t k = 0; k < nb.size(); ++k) {
            X.row(static_cast<Eigen::Index>(k)) = ctx.vp(i, nb[k]).transpose();
            w.push_back(ctx.mu_of(i, nb[k]));
        }
        double p = check_spread(X, w, lambda, 1.0, X).worst_mass;
        double alpha = sl.boost_alpha > 0 ? sl.boost_alpha : 2 * p * sigma * ln;
        double lp = sl.boost_lambda_prime > 0 ? sl.boost_lambda_prime : boosted_lambda(lambda, sl.c, eps, sigma);
        PruneResult res = boost_spread(X, w, lambda, p, sigma, alpha, lp);
        for (int k : res.kept) kept[i].push_back(nb[k]);
    }
    for (int i : tr.stage1)
        for (int j : std::vector<int>(ctx.adj[i]))
            if (i < j && (!contains(kept[i], j) || !contains(kept[j], i))) {
                remove_edge(ctx.adj, i, j);
                tr.stage2_removed.emplace_back(i, j);
            }
    prune_adjacency(ctx.adj, sym, sl.prune_r);
    tr.stage2 = alive_list(ctx.adj);
    if (tr.stage2.empty()) {
        tr.exhausted_stage = "stage2";
        return tr;
    }

    // stage 3: remove thin clusters E_ij around each j
    for (int j : tr.stage2) {
        std::size_t idx = 0;
        while (idx < ctx.adj[j].size()) {
            int i = ctx.adj[j][idx];
            Eigen::VectorXd vji = ctx.vp(j, i);
            std::vector<int> E;
            double mass = 0;
            for (int k : ctx.adj[j])
                if (vji.dot(ctx.vp(j, k)) >= -sl.eps_dot) {
                    E.push_back(k);
                    mass += ctx.mu_of(j, k);
                }
            if (mass < sl.mass_floor) {
                for (int k : E) {
                    remove_edge(ctx.adj, j, k);
                    tr.stage3_removed.emplace_back(std::min(j, k), std::max(j, k));
                }
                tr.stage3_triggers[j].push_back(i);
                idx = static_cast<std::size_t>(
                    std::upper_bound(ctx.adj[j].begin(), ctx.adj[j].end(), i) - ctx.adj[j].begin());
            } else {
                ++idx;
            }
        }
    }
    for (const auto& [j, is] : tr.stage3_triggers) {
        const int q = static_cast<int>(is.size());
        tr.q_max = std::max(tr.q_max, q);
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(ctx.coloring.dim());
        double cross = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < q; ++a) {
            sum += ctx.vp(j, is[a]);
            for (int b = a + 1; b < q; ++b) cross = std::max(cross, ctx.vp(j, is[a]).dot(ctx.vp(j, is[b])));
        }
        bool pairwise = q < 2 || cross < -sl.eps_dot;
        bool norm_ok = sum.squaredNorm() < q - q * (q - 1) * sl.eps_dot + 1e-9 || q < 2;
        if (!(pairwise && norm_ok && q < 1.0 / sl.eps_dot + 1)) tr.certificate_ok = false;
    }
    prune_adjacency(ctx.adj, sym, sl.prune_r);
    tr.final_vertices = alive_list(ctx.adj);
    if (tr.final_vertices.empty()) tr.exhausted_stage = "stage3";
    build_w_sets(ctx);
    return tr;
}

void build_w_sets(WalkContext& ctx) {
    ctx.W.clear();
    const double lo = -ctx.slack.eps_dot, hi = window_hi(ctx);
    for (int i = 0; i < ctx.n(); ++i)
        for (int j : ctx.adj[i]) {
            Eigen::VectorXd vji = ctx.vp(j, i);
            std::vector<int> w;
            for (int k : ctx.adj[j]) {
                if (k == i) continue;
                double a = vji.dot(ctx.vp(j, k));
                if (a >= lo && a <= hi) w.push_back(k);
            }
            ctx.W[{i, j}] = std::move(w);
        }
}

Decomposition two_step_decomposition(const StrictVector3Coloring& col, int i, int j, int k) {
    const Eigen::VectorXd vi = col.vectors.row(i).transpose();
    const Eigen::VectorXd vj = col.vectors.row(j).transpose();
    const Eigen::VectorXd vk = col.vectors.row(k).transpose();
    const Eigen::VectorXd vij = orth_unit(vi, vj), vji = orth_unit(vj, vi);
    Eigen::VectorXd vjk = orth_unit(vj, vk);
    const double a = vji.dot(vjk);
    Eigen::VectorXd rest = vjk - a * vji;
    Decomposition d;
    d.coefficient = a;
    d.components = {(0.25 + 0.75 * a) * vi, -kSqrt3 / 4 * (1 - a) * vij, kSqrt3 / 2 * rest};
    d.max_cross = std::max({std::abs(vi.dot(vij)), std::abs(vi.dot(rest)), std::abs(vij.dot(rest))});
    d.reconstruction = (d.components[0] + d.components[1] + d.components[2] - vk).norm();
    d.beta = vi.dot(vk);
    d.predicted_ip = 0.25 + 0.75 * a;
    d.actual_ip = d.beta;
    if (d.max_cross > 1e-6 || d.reconstruction > 1e-6)
        throw DecompositionError("two-step decomposition residual too large; coloring not strict?");
    return d;
}

Decomposition third_level_decomposition(const StrictVector3Coloring& col, int i, int k, int l) {
    const Eigen::VectorXd vi = col.vectors.row(i).transpose();
    const Eigen::VectorXd vk = col.vectors.row(k).transpose();
    const Eigen::VectorXd vl = col.vectors.row(l).transpose();
    const double beta = vi.dot(vk);
    const Eigen::VectorXd vik = orth_unit(vi, vk), vki = orth_unit(vk, vi), vkl = orth_unit(vk, vl);
    const double gamma = vkl.dot(vi);
    const double sb = std::sqrt(1 - beta * beta);
    Eigen::VectorXd rest = vkl - gamma / sb * vki;
    Decomposition d;
    d.beta = beta;
    d.coefficient = gamma;
    d.components = {(-0.5 * beta + kSqrt3 / 2 * gamma) * vi,
                    (-0.5 * sb - kSqrt3 / 2 * (beta / sb) * gamma) * vik, kSqrt3 / 2 * rest};
    d.max_cross = std::max({std::abs(vi.dot(vik)), std::abs(vi.dot(rest)), std::abs(vik.dot(rest))});
    d.reconstruction = (d.components[0] + d.components[1] + d.components[2] - vl).norm();
    d.predicted_ip = -0.5 * beta + kSqrt3 / 2 * gamma;
    d.actual_ip = vl.dot(vi);
    if (d.max_cross > 1e-6 || d.reconstruction > 1e-6)
        throw DecompositionError("three-step decomposition residual too large; coloring not strict?");
    return d;
}

TwoStepCover two_step_cover(const WalkContext& ctx, int i, std::span<const int> S,
                            const std::map<int, std::vector<int>>& S_j, double delta1, double delta2) {
    double m1 = 0;
    for (int j : S) m1 += ctx.mu_of(i, j);
    if (m1 < delta1 - 1e-12) throw PreconditionError("mu_i(S) below delta1");
    TwoStepCover out;
    out.delta1 = delta1;
    std::set<int> seen;
    for (int j : S) {
        auto it = S_j.find(j);
        if (it == S_j.end()) throw PreconditionError("missing S_j for a member of S");
        double m2 = 0;
        for (int k : it->second) m2 += ctx.mu_of(j, k);
        if (m2 < delta2 - 1e-12) throw PreconditionError("mu_j(S_j) below delta2");
        for (int k : it->second) {
            if (k == i || !seen.insert(k).second) continue;
            Decomposition d = two_step_decomposition(ctx.coloring, i, j, k);
            if (d.beta >= 1 - 1e-12) continue;
            out.ks.push_back(k);
            out.alpha.push_back(d.coefficient);
            out.threshold.push_back(params::eta_integrand(d.coefficient, ctx.slack.c) * ctx.t.t +
                                    ctx.slack.threshold_slack);
            out.max_cross = std::max(out.max_cross, d.max_cross);
        }
    }
    Eigen::MatrixXd X(static_cast<Eigen::Index>(out.ks.size()), ctx.coloring.dim());
    for (std::size_t q = 0; q < out.ks.size(); ++q)
        X.row(static_cast<Eigen::Index>(q)) = orth_unit(ctx.v(i), ctx.v(out.ks[q])).transpose();
    long hits = 0;
    for_each_sample(derive_seed(ctx.slack.seed, 77), ctx.slack.samples, [&](std::mt19937_64& rng, long) {
        Eigen::VectorXd r = gauss::normal_vector(ctx.coloring.dim(), rng);
        Eigen::VectorXd proj = X * r;
        for (Eigen::Index q = 0; q < proj.size(); ++q)
            if (proj[q] >= out.threshold[q]) {
                ++hits;
                break;
            }
    });
    out.cover = wilson(hits, ctx.slack.samples);
    out.meets_half = out.cover.hi >= delta1 / 2;
    return out;
}

ExtractionResult positive_extraction(const WalkContext& ctx, int i, std::vector<int> U, std::uint64_t seed) {
    if (!ctx.sos) throw PreconditionError("extraction needs the SoS solution behind the coloring");
    ExtractionResult out;
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    erase_sorted(U, i);
    const double floor = 0.25 - ctx.slack.eps_dot;
    double lo = 1.0;
    for (int k : U) {
        double d = ctx.v(i).dot(ctx.v(k));
        if (d >= floor) {
            out.U.push_back(k);
            lo = std::min(lo, d);
        } else {
            out.dropped.push_back(k);
        }
    }
    if (out.U.empty()) return out;
    out.t_eff = std::clamp(lo, std::max(1.0 / 16, floor), 0.25);
    VectorColoring vc = conditioned_coloring_positive(*ctx.sos, i, out.t_eff, out.U, 1e-9);
    out.kappa = vc.kappa;
    out.independent_set = best_rounding(ctx.graph, vc, ctx.slack.attempts, seed);
    return out;
}

ExtractionResult second_level_independent_set(const WalkContext& ctx, int i) {
    std::vector<int> U;
    for (int j : ctx.adj[i]) {
        auto it = ctx.W.find({i, j});
        if (it != ctx.W.end()) U.insert(U.end(), it->second.begin(), it->second.end());
    }
    return positive_extraction(ctx, i, std::move(U), derive_seed(ctx.slack.seed, 200 + i));
}

bool good_k_check(const WalkContext& ctx, int i, int j, int k) {
    if (k == i || !contains(ctx.adj[i], j) || !contains(ctx.adj[j], k)) return false;
    const double cc = ctx.slack.c / (1 + ctx.slack.c), eps = ctx.slack.eps_dot;
    const Eigen::VectorXd vji = ctx.vp(j, i);
    const double a = vji.dot(ctx.vp(j, k));
    if (a < -eps || a > cc + eps) return false;
    const Eigen::VectorXd vkj = ctx.vp(k, j);
    double mass = 0;
    for (int l : ctx.adj[k]) {
        Eigen::VectorXd vkl = ctx.vp(k, l);
        double x = vkl.dot(vkj), y = vkl.dot(vji);
        if (x >= -eps && x <= cc + eps && y >= -cc - eps && y <= cc + eps) mass += ctx.mu_of(k, l);
    }
    return mass >= ctx.slack.mass_floor;
}

double score_nu(const WalkContext& ctx, int i, int j) {
    double s = 0;
    for (int k : ctx.adj[j])
        if (good_k_check(ctx, i, j, k)) s += ctx.mu_of(j, k);
    return ctx.mu_of(i, j) * s;
}

CenterResult select_center(const WalkContext& ctx) {
    CenterResult best;
    for (int i : ctx.vertices()) {
        std::vector<int> S;
        double mass = 0;
        for (int j : ctx.adj[i]) {
            double m = ctx.mu_of(i, j);
            if (m > 0 && score_nu(ctx, i, j) >= m * ctx.slack.mass_floor / 2) {
                S.push_back(j);
                mass += m;
            }
        }
        if (best.i < 0 || mass > best.mass) {
            best.i = i;
            best.S = std::move(S);
            best.mass = mass;
        }
    }
    best.clears = best.mass >= ctx.slack.mass_floor / 12.5;
    return best;
}

double gamma_lower(double c, double eps) { return -(3 * kSqrt3 / 4) * c / (1 + c) - eps; }
double gamma_upper(double c, double eps) { return (kSqrt3 / 2) * c / (1 + c) + eps; }

ThirdLevelResult third_level_sets(const WalkContext& ctx, int i, std::span<const int> S) {
    ThirdLevelResult res;
    res.center = i;
    res.S.assign(S.begin(), S.end());
    const double c = ctx.slack.c, eps = ctx.slack.eps_dot;
    for (int j : S)
        for (int k : ctx.adj[j]) {
            if (res.alpha.count(k) || !good_k_check(ctx, i, j, k)) continue;
            double a = ctx.vp(j, i).dot(ctx.vp(j, k));
            double b = ctx.v(i).dot(ctx.v(k));
            res.alpha[k] = a;
            res.beta[k] = b;
            res.beta_residual = std::max(res.beta_residual, std::abs(b - (0.25 + 0.75 * a)));
        }
    for (const auto& [k, a] : res.alpha) res.W.push_back(k);
    const double lo = gamma_lower(c, eps), hi = gamma_upper(c, eps);
    for (int k : res.W) {
        std::vector<int> V;
        double mass = 0;
        for (int l : ctx.adj[k]) {
            if (l == i) continue;
            double g = ctx.vp(k, l).dot(ctx.v(i));
            res.gamma[{k, l}] = g;
            if (g >= lo && g <= hi) {
                V.push_back(l);
                mass += ctx.mu_of(k, l);
            }
        }
        res.V[k] = std::move(V);
        res.cover_mass[k] = mass;
    }
    res.branch = "none";
    if (res.W.empty()) res.diagnostics = "no good k: W is empty";
    return res;
}

bool third_level_branch_a(std::size_t w_size, double eta0, double t, double c_prime) {
    if (w_size == 0) return false;
    return std::log(static_cast<double>(w_size)) >= -(1 + c_prime) * std::log(gauss::tail(eta0 * t));
}

ThirdLevelResult third_level_independent_set(const WalkContext& ctx, int i, std::span<const int> S,
                                             double c, double c_prime) {
    ThirdLevelResult res = third_level_sets(ctx, i, S);
    if (res.W.empty()) return res;
    const double e0 = params::eta0(c).value;
    res.size_threshold = std::pow(gauss::tail(e0 * ctx.t.t), -(1 + c_prime));
    const bool pick_a = third_level_branch_a(res.W.size(), e0, ctx.t.t, c_prime);

    auto branch_a = [&] {
        ExtractionResult ex = positive_extraction(ctx, i, res.W, derive_seed(ctx.slack.seed, 300 + i));
        res.candidates = ex.U;
        res.kappa = ex.kappa;
        return ex.independent_set;
    };
    auto branch_b = [&] {
        if (!ctx.sos) throw PreconditionError("extraction needs the SoS solution behind the coloring");
        std::set<int> cand;
        for (const auto& [k, V] : res.V) cand.insert(V.begin(), V.end());
        cand.erase(i);
        const double t_neg = std::min(0.0, -0.125 + 0.75 * c / (1 + c) + ctx.slack.eps_dot);
        std::vector<int> keep;
        for (int l : cand)
            if (ctx.v(i).dot(ctx.v(l)) <= t_neg) keep.push_back(l);
        res.candidates = keep;
        if (keep.empty()) return std::vector<int>{};
        VectorColoring vc = conditioned_coloring_negative(*ctx.sos, i, t_neg, keep, 1e-9);
        res.kappa = vc.kappa;
        return best_rounding(ctx.graph, vc, ctx.slack.attempts, derive_seed(ctx.slack.seed, 400 + i));
    };

    res.branch = pick_a ? "A" : "B";
    res.independent_set = pick_a ? branch_a() : branch_b();
    if (res.independent_set.empty()) {
        res.independent_set = pick_a ? branch_b() : branch_a();
        if (!res.independent_set.empty()) {
            res.branch = pick_a ? "B" : "A";
            res.diagnostics = "selected branch was empty; used the other branch";
        } else {
            res.branch = "none";
            res.diagnostics = "both branches produced empty sets";
        }
    }
    if (!is_independent_set(ctx.graph, res.independent_set)) throw Error("third level returned a dependent set");
    return res;
}

}  // namespace sdpcolor
