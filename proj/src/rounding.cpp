#include "sdpcolor/rounding.hpp"

#include <algorithm>
#include <cmath>

#include "sdpcolor/error.hpp"

namespace sdpcolor {

ThresholdParams kms_threshold(double kappa, int delta_g) {
    if (delta_g < 2) throw DegenerateError("KMS threshold needs max degree >= 2");
    if (!(kappa >= 2)) throw PreconditionError("kappa must be >= 2");
    ThresholdParams p;
    p.t = std::sqrt(2.0 * (kappa - 2.0) / kappa * std::log(static_cast<double>(delta_g)));
    p.origin = ThresholdOrigin::Kappa;
    p.parameter = kappa;
    p.delta = delta_g;
    return p;
}

ThresholdParams inefficient_threshold(double c, int delta_g) {
    if (delta_g < 2) throw DegenerateError("inefficient threshold needs max degree >= 2");
    if (!(c >= 0)) throw PreconditionError("inefficiency c must be >= 0");
    const double q = std::pow(static_cast<double>(delta_g), -1.0 / (3.0 * (1.0 + c)));
    if (!(q < 0.5)) throw DegenerateError("tail mass >= 1/2 gives a nonpositive threshold");
    ThresholdParams p;
    p.t = gauss::tail_quantile(q);
    p.origin = ThresholdOrigin::Inefficient;
    p.parameter = c;
    p.delta = delta_g;
    return p;
}

namespace {

std::vector<int> select(const VectorColoring& vc, const Eigen::VectorXd& r, double t) {
    Eigen::VectorXd proj = vc.vectors * r;
    std::vector<int> S;
    for (int k = 0; k < vc.size(); ++k)
        if (proj[k] >= t) S.push_back(vc.vertices[k]);
    std::sort(S.begin(), S.end());
    return S;
}

}  // namespace

RoundingOutcome kms_round_at(const Graph& g, const VectorColoring& vc, double t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RoundingOutcome out;
    out.seed = seed;
    out.t = t;
    out.S = select(vc, gauss::normal_vector(vc.dim(), rng), t);
    std::vector<char> in(g.n(), 0);
    for (int v : out.S) in[v] = 1;
    for (int v : out.S) {
        bool isolated = true;
        for (int u : g.neighbors(v))
            if (in[u]) {
                isolated = false;
                break;
            }
        (isolated ? out.returned : out.removed).push_back(v);
    }
    if (!is_independent_set(g, out.returned)) throw Error("KMS returned a dependent set");
    return out;
}

RoundingOutcome kms_round(const Graph& g, const VectorColoring& vc, double kappa, std::uint64_t seed) {
    int delta = std::max(2, g.induced_max_degree(vc.vertices));
    return kms_round_at(g, vc, kms_threshold(kappa, delta).t, seed);
}

RoundingOutcome kms_prime_round(const Graph& g, const VectorColoring& vc, double t,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RoundingOutcome out;
    out.seed = seed;
    out.t = t;
    out.S = select(vc, gauss::normal_vector(vc.dim(), rng), t);
    out.M = maximal_matching(g, out.S, derive_seed(seed, 1));
    std::vector<char> matched(g.n(), 0);
    for (auto [a, b] : out.M) matched[a] = matched[b] = 1;
    for (int v : out.S) (matched[v] ? out.removed : out.returned).push_back(v);
    if (!is_independent_set(g, out.returned)) throw Error("KMS' returned a dependent set");
    return out;
}

gauss::ConditionalSampler conditional_gaussian(const Eigen::VectorXd& v, double t) {
    return gauss::ConditionalSampler(v, t);
}

KmsPrimeRunner::KmsPrimeRunner(const Graph& g, const VectorColoring& vc, double t)
    : g_(g), vc_(vc), t_(t), row_(g.n(), -1), partner_(g.n(), -1) {
    for (int k = 0; k < vc.size(); ++k) row_[vc.vertices[k]] = k;
}

void KmsPrimeRunner::run(const Eigen::VectorXd& r, std::uint64_t match_seed, int force_select) {
    for (int v : S_) partner_[v] = -1;
    S_ = select(vc_, r, t_);
    if (force_select >= 0 && !std::binary_search(S_.begin(), S_.end(), force_select))
        S_.insert(std::lower_bound(S_.begin(), S_.end(), force_select), force_select);
    for (auto [a, b] : maximal_matching(g_, S_, match_seed)) {
        partner_[a] = b;
        partner_[b] = a;
    }
}

FailureReport estimate_failure(const Graph& g, const VectorColoring& vc, double t, long samples,
                               std::uint64_t seed, std::span<const int> vertices) {
    if (samples < 100) throw PreconditionError("failure estimation needs at least 100 samples");
    FailureReport rep;
    if (vertices.empty())
        rep.vertices = vc.vertices;
    else
        rep.vertices.assign(vertices.begin(), vertices.end());
    KmsPrimeRunner runner(g, vc, t);
    for (int i : rep.vertices) {
        int row = runner.row_of(i);
        if (row < 0) throw PreconditionError("vertex not covered by the coloring");
        if (t > 8.0) {
            rep.p.push_back(wilson(0, 0));
            rep.unestimated.push_back(1);
            continue;
        }
        gauss::ConditionalSampler cond(vc.vectors.row(row).transpose(), t);
        long removed = 0;
        for_each_sample(derive_seed(seed, static_cast<std::uint64_t>(i)), samples,
                        [&](std::mt19937_64& rng, long) {
                            Eigen::VectorXd r = cond(rng);
                            runner.run(r, rng(), i);
                            if (runner.partner(i) >= 0) ++removed;
                        });
        rep.p.push_back(wilson(removed, samples));
        rep.unestimated.push_back(0);
    }
    for (std::size_t k = 0; k < rep.p.size(); ++k)
        if (!rep.unestimated[k] && rep.p[k].p >= 0.5) ++rep.at_least_half;
    rep.fails = !rep.vertices.empty() && 2 * rep.at_least_half >= static_cast<int>(rep.vertices.size());
    return rep;
}

}  // namespace sdpcolor
