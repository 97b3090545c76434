#include "sdpcolor/covers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sdpcolor/error.hpp"
#include "sdpcolor/gaussian.hpp"

namespace sdpcolor {

CoverEstimate estimate_cover_prob(const Eigen::MatrixXd& X, double s, long samples, std::uint64_t seed) {
    if (samples < 1000) throw PreconditionError("cover estimation needs at least 1000 samples");
    long hits = 0;
    for_each_sample(seed, samples, [&](std::mt19937_64& rng, long) {
        Eigen::VectorXd r = gauss::normal_vector(static_cast<int>(X.cols()), rng);
        if (X.rows() > 0 && (X * r).maxCoeff() >= s) ++hits;
    });
    return {wilson(hits, samples), s, samples, seed};
}

double inefficiency(long size, double s) {
    if (size < 1) throw PreconditionError("inefficiency needs a nonempty family");
    const double q = gauss::tail(s);
    if (!(q < 1.0)) throw PreconditionError("inefficiency undefined when tail(s) >= 1");
    return std::log(static_cast<double>(size)) / -std::log(q) - 1.0;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::GreedyArgmax: return "greedy-argmax";
        case Provenance::KmsPrime: return "kms-prime";
        default: return "explicit";
    }
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "greedy-argmax") return Provenance::GreedyArgmax;
    if (name == "kms-prime") return Provenance::KmsPrime;
    if (name == "explicit") return Provenance::Explicit;
    throw PreconditionError("unknown packing provenance " + name);
}

double PackingMeasure::total() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

double PackingMeasure::mass_of(std::span<const int> positions) const {
    double m = 0;
    for (int k : positions) m += weights[k];
    return m;
}

PackingMeasure explicit_packing(std::vector<double> weights) {
    PackingMeasure mu;
    mu.indices.resize(weights.size());
    std::iota(mu.indices.begin(), mu.indices.end(), 0);
    mu.weights = std::move(weights);
    for (double w : mu.weights)
        if (w < 0) throw PreconditionError("packing weights must be nonnegative");
    return mu;
}

PackingMeasure greedy_packing(const Eigen::MatrixXd& X, double s, long samples, std::uint64_t seed) {
    if (samples < 1000) throw PreconditionError("packing estimation needs at least 1000 samples");
    std::vector<long> counts(X.rows(), 0);
    for_each_sample(seed, samples, [&](std::mt19937_64& rng, long) {
        Eigen::VectorXd r = gauss::normal_vector(static_cast<int>(X.cols()), rng);
        if (X.rows() == 0) return;
        Eigen::VectorXd proj = X * r;
        Eigen::Index best = 0;
        for (Eigen::Index k = 1; k < proj.size(); ++k)
            if (proj[k] > proj[best]) best = k;
        if (proj[best] >= s) ++counts[best];
    });
    PackingMeasure mu;
    mu.indices.resize(X.rows());
    std::iota(mu.indices.begin(), mu.indices.end(), 0);
    for (long c : counts) mu.weights.push_back(static_cast<double>(c) / samples);
    mu.s = s;
    mu.samples = samples;
    mu.seed = seed;
    mu.provenance = Provenance::GreedyArgmax;
    return mu;
}

KmsPrimePacking packing_from_kms_prime(const Graph& g, const VectorColoring& vc, int i, double t,
                                       long samples, std::uint64_t seed) {
    if (g.degree(i) < 1) throw PreconditionError("packing needs a vertex of degree >= 1");
    KmsPrimeRunner runner(g, vc, t);
    const int row = runner.row_of(i);
    if (row < 0) throw PreconditionError("vertex not covered by the coloring");
    KmsPrimePacking out;
    out.vertex = i;
    const auto& nb = g.neighbors(i);
    out.counts.assign(nb.size(), 0);
    long removed = 0;
    if (t > 8.0) {
        out.unestimated = true;
    } else {
        gauss::ConditionalSampler cond(vc.vectors.row(row).transpose(), t);
        for_each_sample(seed, samples, [&](std::mt19937_64& rng, long) {
            Eigen::VectorXd r = cond(rng);
            runner.run(r, rng(), i);
            int j = runner.partner(i);
            if (j < 0) return;
            ++removed;
            auto it = std::lower_bound(nb.begin(), nb.end(), j);
            ++out.counts[it - nb.begin()];
        });
    }
    out.mu.indices = nb;
    for (long c : out.counts) out.mu.weights.push_back(samples > 0 ? static_cast<double>(c) / samples : 0.0);
    out.mu.s = t;
    out.mu.samples = samples;
    out.mu.seed = seed;
    out.mu.provenance = Provenance::KmsPrime;
    out.p = wilson(removed, samples);
    return out;
}

PackingCheck check_packing_property(const Eigen::MatrixXd& X, const PackingMeasure& mu,
                                    const std::vector<std::vector<int>>& subsets, long samples,
                                    std::uint64_t seed) {
    PackingCheck pc;
    pc.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        Eigen::MatrixXd sub(static_cast<Eigen::Index>(subsets[q].size()), X.cols());
        for (std::size_t k = 0; k < subsets[q].size(); ++k)
            sub.row(static_cast<Eigen::Index>(k)) = X.row(subsets[q][k]);
        CoverEstimate ce = estimate_cover_prob(sub, mu.s, samples, derive_seed(seed, q));
        double excess = mu.mass_of(subsets[q]) - ce.delta.hi;
        pc.worst_excess = std::max(pc.worst_excess, excess);
        if (excess > 0) ++pc.violations;
        ++pc.subsets;
    }
    return pc;
}

SpreadReport check_spread(const Eigen::MatrixXd& X, std::span<const double> mu, double lambda,
                          double p, const Eigen::MatrixXd& directions) {
    if (directions.rows() == 0) throw PreconditionError("spread check needs at least one direction");
    SpreadReport rep;
    Eigen::MatrixXd dots = directions * X.transpose();
    for (Eigen::Index d = 0; d < directions.rows(); ++d) {
        double m = 0;
        for (Eigen::Index k = 0; k < X.rows(); ++k)
            if (dots(d, k) >= lambda) m += mu[k];
        rep.masses.push_back(m);
        if (rep.worst < 0 || m > rep.worst_mass) {
            rep.worst = static_cast<int>(d);
            rep.worst_mass = m;
        }
    }
    rep.pass = rep.worst_mass <= p;
    return rep;
}

double boosted_lambda(double lambda, double c, double eps, int sigma) {
    return std::sqrt(lambda * c / (1 + c) * (1 + eps) * (1 + 1 / (lambda * sigma)));
}

namespace {

// Shared loop. When `self` is set, the trigger mass is measured on the
// surviving part of X1 itself; otherwise on the fixed family X2.
PruneResult prune_loop(const Eigen::MatrixXd& X1, std::span<const double> mu1,
                       const Eigen::MatrixXd& X2, std::span<const double> mu2, bool self,
                       double lambda, int sigma, double alpha, double lambda_prime) {
    PruneResult res;
    res.lambda_prime = lambda_prime;
    res.alpha = alpha;
    const Eigen::Index m = X1.rows();
    std::vector<char> alive(m, 1);
    Eigen::MatrixXd self_dots = X1 * X1.transpose();
    Eigen::MatrixXd cross = self ? Eigen::MatrixXd() : Eigen::MatrixXd(X1 * X2.transpose());
    const double limit = alpha > 0 ? std::floor(sigma / alpha) : 0.0;

    auto trigger_mass = [&](Eigen::Index u) {
        double mass = 0;
        if (self) {
            for (Eigen::Index k = 0; k < m; ++k)
                if (alive[k] && self_dots(u, k) >= lambda_prime) mass += mu1[k];
        } else {
            for (Eigen::Index k = 0; k < X2.rows(); ++k)
                if (cross(u, k) >= lambda_prime) mass += mu2[k];
        }
        return mass;
    };

    while (true) {
        Eigen::Index u = -1;
        for (Eigen::Index k = 0; k < m; ++k)
            if (alive[k] && trigger_mass(k) >= 2 * alpha) {
                u = k;
                break;
            }
        if (u < 0) break;
        if (static_cast<double>(res.triggered.size()) >= limit) {
            res.exhausted = true;
            break;
        }
        double removed = 0;
        for (Eigen::Index k = 0; k < m; ++k)
            if (alive[k] && self_dots(u, k) >= lambda) {
                alive[k] = 0;
                removed += mu1[k];
            }
        res.triggered.push_back(static_cast<int>(u));
        res.removed_mass.push_back(removed);
    }
    res.iterations = static_cast<int>(res.triggered.size());
    for (Eigen::Index k = 0; k < m; ++k)
        if (alive[k]) res.kept.push_back(static_cast<int>(k));
    return res;
}

}  // namespace

PruneResult boost_spread(const Eigen::MatrixXd& X, std::span<const double> mu, double lambda,
                         double p, int sigma, double alpha, double lambda_prime) {
    if (X.rows() > 0 && !check_spread(X, mu, lambda, p + 1e-12, X).pass)
        throw PreconditionError("packing is not (lambda, p, X)-spread");
    return prune_loop(X, mu, X, mu, true, lambda, sigma, alpha, lambda_prime);
}

PruneResult prune_against(const Eigen::MatrixXd& X1, std::span<const double> mu1,
                          const Eigen::MatrixXd& X2, std::span<const double> mu2, double lambda,
                          double p, int sigma, double alpha, double lambda_prime) {
    if (X1.rows() > 0 && !check_spread(X1, mu1, lambda, p + 1e-12, X1).pass)
        throw PreconditionError("first packing is not (lambda, p, X1)-spread");
    return prune_loop(X1, mu1, X2, mu2, false, lambda, sigma, alpha, lambda_prime);
}

SymmetricPruneResult symmetric_prune(const Eigen::MatrixXd& X1, std::span<const double> mu1,
                                     const Eigen::MatrixXd& X2, std::span<const double> mu2,
                                     double s, const SymmetricPruneParams& params) {
    if (!(s > 1)) throw PreconditionError("symmetric prune needs threshold s > 1");
    SymmetricPruneResult out;
    const Eigen::Index m = X1.rows();
    out.Y.resize(2 * m, X1.cols());
    out.Y.topRows(m) = X1;
    out.Y.bottomRows(m) = -X1;

    // mu_1 of the vector -v, where v is row k of Y
    std::vector<double> mu_neg(2 * m, 0.0);
    for (Eigen::Index a = 0; a < 2 * m; ++a)
        for (Eigen::Index b = 0; b < m; ++b)
            if ((out.Y.row(a) + X1.row(b)).cwiseAbs().maxCoeff() < 1e-12) mu_neg[a] += mu1[b];
    out.mu_Y.resize(2 * m);
    for (Eigen::Index a = 0; a < 2 * m; ++a) {
        double own = 0;
        for (Eigen::Index b = 0; b < m; ++b)
            if ((out.Y.row(a) - X1.row(b)).cwiseAbs().maxCoeff() < 1e-12) own += mu1[b];
        out.mu_Y[a] = (own + mu_neg[a]) / 2;
    }

    const double ls = std::log(s);
    out.sigma = std::max(1, static_cast<int>(std::floor(ls)));
    out.eps = ls * ls / s;
    out.lambda = params.lambda > 0 ? params.lambda : params.c / (1 + params.c);
    out.p = params.p > 0 ? params.p : check_spread(out.Y, out.mu_Y, out.lambda, 1.0, out.Y).worst_mass;
    out.alpha = 2 * out.p * out.sigma * ls;
    out.lambda_prime = boosted_lambda(out.lambda, params.c, out.eps, out.sigma);

    out.boost = boost_spread(out.Y, out.mu_Y, out.lambda, out.p, out.sigma, out.alpha, out.lambda_prime);
    std::vector<char> inY1(2 * m, 0);
    for (int k : out.boost.kept) inY1[k] = 1;
    std::vector<int> sym;
    for (Eigen::Index a = 0; a < 2 * m; ++a)
        if (inY1[a] && inY1[(a + m) % (2 * m)]) sym.push_back(static_cast<int>(a));

    Eigen::MatrixXd Ysym(static_cast<Eigen::Index>(sym.size()), X1.cols());
    std::vector<double> mu_sym;
    for (std::size_t k = 0; k < sym.size(); ++k) {
        Ysym.row(static_cast<Eigen::Index>(k)) = out.Y.row(sym[k]);
        mu_sym.push_back(out.mu_Y[sym[k]]);
    }
    double p1 = Ysym.rows() > 0 ? check_spread(Ysym, mu_sym, out.lambda, 1.0, Ysym).worst_mass : 0.0;
    out.against = prune_against(Ysym, mu_sym, X2, mu2, out.lambda, p1, out.sigma, out.alpha,
                                out.lambda_prime);
    out.exhausted = out.boost.exhausted || out.against.exhausted;

    std::vector<char> inY2(2 * m, 0);
    for (int k : out.against.kept) inY2[sym[k]] = 1;
    for (Eigen::Index a = 0; a < m; ++a)
        if (inY2[a] && inY2[a + m]) out.kept.push_back(static_cast<int>(a));

    if (out.kept.empty() || X2.rows() == 0) {
        out.post_spread_ok = true;
    } else {
        Eigen::MatrixXd dirs(2 * static_cast<Eigen::Index>(out.kept.size()), X1.cols());
        for (std::size_t k = 0; k < out.kept.size(); ++k) {
            dirs.row(2 * static_cast<Eigen::Index>(k)) = X1.row(out.kept[k]);
            dirs.row(2 * static_cast<Eigen::Index>(k) + 1) = -X1.row(out.kept[k]);
        }
        out.post_spread_ok = check_spread(X2, mu2, out.lambda_prime, 2 * out.alpha, dirs).pass;
    }
    return out;
}

double intersection_bound(int ell, int k) {
    return std::pow(4.0 * ell / (std::exp(1.0) * k), ell);
}

std::optional<IntersectionResult> find_intersection_subset(std::span<const double> mu,
                                                           const std::vector<std::vector<int>>& subsets,
                                                           int ell) {
    const int k = static_cast<int>(subsets.size());
    if (ell < 1 || ell > k) throw PreconditionError("intersection size must be in [1, k]");
    double total = std::accumulate(mu.begin(), mu.end(), 0.0);
    if (total > 1 + 1e-12) throw PreconditionError("measure exceeds 1");
    std::vector<std::vector<char>> member(k, std::vector<char>(mu.size(), 0));
    double sum = 0;
    for (int q = 0; q < k; ++q)
        for (int x : subsets[q]) {
            if (!member[q][x]) sum += mu[x];
            member[q][x] = 1;
        }
    if (sum < 2.0 * ell - 1e-12) throw PreconditionError("subset masses sum below 2*ell");

    IntersectionResult best;
    best.bound = intersection_bound(ell, k);
    best.mass = -1;
    auto mass_of = [&](const std::vector<char>& mask) {
        double m = 0;
        for (std::size_t x = 0; x < mask.size(); ++x)
            if (mask[x]) m += mu[x];
        return m;
    };

    if (k <= 20) {
        std::vector<int> chosen;
        std::function<void(int, const std::vector<char>&)> dfs = [&](int start, const std::vector<char>& mask) {
            if (static_cast<int>(chosen.size()) == ell) {
                double m = mass_of(mask);
                if (m > best.mass) {
                    best.mass = m;
                    best.S = chosen;
                }
                return;
            }
            for (int q = start; q <= k - (ell - static_cast<int>(chosen.size())); ++q) {
                std::vector<char> next(mask.size());
                for (std::size_t x = 0; x < mask.size(); ++x) next[x] = mask[x] & member[q][x];
                chosen.push_back(q);
                dfs(q + 1, next);
                chosen.pop_back();
            }
        };
        dfs(0, std::vector<char>(mu.size(), 1));
    } else {
        std::vector<char> mask(mu.size(), 1);
        std::vector<char> used(k, 0);
        for (int step = 0; step < ell; ++step) {
            int pick = -1;
            double pick_mass = -1;
            for (int q = 0; q < k; ++q) {
                if (used[q]) continue;
                double m = 0;
                for (std::size_t x = 0; x < mask.size(); ++x)
                    if (mask[x] && member[q][x]) m += mu[x];
                if (m > pick_mass) {
                    pick_mass = m;
                    pick = q;
                }
            }
            used[pick] = 1;
            best.S.push_back(pick);
            for (std::size_t x = 0; x < mask.size(); ++x) mask[x] &= member[pick][x];
        }
        std::sort(best.S.begin(), best.S.end());
        best.mass = mass_of(mask);
    }
    if (best.mass + 1e-15 < best.bound) return std::nullopt;
    return best;
}

CompositionReport compose_covers_check(const Eigen::MatrixXd& X, const std::vector<Eigen::MatrixXd>& Y,
                                       double c, double s1, double s2, double delta2, long samples,
                                       std::uint64_t seed) {
    if (static_cast<Eigen::Index>(Y.size()) != X.rows())
        throw PreconditionError("need one family per cover vector");
    if (!(delta2 > 0 && delta2 < 1)) throw PreconditionError("delta2 must lie in (0,1)");
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < Y[i].rows(); ++j)
            if (std::abs(Y[i].row(j).dot(X.row(i))) > 1e-8)
                throw PreconditionError("family vector not orthogonal to its cover vector");

    CompositionReport rep;
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        auto ce = estimate_cover_prob(Y[i], s2, samples, derive_seed(seed, 1000 + i));
        rep.delta2.push_back(ce.delta);
        if (ce.delta.hi < delta2) throw PreconditionError("family cover probability below delta2");
    }
    rep.a = std::sqrt(c * (1 + 1 / s1)) * s1 - gauss::quantile(delta2);
    std::vector<Eigen::VectorXd> norms;
    for (const auto& Yi : Y) norms.push_back(Yi.rowwise().norm());

    long hit1 = 0, hit_joint = 0;
    for_each_sample(seed, samples, [&](std::mt19937_64& rng, long) {
        Eigen::VectorXd r = gauss::normal_vector(static_cast<int>(X.cols()), rng);
        Eigen::VectorXd px = X * r;
        bool any1 = false, joint = false;
        for (Eigen::Index i = 0; i < X.rows(); ++i) {
            if (px[i] < s1) continue;
            any1 = true;
            Eigen::VectorXd py = Y[i] * r;
            for (Eigen::Index j = 0; j < py.size(); ++j)
                if (py[j] >= s2 - rep.a * norms[i][j]) {
                    joint = true;
                    break;
                }
            if (joint) break;
        }
        hit1 += any1;
        hit_joint += joint;
    });
    rep.delta1 = wilson(hit1, samples);
    rep.joint = wilson(hit_joint, samples);
    rep.correction = static_cast<double>(X.rows()) * gauss::tail(s1) *
                     gauss::tail(std::sqrt(c * (1 + 1 / s1)) * s1);
    rep.lemma_bound = rep.delta1.p - rep.correction;
    rep.meets_delta1 = rep.joint.p >= rep.delta1.p - rep.delta1.radius();
    rep.meets_lemma = rep.joint.hi >= rep.lemma_bound;
    return rep;
}

ProjectionReport projection_check(const Eigen::MatrixXd& X, const Eigen::VectorXd& v0, double s,
                                  double rho, long samples, std::uint64_t seed) {
    if (std::abs(v0.norm() - 1) > 1e-9) throw PreconditionError("projection direction must be unit");
    Eigen::MatrixXd P = X - (X * v0) * v0.transpose();
    long before = 0, after = 0;
    for_each_sample(seed, samples, [&](std::mt19937_64& rng, long) {
        Eigen::VectorXd r = gauss::normal_vector(static_cast<int>(X.cols()), rng);
        before += (X * r).maxCoeff() >= s;
        after += (P * r).maxCoeff() >= s - rho;
    });
    ProjectionReport rep;
    rep.before = wilson(before, samples);
    rep.after = wilson(after, samples);
    rep.drop = rep.before.p - rep.after.p;
    rep.bound = 2 * gauss::tail(rho);
    rep.pass = rep.drop <= rep.bound + rep.before.radius() + rep.after.radius();
    return rep;
}

}  // namespace sdpcolor
