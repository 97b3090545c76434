#include "sdpcolor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "sdpcolor/error.hpp"

namespace sdpcolor {

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(i) + " " +
                                    std::to_string(j));
        if (i == j) throw PreconditionError("self-loop at vertex " + std::to_string(i));
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw PreconditionError("duplicate edge");
        m_ += static_cast<long>(a.size());
    }
    m_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(int i, int j) const {
    const auto& a = adj_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int i = 0; i < n(); ++i)
        for (int j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

int Graph::induced_max_degree(std::span<const int> vertices) const {
    std::vector<char> in(n(), 0);
    for (int v : vertices) in[v] = 1;
    int best = 0;
    for (int v : vertices) {
        int d = 0;
        for (int u : adj_[v]) d += in[u];
        best = std::max(best, d);
    }
    return best;
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> pos(n(), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) pos[vertices[k]] = static_cast<int>(k);
    std::vector<Edge> es;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        for (int u : adj_[vertices[k]])
            if (pos[u] > static_cast<int>(k)) es.emplace_back(static_cast<int>(k), pos[u]);
    return Graph(static_cast<int>(vertices.size()), es);
}

int ColorAssignment::colored_count() const {
    return static_cast<int>(std::count_if(color.begin(), color.end(), [](int c) { return c >= 0; }));
}

int ColorAssignment::palette_size() const {
    std::vector<int> used;
    for (int c : color)
        if (c >= 0) used.push_back(c);
    std::sort(used.begin(), used.end());
    return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
}

bool ColorAssignment::is_proper(const Graph& g) const {
    for (int i = 0; i < g.n(); ++i)
        for (int j : g.neighbors(i))
            if (i < j && color[i] >= 0 && color[i] == color[j]) return false;
    return true;
}

double edge_prob_for_degree(int n, double d) {
    double p = d / (n - n / 3.0);
    return std::clamp(p, 0.0, 1.0);
}

PlantedInstance generate_planted(int n, const double (&weights)[3], double edge_prob,
                                 std::uint64_t seed) {
    if (n < 3) throw PreconditionError("planted instance needs n >= 3");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw PreconditionError("edge_prob outside [0,1]");
    double total = weights[0] + weights[1] + weights[2];
    if (std::abs(total - 1.0) > 1e-9 || weights[0] < 0 || weights[1] < 0 || weights[2] < 0)
        throw PreconditionError("class weights must be nonnegative and sum to 1");

    int sizes[3];
    sizes[0] = static_cast<int>(std::lround(n * weights[0]));
    sizes[1] = static_cast<int>(std::lround(n * weights[1]));
    sizes[2] = n - sizes[0] - sizes[1];
    if (sizes[2] < 0) {
        sizes[1] += sizes[2];
        sizes[2] = 0;
    }
    for (int c = 0; c < 3; ++c)
        if (weights[c] > 0 && sizes[c] == 0)
            throw PreconditionError("n too small: a planted class would be empty");

    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> planted(n);
    int k = 0;
    for (int c = 0; c < 3; ++c)
        for (int s = 0; s < sizes[c]; ++s) planted[order[k++]] = c;

    // Walk pairs (i<j) in lexicographic order, jumping by geometric gaps.
    std::vector<Edge> edges;
    if (edge_prob > 0) {
        const long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
        std::geometric_distribution<long long> gap(edge_prob);
        long long idx = -1;
        int i = 0;
        long long row_start = 0;  // linear index of pair (i, i+1)
        while (true) {
            idx += 1 + (edge_prob < 1.0 ? gap(rng) : 0);
            if (idx >= total_pairs) break;
            while (idx >= row_start + (n - 1 - i)) {
                row_start += n - 1 - i;
                ++i;
            }
            int j = i + 1 + static_cast<int>(idx - row_start);
            if (planted[i] != planted[j]) edges.emplace_back(i, j);
        }
    }

    PlantedInstance inst;
    inst.graph = Graph(n, edges);
    inst.planted = std::move(planted);
    inst.seed = seed;
    std::copy(std::begin(weights), std::end(weights), inst.model.weights);
    inst.model.edge_prob = edge_prob;
    return inst;
}

std::vector<int> neighborhood(const Graph& g, int i, int level) {
    if (i < 0 || i >= g.n()) throw PreconditionError("vertex out of range");
    if (level < 1) throw PreconditionError("neighborhood level must be >= 1");
    std::vector<int> cur{i};
    std::vector<char> mark(g.n());
    for (int step = 0; step < level; ++step) {
        std::fill(mark.begin(), mark.end(), 0);
        std::vector<int> next;
        for (int u : cur)
            for (int w : g.neighbors(u))
                if (!mark[w]) {
                    mark[w] = 1;
                    next.push_back(w);
                }
        std::sort(next.begin(), next.end());
        cur = std::move(next);
    }
    return cur;
}

std::vector<Edge> maximal_matching(const Graph& g, std::span<const int> subset,
                                   std::uint64_t seed) {
    std::vector<char> in(g.n(), 0);
    for (int v : subset) in[v] = 1;
    std::vector<Edge> cand;
    for (int v : subset)
        for (int u : g.neighbors(v))
            if (in[u] && v < u) cand.emplace_back(v, u);
    std::sort(cand.begin(), cand.end());
    std::mt19937_64 rng(seed);
    std::shuffle(cand.begin(), cand.end(), rng);
    std::vector<char> used(g.n(), 0);
    std::vector<Edge> out;
    for (auto [a, b] : cand)
        if (!used[a] && !used[b]) {
            used[a] = used[b] = 1;
            out.emplace_back(a, b);
        }
    return out;
}

bool is_independent_set(const Graph& g, std::span<const int> S) {
    std::vector<char> in(g.n(), 0);
    for (int v : S) in[v] = 1;
    for (int v : S)
        for (int u : g.neighbors(v))
            if (in[u]) return false;
    return true;
}

std::optional<Edge> first_conflict(const Graph& g, std::span<const int> coloring) {
    for (int i = 0; i < g.n(); ++i)
        for (int j : g.neighbors(i))
            if (i < j && coloring[i] >= 0 && coloring[i] == coloring[j]) return Edge{i, j};
    return std::nullopt;
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
    return !first_conflict(g, coloring).has_value();
}

std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    std::vector<int> seen(g.n() + 1, -1);
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v))
            if (color[u] >= 0) seen[color[u]] = v;
        int c = 0;
        while (seen[c] == v) ++c;
        color[v] = c;
    }
    return color;
}

std::vector<int> glauber_recolor(const Graph& g, std::vector<int> start, long steps,
                                 std::uint64_t seed) {
    if (!is_proper_coloring(g, start)) throw PreconditionError("glauber start is not proper");
    if (g.n() == 0) return start;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.n() - 1);
    for (long s = 0; s < steps; ++s) {
        int v = pick(rng);
        bool blocked[3] = {false, false, false};
        for (int u : g.neighbors(v)) blocked[start[u]] = true;
        int options[3], k = 0;
        for (int c = 0; c < 3; ++c)
            if (!blocked[c]) options[k++] = c;
        start[v] = options[std::uniform_int_distribution<int>(0, k - 1)(rng)];
    }
    return start;
}

GraphFile read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<Edge> edges;
    std::vector<int> planted;
    bool has_planted = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto bad = [&] { return PreconditionError("malformed graph line " + std::to_string(lineno)); };
        if (tag == "p") {
            if (!(ls >> n >> m) || n < 0) throw bad();
            planted.assign(n, -1);
        } else if (tag == "e") {
            int i, j;
            if (n < 0 || !(ls >> i >> j)) throw bad();
            edges.emplace_back(i, j);
        } else if (tag == "c") {
            int i, c;
            if (n < 0 || !(ls >> i >> c) || i < 0 || i >= n || c < 0 || c > 2) throw bad();
            planted[i] = c;
            has_planted = true;
        } else {
            throw bad();
        }
    }
    if (n < 0) throw PreconditionError("graph file has no 'p' header");
    if (static_cast<long>(edges.size()) != m)
        throw PreconditionError("edge count does not match header");
    GraphFile out{Graph(n, edges), std::nullopt};
    if (has_planted) out.planted = std::move(planted);
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open graph file " + path);
    return read_graph(f);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<int>* planted) {
    out << "p " << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
    if (planted)
        for (int i = 0; i < g.n(); ++i) out << "c " << i << ' ' << (*planted)[i] << '\n';
}

}  // namespace sdpcolor
