#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdpcolor {

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }
    int max_degree() const;
    bool has_edge(int i, int j) const;
    std::vector<Edge> edges() const;

    // Max degree of the subgraph induced by `vertices`.
    int induced_max_degree(std::span<const int> vertices) const;
    Graph induced(std::span<const int> vertices) const;

private:
    std::vector<std::vector<int>> adj_;
    long m_ = 0;
};

struct PlantedModel {
    double weights[3] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    double edge_prob = 0.0;
};

struct PlantedInstance {
    Graph graph;
    std::vector<int> planted;
    std::uint64_t seed = 0;
    PlantedModel model;
};

// Partial coloring; -1 marks an uncolored vertex.
struct ColorAssignment {
    std::vector<int> color;
    int colored_count() const;
    int palette_size() const;
    bool is_proper(const Graph& g) const;
};

PlantedInstance generate_planted(int n, const double (&weights)[3], double edge_prob,
                                 std::uint64_t seed);
// edge probability giving expected degree d in a balanced planted graph
double edge_prob_for_degree(int n, double d);

std::vector<int> neighborhood(const Graph& g, int i, int level);
std::vector<Edge> maximal_matching(const Graph& g, std::span<const int> subset,
                                   std::uint64_t seed);
bool is_independent_set(const Graph& g, std::span<const int> S);
bool is_proper_coloring(const Graph& g, std::span<const int> coloring);
std::optional<Edge> first_conflict(const Graph& g, std::span<const int> coloring);

// Smallest-available-color greedy in vertex order.
std::vector<int> greedy_coloring(const Graph& g);
// Random walk over proper 3-colorings starting from `start`.
std::vector<int> glauber_recolor(const Graph& g, std::vector<int> start, long steps,
                                 std::uint64_t seed);

struct GraphFile {
    Graph graph;
    std::optional<std::vector<int>> planted;
};
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const std::vector<int>* planted = nullptr);

}  // namespace sdpcolor
