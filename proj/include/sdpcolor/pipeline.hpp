#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sdpcolor/graph.hpp"
#include "sdpcolor/params.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/vector_coloring.hpp"
#include "sdpcolor/walks.hpp"

namespace sdpcolor {

enum class EventKind { LargeIS, SmallNbhd, SameColor, Wigderson2Color, Recurse };
std::string event_kind_name(EventKind k);
EventKind event_kind_from_name(const std::string& s);

// One progress step. Vertex ids are global.
struct ProgressEvent {
    EventKind kind = EventKind::LargeIS;
    std::vector<int> vertices;
    std::vector<int> sides;   // Wigderson: 0/1 per vertex, otherwise empty
    int center = -1;          // Wigderson pivot
    int first_color = 0;
    int colors_consumed = 0;
    std::string method;       // which ladder stage produced a Large-IS
};

enum class ThresholdPolicy { Kappa, CInefficient };
std::string policy_name(ThresholdPolicy p);
ThresholdPolicy policy_from_name(const std::string& s);

// Inefficient threshold by default; falls back to the kappa threshold when the
// degree is too small for it.
ThresholdParams choose_threshold(ThresholdPolicy policy, double c, double kappa, int delta);

struct LadderConfig {
    ThresholdPolicy policy = ThresholdPolicy::CInefficient;
    double c = params::kDefaultC;
    double c_prime = params::kDefaultCPrime;
    SlackConfig slack;
    bool walks = true;          // try the walk levels when KMS' fails
    bool force_walks = false;   // try them even when it does not
    long context_samples = 300;
    int failure_vertices = 64;
    long failure_samples = 100;
    int attempts = 64;          // KMS' and KMS draws, best kept
};

struct LadderOutcome {
    std::vector<int> set;  // local ids of the graph passed in
    std::string method;    // level-3, level-2, kms-prime, kms or empty
    std::string branch = "none";
    double t = 0;
    long level3 = -1, level2 = -1, kms_prime = 0, kms = 0;  // -1: not attempted
    std::vector<std::string> diagnostics;
};

// Fallback ladder: third level, second level, KMS', KMS. The largest set wins
// and ties go to the earlier stage. `strict`/`sos` enable the walk levels.
LadderOutcome run_ladder(const Graph& h, const VectorColoring& vc,
                         const StrictVector3Coloring* strict,
                         std::shared_ptr<const SosSolution> sos, const LadderConfig& cfg,
                         std::uint64_t seed);

// Wigderson's dense step on the max-degree vertex, if its degree reaches the
// threshold. Throws NotThreeColorableError if the neighbourhood has an odd cycle.
std::optional<ProgressEvent> wigderson_dense_step(const Graph& g, double degree_threshold,
                                                  int first_color = 0);

struct ColorConfig {
    LadderConfig ladder;
    double degree_threshold = -1;  // <= 0: n^((3+3c)/(5+3c))
    int walk_max_n = 150;
    int sdp_max_n = 120;
    std::uint64_t seed = 1;
};

struct ColorResult {
    ColorAssignment assignment;
    std::vector<ProgressEvent> events;
    std::vector<std::string> diagnostics;
    int colors = 0;
};

double default_degree_threshold(int n, double c);

// planted: a known proper 3-coloring backing the SoS solution; without it the
// numeric SDP is used on small graphs and greedy otherwise.
ColorResult color_graph(const Graph& g, const ColorConfig& cfg,
                        const std::optional<std::vector<int>>& planted = std::nullopt);
ColorAssignment replay_events(int n, const std::vector<ProgressEvent>& events);

// Baselines.
int greedy_color_count(const Graph& g);
ColorAssignment kms_coloring(const Graph& g, const VectorColoring& vc, std::uint64_t seed,
                             int attempts = 8);

// Strict vectors of the symmetrized planted coloring.
std::shared_ptr<const SosSolution> planted_sos(const Graph& g, const std::vector<int>& planted);

struct ExperimentConfig {
    int n = 300;
    std::vector<double> degrees{20.0};
    std::array<double, 3> weights{1.0 / 3, 1.0 / 3, 1.0 / 3};
    std::vector<std::uint64_t> seeds{1};
    ThresholdPolicy policy = ThresholdPolicy::CInefficient;
    double c = params::kDefaultC;
    double c_prime = params::kDefaultCPrime;
    SlackConfig slack;
    int draws = 20;           // rounding draws averaged per method
    int walk_max_n = 150;     // walk levels only at or below this n
    long context_samples = 300;
    bool dry_run = false;
    bool timing = false;      // runtime columns break byte-identical output
    std::string out;          // empty: caller's stream
};

void validate_experiment(const ExperimentConfig& cfg);
std::vector<std::string> experiment_header(const ExperimentConfig& cfg);
// Writes CSV rows (header first). Deterministic unless cfg.timing is set.
void run_experiment(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace sdpcolor
