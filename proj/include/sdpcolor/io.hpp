#pragma once

#include <string>

#include "json.hpp"

#include "sdpcolor/covers.hpp"
#include "sdpcolor/params.hpp"
#include "sdpcolor/pipeline.hpp"
#include "sdpcolor/rounding.hpp"
#include "sdpcolor/sos.hpp"
#include "sdpcolor/vector_coloring.hpp"
#include "sdpcolor/walks.hpp"

// JSON encodings used by the CLI and the Python module.
namespace sdpcolor::io {

using json = nlohmann::json;

json to_json(const ColoringMixture& m);  // [{coloring, weight}]
ColoringMixture mixture_from_json(const json& j);

json to_json(const SdpResult& r);  // solver report, without the vectors
json to_json(const VectorColoring& vc);
VectorColoring vector_coloring_from_json(const json& j);

json to_json(const RoundingOutcome& r);
json to_json(const PackingMeasure& p);
PackingMeasure packing_from_json(const json& j);

json to_json(const SlackConfig& s);
SlackConfig slack_from_json(const json& j, SlackConfig base = {});

json to_json(const ExperimentConfig& c);
ExperimentConfig experiment_from_json(const json& j);

json to_json(const ProgressEvent& e);
ProgressEvent event_from_json(const json& j);
json to_json(const ColorResult& r);

json to_json(const params::ParamPoint& p);

// Checkpoint of a pruned walk context. The SoS solution is not stored.
json checkpoint(const WalkContext& ctx);
WalkContext restore_checkpoint(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sdpcolor::io
