#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "framelab/defect.hpp"
#include "framelab/frame_algebra.hpp"

namespace framelab {

using nlohmann::json;

// {"alphabet": ["a", ...], "worlds": n, "relations": {"a": [[0,1], ...]}}
// Relations absent from the object are empty; unknown names are an error.
Frame frame_from_json(const json& j);
json frame_to_json(const Frame& f);

Frame load_frame(const std::string& path);
void save_frame(const Frame& f, const std::string& path);

// {"p0": [0, 1], "p3": [2]}; indices may be sparse, gaps are empty sets.
std::vector<WorldSet> valuation_from_json(const json& j, int n);

// "0,1|2" (blocks split by '|', worlds by ','); "" is the empty partition.
Partition partition_from_text(const std::string& text, int n);
std::string partition_to_text(const Partition& p);

json worldset_to_json(const WorldSet& s);
json partition_to_json(const Partition& p);

// Trace serialization, including verifier verdicts; stable byte-for-byte
// for equal traces.
json trace_to_json(const QesTrace& t);

// {"map": [...]} sidecar for world maps.
json map_to_json(const std::vector<int>& map);

json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

// Pretty-printed with sorted keys and a trailing newline.
std::string render_json(const json& j);

}  // namespace framelab
