#pragma once

// JSON forms of graphs, arrow graphs, complexes, propagators and reports.
// Integers that may exceed 64 bits and all rationals are written as strings.

#include "gc/graph.hpp"
#include "gc/morse.hpp"
#include "gc/surgery.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace gc {

using Json = nlohmann::ordered_json;

// Reads and parses a file; IoFailure if unreadable, Parse if not JSON.
Json read_json_file(const std::filesystem::path& path);

// {"vertices": n, "edges": [[u,v],...]}
LabelledTrivalentGraph graph_from_json(const Json& j);
Json graph_to_json(const LabelledTrivalentGraph& g);

// Graph JSON plus "directions": [[tail,head],...].
ArrowGraph arrow_from_json(const Json& j);
Json arrow_to_json(const ArrowGraph& a);

// {"ranks": [r0..r4], "boundaries": {"1": [[..]], ...}}; missing degrees are zero maps.
GradedComplex complex_from_json(const Json& j);
Json complex_to_json(const GradedComplex& c);

// {"ranks": [...], "propagators": {"0": [["n/d",..],..], ...}}, key d for the map out of degree d.
Json propagator_to_json(const Propagator& g);

Json class_to_json(const GraphClass& c);
Json report_to_json(const EvaluationReport& r);

}  // namespace gc
