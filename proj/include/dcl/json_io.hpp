#pragma once

#include <string>

#include <json.hpp>

#include "dcl/evolution.hpp"
#include "dcl/graph.hpp"
#include "dcl/labeling.hpp"
#include "dcl/nt.hpp"
#include "dcl/solver.hpp"
#include "dcl/transform.hpp"

// The documented wire formats. Graph: {"n": int, "edges": [[a,b],...]} with
// a < b. Labels and every number-theoretic value are decimal strings
// (arbitrary precision); structural counts stay JSON integers. TransformSpec
// parameters are emitted as numbers when they fit and accepted either way.

namespace dcl::io {

using json = nlohmann::json;

json to_json(const Graph &g);
Graph graph_from_json(const json &j);

json to_json(const Labeling &f);
Labeling labeling_from_json(const json &j);

json to_json(const TransformSpec &spec);
TransformSpec transform_from_json(const json &j);

json to_json(const Frame &frame);
json to_json(const VerifyReport &report);
json to_json(const MapVerdict &verdict);
json to_json(const AffineHypothesisReport &report);
json to_json(const KorseltCertificate &cert);
json to_json(const SolveResult &result);
json to_json(const PeriodReport &report);
json to_json(const BoundednessReport &report);

// Full run report: graph, transform, f0, horizon, status, violations.
json run_report_json(const Graph &g, const Labeling &f0, const TransformSpec &spec,
                     const DclRun &run);

// Minimal DOT emission: node label = label text, deterministic ordering.
std::string to_dot(const Graph &g, const std::vector<std::string> &node_labels);
std::string frame_to_dot(const Graph &g, const Frame &frame);
std::string labeling_to_dot(const Graph &g, const Labeling &f);

// Canonical serialization used everywhere (2-space indent, trailing newline).
std::string dumps(const json &j);

} // namespace dcl::io
