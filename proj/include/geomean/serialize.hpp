#pragma once

#include <string>

#include <json.hpp>

#include "geomean/constructors.hpp"
#include "geomean/graph.hpp"
#include "geomean/labeling.hpp"
#include "geomean/oracle.hpp"

namespace geomean {

// Insertion-ordered JSON keeps the documented field order stable.
using json = nlohmann::ordered_json;

// {"vertices": ["u1", ...], "edges": [["u1","u2"], ...]}, edges sorted.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"k": 1, "psi": {"u1": 1, ...}}, psi keys sorted.
json to_json(const Labeling& lab);
Labeling labeling_from_json(const json& j);

// Valid:   {"valid": true, "choices": {"a-b": "floor", ...}, "labels": {...}}
// Invalid: {"valid": false, "failure": {"cause": "...", "label": L?}}
json to_json(const VerificationReport& report);

json to_json(const ConstructedLabeling& c);
json to_json(const SearchOutcome& outcome);

// "a-b" with endpoints in lexicographic order.
std::string edge_key(const Edge& e);

// Canonical text form: two-space indent plus trailing newline.
std::string dump(const json& j);

// Undirected DOT. With a labeling, vertices render as "name\npsi=value" and
// edges carry their witness label "(l)"; union-prefixed graphs are grouped
// into one cluster per component.
std::string to_dot(const Graph& g, const Labeling* lab = nullptr,
                   const EdgeAssignment* asg = nullptr);

}  // namespace geomean
