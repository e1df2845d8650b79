#include "geomean/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "geomean/errors.hpp"

namespace geomean {

namespace {

const char* cause_name(FailureCause cause) {
  switch (cause) {
    case FailureCause::NotInjective: return "not_injective";
    case FailureCause::LabelOutOfRange: return "label_out_of_range";
    case FailureCause::UnrealizableTargetLabel: return "unrealizable_target_label";
    case FailureCause::NoPerfectMatching: return "no_perfect_matching";
  }
  return "?";
}

json assignment_choices(const EdgeAssignment& asg) {
  json choices = json::object();
  for (const auto& [e, choice] : asg.choices)
    choices[edge_key(e)] = choice == Rounding::Floor ? "floor" : "ceiling";
  return choices;
}

json assignment_labels(const EdgeAssignment& asg) {
  json labels = json::object();
  for (const auto& [e, label] : asg.labels) labels[edge_key(e)] = label;
  return labels;
}

std::uint64_t positive_int_field(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
    throw InputError(what + " must be a positive integer");
  return j.get<std::uint64_t>();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string edge_key(const Edge& e) { return e.a + "-" + e.b; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.a, e.b}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw InputError("graph \"vertices\" and \"edges\" must be arrays");
  std::vector<VertexId> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("each edge must be a pair of vertex names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(std::move(vertices), std::move(edges));
}

json to_json(const Labeling& lab) {
  json j;
  j["k"] = lab.k;
  json psi = json::object();
  for (const auto& [name, value] : lab.psi) psi[name] = value;
  j["psi"] = std::move(psi);
  return j;
}

Labeling labeling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("psi"))
    throw InputError("labeling JSON needs \"k\" and \"psi\"");
  Labeling lab;
  lab.k = positive_int_field(j["k"], "\"k\"");
  if (!j["psi"].is_object()) throw InputError("\"psi\" must be an object");
  for (const auto& [name, value] : j["psi"].items())
    lab.psi[name] = positive_int_field(value, "psi[\"" + name + "\"]");
  return lab;
}

json to_json(const VerificationReport& report) {
  json j;
  j["valid"] = report.valid;
  if (report.valid) {
    j["choices"] = assignment_choices(*report.witness);
    j["labels"] = assignment_labels(*report.witness);
  } else {
    json failure;
    failure["cause"] = cause_name(report.failure->cause);
    if (report.failure->label) failure["label"] = *report.failure->label;
    j["failure"] = std::move(failure);
  }
  return j;
}

json to_json(const ConstructedLabeling& c) {
  json j;
  j["graph"] = to_json(c.graph);
  j["labeling"] = to_json(c.labeling);
  j["choices"] = assignment_choices(c.assignment);
  j["labels"] = assignment_labels(c.assignment);
  json prov;
  prov["theorem"] = theorem_name(c.provenance.theorem);
  prov["h"] = c.provenance.h ? json(*c.provenance.h) : json(nullptr);
  prov["j"] = c.provenance.j ? json(*c.provenance.j) : json(nullptr);
  prov["bases"] = c.provenance.bases;
  if (c.provenance.theorem == Theorem::Union)
    prov["reordered"] = c.provenance.reordered;
  j["provenance"] = std::move(prov);
  return j;
}

json to_json(const SearchOutcome& outcome) {
  json j;
  j["status"] = search_status_name(outcome.status);
  json witnesses = json::array();
  for (const auto& w : outcome.witnesses) {
    json entry;
    entry["labeling"] = to_json(w.labeling);
    entry["choices"] = assignment_choices(w.assignment);
    entry["labels"] = assignment_labels(w.assignment);
    witnesses.push_back(std::move(entry));
  }
  j["witnesses"] = std::move(witnesses);
  j["nodes_expanded"] = outcome.nodes_expanded;
  return j;
}

std::string to_dot(const Graph& g, const Labeling* lab,
                   const EdgeAssignment* asg) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";

  auto vertex_line = [&](const VertexId& v, int indent) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << '"'
        << dot_escape(v) << '"';
    if (lab) out << " [label=\"" << dot_escape(v) << "\\nψ=" << lab->psi.at(v) << "\"]";
    out << ";\n";
  };
  auto edge_line = [&](const Edge& e, int indent) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << '"'
        << dot_escape(e.a) << "\" -- \"" << dot_escape(e.b) << '"';
    if (asg) out << " [label=\"(" << asg->labels.at(e) << ")\"]";
    out << ";\n";
  };

  // Union output groups each "c<i>." component into its own cluster.
  std::map<std::string, std::vector<VertexId>> component_of;
  bool union_shaped = !g.vertices().empty();
  for (const auto& v : g.vertices()) {
    const auto dot = v.find('.');
    if (dot == std::string::npos || v.size() < 3 || v[0] != 'c' ||
        v.find_first_not_of("0123456789", 1) != dot) {
      union_shaped = false;
      break;
    }
    component_of[v.substr(0, dot)].push_back(v);
  }

  if (union_shaped) {
    std::vector<std::string> prefixes;
    for (const auto& [prefix, members] : component_of) prefixes.push_back(prefix);
    std::sort(prefixes.begin(), prefixes.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& prefix : prefixes) {
      out << "  subgraph cluster_" << prefix << " {\n";
      for (const auto& v : component_of[prefix]) vertex_line(v, 4);
      for (const auto& e : g.edges())
        if (e.a.rfind(prefix + ".", 0) == 0) edge_line(e, 4);
      out << "  }\n";
    }
  } else {
    for (const auto& v : g.vertices()) vertex_line(v, 2);
    for (const auto& e : g.edges()) edge_line(e, 2);
  }
  out << "}\n";
  return out.str();
}

}  // namespace geomean
