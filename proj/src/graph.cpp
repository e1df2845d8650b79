#include "geomean/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "geomean/errors.hpp"

namespace geomean {

namespace {

VertexId u(int i) { return "u" + std::to_string(i); }
VertexId v(int i) { return "v" + std::to_string(i); }
VertexId w(int i) { return "w" + std::to_string(i); }

}  // namespace

Edge::Edge(VertexId x, VertexId y) : a(std::move(x)), b(std::move(y)) {
  if (a == b) throw InputError("self-loop on vertex '" + a + "'");
  if (b < a) std::swap(a, b);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Comb: return "comb";
    case Family::Crown: return "crown";
    case Family::TriSnake: return "trisnake";
    case Family::QuadSnake: return "quadsnake";
  }
  return "?";
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw InputError("a graph needs at least one vertex");
  std::set<VertexId> names;
  for (const auto& name : vertices_) {
    if (name.empty()) throw InputError("vertex names must be nonempty");
    if (!names.insert(name).second)
      throw InputError("duplicate vertex '" + name + "'");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0 && edges_[i] == edges_[i - 1])
      throw InputError("duplicate edge " + edges_[i].a + "-" + edges_[i].b);
    for (const auto* end : {&edges_[i].a, &edges_[i].b}) {
      if (!names.count(*end))
        throw InputError("edge endpoint '" + *end + "' is not a vertex");
    }
  }
}

bool Graph::has_vertex(const VertexId& name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) !=
         vertices_.end();
}

std::pair<std::size_t, std::size_t> counts(const Graph& g) {
  return {g.p(), g.q()};
}

Graph generate(const FamilySpec& spec) {
  const int n = spec.n;
  const int min_n = (spec.family == Family::Cycle || spec.family == Family::Crown) ? 3 : 1;
  if (n < min_n) {
    throw ParameterError(std::string(family_name(spec.family)) + " requires n >= " +
                         std::to_string(min_n) + " (got " + std::to_string(n) + ")");
  }

  std::vector<VertexId> vs;
  std::vector<Edge> es;
  auto path_edges = [&] {
    for (int i = 1; i < n; ++i) es.emplace_back(u(i), u(i + 1));
  };

  switch (spec.family) {
    case Family::Path:
      for (int i = 1; i <= n; ++i) vs.push_back(u(i));
      path_edges();
      break;
    case Family::Cycle:
      for (int i = 1; i <= n; ++i) vs.push_back(u(i));
      path_edges();
      es.emplace_back(u(1), u(n));
      break;
    case Family::Star:
      vs.push_back(u(1));
      for (int i = 1; i <= n; ++i) {
        vs.push_back(v(i));
        es.emplace_back(u(1), v(i));
      }
      break;
    case Family::Comb:
    case Family::Crown:
      for (int i = 1; i <= n; ++i) vs.push_back(u(i));
      for (int i = 1; i <= n; ++i) vs.push_back(v(i));
      path_edges();
      if (spec.family == Family::Crown) es.emplace_back(u(1), u(n));
      for (int i = 1; i <= n; ++i) es.emplace_back(u(i), v(i));
      break;
    case Family::TriSnake:
      for (int i = 1; i <= n; ++i) vs.push_back(u(i));
      for (int i = 1; i < n; ++i) vs.push_back(v(i));
      path_edges();
      for (int i = 1; i < n; ++i) {
        es.emplace_back(u(i), v(i));
        es.emplace_back(v(i), u(i + 1));
      }
      break;
    case Family::QuadSnake:
      for (int i = 1; i <= n; ++i) vs.push_back(u(i));
      for (int i = 1; i < n; ++i) vs.push_back(v(i));
      for (int i = 1; i < n; ++i) vs.push_back(w(i));
      path_edges();
      for (int i = 1; i < n; ++i) {
        es.emplace_back(u(i), v(i));
        es.emplace_back(v(i), w(i));
        es.emplace_back(w(i), u(i + 1));
      }
      break;
  }
  return Graph(std::move(vs), std::move(es));
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw InputError("disjoint union of an empty list");
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string prefix = "c" + std::to_string(i + 1) + ".";
    for (const auto& name : parts[i].vertices()) vs.push_back(prefix + name);
    for (const auto& e : parts[i].edges())
      es.emplace_back(prefix + e.a, prefix + e.b);
  }
  return Graph(std::move(vs), std::move(es));
}

}  // namespace geomean
