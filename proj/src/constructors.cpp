#include "geomean/constructors.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "geomean/errors.hpp"

namespace geomean {

namespace {

VertexId u(int i) { return "u" + std::to_string(i); }
VertexId v(int i) { return "v" + std::to_string(i); }
VertexId w(int i) { return "w" + std::to_string(i); }

void require_params(const char* name, int n, int min_n, std::uint64_t k) {
  if (n < min_n)
    throw ParameterError(std::string(name) + " requires n >= " +
                         std::to_string(min_n) + " (got " + std::to_string(n) + ")");
  if (k == 0) throw ParameterError("base k must be positive");
}

void require_label_room(std::uint64_t k, std::uint64_t q) {
  if (k > kMaxLabelValue || q > kMaxLabelValue - k)
    throw ParameterError("labels would exceed the supported range");
}

// Evaluates the chosen rounding for one edge and records it.
void assign(EdgeAssignment& asg, const Labeling& lab, Edge e, Rounding r) {
  const auto opt = edge_label_options(lab.psi.at(e.a), lab.psi.at(e.b));
  asg.labels.emplace(e, r == Rounding::Floor ? opt.lo : opt.hi);
  asg.choices.emplace(std::move(e), r);
}

}  // namespace

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Path: return "Path";
    case Theorem::Cycle: return "Cycle";
    case Theorem::Comb: return "Comb";
    case Theorem::Crown: return "Crown";
    case Theorem::TriSnake: return "TriSnake";
    case Theorem::QuadSnake: return "QuadSnake";
    case Theorem::Union: return "Union";
  }
  return "?";
}

bool is_path_like(Family f) {
  return f == Family::Path || f == Family::Comb || f == Family::TriSnake ||
         f == Family::QuadSnake;
}

ConstructedLabeling label_path(int n, std::uint64_t k) {
  require_params("path", n, 1, k);
  Graph g = generate({Family::Path, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) lab.psi[u(i)] = k - 1 + i;
  EdgeAssignment asg;
  for (int i = 1; i < n; ++i)
    assign(asg, lab, Edge(u(i), u(i + 1)), Rounding::Floor);
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::Path, std::nullopt, std::nullopt, {k}, false}};
}

ConstructedLabeling label_cycle(int n, std::uint64_t k) {
  require_params("cycle", n, 3, k);
  Graph g = generate({Family::Cycle, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) lab.psi[u(i)] = k - 1 + i;
  // Pivot: the ceiling of the closing edge's geometric mean, strictly
  // between k and k+n-1, so both rounding runs below are nonempty.
  const std::uint64_t h = edge_label_options(k, k + n - 1).hi;
  EdgeAssignment asg;
  assign(asg, lab, Edge(u(1), u(n)), Rounding::Ceiling);
  for (int i = 1; i < n; ++i) {
    const bool floored = static_cast<std::uint64_t>(i) <= h - k;
    assign(asg, lab, Edge(u(i), u(i + 1)),
           floored ? Rounding::Floor : Rounding::Ceiling);
  }
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::Cycle, h, std::nullopt, {k}, false}};
}

ConstructedLabeling label_comb(int n, std::uint64_t k) {
  require_params("comb", n, 1, k);
  Graph g = generate({Family::Comb, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) {
    lab.psi[u(i)] = k + 2 * i - 2;
    lab.psi[v(i)] = k + 2 * i - 1;
  }
  EdgeAssignment asg;
  for (int i = 1; i < n; ++i)
    assign(asg, lab, Edge(u(i), u(i + 1)), Rounding::Ceiling);
  for (int i = 1; i <= n; ++i)
    assign(asg, lab, Edge(u(i), v(i)), Rounding::Floor);
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::Comb, std::nullopt, std::nullopt, {k}, false}};
}

ConstructedLabeling label_crown(int n, std::uint64_t k) {
  require_params("crown", n, 3, k);
  Graph g = generate({Family::Crown, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) {
    lab.psi[u(i)] = k + 2 * i - 1;
    lab.psi[v(i)] = k + 2 * i - 2;
  }
  const std::uint64_t h = edge_label_options(k + 1, k + 2 * n - 1).hi;
  // Case 1 (h-k odd): h = k+2j-1, pendants keep flooring through i = j.
  // Case 2 (h-k even): h = k+2j-2, pendants switch to ceiling at i = j.
  const std::uint64_t d = h - k;
  const bool case1 = (d % 2) == 1;
  const std::uint64_t j = case1 ? (d + 1) / 2 : (d + 2) / 2;
  const std::uint64_t pendant_floor_max = case1 ? j : j - 1;
  EdgeAssignment asg;
  assign(asg, lab, Edge(u(1), u(n)), Rounding::Ceiling);
  for (int i = 1; i < n; ++i) {
    const bool floored = static_cast<std::uint64_t>(i) <= j - 1;
    assign(asg, lab, Edge(u(i), u(i + 1)),
           floored ? Rounding::Floor : Rounding::Ceiling);
  }
  for (int i = 1; i <= n; ++i) {
    const bool floored = static_cast<std::uint64_t>(i) <= pendant_floor_max;
    assign(asg, lab, Edge(u(i), v(i)),
           floored ? Rounding::Floor : Rounding::Ceiling);
  }
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::Crown, h, j, {k}, false}};
}

ConstructedLabeling label_tri_snake(int n, std::uint64_t k) {
  require_params("trisnake", n, 1, k);
  Graph g = generate({Family::TriSnake, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) lab.psi[u(i)] = k + 3 * i - 3;
  for (int i = 1; i < n; ++i) lab.psi[v(i)] = k + 3 * i - 2;
  EdgeAssignment asg;
  for (int i = 1; i < n; ++i) {
    assign(asg, lab, Edge(u(i), u(i + 1)), Rounding::Floor);
    assign(asg, lab, Edge(u(i), v(i)), Rounding::Floor);
    assign(asg, lab, Edge(v(i), u(i + 1)), Rounding::Ceiling);
  }
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::TriSnake, std::nullopt, std::nullopt, {k}, false}};
}

ConstructedLabeling label_quad_snake(int n, std::uint64_t k) {
  require_params("quadsnake", n, 1, k);
  Graph g = generate({Family::QuadSnake, n});
  require_label_room(k, g.q());
  Labeling lab{k, {}};
  for (int i = 1; i <= n; ++i) lab.psi[u(i)] = k + 4 * i - 4;
  for (int i = 1; i < n; ++i) {
    lab.psi[v(i)] = k + 4 * i - 3;
    lab.psi[w(i)] = k + 4 * i - 2;
  }
  EdgeAssignment asg;
  for (int i = 1; i < n; ++i) {
    assign(asg, lab, Edge(u(i), u(i + 1)), Rounding::Ceiling);
    assign(asg, lab, Edge(u(i), v(i)), Rounding::Floor);
    assign(asg, lab, Edge(v(i), w(i)), Rounding::Floor);
    assign(asg, lab, Edge(w(i), u(i + 1)), Rounding::Ceiling);
  }
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::QuadSnake, std::nullopt, std::nullopt, {k}, false}};
}

ConstructedLabeling label_family(const FamilySpec& spec, std::uint64_t k) {
  switch (spec.family) {
    case Family::Path: return label_path(spec.n, k);
    case Family::Cycle: return label_cycle(spec.n, k);
    case Family::Comb: return label_comb(spec.n, k);
    case Family::Crown: return label_crown(spec.n, k);
    case Family::TriSnake: return label_tri_snake(spec.n, k);
    case Family::QuadSnake: return label_quad_snake(spec.n, k);
    case Family::Star:
      throw ParameterError(
          "no constructive theorem covers stars; use search/star instead");
  }
  throw ParameterError("unknown family");
}

UnionPlan plan_union(std::vector<FamilySpec> components, std::uint64_t k) {
  if (components.empty()) throw InputError("union needs at least one component");
  if (k == 0) throw ParameterError("base k must be positive");

  int path_like_at = -1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& spec = components[i];
    if (spec.family == Family::Star)
      throw CompositionError(
          "stars cannot appear in a union: no constructive labeling exists "
          "for S_n; components must be cycles or crowns plus at most one "
          "path-like component");
    if (is_path_like(spec.family)) {
      if (path_like_at >= 0)
        throw CompositionError(
            "two path-like components (path, comb, triangular or "
            "quadrilateral snake) force p > q+1, violating the counting "
            "bound p <= q+1; at most one is labelable, placed last");
      path_like_at = static_cast<int>(i);
    }
    // Validate sizes up front so errors surface before any labeling work.
    generate(spec);
  }

  UnionPlan plan;
  plan.components = std::move(components);
  if (path_like_at >= 0 &&
      path_like_at + 1 != static_cast<int>(plan.components.size())) {
    auto it = plan.components.begin() + path_like_at;
    std::rotate(it, it + 1, plan.components.end());
    plan.reordered = true;
  }

  std::uint64_t base = k;
  for (const auto& spec : plan.components) {
    plan.bases.push_back(base);
    base += generate(spec).q();
  }
  require_label_room(k, base - k);
  return plan;
}

ConstructedLabeling label_union(const std::vector<FamilySpec>& components,
                                std::uint64_t k) {
  UnionPlan plan = plan_union(components, k);

  std::vector<ConstructedLabeling> parts;
  parts.reserve(plan.components.size());
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < plan.components.size(); ++i) {
    parts.push_back(label_family(plan.components[i], plan.bases[i]));
    graphs.push_back(parts.back().graph);
  }

  Graph g = disjoint_union(graphs);
  Labeling lab{k, {}};
  EdgeAssignment asg;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string prefix = "c" + std::to_string(i + 1) + ".";
    for (const auto& [name, value] : parts[i].labeling.psi)
      lab.psi.emplace(prefix + name, value);
    for (const auto& [e, choice] : parts[i].assignment.choices) {
      Edge renamed(prefix + e.a, prefix + e.b);
      asg.labels.emplace(renamed, parts[i].assignment.labels.at(e));
      asg.choices.emplace(std::move(renamed), choice);
    }
  }
  return {std::move(g), std::move(lab), std::move(asg),
          Provenance{Theorem::Union, std::nullopt, std::nullopt,
                     std::move(plan.bases), plan.reordered}};
}

}  // namespace geomean
