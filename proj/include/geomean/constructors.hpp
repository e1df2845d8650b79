#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geomean/graph.hpp"
#include "geomean/labeling.hpp"

namespace geomean {

enum class Theorem { Path, Cycle, Comb, Crown, TriSnake, QuadSnake, Union };

const char* theorem_name(Theorem t);

struct Provenance {
  Theorem theorem;
  std::optional<std::uint64_t> h;  // cycle/crown pivot label
  std::optional<std::uint64_t> j;  // crown case index
  std::vector<std::uint64_t> bases;
  bool reordered = false;  // union: a path-like component was moved last
};

// A labeling produced by one of the constructive theorems, together with
// the rounding choices that realize the target set.
struct ConstructedLabeling {
  Graph graph;
  Labeling labeling;
  EdgeAssignment assignment;
  Provenance provenance;
};

// psi(u_i) = k-1+i, every edge floored: labels {k,...,k+n-2}.
ConstructedLabeling label_path(int n, std::uint64_t k);

// psi(u_i) = k-1+i, pivot h = ceil(sqrt(k(k+n-1))) on edge u_1u_n; path
// edges floor up to i = h-k and ceiling after: labels {k,...,k+n-1}.
ConstructedLabeling label_cycle(int n, std::uint64_t k);

// psi(u_i) = k+2i-2, psi(v_i) = k+2i-1; spine edges ceiling, pendants
// floor: labels {k,...,k+2n-2}.
ConstructedLabeling label_comb(int n, std::uint64_t k);

// psi(u_i) = k+2i-1, psi(v_i) = k+2i-2; pivot h = ceil(sqrt((k+1)(k+2n-1)))
// on edge u_1u_n, with the floor/ceiling switch index j read off the parity
// of h-k: labels {k,...,k+2n-1}.
ConstructedLabeling label_crown(int n, std::uint64_t k);

// psi(u_i) = k+3i-3, psi(v_i) = k+3i-2; spine and u_iv_i floored, v_iu_{i+1}
// ceiled: labels {k,...,k+3n-4}.
ConstructedLabeling label_tri_snake(int n, std::uint64_t k);

// psi(u_i) = k+4i-4, psi(v_i) = k+4i-3, psi(w_i) = k+4i-2; u_iv_i and v_iw_i
// floored, u_iu_{i+1} and w_iu_{i+1} ceiled: labels {k,...,k+4n-5}.
ConstructedLabeling label_quad_snake(int n, std::uint64_t k);

// Dispatch to the family's constructor. Star has no constructive theorem
// and is rejected with ParameterError.
ConstructedLabeling label_family(const FamilySpec& spec, std::uint64_t k);

// Composition plan for a union: component order (any single path-like
// component moved last) and per-component bases k_i = k + sum of the
// preceding components' edge counts.
struct UnionPlan {
  std::vector<FamilySpec> components;
  std::vector<std::uint64_t> bases;
  bool reordered = false;
};

// Validates the one-path-like rule and computes bases. Throws
// CompositionError when two or more path-like components (or a star)
// appear, InputError on an empty list.
UnionPlan plan_union(std::vector<FamilySpec> components, std::uint64_t k);

// Labels the disjoint union of cycles and crowns plus at most one trailing
// path-like component, each by its own constructor at base k_i. Vertices
// carry the "c<i>." union prefix; the combined edge label set is
// {k,...,k+Q-1} for Q total edges.
ConstructedLabeling label_union(const std::vector<FamilySpec>& components,
                                std::uint64_t k);

// Path, comb and the snakes consume the top label k+q and therefore cannot
// be combined with each other in a union.
bool is_path_like(Family f);

}  // namespace geomean
