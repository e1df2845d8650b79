#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "geomean/graph.hpp"

namespace geomean {

// Largest vertex label accepted anywhere. Keeps every product
// psi(u)*psi(v) and the (r+1)^2 probe of the square root inside 64 bits.
inline constexpr std::uint64_t kMaxLabelValue = 3'000'000'000ULL;

// Exact floor of sqrt(x): the unique r with r^2 <= x < (r+1)^2.
// Pure integer result; no floating point leaks into label math.
std::uint64_t isqrt(std::uint64_t x) noexcept;

// The admissible labels for an edge whose endpoints carry a and b: floor
// and ceiling of sqrt(a*b). lo == hi exactly when a*b is a perfect square.
struct LabelOptions {
  std::uint64_t lo;
  std::uint64_t hi;

  bool single() const { return lo == hi; }
  bool contains(std::uint64_t x) const { return x == lo || x == hi; }
};

LabelOptions edge_label_options(std::uint64_t a, std::uint64_t b);

enum class Rounding { Floor, Ceiling };

// Injective vertex labeling with base k; validity is judged against the
// graph's edge count at verification time.
struct Labeling {
  std::uint64_t k = 1;
  std::map<VertexId, std::uint64_t> psi;
};

// A rounding decision per edge together with the resulting edge labels.
struct EdgeAssignment {
  std::map<Edge, Rounding> choices;
  std::map<Edge, std::uint64_t> labels;
};

enum class FailureCause {
  NotInjective,
  LabelOutOfRange,
  UnrealizableTargetLabel,
  NoPerfectMatching,
};

struct VerificationFailure {
  FailureCause cause;
  // the impossible target, for UnrealizableTargetLabel
  std::optional<std::uint64_t> label;
};

struct VerificationReport {
  bool valid = false;
  std::optional<EdgeAssignment> witness;
  std::optional<VerificationFailure> failure;
};

// Decides whether lab is a k-geometric mean labeling of g: psi injective,
// all values in [k, k+q], and some floor/ceiling choice per edge realizing
// the edge label set {k,...,k+q-1} exactly. The choice existence question is
// a bipartite matching between edges and target labels; the witness is the
// deterministic matching obtained by processing edges in canonical order and
// preferring the smallest feasible target, with augmenting-path reassignment.
//
// Throws InputError when psi is not defined on exactly V(g) or a value
// exceeds kMaxLabelValue.
VerificationReport verify(const Graph& g, const Labeling& lab);

// True iff asg covers exactly E(g), every label equals the chosen rounding
// of the endpoint product's square root, and the labels realize exactly
// {k,...,k+q-1}.
bool is_witness(const Graph& g, const Labeling& lab, const EdgeAssignment& asg);

}  // namespace geomean
