#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geomean/graph.hpp"
#include "geomean/labeling.hpp"

namespace geomean {

struct SearchConfig {
  std::uint64_t k = 1;
  // Search-node budget; nullopt means unlimited.
  std::optional<std::uint64_t> node_limit = 100'000'000ULL;
  bool enumerate_all = false;
  unsigned parallel_width = 1;
};

enum class SearchStatus { Found, Nonexistent, BudgetExhausted };

const char* search_status_name(SearchStatus s);

struct SearchWitness {
  Labeling labeling;
  EdgeAssignment assignment;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Nonexistent;
  std::vector<SearchWitness> witnesses;
  std::uint64_t nodes_expanded = 0;
};

// Necessary condition for any k-geometric mean labeling: psi injects p
// vertices into the q+1 values {k,...,k+q}, so p <= q+1. A false return
// rules out every k.
bool counting_bound(const Graph& g);

// Exhaustive backtracking over injective assignments of {k,...,k+q} to
// vertices (descending degree order, ties by name). A branch dies as soon
// as the already-determined edges cannot be matched injectively into the
// target set {k,...,k+q-1} (incremental augmenting-path feasibility, i.e. a
// Hall-condition test). Nonexistent is only reported after full exhaustion;
// hitting the node budget yields BudgetExhausted instead. The search space
// is partitioned across parallel_width workers by the first vertex's value;
// the status is deterministic, and with parallel_width = 1 the first witness
// is too. With enumerate_all, every valid labeling is collected (sorted
// canonically) up to the budget.
SearchOutcome exists_labeling(const Graph& g, const SearchConfig& cfg);

// Center labels c in {1,...,n+1} passing the star feasibility inequality
// ceil(sqrt(c(n+1))) - floor(sqrt(c)) + 1 >= n. Any geometric mean labeling
// of S_n has its center in this set.
std::vector<std::uint64_t> star_center_candidates(int n);

// Decides whether S_n is a geometric mean graph by trying each center
// candidate and matching the leaf edges against {1,...,n}; leaf order is
// immaterial, so this is exponentially cheaper than exists_labeling yet
// agrees with it. nodes_expanded counts center candidates examined.
SearchOutcome decide_star(int n);

}  // namespace geomean
