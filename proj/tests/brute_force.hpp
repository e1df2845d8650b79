#pragma once

// Independent brute-force oracles used only by tests. Nothing here shares a
// code path with the library's matching verifier or backtracking search:
// square roots are recomputed by bisection and the existence questions are
// settled by enumerating all injections and all rounding-choice functions.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "geomean/graph.hpp"
#include "geomean/labeling.hpp"

namespace brute {

inline std::uint64_t bf_isqrt(std::uint64_t x) {
  std::uint64_t lo = 0, hi = 3'100'000'000ULL;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

struct BfOptions {
  std::uint64_t lo;
  std::uint64_t hi;
};

inline BfOptions bf_options(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t product = a * b;
  const std::uint64_t r = bf_isqrt(product);
  return {r, r * r == product ? r : r + 1};
}

// Plain 2^q sweep over rounding-choice functions for a fixed labeling,
// including the injectivity and range prechecks, so the result is directly
// comparable with verify(g, lab).valid.
inline bool bf_labeling_valid(const geomean::Graph& g,
                              const geomean::Labeling& lab) {
  const std::uint64_t k = lab.k;
  const std::uint64_t q = g.q();
  if (q > 20) throw std::logic_error("bf_labeling_valid: q too large");

  std::set<std::uint64_t> values;
  for (const auto& [name, value] : lab.psi) {
    if (value < k || value > k + q) return false;
    if (!values.insert(value).second) return false;
  }

  std::vector<BfOptions> options;
  for (const auto& e : g.edges())
    options.push_back(bf_options(lab.psi.at(e.a), lab.psi.at(e.b)));

  for (std::uint64_t mask = 0; mask < (1ULL << q); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t e = 0; e < q && ok; ++e) {
      const std::uint64_t label =
          (mask >> e) & 1 ? options[e].hi : options[e].lo;
      if (label < k || label > k + q - 1) {
        ok = false;
        break;
      }
      const std::uint64_t bit = 1ULL << (label - k);
      if (used & bit)
        ok = false;
      else
        used |= bit;
    }
    if (ok) return true;
  }
  return false;
}

namespace detail {

struct BfInstance {
  std::uint64_t k = 1;
  std::size_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::pair<int, int>> edges;  // vertex indices
  std::vector<std::uint64_t> value_of;     // current injection
  std::vector<char> used;                  // values k..k+q

  explicit BfInstance(const geomean::Graph& g, std::uint64_t k_) : k(k_) {
    p = g.p();
    q = g.q();
    if (q > 60) throw std::logic_error("bf: q too large");
    std::map<geomean::VertexId, int> index;
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      index.emplace(g.vertices()[i], static_cast<int>(i));
    for (const auto& e : g.edges())
      edges.emplace_back(index.at(e.a), index.at(e.b));
    value_of.assign(p, 0);
    used.assign(q + 1, 0);
  }

  // Enumerates every rounding-choice function, abandoning a prefix only
  // once it has already produced a duplicate or out-of-window label (all of
  // its extensions are invalid too, so the enumeration stays complete).
  bool roundings(std::size_t e, std::uint64_t used_labels) const {
    if (e == edges.size()) return true;
    const auto [ia, ib] = edges[e];
    const BfOptions opt = bf_options(value_of[ia], value_of[ib]);
    for (const std::uint64_t label : {opt.lo, opt.hi}) {
      if (label < k || label > k + q - 1) continue;
      const std::uint64_t bit = 1ULL << (label - k);
      if (used_labels & bit) continue;
      if (roundings(e + 1, used_labels | bit)) return true;
      if (opt.lo == opt.hi) break;
    }
    return false;
  }

  // Walks all injections V -> {k,...,k+q}; count_all=false stops at the
  // first valid labeling.
  std::uint64_t injections(std::size_t pos, bool count_all) {
    if (pos == p) return q == 0 || roundings(0, 0) ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t value = k; value <= k + q; ++value) {
      if (used[value - k]) continue;
      used[value - k] = 1;
      value_of[pos] = value;
      total += injections(pos + 1, count_all);
      used[value - k] = 0;
      if (total > 0 && !count_all) return total;
    }
    return total;
  }
};

}  // namespace detail

// True iff some injective psi: V -> {k,...,k+q} admits a rounding choice
// realizing {k,...,k+q-1} exactly.
inline bool bf_exists(const geomean::Graph& g, std::uint64_t k) {
  if (g.p() > g.q() + 1) return false;  // no injection at all
  detail::BfInstance inst(g, k);
  return inst.injections(0, false) > 0;
}

// Number of valid labelings (distinct psi maps).
inline std::uint64_t bf_count(const geomean::Graph& g, std::uint64_t k) {
  if (g.p() > g.q() + 1) return 0;
  detail::BfInstance inst(g, k);
  return inst.injections(0, true);
}

// Existence restricted to labelings that give the first listed vertex a
// fixed value (used to audit the star center-candidate filter).
inline bool bf_exists_with_first(const geomean::Graph& g, std::uint64_t k,
                                 std::uint64_t first_value) {
  if (g.p() > g.q() + 1) return false;
  detail::BfInstance inst(g, k);
  if (first_value < k || first_value > k + inst.q) return false;
  inst.used[first_value - k] = 1;
  inst.value_of[0] = first_value;
  return inst.injections(1, false) > 0;
}

}  // namespace brute
