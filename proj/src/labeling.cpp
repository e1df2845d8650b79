#include "geomean/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "geomean/errors.hpp"

namespace geomean {

std::uint64_t isqrt(std::uint64_t x) noexcept {
  if (x == 0) return 0;
  // Seed from the FPU, then repair the (at most off-by-one) rounding with
  // exact 128-bit comparisons.
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  using u128 = unsigned __int128;
  while (r > 0 && u128(r) * r > x) --r;
  while (u128(r + 1) * (r + 1) <= x) ++r;
  return r;
}

LabelOptions edge_label_options(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    throw ParameterError("edge label options need positive endpoint values");
  if (a > kMaxLabelValue || b > kMaxLabelValue)
    throw ParameterError("vertex labels above " + std::to_string(kMaxLabelValue) +
                         " are rejected (product would overflow)");
  const std::uint64_t product = a * b;
  const std::uint64_t lo = isqrt(product);
  return {lo, lo * lo == product ? lo : lo + 1};
}

namespace {

VerificationReport fail(FailureCause cause,
                        std::optional<std::uint64_t> label = std::nullopt) {
  VerificationReport report;
  report.valid = false;
  report.failure = VerificationFailure{cause, label};
  return report;
}

}  // namespace

VerificationReport verify(const Graph& g, const Labeling& lab) {
  if (lab.k == 0) throw ParameterError("base k must be positive");
  if (lab.psi.size() != g.p())
    throw InputError("psi must be defined on exactly the graph's vertex set");
  for (const auto& name : g.vertices()) {
    if (!lab.psi.count(name))
      throw InputError("psi is missing vertex '" + name + "'");
  }
  for (const auto& [name, value] : lab.psi) {
    if (value == 0) throw InputError("psi('" + name + "') must be positive");
    if (value > kMaxLabelValue)
      throw InputError("psi('" + name + "') exceeds the supported label range");
  }

  const std::uint64_t k = lab.k;
  const std::uint64_t q = g.q();

  std::set<std::uint64_t> seen;
  for (const auto& [name, value] : lab.psi) {
    if (!seen.insert(value).second) return fail(FailureCause::NotInjective);
  }
  for (const auto& [name, value] : lab.psi) {
    if (value < k || value > k + q) return fail(FailureCause::LabelOutOfRange);
  }

  // Matching between edges and the targets {k,...,k+q-1}: edge e may take
  // either rounding of its geometric mean, restricted to the target window.
  const auto& edges = g.edges();
  std::vector<LabelOptions> options;
  options.reserve(edges.size());
  for (const auto& e : edges)
    options.push_back(edge_label_options(lab.psi.at(e.a), lab.psi.at(e.b)));

  for (std::uint64_t t = k; t + 1 <= k + q; ++t) {
    bool producible = false;
    for (const auto& opt : options) {
      if (opt.contains(t)) {
        producible = true;
        break;
      }
    }
    if (!producible) return fail(FailureCause::UnrealizableTargetLabel, t);
  }

  // Kuhn's augmenting paths, edges in canonical order, smallest feasible
  // target first; edge-degree is at most 2 so this stays tiny.
  std::vector<int> matched_edge(q, -1);
  std::vector<char> visited(q, 0);
  auto candidates = [&](int e, std::uint64_t out[2]) {
    int cnt = 0;
    const auto& opt = options[e];
    if (opt.lo >= k && opt.lo + 1 <= k + q) out[cnt++] = opt.lo;
    if (!opt.single() && opt.hi >= k && opt.hi + 1 <= k + q) out[cnt++] = opt.hi;
    return cnt;
  };
  auto augment = [&](auto&& self, int e) -> bool {
    std::uint64_t cand[2];
    const int cnt = candidates(e, cand);
    for (int i = 0; i < cnt; ++i) {
      const auto t = static_cast<std::size_t>(cand[i] - k);
      if (visited[t]) continue;
      visited[t] = 1;
      if (matched_edge[t] < 0 || self(self, matched_edge[t])) {
        matched_edge[t] = e;
        return true;
      }
    }
    return false;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, static_cast<int>(e)))
      return fail(FailureCause::NoPerfectMatching);
  }

  EdgeAssignment witness;
  for (std::uint64_t t = 0; t < q; ++t) {
    const int e = matched_edge[t];
    const Edge& edge = edges[static_cast<std::size_t>(e)];
    const std::uint64_t label = k + t;
    witness.labels.emplace(edge, label);
    witness.choices.emplace(edge, label == options[static_cast<std::size_t>(e)].lo
                                      ? Rounding::Floor
                                      : Rounding::Ceiling);
  }

  VerificationReport report;
  report.valid = true;
  report.witness = std::move(witness);
  return report;
}

bool is_witness(const Graph& g, const Labeling& lab, const EdgeAssignment& asg) {
  const std::uint64_t k = lab.k;
  const std::uint64_t q = g.q();
  if (asg.choices.size() != q || asg.labels.size() != q) return false;
  std::set<std::uint64_t> labels;
  for (const auto& e : g.edges()) {
    auto choice = asg.choices.find(e);
    auto label = asg.labels.find(e);
    if (choice == asg.choices.end() || label == asg.labels.end()) return false;
    auto pa = lab.psi.find(e.a);
    auto pb = lab.psi.find(e.b);
    if (pa == lab.psi.end() || pb == lab.psi.end()) return false;
    const auto opt = edge_label_options(pa->second, pb->second);
    const std::uint64_t expected =
        choice->second == Rounding::Floor ? opt.lo : opt.hi;
    if (label->second != expected) return false;
    if (!labels.insert(label->second).second) return false;
  }
  if (labels.size() != q) return false;
  for (std::uint64_t t = k; t + 1 <= k + q; ++t) {
    if (!labels.count(t)) return false;
  }
  return true;
}

}  // namespace geomean
