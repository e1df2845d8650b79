#include "geomean/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "geomean/errors.hpp"

namespace geomean {

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Nonexistent: return "nonexistent";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

bool counting_bound(const Graph& g) { return g.p() <= g.q() + 1; }

namespace {

// One edge becomes determined when the later of its endpoints (in
// assignment order) receives a value.
struct PendingEdge {
  int edge;       // index into g.edges()
  int other_pos;  // assignment position of the already-labeled endpoint
};

struct SearchContext {
  const Graph& g;
  std::uint64_t k;
  std::uint64_t q;
  bool enumerate_all;
  std::optional<std::uint64_t> node_limit;
  std::vector<int> order;  // vertex indices, descending degree then name
  std::vector<std::vector<PendingEdge>> edges_at;  // keyed by depth
};

SearchContext make_context(const Graph& g, const SearchConfig& cfg) {
  SearchContext ctx{g,
                    cfg.k,
                    g.q(),
                    cfg.enumerate_all,
                    cfg.node_limit,
                    {},
                    {}};

  const auto& vertices = g.vertices();
  std::map<VertexId, int> index_of;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index_of.emplace(vertices[i], static_cast<int>(i));

  std::vector<int> degree(vertices.size(), 0);
  for (const auto& e : g.edges()) {
    ++degree[static_cast<std::size_t>(index_of.at(e.a))];
    ++degree[static_cast<std::size_t>(index_of.at(e.b))];
  }

  ctx.order.resize(vertices.size());
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::sort(ctx.order.begin(), ctx.order.end(), [&](int lhs, int rhs) {
    if (degree[static_cast<std::size_t>(lhs)] != degree[static_cast<std::size_t>(rhs)])
      return degree[static_cast<std::size_t>(lhs)] > degree[static_cast<std::size_t>(rhs)];
    return vertices[static_cast<std::size_t>(lhs)] < vertices[static_cast<std::size_t>(rhs)];
  });

  std::vector<int> pos_of(vertices.size());
  for (std::size_t d = 0; d < ctx.order.size(); ++d)
    pos_of[static_cast<std::size_t>(ctx.order[d])] = static_cast<int>(d);

  ctx.edges_at.resize(vertices.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const int pa = pos_of[static_cast<std::size_t>(index_of.at(g.edges()[e].a))];
    const int pb = pos_of[static_cast<std::size_t>(index_of.at(g.edges()[e].b))];
    const int later = std::max(pa, pb);
    const int earlier = std::min(pa, pb);
    ctx.edges_at[static_cast<std::size_t>(later)].push_back(
        {static_cast<int>(e), earlier});
  }
  return ctx;
}

class Worker {
 public:
  Worker(const SearchContext& ctx, std::atomic<std::uint64_t>& nodes,
         std::atomic<bool>& stop, std::atomic<bool>& exhausted)
      : ctx_(ctx), nodes_(nodes), stop_(stop), exhausted_(exhausted) {
    const auto p = ctx.g.p();
    const auto q = ctx.q;
    value_at_.assign(p, 0);
    used_.assign(q + 1, 0);
    cand_.assign(ctx.g.edges().size(), {});
    matched_edge_.assign(q, -1);
    matched_target_.assign(ctx.g.edges().size(), -1);
    visit_stamp_.assign(q, 0);
    stamp_ = 0;
    snap_edge_.assign(p, std::vector<int>(q, -1));
    snap_target_.assign(p, std::vector<int>(ctx.g.edges().size(), -1));
  }

  // Runs the full search restricted to the given first-vertex values.
  void run(const std::vector<std::uint64_t>& first_values) {
    for (const auto value : first_values) {
      if (should_stop()) return;
      if (!charge_node()) return;
      place(0, value);
      descend(1);
      unplace(value);
    }
  }

  std::vector<SearchWitness> witnesses;

 private:
  bool should_stop() const {
    return (!ctx_.enumerate_all && stop_.load(std::memory_order_relaxed)) ||
           exhausted_.load(std::memory_order_relaxed);
  }

  bool charge_node() {
    const auto id = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (ctx_.node_limit && id > *ctx_.node_limit) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void place(int depth, std::uint64_t value) {
    value_at_[static_cast<std::size_t>(depth)] = value;
    used_[static_cast<std::size_t>(value - ctx_.k)] = 1;
  }

  void unplace(std::uint64_t value) {
    used_[static_cast<std::size_t>(value - ctx_.k)] = 0;
  }

  // Candidate targets of a determined edge, ascending, within the window.
  struct Cand {
    std::uint64_t t[2];
    int cnt = 0;
  };

  Cand make_cand(std::uint64_t va, std::uint64_t vb) const {
    const auto opt = edge_label_options(va, vb);
    Cand c;
    if (opt.lo >= ctx_.k && opt.lo < ctx_.k + ctx_.q) c.t[c.cnt++] = opt.lo;
    if (!opt.single() && opt.hi >= ctx_.k && opt.hi < ctx_.k + ctx_.q)
      c.t[c.cnt++] = opt.hi;
    return c;
  }

  bool augment(int e) {
    const Cand& c = cand_[static_cast<std::size_t>(e)];
    for (int i = 0; i < c.cnt; ++i) {
      const auto t = static_cast<std::size_t>(c.t[i] - ctx_.k);
      if (visit_stamp_[t] == stamp_) continue;
      visit_stamp_[t] = stamp_;
      if (matched_edge_[t] < 0 || augment(matched_edge_[t])) {
        matched_edge_[t] = e;
        matched_target_[static_cast<std::size_t>(e)] = static_cast<int>(t);
        return true;
      }
    }
    return false;
  }

  void record_leaf() {
    Labeling lab{ctx_.k, {}};
    for (std::size_t d = 0; d < ctx_.order.size(); ++d) {
      lab.psi[ctx_.g.vertices()[static_cast<std::size_t>(ctx_.order[d])]] =
          value_at_[d];
    }
    auto report = verify(ctx_.g, lab);
    if (!report.valid)
      throw std::logic_error("search reached a leaf the verifier rejects");
    witnesses.push_back({std::move(lab), std::move(*report.witness)});
    if (!ctx_.enumerate_all) stop_.store(true, std::memory_order_relaxed);
  }

  void descend(int depth) {
    if (static_cast<std::size_t>(depth) == ctx_.g.p()) {
      record_leaf();
      return;
    }
    const auto& incoming = ctx_.edges_at[static_cast<std::size_t>(depth)];
    auto& snap_e = snap_edge_[static_cast<std::size_t>(depth)];
    auto& snap_t = snap_target_[static_cast<std::size_t>(depth)];
    for (std::uint64_t value = ctx_.k; value <= ctx_.k + ctx_.q; ++value) {
      if (used_[static_cast<std::size_t>(value - ctx_.k)]) continue;
      if (should_stop()) return;
      if (!charge_node()) return;
      place(depth, value);

      // Extend the matching by the edges this assignment determines; a
      // failed augmentation is exactly a Hall violation on the determined
      // edges, so the branch is dead.
      snap_e = matched_edge_;
      snap_t = matched_target_;
      bool feasible = true;
      for (const auto& pe : incoming) {
        cand_[static_cast<std::size_t>(pe.edge)] = make_cand(
            value, value_at_[static_cast<std::size_t>(pe.other_pos)]);
        ++stamp_;
        if (!augment(pe.edge)) {
          feasible = false;
          break;
        }
      }
      if (feasible) descend(depth + 1);
      matched_edge_ = snap_e;
      matched_target_ = snap_t;
      unplace(value);
    }
  }

  const SearchContext& ctx_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  std::atomic<bool>& exhausted_;

  std::vector<std::uint64_t> value_at_;
  std::vector<char> used_;
  std::vector<Cand> cand_;
  std::vector<int> matched_edge_;    // target offset -> edge index
  std::vector<int> matched_target_;  // edge index -> target offset
  std::vector<std::uint64_t> visit_stamp_;
  std::uint64_t stamp_;
  std::vector<std::vector<int>> snap_edge_;
  std::vector<std::vector<int>> snap_target_;
};

std::vector<std::uint64_t> witness_sort_key(const Graph& g,
                                            const SearchWitness& w) {
  std::vector<std::uint64_t> key;
  key.reserve(g.p());
  for (const auto& v : g.vertices()) key.push_back(w.labeling.psi.at(v));
  return key;
}

}  // namespace

SearchOutcome exists_labeling(const Graph& g, const SearchConfig& cfg) {
  if (cfg.k == 0) throw ParameterError("base k must be positive");
  if (cfg.k > kMaxLabelValue || g.q() > kMaxLabelValue - cfg.k)
    throw ParameterError("labels would exceed the supported range");

  SearchOutcome outcome;
  if (!counting_bound(g)) {
    outcome.status = SearchStatus::Nonexistent;
    return outcome;
  }

  const SearchContext ctx = make_context(g, cfg);
  const unsigned width =
      std::clamp(cfg.parallel_width, 1u, 64u);

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};

  // Partition by the first vertex's value, strided so every worker sees a
  // spread of the range.
  std::vector<std::vector<std::uint64_t>> partitions(
      std::min<std::size_t>(width, g.q() + 1));
  for (std::uint64_t v = cfg.k, i = 0; v <= cfg.k + g.q(); ++v, ++i)
    partitions[i % partitions.size()].push_back(v);

  std::vector<Worker> workers;
  workers.reserve(partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i)
    workers.emplace_back(ctx, nodes, stop, exhausted);

  if (partitions.size() == 1) {
    workers[0].run(partitions[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i)
      threads.emplace_back(
          [&, i] { workers[i].run(partitions[i]); });
    for (auto& t : threads) t.join();
  }

  for (auto& w : workers)
    for (auto& found : w.witnesses) outcome.witnesses.push_back(std::move(found));
  outcome.nodes_expanded = nodes.load();

  if (!outcome.witnesses.empty()) {
    std::sort(outcome.witnesses.begin(), outcome.witnesses.end(),
              [&](const SearchWitness& lhs, const SearchWitness& rhs) {
                return witness_sort_key(g, lhs) < witness_sort_key(g, rhs);
              });
    if (!cfg.enumerate_all) outcome.witnesses.resize(1);
    outcome.status = (cfg.enumerate_all && exhausted.load())
                         ? SearchStatus::BudgetExhausted
                         : SearchStatus::Found;
  } else {
    outcome.status = exhausted.load() ? SearchStatus::BudgetExhausted
                                      : SearchStatus::Nonexistent;
  }
  return outcome;
}

std::vector<std::uint64_t> star_center_candidates(int n) {
  if (n < 1) throw ParameterError("star requires n >= 1");
  std::vector<std::uint64_t> candidates;
  const auto top = static_cast<std::uint64_t>(n) + 1;
  for (std::uint64_t c = 1; c <= top; ++c) {
    const std::uint64_t product = c * top;
    std::uint64_t hi = isqrt(product);
    if (hi * hi != product) ++hi;
    if (hi - isqrt(c) + 1 >= static_cast<std::uint64_t>(n))
      candidates.push_back(c);
  }
  return candidates;
}

SearchOutcome decide_star(int n) {
  const auto candidates = star_center_candidates(n);
  const Graph g = generate({Family::Star, n});
  const auto q = static_cast<std::uint64_t>(n);

  SearchOutcome outcome;
  for (const auto center : candidates) {
    ++outcome.nodes_expanded;
    std::vector<std::uint64_t> leaves;
    for (std::uint64_t value = 1; value <= q + 1; ++value)
      if (value != center) leaves.push_back(value);

    // Leaf order is immaterial: match the n center-leaf edges directly
    // against the targets {1,...,n}.
    std::vector<LabelOptions> options;
    options.reserve(leaves.size());
    for (const auto leaf : leaves)
      options.push_back(edge_label_options(center, leaf));
    std::vector<int> matched(q, -1);
    std::vector<char> visited(q, 0);
    auto augment = [&](auto&& self, int leaf) -> bool {
      const auto& opt = options[static_cast<std::size_t>(leaf)];
      const int cnt = opt.single() ? 1 : 2;
      for (int i = 0; i < cnt; ++i) {
        const std::uint64_t t = i == 0 ? opt.lo : opt.hi;
        if (t < 1 || t > q) continue;
        const auto idx = static_cast<std::size_t>(t - 1);
        if (visited[idx]) continue;
        visited[idx] = 1;
        if (matched[idx] < 0 || self(self, matched[idx])) {
          matched[idx] = leaf;
          return true;
        }
      }
      return false;
    };
    bool perfect = true;
    for (int leaf = 0; leaf < n && perfect; ++leaf) {
      std::fill(visited.begin(), visited.end(), 0);
      perfect = augment(augment, leaf);
    }
    if (!perfect) continue;

    Labeling lab{1, {}};
    lab.psi["u1"] = center;
    for (int i = 1; i <= n; ++i)
      lab.psi["v" + std::to_string(i)] = leaves[static_cast<std::size_t>(i - 1)];
    auto report = verify(g, lab);
    if (!report.valid)
      throw std::logic_error("star matching accepted a labeling the verifier rejects");
    outcome.witnesses.push_back({std::move(lab), std::move(*report.witness)});
    outcome.status = SearchStatus::Found;
    return outcome;
  }
  outcome.status = SearchStatus::Nonexistent;
  return outcome;
}

}  // namespace geomean
