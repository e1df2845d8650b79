#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "brute_force.hpp"
#include "geomean/constructors.hpp"
#include "geomean/errors.hpp"
#include "geomean/graph.hpp"
#include "geomean/oracle.hpp"

using namespace geomean;

namespace {

Graph union_of(std::initializer_list<FamilySpec> specs) {
  std::vector<Graph> parts;
  for (const auto& s : specs) parts.push_back(generate(s));
  return disjoint_union(parts);
}

SearchConfig config(std::uint64_t k) {
  SearchConfig cfg;
  cfg.k = k;
  return cfg;
}

}  // namespace

TEST_CASE("counting bound") {
  CHECK_FALSE(counting_bound(union_of({{Family::Path, 2}, {Family::Path, 2}})));
  CHECK(counting_bound(generate({Family::Cycle, 3})));
  CHECK(counting_bound(generate({Family::Star, 8})));
}

TEST_CASE("search outcomes on the canonical small cases") {
  const auto s5 = exists_labeling(generate({Family::Star, 5}), config(1));
  CHECK(s5.status == SearchStatus::Found);
  REQUIRE(s5.witnesses.size() == 1);
  CHECK(verify(generate({Family::Star, 5}), s5.witnesses[0].labeling).valid);

  // enumerating everything surfaces the figure's center-3 witness
  SearchConfig all = config(1);
  all.enumerate_all = true;
  const auto s5_all = exists_labeling(generate({Family::Star, 5}), all);
  CHECK(s5_all.status == SearchStatus::Found);
  bool center3 = false;
  for (const auto& w : s5_all.witnesses) center3 |= w.labeling.psi.at("u1") == 3;
  CHECK(center3);

  const auto two_paths =
      exists_labeling(union_of({{Family::Path, 2}, {Family::Path, 2}}), config(1));
  CHECK(two_paths.status == SearchStatus::Nonexistent);
  CHECK(two_paths.nodes_expanded == 0);

  const auto s6 = exists_labeling(generate({Family::Star, 6}), config(1));
  CHECK(s6.status == SearchStatus::Nonexistent);
  CHECK(s6.nodes_expanded > 0);

  const auto c4k3 = exists_labeling(generate({Family::Cycle, 4}), config(3));
  CHECK(c4k3.status == SearchStatus::Found);
}

TEST_CASE("found witnesses always pass the verifier") {
  for (const auto& spec :
       {FamilySpec{Family::Crown, 3}, FamilySpec{Family::TriSnake, 3},
        FamilySpec{Family::Comb, 3}}) {
    const Graph g = generate(spec);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      const auto outcome = exists_labeling(g, config(k));
      REQUIRE(outcome.status == SearchStatus::Found);
      REQUIRE(outcome.witnesses.size() == 1);
      CHECK(verify(g, outcome.witnesses[0].labeling).valid);
      CHECK(is_witness(g, outcome.witnesses[0].labeling,
                       outcome.witnesses[0].assignment));
    }
  }
}

TEST_CASE("the search finds every constructor-covered graph with p <= 8") {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 8; ++n) specs.push_back({Family::Path, n});
  for (int n = 3; n <= 8; ++n) specs.push_back({Family::Cycle, n});
  for (int n = 1; n <= 4; ++n) specs.push_back({Family::Comb, n});
  for (int n = 3; n <= 4; ++n) specs.push_back({Family::Crown, n});
  for (int n = 1; n <= 4; ++n) specs.push_back({Family::TriSnake, n});
  for (int n = 1; n <= 3; ++n) specs.push_back({Family::QuadSnake, n});
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    REQUIRE(g.p() <= 8);
    for (std::uint64_t k = 1; k <= 3; ++k)
      CHECK(exists_labeling(g, config(k)).status == SearchStatus::Found);
  }
}

TEST_CASE("status agrees with the doubly-brute oracle on small graphs") {
  const std::vector<Graph> graphs = {
      generate({Family::Path, 4}),     generate({Family::Cycle, 5}),
      generate({Family::Star, 4}),     generate({Family::Star, 6}),
      generate({Family::Comb, 3}),     generate({Family::Crown, 3}),
      generate({Family::TriSnake, 3}), generate({Family::QuadSnake, 2}),
      union_of({{Family::Cycle, 3}, {Family::Cycle, 3}}),
      union_of({{Family::Path, 3}, {Family::Path, 3}}),
      union_of({{Family::Cycle, 3}, {Family::Path, 3}}),
      union_of({{Family::Star, 2}, {Family::Cycle, 4}}),
  };
  for (const auto& g : graphs) {
    for (std::uint64_t k = 1; k <= 2; ++k) {
      const auto outcome = exists_labeling(g, config(k));
      REQUIRE(outcome.status != SearchStatus::BudgetExhausted);
      const bool found = outcome.status == SearchStatus::Found;
      CHECK(found == brute::bf_exists(g, k));
    }
  }
}

TEST_CASE("enumerate_all matches the brute-force labeling count") {
  for (int n = 1; n <= 5; ++n) {
    const Graph g = generate({Family::Star, n});
    SearchConfig cfg = config(1);
    cfg.enumerate_all = true;
    const auto outcome = exists_labeling(g, cfg);
    const auto expected = brute::bf_count(g, 1);
    CHECK(outcome.witnesses.size() == expected);
    CHECK((outcome.status == SearchStatus::Found) == (expected > 0));
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& w : outcome.witnesses) {
      std::vector<std::uint64_t> key;
      for (const auto& v : g.vertices()) key.push_back(w.labeling.psi.at(v));
      distinct.insert(key);
    }
    CHECK(distinct.size() == outcome.witnesses.size());
  }
}

TEST_CASE("budget exhaustion is reported, never mislabeled") {
  SearchConfig tiny = config(1);
  tiny.node_limit = 3;
  const auto outcome = exists_labeling(generate({Family::Cycle, 5}), tiny);
  CHECK(outcome.status == SearchStatus::BudgetExhausted);
  CHECK(outcome.witnesses.empty());
  CHECK(outcome.nodes_expanded >= 3);
}

TEST_CASE("parallel partitions preserve status and enumeration") {
  for (const auto& spec :
       {FamilySpec{Family::Cycle, 5}, FamilySpec{Family::Star, 6},
        FamilySpec{Family::Crown, 3}}) {
    const Graph g = generate(spec);
    for (std::uint64_t k = 1; k <= 2; ++k) {
      SearchConfig serial = config(k);
      SearchConfig wide = config(k);
      wide.parallel_width = 4;
      CHECK(exists_labeling(g, serial).status == exists_labeling(g, wide).status);

      serial.enumerate_all = wide.enumerate_all = true;
      const auto sw = exists_labeling(g, serial);
      const auto ww = exists_labeling(g, wide);
      REQUIRE(sw.witnesses.size() == ww.witnesses.size());
      for (std::size_t i = 0; i < sw.witnesses.size(); ++i)
        CHECK(sw.witnesses[i].labeling.psi == ww.witnesses[i].labeling.psi);
    }
  }
}

TEST_CASE("star center candidates follow the feasibility inequality") {
  CHECK(star_center_candidates(8) == std::vector<std::uint64_t>{8});
  CHECK(star_center_candidates(3) == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(star_center_candidates(1) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("decide_star: stars are labelable exactly up to n = 5") {
  for (int n = 1; n <= 5; ++n)
    CHECK(decide_star(n).status == SearchStatus::Found);
  for (int n = 6; n <= 10; ++n)
    CHECK(decide_star(n).status == SearchStatus::Nonexistent);

  const auto s4 = decide_star(4);
  REQUIRE(s4.witnesses.size() == 1);
  CHECK(verify(generate({Family::Star, 4}), s4.witnesses[0].labeling).valid);

  // The n = 6, 7 refutations are confirmed by the doubly-brute
  // oracle; n = 8 is double-checked the same way.
  CHECK_FALSE(brute::bf_exists(generate({Family::Star, 6}), 1));
  CHECK_FALSE(brute::bf_exists(generate({Family::Star, 7}), 1));
  CHECK_FALSE(brute::bf_exists(generate({Family::Star, 8}), 1));
}

TEST_CASE("decide_star agrees with the general search") {
  for (int n = 1; n <= 8; ++n) {
    const auto direct = decide_star(n);
    const auto general = exists_labeling(generate({Family::Star, n}), config(1));
    CHECK(direct.status == general.status);
  }
}

TEST_CASE("center labels outside the candidate set never work") {
  for (int n = 1; n <= 8; ++n) {
    const Graph g = generate({Family::Star, n});  // u1 is listed first
    const auto candidates = star_center_candidates(n);
    for (std::uint64_t c = 1; c <= static_cast<std::uint64_t>(n) + 1; ++c) {
      if (std::find(candidates.begin(), candidates.end(), c) != candidates.end())
        continue;
      CHECK_FALSE(brute::bf_exists_with_first(g, 1, c));
    }
  }
}

TEST_CASE("search rejects bad configurations") {
  CHECK_THROWS_AS(exists_labeling(generate({Family::Cycle, 3}), config(0)),
                  ParameterError);
}
