#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomean/constructors.hpp"
#include "geomean/errors.hpp"
#include "geomean/graph.hpp"
#include "geomean/labeling.hpp"
#include "geomean/oracle.hpp"
#include "geomean/serialize.hpp"

namespace {

using geomean::Family;
using geomean::FamilySpec;

// Exit codes: 0 valid/found, 1 invalid/nonexistent, 2 usage or parse error,
// 3 composition error, 4 budget exhausted.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComposition = 3;
constexpr int kExitBudget = 4;

std::string lowercase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Family parse_family(const std::string& name, bool allow_star) {
  const std::string f = lowercase(name);
  if (f == "path" || f == "p") return Family::Path;
  if (f == "cycle" || f == "c") return Family::Cycle;
  if (f == "star" || f == "s") {
    if (allow_star) return Family::Star;
    throw geomean::ParameterError(
        "family 'star' has no constructive labeling; use `search` or `star`");
  }
  if (f == "comb") return Family::Comb;
  if (f == "crown") return Family::Crown;
  if (f == "trisnake" || f == "tri" || f == "t") return Family::TriSnake;
  if (f == "quadsnake" || f == "quad" || f == "q") return Family::QuadSnake;
  throw geomean::ParameterError("unknown family '" + name + "'");
}

// Union tokens: family name immediately followed by the size, e.g.
// "C5,crown4,P4,comb3,T4,Q3" (case-insensitive).
std::vector<FamilySpec> parse_union_spec(const std::string& text) {
  std::vector<FamilySpec> specs;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw geomean::ParameterError("empty union component token");
    std::size_t split = 0;
    while (split < token.size() && !std::isdigit(static_cast<unsigned char>(token[split])))
      ++split;
    if (split == 0 || split == token.size())
      throw geomean::ParameterError("union token '" + token +
                                    "' must be a family name followed by its size");
    const Family family = parse_family(token.substr(0, split), false);
    int n = 0;
    try {
      n = std::stoi(token.substr(split));
    } catch (const std::exception&) {
      throw geomean::ParameterError("bad size in union token '" + token + "'");
    }
    specs.push_back({family, n});
  }
  if (specs.empty()) throw geomean::ParameterError("empty union spec");
  return specs;
}

geomean::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw geomean::InputError("cannot open '" + path + "'");
  return geomean::json::parse(in);
}

void emit(const geomean::json& j) { std::cout << geomean::dump(j); }

int run_gen(const std::string& family, int n) {
  emit(geomean::to_json(geomean::generate({parse_family(family, true), n})));
  return kExitOk;
}

int run_label(const std::string& family, const std::string& arg, std::uint64_t k) {
  geomean::ConstructedLabeling result =
      lowercase(family) == "union"
          ? geomean::label_union(parse_union_spec(arg), k)
          : geomean::label_family({parse_family(family, false), std::stoi(arg)}, k);
  if (result.provenance.reordered)
    std::cerr << "note: path-like component moved to the last position\n";
  emit(geomean::to_json(result));
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path) {
  const auto g = geomean::graph_from_json(load_json(graph_path));
  const auto lab = geomean::labeling_from_json(load_json(labeling_path));
  const auto report = geomean::verify(g, lab);
  emit(geomean::to_json(report));
  return report.valid ? kExitOk : kExitNegative;
}

int run_search(const std::string& graph_path, std::uint64_t k, bool all,
               std::uint64_t limit, unsigned workers) {
  const auto g = geomean::graph_from_json(load_json(graph_path));
  geomean::SearchConfig cfg;
  cfg.k = k;
  cfg.enumerate_all = all;
  cfg.parallel_width = workers;
  if (limit > 0) cfg.node_limit = limit;
  const auto outcome = geomean::exists_labeling(g, cfg);
  emit(geomean::to_json(outcome));
  switch (outcome.status) {
    case geomean::SearchStatus::Found: return kExitOk;
    case geomean::SearchStatus::Nonexistent: return kExitNegative;
    case geomean::SearchStatus::BudgetExhausted: return kExitBudget;
  }
  return kExitUsage;
}

int run_star(int n) {
  const auto outcome = geomean::decide_star(n);
  geomean::json j;
  j["candidates"] = geomean::star_center_candidates(n);
  j["status"] = geomean::search_status_name(outcome.status);
  auto witnesses = geomean::to_json(outcome)["witnesses"];
  j["witnesses"] = std::move(witnesses);
  j["nodes_expanded"] = outcome.nodes_expanded;
  emit(j);
  return outcome.status == geomean::SearchStatus::Found ? kExitOk : kExitNegative;
}

int run_export(const std::string& graph_path, const std::string& labeling_path) {
  const auto g = geomean::graph_from_json(load_json(graph_path));
  if (labeling_path.empty()) {
    std::cout << geomean::to_dot(g);
    return kExitOk;
  }
  const auto lab = geomean::labeling_from_json(load_json(labeling_path));
  const auto report = geomean::verify(g, lab);
  if (!report.valid) {
    std::cerr << "labeling is not a valid k-geometric mean labeling of the graph\n";
    return kExitNegative;
  }
  std::cout << geomean::to_dot(g, &lab, &*report.witness);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-geometric mean graph labelings: generate, label, verify, search, export"};
  app.require_subcommand(1);

  std::string family, size_arg, graph_path, labeling_path;
  int n = 0;
  std::uint64_t k = 1;
  bool all = false;
  std::uint64_t limit = 0;
  unsigned workers = 1;

  auto* gen = app.add_subcommand("gen", "emit a family graph as JSON");
  gen->add_option("family", family, "path|cycle|star|comb|crown|trisnake|quadsnake")
      ->required();
  gen->add_option("n", n, "size parameter")->required();

  auto* label = app.add_subcommand("label", "construct a k-geometric mean labeling");
  label->add_option("family", family, "family name, or 'union'")->required();
  label->add_option("spec", size_arg, "size, or comma list like C5,C3,crown4,P4")
      ->required();
  label->add_option("--k", k, "base label (default 1)");

  auto* verify = app.add_subcommand("verify", "check a labeling against a graph");
  verify->add_option("graph", graph_path, "graph JSON file")->required();
  verify->add_option("labeling", labeling_path, "labeling JSON file")->required();

  auto* search = app.add_subcommand("search", "exhaustive search for a labeling");
  search->add_option("graph", graph_path, "graph JSON file")->required();
  search->add_option("--k", k, "base label (default 1)");
  search->add_flag("--all", all, "enumerate every valid labeling");
  search->add_option("--limit", limit, "search-node budget (0 = default 1e8)");
  search->add_option("--workers", workers, "parallel worker count");

  auto* star = app.add_subcommand("star", "star center candidates and decision");
  star->add_option("n", n, "number of leaves")->required();

  auto* exp = app.add_subcommand("export", "emit DOT, optionally with a labeling");
  exp->add_option("graph", graph_path, "graph JSON file")->required();
  exp->add_option("labeling", labeling_path, "labeling JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(family, n);
    if (label->parsed()) return run_label(family, size_arg, k);
    if (verify->parsed()) return run_verify(graph_path, labeling_path);
    if (search->parsed()) return run_search(graph_path, k, all, limit, workers);
    if (star->parsed()) return run_star(n);
    if (exp->parsed()) return run_export(graph_path, labeling_path);
  } catch (const geomean::CompositionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComposition;
  } catch (const geomean::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const geomean::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
