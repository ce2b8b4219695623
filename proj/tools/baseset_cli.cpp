// Command-line front end: base sizes of permutation group files, determining
// numbers of graph files, base size sets and determining-number evidence for
// catalogued groups, and the claim verification suite.
//
// Exit codes: 0 success, 1 claim failure, 2 usage/parse error, 3 budget
// exceeded.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "baseset/corpus.hpp"
#include "baseset/graph_aut.hpp"
#include "baseset/io.hpp"
#include "baseset/verify.hpp"

namespace {

struct RunConfig {
  std::size_t element_budget = baseset::kDefaultElementBudget;
  long long max_points = 40;
  int vertex_budget = baseset::kDefaultVertexBudget;
  std::string out_path;
  bool quiet = false;
};

std::string join_points(const std::vector<int>& points) {
  if (points.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(points[i]);
  }
  return s;
}

int cmd_base_size(const RunConfig& cfg, const std::string& path) {
  baseset::PermutationGroup g = baseset::read_permutation_group_file(path);
  baseset::Base base = baseset::min_base(g, cfg.element_budget);
  std::cout << "min base size: " << base.points.size() << "\n";
  std::cout << "witness base: " << join_points(base.points) << "\n";
  return 0;
}

int cmd_determining_number(const RunConfig& cfg, const std::string& path) {
  baseset::Graph g = baseset::read_graph_file(path);
  if (g.vertex_count == 0) {
    std::cout << "determining number: 0\naut order: 1\norbit sizes:\n";
    return 0;
  }
  baseset::PermutationGroup aut = baseset::automorphism_group(g, cfg.vertex_budget);
  baseset::Base base = baseset::min_base(aut, cfg.element_budget);
  std::vector<std::size_t> sizes;
  for (const auto& block : baseset::orbits(aut)) sizes.push_back(block.size());
  std::sort(sizes.begin(), sizes.end());
  std::cout << "determining number: " << base.points.size() << "\n";
  std::cout << "witness base: " << join_points(base.points) << "\n";
  std::cout << "aut order: " << aut.order(cfg.element_budget) << "\n";
  std::cout << "orbit sizes:";
  for (std::size_t s : sizes) std::cout << ' ' << s;
  std::cout << "\n";
  return 0;
}

int cmd_bss(const RunConfig& cfg, const std::string& descriptor) {
  baseset::AbstractGroupSpec spec = baseset::parse_group_descriptor(descriptor);
  baseset::PermutationGroup reg =
      baseset::regular_representation(spec, cfg.element_budget);
  auto descriptors =
      baseset::faithful_actions(spec, cfg.max_points, cfg.element_budget);
  std::set<int> achieved;
  std::map<int, std::string> witnesses;
  for (const auto& d : descriptors) {
    baseset::PermutationGroup action =
        baseset::coset_action(reg, d, cfg.element_budget);
    baseset::Base base = baseset::min_base(action, cfg.element_budget);
    int size = static_cast<int>(base.points.size());
    if (achieved.insert(size).second) {
      std::string orbit_sizes;
      for (std::size_t i = 0; i < d.subgroups.size(); ++i) {
        if (i) orbit_sizes += ',';
        orbit_sizes += std::to_string(reg.order(cfg.element_budget) /
                                      static_cast<long long>(d.subgroups[i].size()));
      }
      witnesses[size] = "degree " + std::to_string(d.total_points) + " orbits {" +
                        orbit_sizes + "} base: " + join_points(base.points);
    }
  }
  std::cout << "base size set: " << baseset::format_set(achieved) << "\n";
  std::cout << "theory bound: " << baseset::theory_upper_bound(spec) << "\n";
  std::cout << "certified complete: "
            << (baseset::theory_certifies_completeness(spec, achieved, cfg.max_points)
                    ? "yes"
                    : "no")
            << "\n";
  if (!cfg.quiet)
    for (const auto& [size, witness] : witnesses)
      std::cout << "witness " << size << ": " << witness << "\n";
  return 0;
}

int cmd_dss_evidence(const RunConfig& cfg, const std::string& descriptor) {
  baseset::AbstractGroupSpec spec = baseset::parse_group_descriptor(descriptor);
  baseset::GraphCorpus corpus =
      baseset::standard_corpus(spec, cfg.vertex_budget, cfg.element_budget);
  std::set<int> dets;
  for (const auto& entry : corpus.entries) {
    baseset::PermutationGroup aut =
        baseset::automorphism_group(entry.graph, entry.graph.vertex_count);
    int d = baseset::min_base_size(aut, cfg.element_budget);
    dets.insert(d);
    if (!cfg.quiet)
      std::cout << "graph " << entry.label << ": vertices=" << entry.graph.vertex_count
                << " aut_order=" << aut.order(cfg.element_budget)
                << " determining=" << d << "\n";
  }
  if (!cfg.quiet)
    for (const auto& [label, reason] : corpus.dropped)
      std::cout << "dropped " << label << ": " << reason << "\n";
  std::cout << "determining numbers: " << baseset::format_set(dets) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  if (suite != "paper" && suite != "quick") {
    std::cerr << "unknown suite '" << suite << "'; expected 'paper' or 'quick'\n";
    return 2;
  }
  baseset::SuiteOptions options;
  options.quick = (suite == "quick");
  options.element_budget = cfg.element_budget;
  auto results = baseset::run_paper_suite(options);
  baseset::render_report(results, std::cout, !cfg.quiet);
  bool failed = baseset::any_claim_failed(results);
  std::cout << "result: " << (failed ? "FAIL" : "PASS") << "\n";
  if (!cfg.out_path.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results)
      doc.push_back({{"claim", r.id},
                     {"status", baseset::to_string(r.status)},
                     {"checked", r.instances_checked},
                     {"detail", r.detail}});
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "cannot write report to " << cfg.out_path << "\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base size sets and determining numbers of small group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--element-budget", cfg.element_budget,
                 "maximum group order for exact enumeration");
  app.add_option("--max-points", cfg.max_points,
                 "maximum total points for enumerated actions");
  app.add_option("--vertex-budget", cfg.vertex_budget,
                 "maximum graph size for automorphism search and corpora");
  app.add_option("--out", cfg.out_path, "write a machine-readable report here");
  app.add_flag("--quiet", cfg.quiet, "suppress per-instance detail lines");

  std::string perm_file, graph_file, bss_descriptor, dss_descriptor, suite;
  auto* base_size = app.add_subcommand("base-size",
                                       "minimum base of a permutation group file");
  base_size->add_option("file", perm_file, "permutation group file")->required();
  auto* det = app.add_subcommand("determining-number",
                                 "determining number of a graph file");
  det->add_option("file", graph_file, "graph file")->required();
  auto* bss = app.add_subcommand("bss", "base size set of a catalogued group");
  bss->add_option("group", bss_descriptor, "group descriptor (Z:d1,d2,... | D:n)")
      ->required();
  auto* dss = app.add_subcommand("dss-evidence",
                                 "determining numbers over the verified graph corpus");
  dss->add_option("group", dss_descriptor, "group descriptor (Z:d1,d2,... | D:n)")
      ->required();
  auto* verify = app.add_subcommand("verify", "run the claim verification suite");
  verify->add_option("suite", suite, "paper | quick")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; genuine parse errors map to 2
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (base_size->parsed()) return cmd_base_size(cfg, perm_file);
    if (det->parsed()) return cmd_determining_number(cfg, graph_file);
    if (bss->parsed()) return cmd_bss(cfg, bss_descriptor);
    if (dss->parsed()) return cmd_dss_evidence(cfg, dss_descriptor);
    if (verify->parsed()) return cmd_verify(cfg, suite);
  } catch (const baseset::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const baseset::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
