// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the command-line binary (used by criteria 2 and 7).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "baseset/corpus.hpp"
#include "baseset/graph_aut.hpp"
#include "baseset/verify.hpp"
#include "oracles.hpp"

using namespace baseset;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("ACCEPTANCE %d %s %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

void criterion_1_dpq_base_size() {
  bool ok = true;
  std::string detail;
  for (auto [p, q] : {std::pair<int, int>{3, 5}, {3, 7}, {5, 7}}) {
    auto start = std::chrono::steady_clock::now();
    PermutationGroup g = dpq_representation(p, q);
    bool case_ok = min_base_size(g) == 3;
    for (int a = 0; a < g.degree() && case_ok; ++a)
      for (int b = a + 1; b < g.degree(); ++b)
        if (is_base(g, {a, b})) {
          case_ok = false;
          break;
        }
    double elapsed = seconds_since(start);
    case_ok = case_ok && elapsed < 1.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%d,%d)=%s %.2fs ", p, q,
                  case_ok ? "3,no-2-base" : "VIOLATION", elapsed);
    detail += buf;
    ok = ok && case_ok;
  }
  report(1, ok, detail);
}

void criterion_2_separation_cli(const std::string& cli) {
  auto start = std::chrono::steady_clock::now();
  CommandResult bss = run_command(cli + " bss D:15 --max-points 40");
  CommandResult dss = run_command(cli + " dss-evidence D:15");
  bool ok = bss.exit_code == 0 &&
            contains_line(bss.output, "base size set: {1,2,3}") &&
            dss.exit_code == 0 &&
            contains_line(dss.output, "determining numbers: {1,2}");
  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "bss(D:15,40)->{1,2,3} dss(D:15)->{1,2} " << (ok ? "ok" : "MISMATCH")
         << " " << elapsed << "s";
  report(2, ok && elapsed < 60.0, detail.str());
}

void criterion_3_abelian_theorem() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& list : std::vector<std::vector<long long>>{
           {2, 2}, {2, 2, 2}, {4, 3}, {3, 9}}) {
    AbstractGroupSpec spec = AbstractGroupSpec::abelian(list);
    int n = static_cast<int>(spec.divisors.size());
    std::set<int> want;
    for (int i = 1; i <= n; ++i) want.insert(i);
    long long sum = 0;
    for (long long d : spec.divisors) sum += d;
    std::set<int> achieved = base_size_set(spec, spec.order() + sum);
    std::set<int> dets =
        corpus_determining_numbers(standard_corpus(spec, 100));
    bool case_ok =
        achieved == want &&
        std::includes(want.begin(), want.end(), dets.begin(), dets.end());
    detail += spec.name() + "=" + format_set(achieved) +
              " corpus=" + format_set(dets) + " ";
    ok = ok && case_ok;
  }
  double elapsed = seconds_since(start);
  report(3, ok && elapsed < 120.0, detail + std::to_string(elapsed) + "s");
}

void criterion_4_dihedral_families() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  struct Case {
    long long n, max_points;
    int corpus_budget;
    std::set<int> want;
  };
  for (const Case& c : {Case{9, 24, 64, {1, 2}}, Case{27, 60, 120, {1, 2}},
                        Case{10, 24, 64, {1, 2, 3}}, Case{18, 42, 80, {1, 2, 3}}}) {
    AbstractGroupSpec spec = AbstractGroupSpec::dihedral(c.n);
    std::set<int> achieved = base_size_set(spec, c.max_points);
    GraphCorpus corpus = standard_corpus(spec, c.corpus_budget);
    std::set<int> dets = corpus_determining_numbers(corpus);
    bool case_ok = achieved == c.want && dets == c.want;
    if (c.want.count(3)) {
      bool witness = false;
      for (const auto& entry : corpus.entries)
        if (entry.label.rfind("path2+cycle", 0) == 0 &&
            determining_number(entry.graph, entry.graph.vertex_count) == 3)
          witness = true;
      case_ok = case_ok && witness;
    }
    detail += spec.name() + " B=" + format_set(achieved) +
              " D=" + format_set(dets) + " ";
    ok = ok && case_ok;
  }
  double elapsed = seconds_since(start);
  report(4, ok && elapsed < 60.0, detail + std::to_string(elapsed) + "s");
}

void criterion_5_oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Graph> corpus;
  for (int n = 3; n <= 7; ++n) corpus.push_back(cycle(n));
  for (int n = 1; n <= 7; ++n) corpus.push_back(path(n));
  for (int n = 2; n <= 7; ++n) corpus.push_back(complete_graph(n));
  for (int n = 1; n <= 7; ++n) corpus.push_back(Graph(n));  // edgeless
  for (int a = 1; a <= 4; ++a)
    for (int b = 3; a + b <= 7; ++b)
      corpus.push_back(disjoint_union(path(a), cycle(b)));
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 7; ++b)
      corpus.push_back(disjoint_union(path(a), path(b)));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 7; ++b) {  // complete bipartite
      Graph g(a + b);
      for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
      corpus.push_back(g);
    }
  corpus.push_back(disjoint_union(cycle(3), cycle(3)));
  corpus.push_back(disjoint_union(cycle(3), cycle(4)));
  corpus.push_back(spider({1, 2}));
  corpus.push_back(spider({1, 2, 3}));
  corpus.push_back(spider({2, 4}));
  corpus.push_back(spider({3, 3}));
  corpus.push_back(spider({1, 1, 2}));
  corpus.push_back(spider({2, 2, 2}));
  std::mt19937 rng(987654321);
  while (corpus.size() < 220) {
    int n = 5 + static_cast<int>(corpus.size() % 3);
    corpus.push_back(random_graph(n, 0.15 + 0.1 * (corpus.size() % 7), rng));
  }

  long long graphs_checked = 0;
  bool ok = true;
  for (const auto& g : corpus) {
    if (g.vertex_count > 7) continue;
    if (g.vertex_count == 0) continue;
    ++graphs_checked;
    PermutationGroup aut = automorphism_group(g);
    if (aut.elements() != oracles::all_permutation_automorphisms(g)) {
      ok = false;
      break;
    }
    if (min_base_size(aut) !=
        oracles::subset_scan_min_base_size(aut.elements(), aut.degree())) {
      ok = false;
      break;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "graphs=" << graphs_checked << " refinement==brute-force and "
         << "pruned==subset-scan " << (ok ? "ok" : "MISMATCH") << " " << elapsed
         << "s";
  report(5, ok && graphs_checked >= 200 && elapsed < 120.0, detail.str());
}

void criterion_6_invariant_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  long long checks = 0;
  std::string why;

  std::vector<detail::ScanObject> objects;
  objects.push_back({"dpq(3,5)", dpq_representation(3, 5), 3, 5});
  objects.push_back({"dpq(3,7)", dpq_representation(3, 7), 3, 7});
  objects.push_back({"dpq(5,7)", dpq_representation(5, 7), 5, 7});
  {
    AbstractGroupSpec d15 = AbstractGroupSpec::dihedral(15);
    PermutationGroup reg = regular_representation(d15);
    int i = 0;
    for (const auto& d : faithful_actions(d15, 24))
      objects.push_back({"D:15#" + std::to_string(i++), coset_action(reg, d), 3, 5});
    for (const auto& entry : standard_corpus(d15, 64).entries)
      objects.push_back({entry.label,
                         automorphism_group(entry.graph, entry.graph.vertex_count),
                         3, 5});
    for (const auto& entry :
         standard_corpus(AbstractGroupSpec::dihedral(21), 80).entries)
      objects.push_back({entry.label,
                         automorphism_group(entry.graph, entry.graph.vertex_count),
                         3, 7});
  }
  {
    AbstractGroupSpec d9 = AbstractGroupSpec::dihedral(9);
    PermutationGroup reg = regular_representation(d9);
    int i = 0;
    for (const auto& d : faithful_actions(d9, 20))
      objects.push_back({"D:9#" + std::to_string(i++), coset_action(reg, d), 0, 0});
  }

  for (const auto& obj : objects) {
    // orbit-stabilizer product identity
    for (int v = 0; v < obj.group.degree(); ++v) {
      ++checks;
      if (static_cast<long long>(orbit(obj.group, v).size()) *
              pointwise_stabilizer(obj.group, {v}).order() !=
          obj.group.order()) {
        ok = false;
        why = obj.label + " orbit-stabilizer";
        break;
      }
    }
    if (!ok) break;
    ClaimResult lemma1 = check_lemma_order_pk(obj.group, obj.label);
    checks += lemma1.instances_checked;
    std::string failure;
    checks += detail::scan_qstab(obj, failure, kDefaultElementBudget);
    if (lemma1.status != ClaimStatus::pass || !failure.empty()) {
      ok = false;
      why = obj.label + (failure.empty() ? " cycle-length" : " qstab");
      break;
    }
    checks += detail::scan_flipping(obj, failure, kDefaultElementBudget);
    if (!failure.empty()) {
      ok = false;
      why = obj.label + " flipping";
      break;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream detail_text;
  detail_text << "objects=" << objects.size() << " checks=" << checks
              << " violations=" << (ok ? "0" : why) << " " << elapsed << "s";
  report(6, ok && elapsed < 60.0, detail_text.str());
}

void criterion_7_verify_cli(const std::string& cli) {
  CommandResult run = run_command(cli + " verify paper");
  bool evidence_ok = false;
  bool others_pass = true;
  std::istringstream in(run.output);
  std::string line;
  int claims = 0;
  while (std::getline(in, line)) {
    if (line.rfind("CLAIM ", 0) != 0) continue;
    ++claims;
    std::istringstream fields(line);
    std::string tag, id, status;
    fields >> tag >> id >> status;
    if (id == "THM-3-NOT-IN-D")
      evidence_ok = (status == "EVIDENCE");
    else if (status != "PASS")
      others_pass = false;
  }
  bool ok = run.exit_code == 0 && claims == 12 && evidence_ok && others_pass;
  std::ostringstream detail;
  detail << "exit=" << run.exit_code << " claims=" << claims
         << " THM-3-NOT-IN-D=" << (evidence_ok ? "EVIDENCE" : "WRONG")
         << " others=" << (others_pass ? "PASS" : "NOT-ALL-PASS");
  report(7, ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  std::string cli = std::string("\"") + argv[1] + "\"";
  criterion_1_dpq_base_size();
  criterion_2_separation_cli(cli);
  criterion_3_abelian_theorem();
  criterion_4_dihedral_families();
  criterion_5_oracle_equivalence();
  criterion_6_invariant_suite();
  criterion_7_verify_cli(cli);
  std::printf("ACCEPTANCE SUMMARY %s (%d failing)\n",
              failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
