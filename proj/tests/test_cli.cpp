// Command-line surface checks: exit codes, pinned output lines, and
// byte-identical reruns. argv[1] is the path to the binary under test.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::printf("FAIL %s\n", what.c_str());
  }
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

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
    return 2;
  }
  std::string cli = std::string("\"") + argv[1] + "\"";

  write_file("cli_swap.perm", "degree 4\n(0 1)\n");
  write_file("cli_dpq.perm", "degree 8\n(0 1 2)(3 4 5 6 7)\n(0 1)(3 6)(4 5)\n");
  write_file("cli_bad.perm", "degree 3\n0 0 1\n");
  write_file("cli_one.graph", "1 0\n");
  write_file("cli_c7.graph", "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");
  write_file("cli_bad.graph", "3 1\n2 1\n");
  {
    std::ostringstream big;
    big << "65 65\n";
    for (int i = 0; i < 64; ++i) big << i << ' ' << i + 1 << '\n';
    big << "0 64\n";
    write_file("cli_c65.graph", big.str());
  }

  {
    CommandResult r = run_command(cli + " base-size cli_swap.perm");
    check(r.exit_code == 0 && contains_line(r.output, "min base size: 1"),
          "base-size of a single 2-cycle prints 1");
  }
  {
    CommandResult r = run_command(cli + " base-size cli_dpq.perm");
    check(r.exit_code == 0 && contains_line(r.output, "min base size: 3"),
          "base-size of the dpq file prints 3");
  }
  {
    CommandResult r = run_command(cli + " base-size cli_bad.perm");
    check(r.exit_code == 2, "malformed permutation file exits 2");
  }
  {
    CommandResult r = run_command(cli + " base-size missing_file.perm");
    check(r.exit_code == 2, "missing file exits 2");
  }
  {
    CommandResult r = run_command(cli + " determining-number cli_c7.graph");
    check(r.exit_code == 0 && contains_line(r.output, "determining number: 2") &&
              contains_line(r.output, "aut order: 14"),
          "determining-number of C7 prints 2 with |Aut|=14");
  }
  {
    CommandResult r = run_command(cli + " determining-number cli_one.graph");
    check(r.exit_code == 0 && contains_line(r.output, "determining number: 0"),
          "one-vertex graph has determining number 0");
  }
  {
    CommandResult r = run_command(cli + " determining-number cli_bad.graph");
    check(r.exit_code == 2, "malformed graph file exits 2");
  }
  {
    CommandResult r = run_command(cli + " determining-number cli_c65.graph");
    check(r.exit_code == 3, "vertex budget exceeded exits 3");
    CommandResult raised =
        run_command(cli + " determining-number cli_c65.graph --vertex-budget 65");
    check(raised.exit_code == 0 &&
              contains_line(raised.output, "determining number: 2"),
          "raised vertex budget computes C65");
  }
  {
    CommandResult r = run_command(cli + " bss Z:4 --max-points 8");
    check(r.exit_code == 0 && contains_line(r.output, "base size set: {1}"),
          "bss Z:4 prints {1}");
  }
  {
    CommandResult r = run_command(cli + " bss Z:2,2 --max-points 4");
    check(r.exit_code == 0 && contains_line(r.output, "base size set: {1,2}"),
          "bss Z:2,2 prints {1,2}");
  }
  {
    CommandResult r = run_command(cli + " bss D:15 --element-budget 5");
    check(r.exit_code == 3, "starved element budget exits 3");
  }
  {
    CommandResult r = run_command(cli + " bss Q:7");
    check(r.exit_code == 2, "bad group descriptor exits 2");
  }
  {
    CommandResult a = run_command(cli + " bss D:15 --max-points 40");
    CommandResult b = run_command(cli + " bss D:15 --max-points 40");
    check(a.exit_code == 0 && a.output == b.output,
          "bss output is byte-identical across runs");
  }
  {
    CommandResult r = run_command(cli + " dss-evidence D:9");
    check(r.exit_code == 0 &&
              contains_line(r.output, "determining numbers: {1,2}"),
          "dss-evidence D:9 prints {1,2}");
  }
  {
    CommandResult r = run_command(cli + " dss-evidence D:6");
    check(r.exit_code == 0 &&
              contains_line(r.output, "determining numbers: {1,2,3}"),
          "dss-evidence D:6 prints {1,2,3}");
  }
  {
    CommandResult r = run_command(cli + " dss-evidence Z:27");
    check(r.exit_code == 3, "empty corpus exits 3");
  }
  {
    CommandResult a = run_command(cli + " dss-evidence D:9");
    CommandResult b = run_command(cli + " dss-evidence D:9");
    check(a.output == b.output, "dss-evidence output is byte-identical");
  }
  {
    CommandResult r = run_command(cli + " verify bogus");
    check(r.exit_code == 2, "unknown suite exits 2");
  }
  {
    auto start = std::chrono::steady_clock::now();
    CommandResult r = run_command(cli + " verify quick --out cli_report.json");
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check(r.exit_code == 0 && contains_line(r.output, "result: PASS"),
          "verify quick passes");
    check(elapsed < 10.0, "verify quick runs in under ten seconds");
    std::ifstream mirror("cli_report.json");
    std::stringstream buffer;
    buffer << mirror.rdbuf();
    check(buffer.str().find("\"claim\"") != std::string::npos &&
              buffer.str().find("THM-3-NOT-IN-D") != std::string::npos,
          "machine-readable mirror written");
  }
  {
    CommandResult r = run_command(cli);
    check(r.exit_code == 2, "missing subcommand exits 2");
  }
  {
    CommandResult r = run_command(cli + " --help");
    check(r.exit_code == 0, "--help exits 0");
    CommandResult sub = run_command(cli + " bss --help");
    check(sub.exit_code == 0, "subcommand --help exits 0");
  }
  {
    CommandResult loud = run_command(cli + " dss-evidence D:9");
    CommandResult quiet = run_command(cli + " dss-evidence D:9 --quiet");
    check(quiet.exit_code == 0 &&
              quiet.output == "determining numbers: {1,2}\n" &&
              loud.output.size() > quiet.output.size(),
          "--quiet keeps only the result line");
  }

  std::printf("test_cli: %d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
