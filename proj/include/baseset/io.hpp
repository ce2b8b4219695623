#pragma once

// Text formats: permutation group files, graph files, and the group
// descriptor grammar used by the command line.
//
// permutation group file:
//   degree n
//   one generator per line, either a whitespace-separated image list of
//   length n or cycle notation "(a b c)(d e)" with 0-based points;
//   blank lines and '#' comments are ignored.
//
// graph file:
//   n m
//   m lines "u v" with 0 <= u < v < n; '#' comments and blank lines are
//   ignored; writers emit edges in lexicographic order.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "baseset/errors.hpp"
#include "baseset/graphs.hpp"
#include "baseset/groups.hpp"
#include "baseset/perm_group.hpp"

namespace baseset {

namespace detail {

inline std::string strip_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Reads logical (non-empty, comment-stripped) lines with their 1-based
/// physical line numbers.
inline std::vector<std::pair<std::string, int>> logical_lines(std::istream& in) {
  std::vector<std::pair<std::string, int>> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = strip_line(raw);
    if (!s.empty()) lines.emplace_back(std::move(s), number);
  }
  return lines;
}

inline Permutation parse_cycle_notation(const std::string& text, int degree,
                                        int line) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation", line);
    std::size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw parse_error("unterminated cycle", line);
    std::istringstream body(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    int p = 0;
    while (body >> p) cyc.push_back(p);
    if (!body.eof()) throw parse_error("bad point in cycle notation", line);
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), line);
  }
}

}  // namespace detail

inline PermutationGroup read_permutation_group(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw parse_error("empty permutation group file", 1);
  std::istringstream head(lines[0].first);
  std::string keyword;
  long long degree = 0;
  if (!(head >> keyword >> degree) || keyword != "degree" || degree < 1 ||
      (head >> keyword))
    throw parse_error("expected 'degree n'", lines[0].second);

  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [text, line] = lines[i];
    if (text.front() == '(') {
      gens.push_back(detail::parse_cycle_notation(text, static_cast<int>(degree), line));
      continue;
    }
    std::istringstream body(text);
    std::vector<int> images;
    int x = 0;
    while (body >> x) images.push_back(x);
    if (!body.eof()) throw parse_error("bad image value", line);
    if (images.size() != static_cast<std::size_t>(degree))
      throw parse_error("image list length does not match degree", line);
    try {
      gens.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line);
    }
  }
  if (gens.empty())
    throw parse_error("no generators given", lines.back().second);
  return PermutationGroup(static_cast<int>(degree), std::move(gens));
}

inline PermutationGroup read_permutation_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path, 0);
  return read_permutation_group(in);
}

inline Graph read_graph(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw parse_error("empty graph file", 1);
  std::istringstream head(lines[0].first);
  long long n = 0, m = 0;
  std::string extra;
  if (!(head >> n >> m) || n < 0 || m < 0 || (head >> extra))
    throw parse_error("expected 'n m'", lines[0].second);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error("edge count does not match header",
                      lines.back().second);
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [text, line] = lines[i];
    std::istringstream body(text);
    long long u = 0, v = 0;
    if (!(body >> u >> v) || (body >> extra))
      throw parse_error("expected 'u v'", line);
    if (u < 0 || v <= u || v >= n)
      throw parse_error("edge endpoints must satisfy 0 <= u < v < n", line);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("duplicate edge", line);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path, 0);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

/// `Z:d1,d2,...` for a direct sum of cyclic groups of the listed orders
/// (elementary divisors are computed internally) or `D:n` for the dihedral
/// group of order 2n.
inline AbstractGroupSpec parse_group_descriptor(const std::string& text) {
  if (text.size() < 3 || text[1] != ':')
    throw std::invalid_argument("group descriptor must be Z:d1,d2,... or D:n");
  std::string body = text.substr(2);
  if (text[0] == 'D') {
    std::istringstream in(body);
    long long n = 0;
    char extra;
    if (!(in >> n) || in.get(extra) || n < 2)
      throw std::invalid_argument("bad dihedral descriptor: " + text);
    return AbstractGroupSpec::dihedral(n);
  }
  if (text[0] == 'Z') {
    std::vector<long long> orders;
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
      std::istringstream pin(part);
      long long d = 0;
      char extra;
      if (!(pin >> d) || pin.get(extra) || d < 2)
        throw std::invalid_argument("bad abelian descriptor: " + text);
      orders.push_back(d);
    }
    if (orders.empty())
      throw std::invalid_argument("bad abelian descriptor: " + text);
    return AbstractGroupSpec::abelian(orders);
  }
  throw std::invalid_argument("group descriptor must be Z:d1,d2,... or D:n");
}

}  // namespace baseset
