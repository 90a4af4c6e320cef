#pragma once

// Text input and output for matroids.
//
// Matrix files:  "r n", then r rows of n characters 0/1, then an optional
// line of n whitespace-separated labels.
// Graph files:   "graph", then one "u v" edge per line; vertex names are
// arbitrary tokens and edges are labelled 1..m in file order.
// Blank lines and lines starting with '#' are ignored in both formats.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cdmat/errors.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/zoo.hpp"

namespace cdmat::io {

namespace detail {

struct Line {
  int number;
  std::string text;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string s;
  for (int n = 1; std::getline(in, s); ++n) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos || s[first] == '#') continue;
    const auto last = s.find_last_not_of(" \t");
    out.push_back({n, s.substr(first, last - first + 1)});
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int parse_count(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v < 0) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("expected a non-negative integer ") + what + ", got '" + token + "'", line);
  }
}

inline BinaryMatroid parse_matrix(const std::vector<Line>& lines) {
  const auto head = tokens(lines[0].text);
  if (head.size() != 2) throw MalformedInput("expected header 'r n'", lines[0].number);
  const int r = parse_count(head[0], lines[0].number, "row count");
  const int n = parse_count(head[1], lines[0].number, "column count");
  if (n > kMaxElements) throw CapExceeded("matrix input: column count", n, kMaxElements);
  if (r > 64) throw CapExceeded("matrix input: row count", r, 64);
  if (static_cast<int>(lines.size()) < 1 + r)
    throw MalformedInput("expected " + std::to_string(r) + " matrix rows, found " +
                             std::to_string(lines.size() - 1),
                         lines.back().number);
  Gf2Matrix m(r, n);
  for (int i = 0; i < r; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i + 1)];
    if (static_cast<int>(line.text.size()) != n)
      throw MalformedInput("row has " + std::to_string(line.text.size()) + " entries, expected " + std::to_string(n),
                           line.number);
    for (int j = 0; j < n; ++j) {
      const char c = line.text[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw MalformedInput(std::string("entry '") + c + "' is not 0 or 1", line.number);
      if (c == '1') m.set(i, j, true);
    }
  }
  auto labels = BinaryMatroid::default_labels(n);
  if (static_cast<int>(lines.size()) > 1 + r) {
    const auto& line = lines[static_cast<std::size_t>(r + 1)];
    labels = tokens(line.text);
    if (static_cast<int>(labels.size()) != n)
      throw MalformedInput("label line has " + std::to_string(labels.size()) + " labels, expected " + std::to_string(n),
                           line.number);
    if (static_cast<int>(lines.size()) > 2 + r)
      throw MalformedInput("unexpected content after the label line", lines[static_cast<std::size_t>(r + 2)].number);
  }
  return {std::move(m), std::move(labels)};
}

inline BinaryMatroid parse_graph(const std::vector<Line>& lines) {
  std::map<std::string, int> vertex;
  Graph g;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto t = tokens(lines[k].text);
    if (t.size() != 2) throw MalformedInput("expected an edge 'u v'", lines[k].number);
    std::pair<int, int> e;
    for (int side = 0; side < 2; ++side) {
      auto [it, fresh] = vertex.try_emplace(t[static_cast<std::size_t>(side)], static_cast<int>(vertex.size()));
      (side == 0 ? e.first : e.second) = it->second;
    }
    g.edges.push_back(e);
  }
  if (static_cast<int>(g.edges.size()) > kMaxElements)
    throw CapExceeded("graph input: edge count", static_cast<long>(g.edges.size()), kMaxElements);
  g.vertex_count = static_cast<int>(vertex.size());
  return zoo::graphic(g);
}

}  // namespace detail

/// Parses a matrix or graph description from a stream.
inline BinaryMatroid parse(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw MalformedInput("empty input", 0);
  if (lines[0].text == "graph") return detail::parse_graph(lines);
  return detail::parse_matrix(lines);
}

inline BinaryMatroid parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

inline BinaryMatroid parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path.string() + "'", 0);
  return parse(in);
}

/// A path to an existing file, "graph:@path", or a zoo name spec.
inline BinaryMatroid parse_input(const std::string& source) {
  if (source.rfind("graph:@", 0) == 0) {
    const std::filesystem::path path = source.substr(7);
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path.string() + "'", 0);
    auto lines = detail::content_lines(in);
    if (lines.empty() || lines[0].text != "graph") lines.insert(lines.begin(), {0, "graph"});
    return detail::parse_graph(lines);
  }
  if (std::filesystem::is_regular_file(source)) return parse_file(source);
  return zoo::make(source);
}

/// Matrix format. The label line is written only when labels differ from 1..n.
inline void write_matrix(std::ostream& out, const BinaryMatroid& m) {
  const auto& rep = m.representation();
  out << rep.row_count() << ' ' << rep.column_count() << '\n' << rep.to_string();
  if (m.labels() != BinaryMatroid::default_labels(m.size())) {
    for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.label(j);
    out << '\n';
  }
}

inline std::string to_matrix_string(const BinaryMatroid& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace cdmat::io
