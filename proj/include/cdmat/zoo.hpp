#pragma once

// Constructors for the named binary matroids used throughout the library.
//
// Labelling: s8 uses 1..8 as in its standard 4x8 representation; graphic and
// cographic matroids number edges 1..m in input order; PG/AG points are
// labelled by their coordinate strings (coordinate 0 first).

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdmat/errors.hpp"
#include "cdmat/gf2.hpp"
#include "cdmat/matroid.hpp"

namespace cdmat {

/// An undirected multigraph on vertices 0..vertex_count-1.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace zoo {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterOutOfRange(what);
}

inline std::string coordinates(std::uint64_t v, int r) {
  std::string s;
  for (int i = 0; i < r; ++i) s.push_back(((v >> i) & 1) ? '1' : '0');
  return s;
}

inline BinaryMatroid from_columns(const std::vector<std::uint64_t>& cols, int rows,
                                  std::vector<std::string> labels) {
  return {Gf2Matrix::from_columns(cols, rows), std::move(labels)};
}

}  // namespace detail

/// U_{1,m}: m parallel non-loops.
inline BinaryMatroid uniform_rank1(int m) {
  detail::require(m >= 1 && m <= kMaxElements, "uniform_rank1: m must be in [1, 64]");
  return BinaryMatroid(Gf2Matrix::from_rows({cdmat::detail::low_mask(m)}, m));
}

/// U_{0,1}: a single loop.
inline BinaryMatroid loop() { return BinaryMatroid(Gf2Matrix(0, 1)); }

/// U_{n,n}: n coloops.
inline BinaryMatroid free_matroid(int n) {
  detail::require(n >= 0 && n <= kMaxElements, "free_matroid: n must be in [0, 64]");
  return BinaryMatroid(Gf2Matrix::identity(n));
}

/// U_{n-1,n}: a single n-element circuit.
inline BinaryMatroid circuit(int n) {
  detail::require(n >= 1 && n <= kMaxElements, "circuit: n must be in [1, 64]");
  std::vector<std::uint64_t> cols;
  for (int i = 0; i + 1 < n; ++i) cols.push_back(cdmat::detail::bit(i));
  cols.push_back(cdmat::detail::low_mask(n - 1));
  return detail::from_columns(cols, n - 1, BinaryMatroid::default_labels(n));
}

inline BinaryMatroid s8() {
  return BinaryMatroid(Gf2Matrix::from_strings({"10001110",
                                                "01001111",
                                                "00100011",
                                                "00011001"}));
}

namespace detail {

inline BinaryMatroid spike(int r, bool tipped) {
  require(r >= 1 && 2 * r + (tipped ? 1 : 0) <= kMaxElements, "spike: rank out of range");
  std::vector<std::uint64_t> cols;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    cols.push_back(cdmat::detail::bit(i));
    labels.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < r; ++i) {
    cols.push_back(cdmat::detail::low_mask(r) & ~cdmat::detail::bit(i));
    labels.push_back("y" + std::to_string(i + 1));
  }
  if (tipped) {
    cols.push_back(cdmat::detail::low_mask(r));
    labels.push_back("t");
  }
  return from_columns(cols, r, std::move(labels));
}

}  // namespace detail

/// [I_r | J_r - I_r]; legs {x_i, y_i}.
inline BinaryMatroid tipless_spike(int r) { return detail::spike(r, false); }

/// [I_r | J_r - I_r | 1]; tip t.
inline BinaryMatroid tipped_spike(int r) { return detail::spike(r, true); }

/// M(G) from the vertex-edge incidence matrix; a graph loop is a matroid loop.
inline BinaryMatroid graphic(const Graph& g) {
  detail::require(g.vertex_count >= 0, "graphic: negative vertex count");
  detail::require(static_cast<int>(g.edges.size()) <= kMaxElements, "graphic: more than 64 edges");
  Gf2Matrix inc(g.vertex_count, static_cast<int>(g.edges.size()));
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const auto [u, v] = g.edges[j];
    detail::require(u >= 0 && u < g.vertex_count && v >= 0 && v < g.vertex_count,
                    "graphic: edge endpoint out of range");
    if (u == v) continue;
    inc.set(u, static_cast<int>(j), true);
    inc.set(v, static_cast<int>(j), true);
  }
  return {inc, BinaryMatroid::default_labels(static_cast<int>(g.edges.size()))};
}

inline BinaryMatroid cographic(const Graph& g) { return dual(graphic(g)); }

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete: n must be at least 1");
  Graph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

inline Graph complete_bipartite_graph(int a, int b) {
  detail::require(a >= 1 && b >= 1, "complete_bipartite: sides must be at least 1");
  Graph g{a + b, {}};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
  return g;
}

/// K_3 x K_2: two triangles joined by a perfect matching.
inline Graph prism_graph() { return {6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}}; }

inline Graph cycle_graph(int n) {
  detail::require(n >= 2, "cycle: n must be at least 2");
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

inline BinaryMatroid complete(int n) { return graphic(complete_graph(n)); }
inline BinaryMatroid complete_bipartite(int a, int b) { return graphic(complete_bipartite_graph(a, b)); }

/// [I_5 | B] with B the circulant whose first row is 1 1 0 0 1.
inline BinaryMatroid r10() {
  const char* first = "11001";
  std::vector<std::uint64_t> cols;
  for (int i = 0; i < 5; ++i) cols.push_back(cdmat::detail::bit(i));
  for (int j = 0; j < 5; ++j) {
    std::uint64_t c = 0;
    for (int i = 0; i < 5; ++i)
      if (first[(j - i + 5) % 5] == '1') c |= cdmat::detail::bit(i);
    cols.push_back(c);
  }
  return detail::from_columns(cols, 5, BinaryMatroid::default_labels(10));
}

/// PG(r-1, 2): all non-zero vectors of GF(2)^r, in increasing integer order.
inline BinaryMatroid pg(int r) {
  detail::require(r >= 1 && (1 << r) - 1 <= kMaxElements, "pg: rank must be in [1, 6]");
  std::vector<std::uint64_t> cols;
  std::vector<std::string> labels;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << r); ++v) {
    cols.push_back(v);
    labels.push_back(detail::coordinates(v, r));
  }
  return detail::from_columns(cols, r, std::move(labels));
}

/// Points of AG(r-1, 2): vectors with coordinate 0 equal to 1. The deleted
/// hyperplane of PG(r-1, 2) is the set of non-zero vectors with coordinate 0 equal to 0.
inline std::vector<std::uint64_t> affine_points(int r) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << r); v += 2) pts.push_back(v);
  return pts;
}

inline BinaryMatroid ag(int r) {
  detail::require(r >= 1 && (1 << (r - 1)) <= kMaxElements, "ag: rank must be in [1, 7]");
  std::vector<std::string> labels;
  const auto pts = affine_points(r);
  for (auto v : pts) labels.push_back(detail::coordinates(v, r));
  return detail::from_columns(pts, r, std::move(labels));
}

/// The point of the deleted hyperplane with lexicographically least label.
inline std::uint64_t default_extension_point(int r) { return cdmat::detail::bit(r - 1); }

/// AG(r-1, 2) + e, with e appended last. `point` must lie on the deleted hyperplane.
inline BinaryMatroid ag_plus_e(int r, std::uint64_t point) {
  detail::require(r >= 2 && (1 << (r - 1)) + 1 <= kMaxElements, "ag+e: rank must be in [2, 7]");
  detail::require(point != 0 && (point & 1) == 0 && point < (std::uint64_t{1} << r),
                  "ag+e: extension point must be a non-zero vector with coordinate 0 equal to 0");
  auto pts = affine_points(r);
  std::vector<std::string> labels;
  for (auto v : pts) labels.push_back(detail::coordinates(v, r));
  pts.push_back(point);
  labels.push_back(detail::coordinates(point, r));
  return detail::from_columns(pts, r, std::move(labels));
}

inline BinaryMatroid ag_plus_e(int r) { return ag_plus_e(r, default_extension_point(r)); }

/// A triangle {a, b, c} with d parallel to a and e parallel to b.
inline BinaryMatroid n5() {
  return {Gf2Matrix::from_columns(std::vector<std::uint64_t>{0b01, 0b10, 0b11, 0b01, 0b10}, 2),
          {"a", "b", "c", "d", "e"}};
}

inline BinaryMatroid f7() { return pg(3); }
inline BinaryMatroid f7_star() { return dual(f7()); }

namespace detail {

inline int parse_int(std::string_view s, const std::string& spec) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw MalformedInput("matroid spec '" + spec + "': expected an integer, got '" + std::string(s) + "'", 0);
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Builds a matroid from a name spec such as "s8", "spike:4:tipless", "K:5",
/// "Kb:3,3", "r10", "ag:4", "ag+e:4", "n5", "pg:3", "u1:6", or "dual:<spec>".
/// Graph files ("graph:@path") are handled by the input parser.
inline BinaryMatroid make(const std::string& spec) {
  if (spec.rfind("dual:", 0) == 0) return dual(make(spec.substr(5)));
  const auto parts = detail::split(spec, ':');
  const std::string_view name = parts[0];
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw MalformedInput("matroid spec '" + spec + "': missing parameter", 0);
    return detail::parse_int(parts[i], spec);
  };
  auto no_args = [&] {
    if (parts.size() != 1) throw MalformedInput("matroid spec '" + spec + "' takes no parameters", 0);
  };
  if (name == "s8") return no_args(), s8();
  if (name == "r10") return no_args(), r10();
  if (name == "n5") return no_args(), n5();
  if (name == "f7") return no_args(), f7();
  if (name == "f7*") return no_args(), f7_star();
  if (name == "loop" || name == "u01") return no_args(), loop();
  if (name == "prism") return no_args(), graphic(prism_graph());
  if (name == "u1") return uniform_rank1(arg(1));
  if (name == "circuit") return circuit(arg(1));
  if (name == "free") return free_matroid(arg(1));
  if (name == "pg") return pg(arg(1));
  if (name == "ag") return ag(arg(1));
  if (name == "ag+e") return ag_plus_e(arg(1));
  if (name == "K") return complete(arg(1));
  if (name == "K*") return cographic(complete_graph(arg(1)));
  if (name == "C") return graphic(cycle_graph(arg(1)));
  if (name == "Kb" || name == "Kb*") {
    if (parts.size() != 2) throw MalformedInput("matroid spec '" + spec + "': expected Kb:a,b", 0);
    const auto sides = detail::split(parts[1], ',');
    if (sides.size() != 2) throw MalformedInput("matroid spec '" + spec + "': expected Kb:a,b", 0);
    const auto g = complete_bipartite_graph(detail::parse_int(sides[0], spec), detail::parse_int(sides[1], spec));
    return name == "Kb" ? graphic(g) : cographic(g);
  }
  if (name == "spike") {
    const int r = arg(1);
    if (parts.size() == 2 || parts[2] == "tipless") return tipless_spike(r);
    if (parts[2] == "tipped") return tipped_spike(r);
    throw MalformedInput("matroid spec '" + spec + "': spike kind must be tipless or tipped", 0);
  }
  throw MalformedInput("unknown matroid spec '" + spec + "'", 0);
}

}  // namespace zoo
}  // namespace cdmat
