#pragma once

// Test corpora: 2-connected multigraphs, connected binary matroids up to
// isomorphism, and seeded random series extensions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdmat/isomorphism.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/parallel.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/zoo.hpp"

namespace cdmat::corpus {

namespace detail {

using cdmat::detail::bit;

/// Multiplicity matrix of a loopless multigraph.
struct Adjacency {
  int n;
  std::vector<int> mult;
  int at(int u, int v) const { return mult[static_cast<std::size_t>(u * n + v)]; }
};

inline Adjacency adjacency(const Graph& g) {
  Adjacency a{g.vertex_count, std::vector<int>(static_cast<std::size_t>(g.vertex_count * g.vertex_count), 0)};
  for (auto [u, v] : g.edges) {
    ++a.mult[static_cast<std::size_t>(u * a.n + v)];
    ++a.mult[static_cast<std::size_t>(v * a.n + u)];
  }
  return a;
}

/// Order-preserving colour refinement until the partition is stable.
inline std::vector<int> refine(const Adjacency& a, std::vector<int> colour) {
  while (true) {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v) {
      auto& k = keys[static_cast<std::size_t>(v)];
      for (int u = 0; u < a.n; ++u)
        if (a.at(v, u)) k.push_back(colour[static_cast<std::size_t>(u)] * 64 + a.at(v, u));
      std::sort(k.begin(), k.end());
      k.insert(k.begin(), colour[static_cast<std::size_t>(v)]);
    }
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v)
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[static_cast<std::size_t>(v)]) - distinct.begin());
    const auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    if (classes(next) == classes(colour)) return next;
    colour = std::move(next);
  }
}

/// Canonical form by individualisation and refinement: the least sorted edge
/// list over all leaves of the search tree.
inline std::vector<std::pair<int, int>> canonical_edges(const Graph& g) {
  const auto a = adjacency(g);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  auto search = [&](auto&& self, std::vector<int> colour) -> void {
    colour = refine(a, std::move(colour));
    // First non-singleton cell.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < a.n; ++v) cells[colour[static_cast<std::size_t>(v)]].push_back(v);
    for (const auto& [c, members] : cells) {
      if (members.size() < 2) continue;
      for (int chosen : members) {
        std::vector<int> split(static_cast<std::size_t>(a.n));
        for (int v = 0; v < a.n; ++v)
          split[static_cast<std::size_t>(v)] = 2 * colour[static_cast<std::size_t>(v)] + (colour[static_cast<std::size_t>(v)] == c && v != chosen);
        self(self, std::move(split));
      }
      return;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
      const int x = colour[static_cast<std::size_t>(u)], y = colour[static_cast<std::size_t>(v)];
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(edges.begin(), edges.end());
    if (!have || edges < best) best = std::move(edges), have = true;
  };
  search(search, std::vector<int>(static_cast<std::size_t>(a.n), 0));
  return best;
}

}  // namespace detail

/// All 2-connected loopless multigraphs with at most max_edges edges, up to
/// isomorphism, including K_2. Built from K_2 by open ear additions.
inline std::vector<Graph> two_connected_graphs(int max_edges) {
  std::vector<Graph> out;
  if (max_edges < 1) return out;
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
  std::vector<Graph> level{{2, {{0, 1}}}};
  seen.insert({2, detail::canonical_edges(level[0])});
  while (!level.empty()) {
    std::vector<Graph> next;
    for (const auto& g : level) {
      out.push_back(g);
      const int room = max_edges - static_cast<int>(g.edges.size());
      for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
          for (int len = 1; len <= room; ++len) {
            Graph h = g;
            int prev = u;
            for (int k = 1; k < len; ++k) {
              h.edges.emplace_back(prev, h.vertex_count);
              prev = h.vertex_count++;
            }
            h.edges.emplace_back(prev, v);
            auto key = std::make_pair(h.vertex_count, detail::canonical_edges(h));
            if (seen.insert(std::move(key)).second) next.push_back(std::move(h));
          }
    }
    level = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.edges.size() < b.edges.size(); });
  return out;
}

/// Cycle matroids of 2-connected graphs with at most max_edges edges, one per
/// isomorphism class of matroid.
inline std::vector<BinaryMatroid> graphic_corpus(int max_edges) {
  IsoClassSet classes;
  for (const auto& g : two_connected_graphs(max_edges)) classes.insert(zoo::graphic(g));
  return classes.representatives();
}

namespace detail {

/// Indices of the first member of each isomorphism class, ascending.
/// Parallel over invariant buckets.
inline std::vector<std::size_t> dedupe_indices(const std::vector<BinaryMatroid>& items, bool signature_only, int threads) {
  const auto invariants =
      parallel_map<std::uint64_t>(items.size(), [&](std::size_t i) { return iso_invariant(items[i]); }, threads);
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < items.size(); ++i) buckets[invariants[i]].push_back(i);
  std::vector<const std::vector<std::size_t>*> groups;
  for (const auto& [k, v] : buckets) groups.push_back(&v);
  const auto kept = parallel_map<std::vector<std::size_t>>(groups.size(), [&](std::size_t gi) {
    const auto& g = *groups[gi];
    if (signature_only) return std::vector<std::size_t>{g.front()};
    std::vector<std::size_t> reps;
    std::vector<IsoProfile> profiles;
    for (auto i : g) {
      IsoProfile p(items[i]);
      bool fresh = true;
      for (const auto& q : profiles)
        if (find_isomorphism(q, p)) {
          fresh = false;
          break;
        }
      if (fresh) {
        reps.push_back(i);
        profiles.push_back(std::move(p));
      }
    }
    return reps;
  }, threads);
  std::vector<std::size_t> order;
  for (const auto& v : kept) order.insert(order.end(), v.begin(), v.end());
  std::sort(order.begin(), order.end());
  return order;
}

/// Removes isomorphic duplicates, keeping the first of each class.
inline std::vector<BinaryMatroid> dedupe(const std::vector<BinaryMatroid>& items, bool signature_only, int threads) {
  std::vector<BinaryMatroid> out;
  for (auto i : dedupe_indices(items, signature_only, threads)) out.push_back(items[i]);
  return out;
}

/// Every single-element extension and coextension of m, in a fixed order.
/// The new element is last.
inline std::vector<BinaryMatroid> one_element_growths(const BinaryMatroid& m) {
  const int n = m.size(), r = m.rank();
  const auto rows = m.reduced_rows();
  std::vector<BinaryMatroid> out;
  for (std::uint64_t v = 0; v < bit(r); ++v) {
    std::vector<std::uint64_t> grown(rows.begin(), rows.end());
    for (int i = 0; i < r; ++i)
      if ((v >> i) & 1) grown[static_cast<std::size_t>(i)] |= bit(n);
    out.emplace_back(Gf2Matrix::from_rows(std::move(grown), n + 1));
  }
  // New row x + e with x supported on the non-basis elements; other choices
  // of x differ from these by row operations.
  std::uint64_t nonbasis = m.full_mask();
  for (int p : m.basis_columns()) nonbasis &= ~bit(p);
  for (std::uint64_t x = nonbasis;; x = (x - 1) & nonbasis) {
    std::vector<std::uint64_t> grown(rows.begin(), rows.end());
    grown.push_back(x | bit(n));
    out.emplace_back(Gf2Matrix::from_rows(std::move(grown), n + 1));
    if (x == 0) break;
  }
  return out;
}

}  // namespace detail

/// Connected binary matroids on 1..max_elements elements, one per
/// isomorphism class, ordered by size and then by generation order.
///
/// Every connected matroid on n + 1 elements has an element whose deletion
/// or contraction is connected, so growing each level by single-element
/// extensions and coextensions reaches every class. Above `exact_limit`
/// elements classes are merged by invariant signature only, which may merge
/// distinct classes (under-counting, never adding duplicates).
inline std::vector<std::vector<BinaryMatroid>> connected_binary_levels(int max_elements, int exact_limit = 9,
                                                                       int threads = worker_count()) {
  if (max_elements > 14) throw CapExceeded("connected binary corpus: elements", max_elements, 14);
  std::vector<std::vector<BinaryMatroid>> levels(static_cast<std::size_t>(std::max(max_elements, 0) + 1));
  if (max_elements < 1) return levels;
  levels[1] = {zoo::loop(), zoo::free_matroid(1)};
  for (int n = 1; n < max_elements; ++n) {
    const auto& parents = levels[static_cast<std::size_t>(n)];
    const auto grown = parallel_map<std::vector<BinaryMatroid>>(parents.size(), [&](std::size_t i) {
      auto all = detail::one_element_growths(parents[i]);
      std::vector<BinaryMatroid> keep;
      for (auto& m : all)
        if (is_connected(m)) keep.push_back(std::move(m));
      return keep;
    }, threads);
    std::vector<BinaryMatroid> candidates;
    for (const auto& g : grown) candidates.insert(candidates.end(), g.begin(), g.end());
    levels[static_cast<std::size_t>(n + 1)] = detail::dedupe(candidates, n + 1 > exact_limit, threads);
  }
  return levels;
}

/// Flattened connected_binary_levels, cached per (max_elements, exact_limit).
inline const std::vector<BinaryMatroid>& connected_binary(int max_elements, int exact_limit = 9) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<BinaryMatroid>> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_pair(max_elements, exact_limit);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<BinaryMatroid> flat;
    for (auto& level : connected_binary_levels(max_elements, exact_limit))
      flat.insert(flat.end(), level.begin(), level.end());
    it = cache.emplace(key, std::move(flat)).first;
  }
  return it->second;
}

/// One random series extension: `moves` single-element moves, each on a
/// uniformly chosen non-coloop element. Returns m unchanged if every element
/// is a coloop.
inline BinaryMatroid random_series_extension(const BinaryMatroid& m, int moves, std::mt19937_64& rng) {
  auto out = m;
  for (int k = 0; k < moves; ++k) {
    std::vector<int> targets;
    for (int e = 0; e < out.size(); ++e)
      if (!out.is_coloop(e)) targets.push_back(e);
    if (targets.empty() || out.size() >= kMaxElements) break;
    const int e = targets[static_cast<std::size_t>(rng() % targets.size())];
    out = series_extend(out, e, {"s" + std::to_string(out.size() + 1)});
  }
  return out;
}

/// `count` series extensions of members of `bases`, each with 1..max_moves
/// moves. Deterministic in seed.
inline std::vector<BinaryMatroid> random_series_extensions(const std::vector<BinaryMatroid>& bases, int count,
                                                           std::uint64_t seed, int max_moves = 3) {
  std::vector<BinaryMatroid> out;
  if (bases.empty()) return out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto& base = bases[static_cast<std::size_t>(rng() % bases.size())];
    const int moves = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_moves));
    out.push_back(random_series_extension(base, moves, rng));
  }
  return out;
}

/// Simple rank-r binary matroids (spanning subsets of PG(r-1,2)), one per class.
inline std::vector<BinaryMatroid> simple_binary_matroids(int r) {
  if (r > 4) throw CapExceeded("simple binary matroids: rank", r, 4);
  const auto pg = zoo::pg(r);
  // Grow point sets of PG(r-1,2) one point at a time, one representative per
  // class. Binary representations are projectively unique, so every class is
  // reached from a representative of any of its single deletions.
  std::vector<std::uint64_t> level{0};
  std::vector<BinaryMatroid> out;
  while (!level.empty()) {
    std::vector<std::uint64_t> next_sets;
    std::vector<BinaryMatroid> next;
    std::set<std::uint64_t> seen;
    for (auto s : level)
      for (int p = 0; p < pg.size(); ++p)
        if (!(s & detail::bit(p)) && seen.insert(s | detail::bit(p)).second) {
          next_sets.push_back(s | detail::bit(p));
          next.push_back(restriction(pg, pg.set(s | detail::bit(p))));
        }
    level.clear();
    for (auto i : detail::dedupe_indices(next, false, worker_count())) {
      level.push_back(next_sets[i]);
      if (pg.rank_of(next_sets[i]) == r) out.push_back(next[i]);
    }
  }
  return out;
}

}  // namespace cdmat::corpus
