#pragma once

// Brute-force decision procedures over enumerated circuit families. These are
// the ground truth that the structural recognizer is checked against.

#include <optional>
#include <utility>
#include <vector>

#include "cdmat/isomorphism.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/zoo.hpp"

namespace cdmat {

using CircuitPair = std::pair<ElementSet, ElementSet>;

/// Every pair (C1, C2) of distinct intersecting circuits, in lexicographic
/// pair order, whose symmetric difference is not a circuit.
inline std::vector<CircuitPair> circuit_difference_violations(const BinaryMatroid& m,
                                                              std::size_t limit = SIZE_MAX) {
  const auto& fam = m.circuits();
  const auto masks = fam.masks();
  std::vector<CircuitPair> out;
  for (std::size_t i = 0; i < masks.size() && out.size() < limit; ++i)
    for (std::size_t j = i + 1; j < masks.size() && out.size() < limit; ++j)
      if ((masks[i] & masks[j]) && !fam.contains(masks[i] ^ masks[j]))
        out.emplace_back(m.set(masks[i]), m.set(masks[j]));
  return out;
}

/// First violating pair, or nullopt when m is circuit-difference.
inline std::optional<CircuitPair> circuit_difference_violation(const BinaryMatroid& m) {
  auto v = circuit_difference_violations(m, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

/// C1 △ C2 is a circuit whenever C1, C2 are distinct intersecting circuits.
inline bool is_circuit_difference(const BinaryMatroid& m) {
  return !circuit_difference_violation(m).has_value();
}

inline bool are_skew(const BinaryMatroid& m, std::uint64_t x, std::uint64_t y) {
  return m.rank_of(x | y) == m.rank_of(x) + m.rank_of(y);
}

/// First pair of skew circuits in lexicographic pair order. Skew circuits are
/// disjoint, so intersecting pairs are skipped.
inline std::optional<CircuitPair> skew_circuit_pair(const BinaryMatroid& m) {
  const auto masks = m.circuits().masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (masks[i] & masks[j]) continue;
      // r(C) = |C| - 1 for a circuit.
      if (m.rank_of(masks[i] | masks[j]) == detail::popcount(masks[i]) + detail::popcount(masks[j]) - 2)
        return CircuitPair{m.set(masks[i]), m.set(masks[j])};
    }
  return std::nullopt;
}

/// The complement of every circuit is a circuit.
inline bool is_circuit_complementary(const BinaryMatroid& m) {
  const auto& fam = m.circuits();
  for (auto c : fam.masks())
    if (!fam.contains(m.full_mask() & ~c)) return false;
  return true;
}

/// The complement of every hyperplane is a hyperplane; equivalently the
/// complement of every cocircuit is a cocircuit.
inline bool is_hyperplane_complementary(const BinaryMatroid& m) {
  const auto& fam = m.cocircuits();
  for (auto c : fam.masks())
    if (!fam.contains(m.full_mask() & ~c)) return false;
  return true;
}

/// Largest ground set for which flats are enumerated.
inline constexpr int kFlatEnumerationCap = 24;

/// All flats, found by closing up from cl(∅) one element at a time.
inline std::vector<std::uint64_t> flats(const BinaryMatroid& m) {
  if (m.size() > kFlatEnumerationCap) throw CapExceeded("flat enumeration: ground set size", m.size(), kFlatEnumerationCap);
  std::vector<std::uint64_t> out{m.closure(0)};
  std::vector<std::uint64_t> seen = out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto f = out[i];
    for (int e = 0; e < m.size(); ++e) {
      if ((f >> e) & 1) continue;
      const auto g = m.closure(f | detail::bit(e));
      if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
        seen.push_back(g);
        out.push_back(g);
      }
    }
  }
  std::sort(out.begin(), out.end(), detail::lex_less);
  return out;
}

/// Connected, and M/F is connected for every flat F. The empty matroid counts
/// as connected.
inline bool is_unbreakable(const BinaryMatroid& m) {
  if (!is_connected(m)) throw NotConnected("is_unbreakable");
  for (auto f : flats(m))
    if (!is_connected(contract_elements(m, m.set(f)))) return false;
  return true;
}

namespace detail {

/// Repeatedly removes loops, coloops, one element of each parallel pair and
/// contracts one element of each series pair. F7 and F7* are 3-connected, so
/// they are minors of m iff they are minors of the result.
inline BinaryMatroid series_parallel_reduction(BinaryMatroid m) {
  while (true) {
    const int n = m.size();
    std::uint64_t drop = 0, squash = 0;
    const auto cols = m.column_words();
    for (int e = 0; e < n && !drop && !squash; ++e) {
      if (cols[static_cast<std::size_t>(e)] == 0 || m.is_coloop(e)) {
        drop = bit(e);
        break;
      }
      for (int f = e + 1; f < n; ++f) {
        if (cols[static_cast<std::size_t>(e)] == cols[static_cast<std::size_t>(f)]) {
          drop = bit(f);
          break;
        }
        if (is_series_pair(m, e, f)) {
          squash = bit(f);
          break;
        }
      }
    }
    if (drop) m = delete_elements(m, m.set(drop));
    else if (squash) m = contract_elements(m, m.set(squash));
    else return m;
  }
}

}  // namespace detail

/// Binary and no F7 or F7* minor.
inline bool is_regular(const BinaryMatroid& m) {
  const auto core = detail::series_parallel_reduction(m);
  if (core.size() < 7) return true;
  static const BinaryMatroid fano = zoo::f7();
  static const BinaryMatroid fano_star = zoo::f7_star();
  return !has_minor(core, fano) && !has_minor(core, fano_star);
}

}  // namespace cdmat
