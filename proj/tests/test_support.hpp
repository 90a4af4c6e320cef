#pragma once

// Test-only oracles. These deliberately avoid the library's elimination and
// cycle-space code paths: everything here is plain subset enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cdmat/gf2.hpp"
#include "cdmat/matroid.hpp"

namespace cdmat::testing {

/// Columns of a matrix as words, read entry by entry.
inline std::vector<std::uint64_t> columns_of(const Gf2Matrix& m) {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(m.column_count()), 0);
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = 0; j < m.column_count(); ++j)
      if (m.at(i, j)) cols[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  return cols;
}

/// A set of columns is dependent iff some non-empty subset XORs to zero.
inline bool brute_dependent(const std::vector<std::uint64_t>& cols, std::uint64_t s) {
  for (std::uint64_t t = s; t != 0; t = (t - 1) & s) {
    std::uint64_t acc = 0;
    for (int j = 0; j < 64; ++j)
      if ((t >> j) & 1) acc ^= cols[static_cast<std::size_t>(j)];
    if (acc == 0) return true;
  }
  return false;
}

/// Rank as the size of a largest independent subset.
inline int brute_rank(const std::vector<std::uint64_t>& cols, std::uint64_t s) {
  int best = 0;
  for (std::uint64_t t = s;; t = (t - 1) & s) {
    const int k = std::popcount(t);
    if (k > best && !brute_dependent(cols, t)) best = k;
    if (t == 0) break;
  }
  return best;
}

/// Minimal dependent sets by exhaustive subset search.
inline std::set<std::uint64_t> brute_circuits(const std::vector<std::uint64_t>& cols) {
  const int n = static_cast<int>(cols.size());
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (!brute_dependent(cols, s)) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (((s >> j) & 1) && brute_dependent(cols, s & ~(std::uint64_t{1} << j))) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

inline std::set<std::uint64_t> as_set(const CircuitFamily& f) {
  return {f.masks().begin(), f.masks().end()};
}

inline std::uint64_t mask_of(std::initializer_list<int> one_based) {
  std::uint64_t m = 0;
  for (int i : one_based) m |= std::uint64_t{1} << (i - 1);
  return m;
}

inline Gf2Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<std::uint64_t> words;
  for (int i = 0; i < rows; ++i) words.push_back(rng() & cdmat::detail::low_mask(cols));
  return Gf2Matrix::from_rows(std::move(words), cols);
}

inline BinaryMatroid random_matroid(std::mt19937_64& rng, int max_rows, int max_cols) {
  std::uniform_int_distribution<int> rows(0, max_rows), cols(1, max_cols);
  const int c = cols(rng);
  return BinaryMatroid(random_matrix(rng, rows(rng), c));
}

}  // namespace cdmat::testing

namespace cdmat::testing {

/// Isomorphism by trying every permutation (n <= 8).
inline bool brute_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  const auto ca = brute_circuits(columns_of(a.representation()));
  const auto cb = brute_circuits(columns_of(b.representation()));
  if (ca.size() != cb.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (auto c : ca) {
      std::uint64_t img = 0;
      for (int j = 0; j < a.size(); ++j)
        if ((c >> j) & 1) img |= std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
      if (!cb.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Labels of a set, in element order.
inline std::vector<std::string> labels_of(const BinaryMatroid& m, const ElementSet& s) {
  std::vector<std::string> out;
  for (int i : s.indices()) out.push_back(m.label(i));
  return out;
}

}  // namespace cdmat::testing
