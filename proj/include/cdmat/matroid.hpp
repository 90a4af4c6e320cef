#pragma once

// Binary matroids given by a GF(2) representation.

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdmat/errors.hpp"
#include "cdmat/gf2.hpp"

namespace cdmat {

/// A family of subsets of a fixed ground set, e.g. the circuits of a matroid.
///
/// Members are kept in lexicographic order of their sorted index lists, so
/// iteration order (and every pair scan built on it) is deterministic.
class CircuitFamily {
 public:
  CircuitFamily() = default;

  CircuitFamily(int universe_size, std::vector<std::uint64_t> masks)
      : universe_(universe_size), lex_(std::move(masks)) {
    std::sort(lex_.begin(), lex_.end(), detail::lex_less);
    lex_.erase(std::unique(lex_.begin(), lex_.end()), lex_.end());
    sorted_ = lex_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  int universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return lex_.size(); }
  bool empty() const noexcept { return lex_.empty(); }

  std::span<const std::uint64_t> masks() const noexcept { return lex_; }
  ElementSet operator[](std::size_t i) const { return {lex_.at(i), universe_}; }

  std::vector<ElementSet> members() const {
    std::vector<ElementSet> out;
    out.reserve(lex_.size());
    for (auto m : lex_) out.emplace_back(m, universe_);
    return out;
  }

  bool contains(std::uint64_t mask) const noexcept {
    return std::binary_search(sorted_.begin(), sorted_.end(), mask);
  }
  bool contains(const ElementSet& s) const noexcept {
    return s.universe_size() == universe_ && contains(s.bits());
  }

  /// Histogram indexed by member size.
  std::vector<int> size_histogram() const {
    std::vector<int> h(static_cast<std::size_t>(universe_) + 1, 0);
    for (auto m : lex_) ++h[static_cast<std::size_t>(detail::popcount(m))];
    return h;
  }

  friend bool operator==(const CircuitFamily& a, const CircuitFamily& b) {
    return a.universe_ == b.universe_ && a.sorted_ == b.sorted_;
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> lex_;
  std::vector<std::uint64_t> sorted_;
};

/// Maximal sets of pairwise-series elements.
struct SeriesClassPartition {
  std::vector<ElementSet> classes;  ///< ordered by least element
};

/// A binary matroid: one labelled column per element of a GF(2) matrix.
///
/// Immutable. Circuits and cocircuits are computed on first use; copies share
/// the cache, and cache fill is guarded by std::call_once.
class BinaryMatroid {
 public:
  BinaryMatroid() : BinaryMatroid(Gf2Matrix(0, 0)) {}

  explicit BinaryMatroid(Gf2Matrix rep) : BinaryMatroid(rep, default_labels(rep.column_count())) {}

  BinaryMatroid(Gf2Matrix rep, std::vector<std::string> labels)
      : labels_(std::move(labels)), rep_(std::move(rep)), cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(labels_.size()) != rep_.column_count())
      throw std::invalid_argument("BinaryMatroid: " + std::to_string(labels_.size()) +
                                  " labels for " + std::to_string(rep_.column_count()) +
                                  " columns");
    const auto e = rref(rep_);
    rank_ = e.rank;
    reduced_.assign(e.matrix.row_words().begin(), e.matrix.row_words().begin() + e.rank);
    pivots_ = e.pivot_columns;
    columns_.assign(static_cast<std::size_t>(size()), 0);
    for (int i = 0; i < rank_; ++i)
      detail::for_each_bit(reduced_[static_cast<std::size_t>(i)],
                           [&](int j) { columns_[static_cast<std::size_t>(j)] |= detail::bit(i); });
  }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
  }

  int size() const noexcept { return rep_.column_count(); }
  int rank() const noexcept { return rank_; }
  int corank() const noexcept { return size() - rank_; }
  bool empty() const noexcept { return size() == 0; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  /// The representation exactly as supplied.
  const Gf2Matrix& representation() const noexcept { return rep_; }
  /// Non-zero rows of the reduced row echelon form of the representation.
  Gf2Matrix reduced_representation() const { return Gf2Matrix::from_rows(reduced_, size()); }
  std::span<const int> basis_columns() const noexcept { return pivots_; }

  ElementSet ground() const { return ElementSet::all(size()); }
  ElementSet set(std::uint64_t mask) const { return {mask, size()}; }
  std::uint64_t full_mask() const noexcept { return detail::low_mask(size()); }

  int rank_of(std::uint64_t mask) const noexcept {
    detail::XorBasis basis;
    detail::for_each_bit(mask, [&](int j) { basis.insert(columns_[static_cast<std::size_t>(j)]); });
    return basis.rank();
  }
  int rank_of(const ElementSet& s) const { return rank_of(s.bits()); }

  bool is_independent(std::uint64_t mask) const noexcept {
    return rank_of(mask) == detail::popcount(mask);
  }

  std::uint64_t closure(std::uint64_t mask) const noexcept {
    detail::XorBasis basis;
    detail::for_each_bit(mask, [&](int j) { basis.insert(columns_[static_cast<std::size_t>(j)]); });
    std::uint64_t out = mask;
    for (int j = 0; j < size(); ++j)
      if (basis.spans(columns_[static_cast<std::size_t>(j)])) out |= detail::bit(j);
    return out;
  }

  bool is_loop(int e) const { return columns_.at(static_cast<std::size_t>(e)) == 0; }
  bool is_coloop(int e) const {
    return rank_of(full_mask() & ~detail::bit(e)) < rank_;
  }

  /// Columns of the reduced representation, one word per element.
  std::span<const std::uint64_t> column_words() const noexcept { return columns_; }
  std::span<const std::uint64_t> reduced_rows() const noexcept { return reduced_; }

  /// Cycle-space basis (one fundamental circuit per non-basis element).
  std::vector<std::uint64_t> cycle_basis() const {
    std::vector<std::uint64_t> out;
    for (auto v : null_space_basis(reduced_representation())) out.push_back(v.bits());
    return out;
  }

  const CircuitFamily& circuits() const {
    std::call_once(cache_->circuits_once, [this] { cache_->circuits = compute_circuits(); });
    return *cache_->circuits;
  }

  const CircuitFamily& cocircuits() const {
    std::call_once(cache_->cocircuits_once, [this] { cache_->cocircuits = compute_cocircuits(); });
    return *cache_->cocircuits;
  }

 private:
  struct Cache {
    std::once_flag circuits_once;
    std::once_flag cocircuits_once;
    std::optional<CircuitFamily> circuits;
    std::optional<CircuitFamily> cocircuits;
  };

  CircuitFamily compute_circuits() const {
    // A cycle is a circuit iff it has nullity one.
    std::vector<std::uint64_t> found;
    const auto basis = cycle_basis();
    for_each_nonzero_combination(basis, [&](std::uint64_t v) {
      if (rank_of(v) == detail::popcount(v) - 1) found.push_back(v);
    }, "circuit enumeration: n - r");
    return {size(), std::move(found)};
  }

  CircuitFamily compute_cocircuits() const {
    // The zero set of a non-zero row-space vector is a flat of rank < r; the
    // vector is a cocircuit iff that flat is a hyperplane.
    std::vector<std::uint64_t> found;
    for_each_nonzero_combination(reduced_, [&](std::uint64_t v) {
      if (rank_of(full_mask() & ~v) == rank_ - 1) found.push_back(v);
    }, "cocircuit enumeration: r");
    return {size(), std::move(found)};
  }

  std::vector<std::string> labels_;
  Gf2Matrix rep_;
  int rank_ = 0;
  std::vector<std::uint64_t> reduced_;
  std::vector<int> pivots_;
  std::vector<std::uint64_t> columns_;
  std::shared_ptr<Cache> cache_;
};

inline const CircuitFamily& circuits(const BinaryMatroid& m) { return m.circuits(); }
inline const CircuitFamily& cocircuits(const BinaryMatroid& m) { return m.cocircuits(); }

/// Standard binary dual: the row space of the dual is the cycle space of m.
inline BinaryMatroid dual(const BinaryMatroid& m) {
  return {Gf2Matrix::from_rows(m.cycle_basis(), m.size()), m.labels()};
}

/// m \ remove / contract. Contracting a loop deletes it.
inline BinaryMatroid minor(const BinaryMatroid& m, const ElementSet& remove,
                           const ElementSet& contract) {
  if (remove.universe_size() != m.size() || contract.universe_size() != m.size())
    throw std::invalid_argument("minor: set universe does not match matroid");
  if (remove.intersects(contract))
    throw std::invalid_argument("minor: delete and contract sets overlap");
  std::vector<std::uint64_t> rows(m.reduced_rows().begin(), m.reduced_rows().end());
  detail::for_each_bit(contract.bits(), [&](int c) {
    const auto b = detail::bit(c);
    auto pivot = std::find_if(rows.begin(), rows.end(), [b](std::uint64_t r) { return r & b; });
    if (pivot == rows.end()) return;
    const auto p = *pivot;
    for (auto& r : rows)
      if (r & b) r ^= p;
    rows.erase(pivot);
  });
  const std::uint64_t keep = m.full_mask() & ~(remove.bits() | contract.bits());
  for (auto& r : rows) r = detail::compress(r, keep);
  std::vector<std::string> labels;
  detail::for_each_bit(keep, [&](int j) { labels.push_back(m.label(j)); });
  return {Gf2Matrix::from_rows(std::move(rows), detail::popcount(keep)), std::move(labels)};
}

inline BinaryMatroid delete_elements(const BinaryMatroid& m, const ElementSet& s) {
  return minor(m, s, ElementSet::none(m.size()));
}

inline BinaryMatroid contract_elements(const BinaryMatroid& m, const ElementSet& s) {
  return minor(m, ElementSet::none(m.size()), s);
}

/// m | s: delete everything outside s.
inline BinaryMatroid restriction(const BinaryMatroid& m, const ElementSet& s) {
  return minor(m, s.complement(), ElementSet::none(m.size()));
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  /// Classes as masks, ordered by least element.
  std::vector<std::uint64_t> classes() {
    std::vector<std::uint64_t> by_root(parent_.size(), 0);
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      by_root[static_cast<std::size_t>(find(i))] |= bit(i);
    std::vector<std::uint64_t> out;
    for (auto m : by_root)
      if (m) out.push_back(m);
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Connected components. Two elements share a component iff some circuit
/// contains both; loops and coloops are singleton components.
///
/// Uses fundamental circuits with respect to the pivot basis, which generate
/// the same equivalence relation as the full circuit family.
inline std::vector<ElementSet> components(const BinaryMatroid& m) {
  detail::UnionFind uf(m.size());
  for (auto cycle : m.cycle_basis()) {
    const int first = detail::lowest(cycle);
    detail::for_each_bit(cycle, [&](int j) { uf.unite(first, j); });
  }
  std::vector<ElementSet> out;
  for (auto c : uf.classes()) out.emplace_back(c, m.size());
  return out;
}

inline bool is_connected(const BinaryMatroid& m) { return components(m).size() <= 1; }

/// True iff {e, f} (e != f) is a cocircuit.
inline bool is_series_pair(const BinaryMatroid& m, int e, int f) {
  if (e == f) return false;
  const auto full = m.full_mask();
  const int r = m.rank();
  return m.rank_of(full & ~detail::bit(e)) == r && m.rank_of(full & ~detail::bit(f)) == r &&
         m.rank_of(full & ~(detail::bit(e) | detail::bit(f))) < r;
}

inline SeriesClassPartition series_classes(const BinaryMatroid& m) {
  if (!is_connected(m)) throw NotConnected("series_classes");
  detail::UnionFind uf(m.size());
  for (int e = 0; e < m.size(); ++e)
    for (int f = e + 1; f < m.size(); ++f)
      if (uf.find(e) != uf.find(f) && is_series_pair(m, e, f)) uf.unite(e, f);
  SeriesClassPartition p;
  for (auto c : uf.classes()) p.classes.emplace_back(c, m.size());
  return p;
}

inline bool is_cosimple(const BinaryMatroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_coloop(e)) return false;
    for (int f = e + 1; f < m.size(); ++f)
      if (is_series_pair(m, e, f)) return false;
  }
  return true;
}

inline bool is_simple(const BinaryMatroid& m) {
  const auto cols = m.column_words();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == 0) return false;
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] == cols[j]) return false;
  }
  return true;
}

struct Cosimplification {
  BinaryMatroid matroid;             ///< one element per series class, in class order
  SeriesClassPartition classes;      ///< series classes of the input
  std::vector<int> survivors;        ///< survivors[k]: element of the input kept for class k
};

/// Contracts all but the least element of every series class.
inline Cosimplification cosimplify(const BinaryMatroid& m) {
  auto classes = series_classes(m);
  std::uint64_t contract = 0;
  std::vector<int> survivors;
  for (const auto& c : classes.classes) {
    const int keep = detail::lowest(c.bits());
    survivors.push_back(keep);
    contract |= c.bits() & ~detail::bit(keep);
  }
  return {contract_elements(m, m.set(contract)), std::move(classes), std::move(survivors)};
}

/// Adds one new element per entry of new_labels, each in series with
/// `element`; the new elements are appended after the existing ones.
inline BinaryMatroid series_extend(const BinaryMatroid& m, int element,
                                   const std::vector<std::string>& new_labels) {
  if (element < 0 || element >= m.size())
    throw std::out_of_range("series_extend: no element " + std::to_string(element));
  if (m.is_coloop(element))
    throw ParameterOutOfRange("series_extend: element " + m.label(element) +
                              " is a coloop and has no series extension");
  const int n = m.size() + static_cast<int>(new_labels.size());
  if (n > kMaxElements) throw CapExceeded("series_extend: ground set size", n, kMaxElements);
  std::vector<std::uint64_t> rows(m.reduced_rows().begin(), m.reduced_rows().end());
  auto labels = m.labels();
  for (std::size_t k = 0; k < new_labels.size(); ++k) {
    const int e = m.size() + static_cast<int>(k);
    rows.push_back(detail::bit(element) | detail::bit(e));
    labels.push_back(new_labels[k]);
  }
  return {Gf2Matrix::from_rows(std::move(rows), n), std::move(labels)};
}

}  // namespace cdmat
