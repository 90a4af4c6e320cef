#pragma once

// Word-level linear algebra over GF(2).
//
// Ground sets are capped at 64 elements, so a subset of the ground set and a
// matrix row both fit in one std::uint64_t (bit j <-> column j).

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdmat/errors.hpp"

namespace cdmat {

inline constexpr int kMaxElements = 64;

/// Largest n - r for which the cycle space is walked exhaustively.
inline constexpr int kCycleSpaceCap = 28;

namespace detail {

constexpr std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << i; }

constexpr int popcount(std::uint64_t w) noexcept { return std::popcount(w); }

constexpr int lowest(std::uint64_t w) noexcept { return std::countr_zero(w); }

template <class Fn>
constexpr void for_each_bit(std::uint64_t w, Fn&& fn) {
  while (w != 0) {
    fn(std::countr_zero(w));
    w &= w - 1;
  }
}

/// Packs the bits of `w` selected by `keep` into the low end, preserving order.
constexpr std::uint64_t compress(std::uint64_t w, std::uint64_t keep) noexcept {
  std::uint64_t out = 0;
  int pos = 0;
  for_each_bit(keep, [&](int i) {
    if ((w >> i) & 1) out |= bit(pos);
    ++pos;
  });
  return out;
}

/// Inverse of compress: spreads the low bits of `w` onto the positions of `mask`.
constexpr std::uint64_t expand(std::uint64_t w, std::uint64_t mask) noexcept {
  std::uint64_t out = 0;
  int pos = 0;
  for_each_bit(mask, [&](int i) {
    if ((w >> pos) & 1) out |= bit(i);
    ++pos;
  });
  return out;
}

/// Incremental XOR basis keyed by leading bit.
class XorBasis {
 public:
  /// Returns true if `v` was independent of the basis (and adds it).
  bool insert(std::uint64_t v) noexcept {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (slots_[lead] == 0) {
        slots_[lead] = v;
        ++rank_;
        return true;
      }
      v ^= slots_[lead];
    }
    return false;
  }

  bool spans(std::uint64_t v) const noexcept {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (slots_[lead] == 0) return false;
      v ^= slots_[lead];
    }
    return true;
  }

  int rank() const noexcept { return rank_; }

 private:
  std::uint64_t slots_[64] = {};
  int rank_ = 0;
};

inline int rank_of_words(std::span<const std::uint64_t> words) noexcept {
  XorBasis basis;
  for (auto w : words) basis.insert(w);
  return basis.rank();
}

/// Lexicographic order on sorted index lists, e.g. {0,1} < {0,1,5} < {0,2}.
constexpr bool lex_less(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == b) return false;
  const int x = std::countr_zero(a ^ b);
  const auto above = [x](std::uint64_t w) { return x == 63 ? std::uint64_t{0} : w >> (x + 1); };
  if ((a >> x) & 1) return above(b) != 0;
  return above(a) == 0;
}

}  // namespace detail

/// A subset of a ground set {0, ..., universe_size - 1}.
class ElementSet {
 public:
  constexpr ElementSet() noexcept = default;

  ElementSet(std::uint64_t bits, int universe_size) : bits_(bits), universe_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxElements)
      throw ParameterOutOfRange("ElementSet: universe size " + std::to_string(universe_size) +
                                " outside [0, 64]");
    if ((bits & ~detail::low_mask(universe_size)) != 0)
      throw std::invalid_argument("ElementSet: bit set beyond universe");
  }

  static ElementSet none(int universe_size) { return {0, universe_size}; }
  static ElementSet all(int universe_size) {
    return {detail::low_mask(universe_size), universe_size};
  }
  static ElementSet single(int i, int universe_size) {
    check_index(i, universe_size);
    return {detail::bit(i), universe_size};
  }
  static ElementSet of(std::initializer_list<int> indices, int universe_size) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()), universe_size);
  }
  static ElementSet from_indices(std::span<const int> indices, int universe_size) {
    std::uint64_t bits = 0;
    for (int i : indices) {
      check_index(i, universe_size);
      bits |= detail::bit(i);
    }
    return {bits, universe_size};
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int universe_size() const noexcept { return universe_; }
  constexpr int size() const noexcept { return detail::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept {
    return i >= 0 && i < universe_ && ((bits_ >> i) & 1);
  }

  ElementSet with(int i) const {
    check_index(i, universe_);
    return {bits_ | detail::bit(i), universe_};
  }
  ElementSet without(int i) const {
    check_index(i, universe_);
    return {bits_ & ~detail::bit(i), universe_};
  }
  ElementSet complement() const { return {~bits_ & detail::low_mask(universe_), universe_}; }

  bool is_subset_of(const ElementSet& other) const {
    same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const ElementSet& other) const {
    same_universe(other);
    return (bits_ & other.bits_) != 0;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    detail::for_each_bit(bits_, [&](int i) { out.push_back(i); });
    return out;
  }

  friend ElementSet operator^(const ElementSet& a, const ElementSet& b) {
    a.same_universe(b);
    return {a.bits_ ^ b.bits_, a.universe_};
  }
  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    a.same_universe(b);
    return {a.bits_ | b.bits_, a.universe_};
  }
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    a.same_universe(b);
    return {a.bits_ & b.bits_, a.universe_};
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    a.same_universe(b);
    return {a.bits_ & ~b.bits_, a.universe_};
  }
  friend constexpr bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order of the sorted index lists.
  friend constexpr bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
    return detail::lex_less(a.bits_, b.bits_);
  }

 private:
  static void check_index(int i, int universe_size) {
    if (i < 0 || i >= universe_size)
      throw std::out_of_range("ElementSet: index " + std::to_string(i) + " outside universe of " +
                              std::to_string(universe_size));
  }
  void same_universe(const ElementSet& other) const {
    if (universe_ != other.universe_)
      throw std::invalid_argument("ElementSet: mismatched universes");
  }

  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

/// A column vector of length ≤ 64.
struct Gf2Vector {
  std::uint64_t bits = 0;
  int length = 0;

  bool at(int i) const noexcept { return (bits >> i) & 1; }
  int weight() const noexcept { return detail::popcount(bits); }
  bool is_zero() const noexcept { return bits == 0; }

  friend Gf2Vector operator+(const Gf2Vector& a, const Gf2Vector& b) {
    if (a.length != b.length) throw std::invalid_argument("Gf2Vector: length mismatch");
    return {a.bits ^ b.bits, a.length};
  }
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
};

/// r x n matrix over GF(2), n ≤ 64; row i is a word whose bit j is entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;

  Gf2Matrix(int rows, int cols) : rows_(static_cast<std::size_t>(rows), 0), cols_(cols) {
    if (rows < 0) throw ParameterOutOfRange("Gf2Matrix: negative row count");
    check_cols(cols);
  }

  static Gf2Matrix from_rows(std::vector<std::uint64_t> rows, int cols) {
    check_cols(cols);
    for (auto r : rows)
      if ((r & ~detail::low_mask(cols)) != 0)
        throw std::invalid_argument("Gf2Matrix: row has bits beyond column count");
    Gf2Matrix m;
    m.rows_ = std::move(rows);
    m.cols_ = cols;
    return m;
  }

  /// Rows given as strings of '0'/'1' characters, all of the same length.
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
  }
  static Gf2Matrix from_strings(std::span<const std::string_view> rows) {
    const int cols = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
    std::vector<std::uint64_t> words;
    for (auto row : rows) {
      if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("Gf2Matrix: ragged rows");
      std::uint64_t w = 0;
      for (int j = 0; j < cols; ++j) {
        if (row[static_cast<std::size_t>(j)] == '1')
          w |= detail::bit(j);
        else if (row[static_cast<std::size_t>(j)] != '0')
          throw std::invalid_argument("Gf2Matrix: entries must be 0 or 1");
      }
      words.push_back(w);
    }
    return from_rows(std::move(words), cols);
  }

  /// Builds an r x columns.size() matrix; bit i of columns[j] is entry (i, j).
  static Gf2Matrix from_columns(std::span<const std::uint64_t> columns, int rows) {
    if (rows < 0 || rows > 64) throw ParameterOutOfRange("Gf2Matrix: column length outside [0, 64]");
    const int cols = static_cast<int>(columns.size());
    check_cols(cols);
    Gf2Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
      if ((columns[static_cast<std::size_t>(j)] & ~detail::low_mask(rows)) != 0)
        throw std::invalid_argument("Gf2Matrix: column has bits beyond row count");
      detail::for_each_bit(columns[static_cast<std::size_t>(j)],
                           [&](int i) { m.rows_[static_cast<std::size_t>(i)] |= detail::bit(j); });
    }
    return m;
  }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)] = detail::bit(i);
    return m;
  }

  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int column_count() const noexcept { return cols_; }

  bool at(int i, int j) const { return (rows_.at(static_cast<std::size_t>(i)) >> j) & 1; }
  void set(int i, int j, bool value) {
    if (j < 0 || j >= cols_) throw std::out_of_range("Gf2Matrix: column index");
    auto& r = rows_.at(static_cast<std::size_t>(i));
    r = value ? (r | detail::bit(j)) : (r & ~detail::bit(j));
  }

  std::uint64_t row_bits(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  std::span<const std::uint64_t> row_words() const noexcept { return rows_; }

  Gf2Vector column(int j) const {
    if (row_count() > 64) throw CapExceeded("Gf2Matrix::column row count", row_count(), 64);
    if (j < 0 || j >= cols_) throw std::out_of_range("Gf2Matrix: column index");
    std::uint64_t bits = 0;
    for (int i = 0; i < row_count(); ++i)
      if ((rows_[static_cast<std::size_t>(i)] >> j) & 1) bits |= detail::bit(i);
    return {bits, row_count()};
  }

  std::vector<std::uint64_t> column_words() const {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(column(j).bits);
    return out;
  }

  Gf2Matrix transpose() const { return from_columns(rows_, cols_); }

  std::string to_string() const {
    std::string s;
    for (auto r : rows_) {
      for (int j = 0; j < cols_; ++j) s.push_back(((r >> j) & 1) ? '1' : '0');
      s.push_back('\n');
    }
    return s;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  static void check_cols(int cols) {
    if (cols < 0 || cols > kMaxElements)
      throw CapExceeded("Gf2Matrix column count", cols, kMaxElements);
  }

  std::vector<std::uint64_t> rows_;
  int cols_ = 0;
};

struct RowEchelon {
  Gf2Matrix matrix;  ///< reduced row echelon form, zero rows last
  int rank = 0;
  std::vector<int> pivot_columns;  ///< strictly increasing
};

inline RowEchelon rref(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows(m.row_words().begin(), m.row_words().end());
  const int n = m.column_count();
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < n && next < rows.size(); ++col) {
    const auto b = detail::bit(col);
    std::size_t found = next;
    while (found < rows.size() && (rows[found] & b) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != next && (rows[i] & b)) rows[i] ^= rows[next];
    pivots.push_back(col);
    ++next;
  }
  RowEchelon out;
  out.rank = static_cast<int>(next);
  out.pivot_columns = std::move(pivots);
  out.matrix = Gf2Matrix::from_rows(std::move(rows), n);
  return out;
}

/// Basis of {x : m x = 0}, one vector per non-pivot column, as supports.
inline std::vector<ElementSet> null_space_basis(const Gf2Matrix& m) {
  const auto e = rref(m);
  const int n = m.column_count();
  std::uint64_t pivot_mask = 0;
  for (int p : e.pivot_columns) pivot_mask |= detail::bit(p);
  std::vector<ElementSet> basis;
  for (int f = 0; f < n; ++f) {
    if (pivot_mask & detail::bit(f)) continue;
    std::uint64_t v = detail::bit(f);
    for (int i = 0; i < e.rank; ++i)
      if (e.matrix.row_bits(i) & detail::bit(f)) v |= detail::bit(e.pivot_columns[static_cast<std::size_t>(i)]);
    basis.emplace_back(v, n);
  }
  return basis;
}

inline int rank_of_columns(const Gf2Matrix& m, const ElementSet& s) {
  if (s.universe_size() != m.column_count())
    throw std::invalid_argument("rank_of_columns: set universe does not match column count");
  detail::XorBasis basis;
  for (auto r : m.row_words()) basis.insert(r & s.bits());
  return basis.rank();
}

/// Calls fn(word) for each of the 2^k - 1 non-zero combinations of `basis`,
/// in Gray-code order. Throws CapExceeded when k > kCycleSpaceCap.
template <class Fn>
void for_each_nonzero_combination(std::span<const std::uint64_t> basis, Fn&& fn,
                                  const char* what = "cycle space dimension") {
  const int k = static_cast<int>(basis.size());
  if (k > kCycleSpaceCap) throw CapExceeded(what, k, kCycleSpaceCap);
  std::uint64_t v = 0;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < count; ++i) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    fn(v);
  }
}

}  // namespace cdmat
