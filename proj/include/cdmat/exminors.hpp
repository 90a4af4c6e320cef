#pragma once

// Series minors and the excluded series minors of circuit-difference matroids.
//
// A series minor is reached by deleting elements and contracting elements
// that lie in a 2-element cocircuit. The binary excluded series minors are
// the duals of the family [AG(r-1,2) + e] \ X, r >= 3, where AG(r-1,2) \ X is
// hyperplane-complementary of rank r.

#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cdmat/isomorphism.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/zoo.hpp"

namespace cdmat {

/// Largest ground set for which all series minors are walked.
inline constexpr int kSeriesMinorCap = 16;

struct SeriesMinorStep {
  enum class Op { Delete, Contract };
  Op op;
  int element;  ///< index in the starting matroid
};

/// A sequence of deletions and series contractions, and the sets they remove.
struct SeriesMinorScript {
  std::vector<SeriesMinorStep> steps;
  ElementSet deleted;
  ElementSet contracted;
};

namespace detail {

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& s) const noexcept {
    return static_cast<std::size_t>(mix(s.first, s.second));
  }
};

/// Depth-first walk over the states (D, C) of m \ D / C reachable by
/// deletions and series contractions. Ranks of the current minor are read off
/// m: r_N(S) = r_M(S ∪ C) - r_M(C).
class SeriesMinorWalker {
 public:
  explicit SeriesMinorWalker(const BinaryMatroid& m) : m_(m) {
    if (m.size() > kSeriesMinorCap) throw CapExceeded("series minor walk: ground set size", m.size(), kSeriesMinorCap);
  }

  /// Elements of the current minor (with kept = E - D - C) that lie in a
  /// 2-element cocircuit of it.
  std::uint64_t series_elements(std::uint64_t kept, std::uint64_t contracted) const {
    const auto all = kept | contracted;
    const int r = m_.rank_of(all);
    std::uint64_t noncoloops = 0;
    for_each_bit(kept, [&](int e) {
      if (m_.rank_of(all & ~bit(e)) == r) noncoloops |= bit(e);
    });
    std::uint64_t out = 0;
    for_each_bit(noncoloops, [&](int e) {
      for_each_bit(noncoloops & ~low_mask(e + 1), [&](int f) {
        if (m_.rank_of(all & ~(bit(e) | bit(f))) < r) out |= bit(e) | bit(f);
      });
    });
    return out;
  }

  /// Visits each reachable state once. visit(deleted, contracted, path)
  /// returns true to stop the walk; prune(deleted, contracted) returns true to
  /// skip a state's successors.
  template <class Visit, class Prune>
  bool walk(Visit&& visit, Prune&& prune) {
    seen_.clear();
    path_.clear();
    return step(0, 0, visit, prune);
  }

  const std::vector<SeriesMinorStep>& path() const noexcept { return path_; }

 private:
  template <class Visit, class Prune>
  bool step(std::uint64_t del, std::uint64_t con, Visit& visit, Prune& prune) {
    if (!seen_.insert({del, con}).second) return false;
    if (visit(del, con, path_)) return true;
    if (prune(del, con)) return false;
    const auto kept = m_.full_mask() & ~(del | con);
    bool stop = false;
    for_each_bit(kept, [&](int e) {
      if (stop) return;
      path_.push_back({SeriesMinorStep::Op::Delete, e});
      stop = step(del | bit(e), con, visit, prune);
      if (!stop) path_.pop_back();
    });
    if (stop) return true;
    for_each_bit(series_elements(kept, con), [&](int e) {
      if (stop) return;
      path_.push_back({SeriesMinorStep::Op::Contract, e});
      stop = step(del, con | bit(e), visit, prune);
      if (!stop) path_.pop_back();
    });
    return stop;
  }

  const BinaryMatroid& m_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, StateHash> seen_;
  std::vector<SeriesMinorStep> path_;
};

}  // namespace detail

/// Calls fn(minor, deleted, contracted) for every reachable deletion /
/// series-contraction state of m, including m itself. Not deduplicated.
template <class Fn>
void for_each_series_minor_state(const BinaryMatroid& m, Fn&& fn) {
  detail::SeriesMinorWalker walker(m);
  walker.walk(
      [&](std::uint64_t d, std::uint64_t c, const std::vector<SeriesMinorStep>&) {
        fn(minor(m, m.set(d), m.set(c)), m.set(d), m.set(c));
        return false;
      },
      [](std::uint64_t, std::uint64_t) { return false; });
}

/// All series minors of m (including m and the empty matroid), one per isomorphism class.
inline std::vector<BinaryMatroid> series_minors(const BinaryMatroid& m) {
  IsoClassSet classes;
  for_each_series_minor_state(m, [&](const BinaryMatroid& n, const ElementSet&, const ElementSet&) {
    classes.insert(n);
  });
  return classes.representatives();
}

/// Single deletions and single series contractions of m.
inline std::vector<std::pair<SeriesMinorStep, BinaryMatroid>> one_step_series_minors(const BinaryMatroid& m) {
  std::vector<std::pair<SeriesMinorStep, BinaryMatroid>> out;
  const auto none = ElementSet::none(m.size());
  for (int e = 0; e < m.size(); ++e)
    out.emplace_back(SeriesMinorStep{SeriesMinorStep::Op::Delete, e}, minor(m, none.with(e), none));
  std::uint64_t series = 0;
  for (int e = 0; e < m.size(); ++e)
    for (int f = e + 1; f < m.size(); ++f)
      if (is_series_pair(m, e, f)) series |= detail::bit(e) | detail::bit(f);
  detail::for_each_bit(series, [&](int e) {
    out.emplace_back(SeriesMinorStep{SeriesMinorStep::Op::Contract, e}, minor(m, none, none.with(e)));
  });
  return out;
}

/// A script reducing m to a series minor isomorphic to N_5, if one exists.
/// m must be connected.
inline std::optional<SeriesMinorScript> find_n5_series_minor(const BinaryMatroid& m) {
  if (!is_connected(m)) throw NotConnected("find_n5_series_minor");
  static const BinaryMatroid target_matroid = zoo::n5();
  const IsoProfile target(target_matroid);
  if (m.size() < 5 || m.rank() < 2 || m.corank() < 3) return std::nullopt;
  detail::SeriesMinorWalker walker(m);
  std::optional<SeriesMinorScript> found;
  walker.walk(
      [&](std::uint64_t d, std::uint64_t c, const std::vector<SeriesMinorStep>& path) {
        if (detail::popcount(d | c) != m.size() - 5) return false;
        const auto n = minor(m, m.set(d), m.set(c));
        if (n.rank() != 2 || !find_isomorphism(IsoProfile(n), target)) return false;
        found = SeriesMinorScript{path, m.set(d), m.set(c)};
        return true;
      },
      [&](std::uint64_t d, std::uint64_t c) {
        // N_5 has rank 2 and corank 3; both only decrease along the walk.
        const auto kept = m.full_mask() & ~(d | c);
        const int r = m.rank_of(kept | c) - m.rank_of(c);
        const int size = detail::popcount(kept);
        return size <= 5 || r < 2 || size - r < 3;
      });
  return found;
}

/// Applies a script to m.
inline BinaryMatroid apply_script(const BinaryMatroid& m, const SeriesMinorScript& s) {
  return minor(m, s.deleted, s.contracted);
}

// ---------------------------------------------------------------------------
// Affine geometry machinery.

/// Ranks for which the AG-based catalogs are enumerated.
inline constexpr int kMaxAffineRank = 5;

/// True iff (ag | x) contains a subset whose restriction is isomorphic to
/// AG(k, 2). For k = -1 (AG(-1,2), the empty geometry) the answer is false:
/// the excluding condition is vacuous.
inline bool contains_affine_copy(const BinaryMatroid& m, std::uint64_t x, int k) {
  if (k < 0) return false;
  if (k > 5) throw CapExceeded("affine copy search: dimension", k, 5);
  const int size = 1 << k;
  if (detail::popcount(x) < size) return false;
  const IsoProfile target(zoo::ag(k + 1));
  return detail::for_each_subset_of_size(x, size, [&](std::uint64_t z) {
    if (m.rank_of(z) != k + 1) return false;
    return find_isomorphism(IsoProfile(restriction(m, m.set(z))), target).has_value();
  });
}

/// Subsets X of AG(r-1,2) (as masks over zoo::ag(r)) such that AG|X has no
/// copy of AG(r-3,2) and AG \ X still has rank r, in increasing order.
inline std::vector<std::uint64_t> affine_deletion_sets(int r) {
  if (r < 2) throw ParameterOutOfRange("affine_deletion_sets: rank must be at least 2");
  if (r > kMaxAffineRank) throw CapExceeded("affine_deletion_sets: rank", r, kMaxAffineRank);
  const auto ag = zoo::ag(r);
  std::vector<std::uint64_t> out;
  const int copy_size = r >= 3 ? 1 << (r - 3) : 0;
  const std::optional<IsoProfile> copy_shape =
      r >= 3 ? std::optional<IsoProfile>(IsoProfile(zoo::ag(r - 2))) : std::nullopt;
  // Having no copy of AG(r-3,2) is hereditary, so extend in increasing order
  // and only test copies through the newly added point.
  auto creates_copy = [&](std::uint64_t x, int p) {
    if (!copy_shape) return false;
    return detail::for_each_subset_of_size(x, copy_size - 1, [&](std::uint64_t z) {
      const auto w = z | detail::bit(p);
      if (ag.rank_of(w) != r - 2) return false;
      return find_isomorphism(IsoProfile(restriction(ag, ag.set(w))), *copy_shape).has_value();
    });
  };
  auto grow = [&](auto&& self, std::uint64_t x, int next) -> void {
    if (ag.rank_of(ag.full_mask() & ~x) == r) out.push_back(x);
    for (int p = next; p < ag.size(); ++p)
      if (!creates_copy(x, p)) self(self, x | detail::bit(p), p + 1);
  };
  grow(grow, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return detail::popcount(a) != detail::popcount(b) ? detail::popcount(a) < detail::popcount(b)
                                                      : detail::lex_less(a, b);
  });
  return out;
}

struct CatalogEntry {
  ElementSet deleted;      ///< X, over zoo::ag(r) (or zoo::ag_plus_e(r) for the family)
  BinaryMatroid matroid;
};

/// Simple rank-r binary hyperplane-complementary matroids, generated as
/// AG(r-1,2) \ X, one per isomorphism class.
inline std::vector<CatalogEntry> hyperplane_complementary_catalog(int r) {
  const auto ag = zoo::ag(r);
  IsoClassSet classes;
  std::vector<CatalogEntry> out;
  for (auto x : affine_deletion_sets(r)) {
    auto m = delete_elements(ag, ag.set(x));
    if (classes.insert(m)) out.push_back({ag.set(x), std::move(m)});
  }
  return out;
}

/// [AG(r-1,2) + e] \ X. X is over zoo::ag_plus_e(r), whose last element is e.
/// Throws InvalidSpec unless r >= 3, e ∉ X and AG(r-1,2) \ X is
/// hyperplane-complementary of rank r.
inline BinaryMatroid m_family(int r, const ElementSet& x) {
  if (r < 3) throw InvalidSpec("m_family: rank must be at least 3, got " + std::to_string(r));
  const auto ext = zoo::ag_plus_e(r);
  if (x.universe_size() != ext.size())
    throw InvalidSpec("m_family: X must be a subset of the " + std::to_string(ext.size()) + " elements of AG+e");
  const int e = ext.size() - 1;
  if (x.contains(e)) throw InvalidSpec("m_family: X contains the extension point e");
  const auto remaining = delete_elements(ext, x.with(e));
  if (remaining.rank() != r)
    throw InvalidSpec("m_family: deleting X drops the rank of AG(" + std::to_string(r - 1) + ",2)");
  if (!is_hyperplane_complementary(remaining))
    throw InvalidSpec("m_family: AG(" + std::to_string(r - 1) + ",2) \\ X is not hyperplane-complementary");
  return delete_elements(ext, x);
}

/// One member of each isomorphism class of rank-r members of the family, with
/// the X that produced it. Exhaustive over all X ⊆ AG(r-1,2).
inline std::vector<CatalogEntry> enumerate_m_family(int r) {
  if (r < 3) throw ParameterOutOfRange("enumerate_m_family: rank must be at least 3");
  if (r > kMaxAffineRank) throw CapExceeded("enumerate_m_family: rank", r, kMaxAffineRank);
  const auto ext = zoo::ag_plus_e(r);
  const int e = ext.size() - 1;
  const std::uint64_t points = detail::low_mask(e);
  IsoClassSet classes;
  std::vector<CatalogEntry> out;
  for (std::uint64_t x = 0; x <= points; ++x) {
    const auto remaining = delete_elements(ext, ext.set(x | detail::bit(e)));
    if (remaining.rank() != r || !is_hyperplane_complementary(remaining)) continue;
    auto member = delete_elements(ext, ext.set(x));
    if (classes.insert(member)) out.push_back({ext.set(x), std::move(member)});
  }
  return out;
}

namespace detail {

inline const std::vector<CatalogEntry>& cached_m_family(int r) {
  static std::array<std::once_flag, kMaxAffineRank + 1> once;
  static std::array<std::vector<CatalogEntry>, kMaxAffineRank + 1> cache;
  std::call_once(once[static_cast<std::size_t>(r)], [r] { cache[static_cast<std::size_t>(r)] = enumerate_m_family(r); });
  return cache[static_cast<std::size_t>(r)];
}

}  // namespace detail

/// Structural test: n is isomorphic to a member of the family.
inline bool in_m_family(const BinaryMatroid& n) {
  if (n.rank() < 3 || !is_simple(n)) return false;
  if (n.rank() > kMaxAffineRank) throw CapExceeded("in_m_family: rank", n.rank(), kMaxAffineRank);
  const IsoProfile p(n);
  for (const auto& entry : detail::cached_m_family(n.rank()))
    if (find_isomorphism(p, IsoProfile(entry.matroid))) return true;
  return false;
}

/// Not circuit-difference, while every single deletion and single series
/// contraction is. Because the class is closed under series minors, this is
/// the same as every proper series minor being circuit-difference.
inline bool is_excluded_series_minor(const BinaryMatroid& m) {
  if (is_circuit_difference(m)) return false;
  for (const auto& [s, n] : one_step_series_minors(m))
    if (!is_circuit_difference(n)) return false;
  return true;
}

/// Definitional check over the full series-minor walk (small matroids only).
inline bool is_excluded_series_minor_exhaustive(const BinaryMatroid& m) {
  if (is_circuit_difference(m)) return false;
  bool minimal = true;
  detail::SeriesMinorWalker walker(m);
  walker.walk(
      [&](std::uint64_t d, std::uint64_t c, const std::vector<SeriesMinorStep>&) {
        if ((d | c) == 0) return false;
        if (!is_circuit_difference(minor(m, m.set(d), m.set(c)))) minimal = false;
        return !minimal;
      },
      [](std::uint64_t, std::uint64_t) { return false; });
  return minimal;
}

}  // namespace cdmat
