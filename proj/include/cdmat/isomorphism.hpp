#pragma once

// Isomorphism and minor testing for small binary matroids.
//
// Two binary matroids are isomorphic iff some bijection of ground sets maps
// circuits onto circuits (equivalently cocircuits onto cocircuits). We match
// whichever family has the smaller enumeration, refine elements by member-size
// and pair-incidence counts, and backtrack.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cdmat/matroid.hpp"

namespace cdmat {

namespace detail {

constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Calls fn(subset) for every k-subset of `mask`; stops early if fn returns true.
template <class Fn>
bool for_each_subset_of_size(std::uint64_t mask, int k, Fn&& fn) {
  const int m = popcount(mask);
  if (k < 0 || k > m) return false;
  if (k == 0) return fn(std::uint64_t{0});
  std::uint64_t c = low_mask(k);
  while (true) {
    if (fn(expand(c, mask))) return true;
    const std::uint64_t lo = c & (~c + 1);
    const std::uint64_t ripple = c + lo;
    if (ripple == 0) return false;
    const std::uint64_t next = ripple | (((c ^ ripple) >> 2) / lo);
    if (m < 64 && next >= bit(m)) return false;
    c = next;
  }
}

}  // namespace detail

/// Precomputed isomorphism data for one matroid.
class IsoProfile {
 public:
  explicit IsoProfile(const BinaryMatroid& m)
      : matroid_(m), n_(m.size()), use_cocircuits_(m.rank() <= m.corank()) {
    family_ = use_cocircuits_ ? &matroid_.cocircuits() : &matroid_.circuits();
    const auto n = static_cast<std::size_t>(n_);
    pair_.assign(n * n, 0);
    std::vector<std::vector<std::uint32_t>> by_size(n, std::vector<std::uint32_t>(n + 1, 0));
    for (auto mask : family_->masks()) {
      const int s = detail::popcount(mask);
      detail::for_each_bit(mask, [&](int e) {
        ++by_size[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)];
        detail::for_each_bit(mask, [&](int f) { ++pair_[static_cast<std::size_t>(e) * n + static_cast<std::size_t>(f)]; });
      });
    }
    std::vector<std::uint64_t> base(n);
    for (std::size_t e = 0; e < n; ++e) {
      std::uint64_t h = 0x1234;
      for (auto c : by_size[e]) h = detail::mix(h, c);
      base[e] = h;
    }
    // One refinement round: fold in the multiset of (pair count, colour) over other elements.
    colors_.assign(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<std::uint64_t> nb;
      for (std::size_t f = 0; f < n; ++f)
        if (f != e) nb.push_back(detail::mix(pair_[e * n + f], base[f]));
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = base[e];
      for (auto v : nb) h = detail::mix(h, v);
      colors_[e] = h;
    }
    auto sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = detail::mix(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(m.rank()));
    h = detail::mix(h, family_->size());
    for (auto c : sorted) h = detail::mix(h, c);
    invariant_ = h;
  }

  const BinaryMatroid& matroid() const noexcept { return matroid_; }
  int size() const noexcept { return n_; }
  std::uint64_t invariant() const noexcept { return invariant_; }
  const CircuitFamily& family() const noexcept { return *family_; }
  bool uses_cocircuits() const noexcept { return use_cocircuits_; }
  std::uint64_t color(int e) const { return colors_[static_cast<std::size_t>(e)]; }
  std::uint32_t pair_count(int e, int f) const {
    return pair_[static_cast<std::size_t>(e) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(f)];
  }

 private:
  BinaryMatroid matroid_;
  int n_;
  bool use_cocircuits_;
  const CircuitFamily* family_ = nullptr;
  std::vector<std::uint32_t> pair_;
  std::vector<std::uint64_t> colors_;
  std::uint64_t invariant_ = 0;
};

/// Isomorphism-invariant 64-bit signature; equal for isomorphic matroids.
inline std::uint64_t iso_invariant(const BinaryMatroid& m) { return IsoProfile(m).invariant(); }

/// Returns map with map[e] = image of element e of a in b, if a ≅ b.
inline std::optional<std::vector<int>> find_isomorphism(const IsoProfile& a, const IsoProfile& b) {
  if (a.invariant() != b.invariant()) return std::nullopt;
  const auto& ma = a.matroid();
  const auto& mb = b.matroid();
  if (ma.size() != mb.size() || ma.rank() != mb.rank()) return std::nullopt;
  const int n = a.size();
  if (n == 0) return std::vector<int>{};

  // Search order: rarest colour first, then elements most entangled with those already placed.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  auto class_size = [&](int e) {
    int c = 0;
    for (int f = 0; f < n; ++f) c += a.color(f) == a.color(e);
    return c;
  };
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_key0 = 0, best_key1 = 0;
    for (int e = 0; e < n; ++e) {
      if (placed[static_cast<std::size_t>(e)]) continue;
      long tie = 0;
      for (int f : order) tie += a.pair_count(e, f);
      const long k0 = class_size(e), k1 = -tie;
      if (best < 0 || std::pair(k1, k0) < std::pair(best_key1, best_key0)) {
        best = e;
        best_key0 = k0;
        best_key1 = k1;
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }

  // Family members of a that become fully mapped at each step.
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<std::uint64_t>> completes(static_cast<std::size_t>(n));
  for (auto mask : a.family().masks()) {
    int last = 0;
    detail::for_each_bit(mask, [&](int e) { last = std::max(last, position[static_cast<std::size_t>(e)]); });
    completes[static_cast<std::size_t>(last)].push_back(mask);
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  auto image = [&](std::uint64_t mask) {
    std::uint64_t out = 0;
    detail::for_each_bit(mask, [&](int e) { out |= detail::bit(map[static_cast<std::size_t>(e)]); });
    return out;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int e = order[static_cast<std::size_t>(depth)];
    for (int f = 0; f < n; ++f) {
      if ((used >> f) & 1) continue;
      if (b.color(f) != a.color(e)) continue;
      if (b.pair_count(f, f) != a.pair_count(e, e)) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int g = order[static_cast<std::size_t>(i)];
        ok = b.pair_count(f, map[static_cast<std::size_t>(g)]) == a.pair_count(e, g);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(e)] = f;
      used |= detail::bit(f);
      for (auto mask : completes[static_cast<std::size_t>(depth)])
        if (!b.family().contains(image(mask))) {
          ok = false;
          break;
        }
      if (ok && self(self, depth + 1)) return true;
      used &= ~detail::bit(f);
      map[static_cast<std::size_t>(e)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

inline std::optional<std::vector<int>> find_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  return find_isomorphism(IsoProfile(a), IsoProfile(b));
}

inline bool is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  return find_isomorphism(a, b).has_value();
}

/// Keeps one representative per isomorphism class.
///
/// With signature_only, matroids are merged whenever their iso_invariant
/// agrees, skipping the backtracking test; distinct classes that share a
/// signature are then merged too.
class IsoClassSet {
 public:
  explicit IsoClassSet(bool signature_only = false) : signature_only_(signature_only) {}

  /// Returns true if m starts a new class.
  bool insert(const BinaryMatroid& m) { return insert(IsoProfile(m)); }

  bool insert(IsoProfile profile) {
    return !find(profile).has_value() && (add(std::move(profile)), true);
  }

  /// Index of the representative isomorphic to `profile`, if any.
  std::optional<std::size_t> find(const IsoProfile& profile) const {
    auto it = buckets_.find(profile.invariant());
    if (it == buckets_.end()) return std::nullopt;
    for (auto idx : it->second) {
      if (signature_only_) return idx;
      if (find_isomorphism(profiles_[idx], profile)) return idx;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> find(const BinaryMatroid& m) const { return find(IsoProfile(m)); }

  std::size_t size() const noexcept { return profiles_.size(); }
  const BinaryMatroid& operator[](std::size_t i) const { return profiles_[i].matroid(); }

  std::vector<BinaryMatroid> representatives() const {
    std::vector<BinaryMatroid> out;
    out.reserve(profiles_.size());
    for (const auto& p : profiles_) out.push_back(p.matroid());
    return out;
  }

 private:
  void add(IsoProfile profile) {
    buckets_[profile.invariant()].push_back(profiles_.size());
    profiles_.push_back(std::move(profile));
  }

  bool signature_only_;
  std::vector<IsoProfile> profiles_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

struct MinorWitness {
  ElementSet deleted;
  ElementSet contracted;
};

/// Searches for m \ D / C ≅ n with C independent and D coindependent of the
/// sizes forced by rank and corank.
inline std::optional<MinorWitness> find_minor(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank()) return std::nullopt;
  const int k_contract = m.rank() - n.rank();
  const int k_delete = m.corank() - n.corank();
  const IsoProfile target(n);
  const auto full = m.full_mask();
  std::optional<MinorWitness> found;
  detail::for_each_subset_of_size(full, k_contract, [&](std::uint64_t c) {
    if (!m.is_independent(c)) return false;
    return detail::for_each_subset_of_size(full & ~c, k_delete, [&](std::uint64_t d) {
      if (m.rank_of(full & ~d) != m.rank()) return false;
      auto candidate = minor(m, m.set(d), m.set(c));
      const IsoProfile p(candidate);
      if (p.invariant() != target.invariant()) return false;
      if (!find_isomorphism(p, target)) return false;
      found = MinorWitness{m.set(d), m.set(c)};
      return true;
    });
  });
  return found;
}

inline bool has_minor(const BinaryMatroid& m, const BinaryMatroid& n) {
  return find_minor(m, n).has_value();
}

}  // namespace cdmat
