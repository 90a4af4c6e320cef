#pragma once

// Structural recognition of regular circuit-difference matroids.
//
// A regular matroid is circuit-difference iff every component cosimplifies to
// one of U_{0,1}, U_{1,m}, M*(K_n), M(K_{3,3}) or R_10. Recognition therefore
// needs only cosimplification and one isomorphism test per component.

#include <optional>
#include <string>
#include <vector>

#include "cdmat/isomorphism.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/zoo.hpp"

namespace cdmat {

enum class BaseKind { U01, U1m, MStarKn, MK33, R10 };

struct BaseMatroid {
  BaseKind kind;
  int parameter = 0;  ///< m for U_{1,m}, n for M*(K_n), unused otherwise

  std::string name() const {
    switch (kind) {
      case BaseKind::U01: return "U01";
      case BaseKind::U1m: return "U1," + std::to_string(parameter);
      case BaseKind::MStarKn: return "M*(K" + std::to_string(parameter) + ")";
      case BaseKind::MK33: return "M(K3,3)";
      case BaseKind::R10: return "R10";
    }
    return "?";
  }

  BinaryMatroid build() const {
    switch (kind) {
      case BaseKind::U01: return zoo::loop();
      case BaseKind::U1m: return zoo::uniform_rank1(parameter);
      case BaseKind::MStarKn: return zoo::cographic(zoo::complete_graph(parameter));
      case BaseKind::MK33: return zoo::complete_bipartite(3, 3);
      case BaseKind::R10: return zoo::r10();
    }
    return {};
  }

  friend bool operator==(const BaseMatroid&, const BaseMatroid&) = default;
};

/// One series class of a component, with the element kept by cosimplification.
struct SeriesClassWitness {
  int survivor;       ///< element of the input matroid
  ElementSet members; ///< over the input matroid's ground set
};

struct ComponentVerdict {
  ElementSet elements;                       ///< over the input matroid's ground set
  std::optional<BaseMatroid> base;           ///< set iff the component is circuit-difference
  std::vector<SeriesClassWitness> series;    ///< series classes of the component
  std::vector<int> base_isomorphism;         ///< cosimplified element k -> base element
  std::optional<CircuitPair> witness;        ///< intersecting circuits with non-circuit difference

  bool positive() const noexcept { return base.has_value(); }
};

struct RecognitionReport {
  std::vector<ComponentVerdict> components;
  bool circuit_difference = true;
  /// The empty matroid: vacuously circuit-difference, but outside the
  /// non-empty hypothesis of the structural theorem.
  bool outside_structural_scope = false;
};

namespace detail {

/// Candidate bases with the same size and rank as a cosimple connected matroid.
inline std::vector<BaseMatroid> base_candidates(int n, int r) {
  std::vector<BaseMatroid> out;
  if (n == 1 && r == 0) out.push_back({BaseKind::U01});
  if (r == 1) out.push_back({BaseKind::U1m, n});
  // M*(K_k): corank k - 1, rank (k - 1)(k - 2) / 2.
  const int k = n - r + 1;
  if (k >= 1 && r == (k - 1) * (k - 2) / 2) out.push_back({BaseKind::MStarKn, k});
  if (n == 9 && r == 5) out.push_back({BaseKind::MK33});
  if (n == 10 && r == 5) out.push_back({BaseKind::R10});
  return out;
}

/// Builds a witness from a skew pair: with D a circuit meeting both C1 and
/// C2, one of (C1, D), (C2, D), (C1 △ D, C2 △ D) is a violating pair.
inline std::optional<CircuitPair> witness_from_skew_pair(const BinaryMatroid& m, const CircuitPair& skew) {
  const auto& fam = m.circuits();
  const auto c1 = skew.first.bits(), c2 = skew.second.bits();
  for (auto d : fam.masks()) {
    if (!(d & c1) || !(d & c2)) continue;
    if (!fam.contains(c1 ^ d)) return CircuitPair{m.set(c1), m.set(d)};
    if (!fam.contains(c2 ^ d)) return CircuitPair{m.set(c2), m.set(d)};
    if (!fam.contains(c1 ^ c2)) return CircuitPair{m.set(c1 ^ d), m.set(c2 ^ d)};
  }
  return std::nullopt;
}

inline ComponentVerdict recognize_component(const BinaryMatroid& m, std::uint64_t component) {
  ComponentVerdict v;
  v.elements = m.set(component);
  const auto sub = restriction(m, v.elements);
  const auto cs = cosimplify(sub);
  for (std::size_t k = 0; k < cs.classes.classes.size(); ++k)
    v.series.push_back({lowest(expand(bit(cs.survivors[k]), component)),
                        m.set(expand(cs.classes.classes[k].bits(), component))});
  const IsoProfile core(cs.matroid);
  for (const auto& cand : base_candidates(cs.matroid.size(), cs.matroid.rank())) {
    if (auto iso = find_isomorphism(core, IsoProfile(cand.build()))) {
      v.base = cand;
      v.base_isomorphism = std::move(*iso);
      return v;
    }
  }
  if (auto skew = skew_circuit_pair(sub)) {
    if (auto w = witness_from_skew_pair(sub, *skew))
      v.witness = CircuitPair{m.set(expand(w->first.bits(), component)), m.set(expand(w->second.bits(), component))};
  }
  if (!v.witness) {
    if (auto w = circuit_difference_violation(sub))
      v.witness = CircuitPair{m.set(expand(w->first.bits(), component)), m.set(expand(w->second.bits(), component))};
  }
  return v;
}

}  // namespace detail

/// Component-wise structural recognition. Throws NotRegular for non-regular input.
inline RecognitionReport recognize_regular_cd(const BinaryMatroid& m) {
  if (!is_regular(m)) throw NotRegular("recognize_regular_cd");
  RecognitionReport report;
  report.outside_structural_scope = m.empty();
  for (const auto& c : components(m)) {
    report.components.push_back(detail::recognize_component(m, c.bits()));
    report.circuit_difference = report.circuit_difference && report.components.back().positive();
  }
  return report;
}

/// For connected, regular, non-empty m: true iff m has no two skew circuits,
/// decided by matching the cosimplification against the base list.
inline bool no_skew_structural(const BinaryMatroid& m) {
  if (m.empty()) throw ParameterOutOfRange("no_skew_structural: matroid is empty");
  if (!is_connected(m)) throw NotConnected("no_skew_structural");
  if (!is_regular(m)) throw NotRegular("no_skew_structural");
  const auto cs = cosimplify(m);
  const IsoProfile core(cs.matroid);
  for (const auto& cand : detail::base_candidates(cs.matroid.size(), cs.matroid.rank()))
    if (find_isomorphism(core, IsoProfile(cand.build()))) return true;
  return false;
}

}  // namespace cdmat
