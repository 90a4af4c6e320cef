#pragma once

// Audits of the structural results over generated corpora.
//
// Each audit checks one statement on every instance of its corpus and
// collects failures with a serialized witness that can be re-checked
// standalone (`cdmat analyze` on the matrix text). Results are deterministic
// for a fixed seed: instances are generated in a fixed order and failures are
// reported in instance order regardless of thread scheduling.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdmat/corpus.hpp"
#include "cdmat/exminors.hpp"
#include "cdmat/io.hpp"
#include "cdmat/parallel.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/recognizer.hpp"

namespace cdmat::audit {

struct Failure {
  std::string description;
  std::string witness;  ///< matrix text of the offending matroid, plus details
};

struct Result {
  std::string lemma;
  std::string title;
  std::string corpus;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool passed() const noexcept { return failures.empty(); }
};

struct Options {
  int max_elements = 9;
  std::uint64_t seed = 1;
  std::string lemma;  ///< run only this audit when non-empty
  int threads = worker_count();
};

/// The predicates the audits compare. Replaceable so the harness itself can
/// be tested against a deliberately wrong oracle.
struct Oracles {
  std::function<bool(const BinaryMatroid&)> circuit_difference = [](const BinaryMatroid& m) {
    return is_circuit_difference(m);
  };
  std::function<bool(const BinaryMatroid&)> has_skew_pair = [](const BinaryMatroid& m) {
    return skew_circuit_pair(m).has_value();
  };
  std::function<bool(const BinaryMatroid&)> circuit_complementary = [](const BinaryMatroid& m) {
    return is_circuit_complementary(m);
  };
  std::function<bool(const BinaryMatroid&)> hyperplane_complementary = [](const BinaryMatroid& m) {
    return is_hyperplane_complementary(m);
  };
  std::function<bool(const BinaryMatroid&)> n5_series_minor = [](const BinaryMatroid& m) {
    return find_n5_series_minor(m).has_value();
  };
  std::function<bool(const BinaryMatroid&)> excluded_series_minor = [](const BinaryMatroid& m) {
    return is_excluded_series_minor(m);
  };
};

inline std::string describe(const BinaryMatroid& m, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    out += (first ? "" : ",") + m.label(i);
    first = false;
  }
  return out + "}";
}

inline Failure failure(const std::string& what, const BinaryMatroid& m, const std::string& detail = {}) {
  return {what, io::to_matrix_string(m) + detail};
}

/// Shared inputs for one audit run. Corpora are built on first use.
class Context {
 public:
  Context(Options options, Oracles oracles) : options_(std::move(options)), oracles_(std::move(oracles)) {}

  const Options& options() const noexcept { return options_; }
  const Oracles& oracles() const noexcept { return oracles_; }

  const std::vector<BinaryMatroid>& binary() const { return corpus::connected_binary(options_.max_elements); }

  const std::vector<BinaryMatroid>& binary_up_to(int n) const { return corpus::connected_binary(n); }

  const std::vector<BinaryMatroid>& graphic() const {
    std::call_once(graphic_once_, [this] { graphic_ = corpus::graphic_corpus(options_.max_elements); });
    return graphic_;
  }

  std::string binary_name() const {
    return std::to_string(binary().size()) + " connected binary matroids on <= " +
           std::to_string(options_.max_elements) + " elements";
  }

  /// Corpus members satisfying pred, evaluated in parallel, in corpus order.
  std::vector<BinaryMatroid> select(const std::vector<BinaryMatroid>& items,
                                    const std::function<bool(const BinaryMatroid&)>& pred) const {
    const auto keep = parallel_map<char>(items.size(), [&](std::size_t i) { return static_cast<char>(pred(items[i])); },
                                         options_.threads);
    std::vector<BinaryMatroid> out;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (keep[i]) out.push_back(items[i]);
    return out;
  }

  std::uint64_t seed_for(const std::string& lemma) const {
    std::uint64_t h = options_.seed;
    for (char c : lemma) h = cdmat::detail::mix(h, static_cast<std::uint64_t>(c));
    return h;
  }

 private:
  Options options_;
  Oracles oracles_;
  mutable std::once_flag graphic_once_;
  mutable std::vector<BinaryMatroid> graphic_;
};

/// Runs check(item) on every item in parallel; check returns the failures
/// for that item. Failures are concatenated in item order.
template <class Check>
void check_all(Result& r, const Context& ctx, const std::vector<BinaryMatroid>& items, Check&& check) {
  const auto found = parallel_map<std::vector<Failure>>(items.size(), [&](std::size_t i) { return check(items[i]); },
                                                        ctx.options().threads);
  r.checked += items.size();
  for (const auto& f : found) r.failures.insert(r.failures.end(), f.begin(), f.end());
}

namespace checks {

inline std::vector<Failure> none() { return {}; }

inline Result s8_facts(const Context&) {
  Result r{"s8", "S8 is not circuit-difference yet has no skew circuits", "S8", 0, {}, 0};
  const auto s8 = zoo::s8();
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.failures.push_back(failure(what, s8));
  };
  const auto c1 = s8.set(0b11001001), c2 = s8.set(0b10110110);
  const auto d1 = s8.set(0b00100011), d2 = s8.set(0b01011100);
  const auto& fam = s8.circuits();
  expect(fam.contains(c1), "{1,4,7,8} is not a circuit");
  expect(fam.contains(c2), "{2,3,5,6,8} is not a circuit");
  expect((c1 ^ c2) == (d1 | d2) && !d1.intersects(d2), "symmetric difference is not {1,2,6} u {3,4,5,7}");
  expect(fam.contains(d1) && fam.contains(d2), "{1,2,6} or {3,4,5,7} is not a circuit");
  expect(!fam.contains(c1 ^ c2), "symmetric difference is itself a circuit");
  expect(!is_circuit_difference(s8), "S8 reported circuit-difference");
  expect(!skew_circuit_pair(s8).has_value(), "S8 reported a skew pair");
  expect(s8.rank() == 4, "rank is not 4");
  // The only 3-circuits contain element 6.
  bool triangles_through_6 = true;
  for (auto c : fam.masks())
    if (cdmat::detail::popcount(c) == 3 && !(c & cdmat::detail::bit(5))) triangles_through_6 = false;
  expect(triangles_through_6, "a 3-circuit avoids element 6");
  return r;
}

inline Result r10_facts(const Context&) {
  Result r{"r10", "R10 deletions are M(K3,3); R10 is regular, cosimple and circuit-complementary", "R10", 0, {}, 0};
  const auto r10 = zoo::r10();
  const IsoProfile k33(zoo::complete_bipartite(3, 3));
  for (int e = 0; e < r10.size(); ++e) {
    ++r.checked;
    const auto d = delete_elements(r10, r10.set(cdmat::detail::bit(e)));
    if (!find_isomorphism(IsoProfile(d), k33)) r.failures.push_back(failure("R10 \\ " + r10.label(e) + " is not M(K3,3)", r10));
  }
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.failures.push_back(failure(what, r10));
  };
  expect(r10.size() == 10 && r10.rank() == 5, "R10 is not 10 elements of rank 5");
  expect(is_regular(r10), "R10 is not regular");
  expect(is_cosimple(r10), "R10 is not cosimple");
  expect(is_connected(r10), "R10 is not connected");
  expect(is_circuit_complementary(r10), "R10 is not circuit-complementary");
  return r;
}

inline Result zoo_facts(const Context& ctx) {
  Result r{"zoo", "Named constructions: sizes, simplicity, graphic duality, AG+e uniqueness", "zoo and 2-connected graphs", 0, {}, 0};
  for (int k = 1; k <= 6; ++k) {
    const auto pg = zoo::pg(k), ag = zoo::ag(k);
    ++r.checked;
    if (pg.size() != (1 << k) - 1 || !is_simple(pg) || pg.rank() != k) r.failures.push_back(failure("PG size/rank/simplicity", pg));
    ++r.checked;
    if (ag.size() != (1 << (k - 1)) || !is_simple(ag) || ag.rank() != k) r.failures.push_back(failure("AG size/rank/simplicity", ag));
  }
  for (int k = 3; k <= 5; ++k) {
    const IsoProfile first(zoo::ag_plus_e(k));
    for (std::uint64_t p = 2; p < (std::uint64_t{1} << k); p += 2) {
      ++r.checked;
      const auto other = zoo::ag_plus_e(k, p);
      if (!find_isomorphism(first, IsoProfile(other))) r.failures.push_back(failure("AG+e depends on the extension point", other));
    }
  }
  const auto graphs = corpus::two_connected_graphs(std::min(ctx.options().max_elements, 8));
  const auto found = parallel_map<std::vector<Failure>>(graphs.size(), [&](std::size_t i) {
    const auto m = zoo::graphic(graphs[i]);
    if (is_isomorphic(dual(m), zoo::cographic(graphs[i])) && is_connected(m)) return none();
    return std::vector<Failure>{failure("dual(M(G)) is not M*(G) or M(G) is disconnected", m)};
  }, ctx.options().threads);
  r.checked += graphs.size();
  for (const auto& f : found) r.failures.insert(r.failures.end(), f.begin(), f.end());
  return r;
}

inline Result gf2_rank(const Context& ctx) {
  Result r{"gf2", "Rank is monotone and submodular; null spaces span exactly the column dependencies", "", 0, {}, 0};
  const auto items = ctx.select(ctx.binary_up_to(std::min(ctx.options().max_elements, 8)), [](const BinaryMatroid&) { return true; });
  r.corpus = std::to_string(items.size()) + " connected binary matroids on <= 8 elements";
  check_all(r, ctx, items, [](const BinaryMatroid& m) {
    const int n = m.size();
    std::vector<int> rank(std::size_t{1} << n);
    std::vector<char> zero_sum(rank.size(), 0);
    const auto cols = m.representation().column_words();
    for (std::uint64_t s = 0; s < rank.size(); ++s) {
      rank[s] = rank_of_columns(m.representation(), m.set(s));
      std::uint64_t acc = 0;
      cdmat::detail::for_each_bit(s, [&](int j) { acc ^= cols[static_cast<std::size_t>(j)]; });
      zero_sum[s] = acc == 0;
    }
    for (std::uint64_t a = 0; a < rank.size(); ++a)
      for (std::uint64_t b = 0; b < rank.size(); ++b) {
        if (rank[a] + rank[b] < rank[a | b] + rank[a & b]) return std::vector<Failure>{failure("submodularity fails", m)};
        if ((a & ~b) == 0 && rank[a] > rank[b]) return std::vector<Failure>{failure("monotonicity fails", m)};
      }
    std::vector<std::uint64_t> basis;
    for (const auto& v : null_space_basis(m.representation())) basis.push_back(v.bits());
    std::vector<char> in_span(rank.size(), 0);
    in_span[0] = 1;
    for_each_nonzero_combination(basis, [&](std::uint64_t v) { in_span[v] = 1; });
    if (in_span != zero_sum) return std::vector<Failure>{failure("null space span differs from column dependencies", m)};
    return none();
  });
  return r;
}

inline Result duality(const Context& ctx) {
  const int n = std::max(ctx.options().max_elements, 10);
  const auto& items = ctx.binary_up_to(n);
  Result r{"duality", "Circuits of the dual are the cocircuits; the dual is an involution",
           std::to_string(items.size()) + " connected binary matroids on <= " + std::to_string(n) + " elements", 0, {}, 0};
  check_all(r, ctx, items, [](const BinaryMatroid& m) {
    const auto d = dual(m);
    if (!(d.circuits() == m.cocircuits())) return std::vector<Failure>{failure("C(M*) != C*(M)", m)};
    if (!(dual(d).circuits() == m.circuits())) return std::vector<Failure>{failure("C(M**) != C(M)", m)};
    if (d.rank() != m.corank()) return std::vector<Failure>{failure("r(M*) != r*(M)", m)};
    return none();
  });
  return r;
}

inline Result orthogonality(const Context& ctx) {
  Result r{"orthogonality", "Every circuit meets every cocircuit in an even number of elements", ctx.binary_name(), 0, {}, 0};
  check_all(r, ctx, ctx.binary(), [](const BinaryMatroid& m) {
    for (auto c : m.circuits().masks())
      for (auto d : m.cocircuits().masks())
        if (cdmat::detail::popcount(c & d) % 2)
          return std::vector<Failure>{failure("odd intersection", m, "circuit " + describe(m, m.set(c)) + " cocircuit " + describe(m, m.set(d)) + "\n")};
    return none();
  });
  return r;
}

inline Result circuit_axioms(const Context& ctx) {
  Result r{"circuit-axioms", "Circuits form an antichain and C1 xor C2 is a disjoint union of circuits", ctx.binary_name(), 0, {}, 0};
  check_all(r, ctx, ctx.binary(), [](const BinaryMatroid& m) {
    const auto masks = m.circuits().masks();
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (masks[i] == 0 || m.rank_of(masks[i]) != cdmat::detail::popcount(masks[i]) - 1)
        return std::vector<Failure>{failure("member is not a circuit", m, describe(m, m.set(masks[i])) + "\n")};
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (i == j) continue;
        if ((masks[i] & masks[j]) == masks[i]) return std::vector<Failure>{failure("not an antichain", m)};
        if (j < i) continue;
        // A binary cycle is a disjoint union of circuits: peel off contained circuits.
        std::uint64_t rest = masks[i] ^ masks[j];
        for (bool progress = true; rest && progress;) {
          progress = false;
          for (auto c : masks)
            if ((c & rest) == c) {
              rest &= ~c;
              progress = true;
              break;
            }
        }
        if (rest) return std::vector<Failure>{failure("C1 xor C2 is not a disjoint union of circuits", m)};
      }
    }
    return none();
  });
  return r;
}

inline Result series_round_trip(const Context& ctx) {
  Result r{"series", "Cosimplifying a series extension recovers the cosimplification", ctx.binary_name(), 0, {}, 0};
  check_all(r, ctx, ctx.binary(), [](const BinaryMatroid& m) {
    const auto base = cosimplify(m).matroid;
    const IsoProfile target(base);
    for (int e = 0; e < m.size(); ++e) {
      if (m.is_coloop(e)) continue;
      const auto ext = series_extend(m, e, {"s"});
      if (contract_elements(ext, ext.set(cdmat::detail::bit(m.size()))).circuits() != m.circuits())
        return std::vector<Failure>{failure("contracting the new element does not recover M", m)};
      if (!find_isomorphism(IsoProfile(cosimplify(ext).matroid), target))
        return std::vector<Failure>{failure("cosimplify(series extension at " + m.label(e) + ") differs", m)};
    }
    return none();
  });
  return r;
}

inline std::vector<BinaryMatroid> regular_specials(const Context& ctx) {
  auto list = ctx.graphic();
  for (auto m : {zoo::complete_bipartite(3, 3), zoo::cographic(zoo::complete_bipartite_graph(3, 3)),
                 zoo::cographic(zoo::complete_graph(5)), zoo::r10()})
    list.push_back(std::move(m));
  return list;
}

inline Result regular_cd_equivalence(const Context& ctx) {
  auto items = regular_specials(ctx);
  const std::size_t base = items.size();
  auto ext = corpus::random_series_extensions(items, 200, ctx.seed_for("1.1"));
  items.insert(items.end(), ext.begin(), ext.end());
  Result r{"1.1", "Connected regular: circuit-difference <=> no skew circuits <=> recognizer positive",
           std::to_string(base) + " graphic (2-connected, <= " + std::to_string(ctx.options().max_elements) +
               " edges) and special regular matroids + 200 series extensions",
           0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, items, [&](const BinaryMatroid& m) {
    std::vector<Failure> out;
    if (!is_connected(m)) return std::vector<Failure>{failure("corpus member is not connected", m)};
    if (!is_regular(m)) return std::vector<Failure>{failure("corpus member is not regular", m)};
    const bool cd = o.circuit_difference(m);
    const bool no_skew = !o.has_skew_pair(m);
    const auto report = recognize_regular_cd(m);
    if (cd != no_skew || cd != report.circuit_difference)
      out.push_back(failure("disagreement", m,
                            "circuit-difference=" + std::to_string(cd) + " no-skew=" + std::to_string(no_skew) +
                                " recognizer=" + std::to_string(report.circuit_difference) + "\n"));
    for (const auto& v : report.components) {
      if (!v.positive()) continue;
      const auto cs = cosimplify(restriction(m, v.elements));
      if (!is_isomorphic(cs.matroid, v.base->build()))
        out.push_back(failure("recognizer base label does not match the cosimplification", m, v.base->name() + "\n"));
    }
    return out;
  });
  return r;
}

inline Result skew_excludes_cd(const Context& ctx) {
  Result r{"1.2", "Connected binary with a skew pair is not circuit-difference", ctx.binary_name(), 0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, ctx.binary(), [&](const BinaryMatroid& m) {
    if (o.has_skew_pair(m) && o.circuit_difference(m)) {
      const auto p = skew_circuit_pair(m);
      return std::vector<Failure>{failure("skew pair but circuit-difference", m,
                                          p ? "skew " + describe(m, p->first) + " " + describe(m, p->second) + "\n" : "")};
    }
    return none();
  });
  return r;
}

inline Result difference_identity(const Context& ctx) {
  Result r{"1.2-identity", "D - (C1 u C2) = (C1 xor D) n (C2 xor D) for disjoint circuits C1, C2 and D meeting both",
           ctx.binary_name(), 0, {}, 0};
  check_all(r, ctx, ctx.binary(), [](const BinaryMatroid& m) {
    const auto c = m.circuits().masks();
    for (auto c1 : c)
      for (auto c2 : c) {
        if (c1 & c2) continue;
        for (auto d : c)
          if ((d & c1) && (d & c2) && (d & ~(c1 | c2)) != ((c1 ^ d) & (c2 ^ d)))
            return std::vector<Failure>{failure("identity fails", m, describe(m, m.set(c1)) + " " + describe(m, m.set(c2)) + " " + describe(m, m.set(d)) + "\n")};
      }
    return none();
  });
  return r;
}

inline Result no_skew_structure(const Context& ctx) {
  auto items = ctx.select(ctx.binary(), [](const BinaryMatroid& m) { return is_regular(m); });
  for (auto m : regular_specials(ctx)) if (m.size() > ctx.options().max_elements) items.push_back(std::move(m));
  Result r{"1.3", "Connected regular: no skew circuits <=> cosimplification is on the base list; unbreakable <=> dual has no skew pair",
           std::to_string(items.size()) + " connected regular matroids from the binary corpus and specials", 0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, items, [&](const BinaryMatroid& m) {
    std::vector<Failure> out;
    if (no_skew_structural(m) == o.has_skew_pair(m)) out.push_back(failure("structural and brute-force skew tests disagree", m));
    if (is_unbreakable(m) == o.has_skew_pair(dual(m))) out.push_back(failure("unbreakable disagrees with the dual skew test", m));
    return out;
  });
  // The unbreakable characterization holds for every matroid, not only regular ones.
  check_all(r, ctx, ctx.binary(), [&](const BinaryMatroid& m) {
    if (is_unbreakable(m) == o.has_skew_pair(dual(m))) return std::vector<Failure>{failure("unbreakable disagrees with the dual skew test", m)};
    return none();
  });
  return r;
}

inline Result regular_recognition(const Context& ctx) {
  const auto regular = ctx.select(ctx.binary(), [](const BinaryMatroid& m) { return is_regular(m); });
  std::vector<BinaryMatroid> items = regular;
  // Direct sums of pairs of small regular members.
  std::mt19937_64 rng(ctx.seed_for("1.4"));
  std::vector<BinaryMatroid> small;
  for (const auto& m : regular)
    if (m.size() <= 5) small.push_back(m);
  for (int k = 0; k < 100 && !small.empty(); ++k) {
    const auto& a = small[rng() % small.size()];
    const auto& b = small[rng() % small.size()];
    std::vector<std::uint64_t> rows(a.reduced_rows().begin(), a.reduced_rows().end());
    for (auto row : b.reduced_rows()) rows.push_back(row << a.size());
    items.emplace_back(Gf2Matrix::from_rows(std::move(rows), a.size() + b.size()));
  }
  Result r{"1.4", "Regular: circuit-difference <=> every component is a series extension of a base",
           std::to_string(regular.size()) + " connected regular matroids + 100 direct sums", 0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, items, [&](const BinaryMatroid& m) {
    const auto report = recognize_regular_cd(m);
    if (report.circuit_difference != o.circuit_difference(m))
      return std::vector<Failure>{failure("recognizer disagrees with the circuit-difference predicate", m)};
    return none();
  });
  return r;
}

inline Result skew_survives_series(const Context& ctx) {
  const auto& o = ctx.oracles();
  const auto skewed = ctx.select(ctx.binary(), o.has_skew_pair);
  auto ext = corpus::random_series_extensions(skewed, 100, ctx.seed_for("2.2"));
  Result r{"2.2", "A skew pair survives every series extension",
           std::to_string(skewed.size()) + " corpus matroids with a skew pair (every single-element series extension) + 100 random series extensions", 0, {}, 0};
  check_all(r, ctx, skewed, [&](const BinaryMatroid& m) {
    for (int e = 0; e < m.size(); ++e)
      if (!m.is_coloop(e) && !o.has_skew_pair(series_extend(m, e, {"s"})))
        return std::vector<Failure>{failure("series extension at " + m.label(e) + " has no skew pair", m)};
    return none();
  });
  check_all(r, ctx, ext, [&](const BinaryMatroid& m) {
    if (!o.has_skew_pair(m)) return std::vector<Failure>{failure("series extension has no skew pair", m)};
    return none();
  });
  return r;
}

inline Result cd_survives_series(const Context& ctx) {
  const auto& o = ctx.oracles();
  const auto cd = ctx.select(ctx.binary(), o.circuit_difference);
  auto ext = corpus::random_series_extensions(cd, 100, ctx.seed_for("2.3"));
  Result r{"2.3", "Adding an element in series preserves circuit-difference",
           std::to_string(cd.size()) + " circuit-difference corpus matroids (every single-element series extension) + 100 random series extensions", 0, {}, 0};
  check_all(r, ctx, cd, [&](const BinaryMatroid& m) {
    for (int e = 0; e < m.size(); ++e)
      if (!m.is_coloop(e) && !o.circuit_difference(series_extend(m, e, {"s"})))
        return std::vector<Failure>{failure("series extension at " + m.label(e) + " is not circuit-difference", m)};
    return none();
  });
  check_all(r, ctx, ext, [&](const BinaryMatroid& m) {
    if (!o.circuit_difference(m)) return std::vector<Failure>{failure("series extension is not circuit-difference", m)};
    return none();
  });
  return r;
}

inline Result complementary_implies_cd(const Context& ctx) {
  const auto& o = ctx.oracles();
  const auto cc = ctx.select(ctx.binary(), o.circuit_complementary);
  auto items = ctx.binary();
  auto ext = corpus::random_series_extensions(cc, 100, ctx.seed_for("2.4"));
  items.insert(items.end(), ext.begin(), ext.end());
  Result r{"2.4", "Connected binary circuit-complementary implies circuit-difference",
           ctx.binary_name() + " + 100 series extensions of circuit-complementary members", 0, {}, 0};
  check_all(r, ctx, items, [&](const BinaryMatroid& m) {
    if (o.circuit_complementary(m) && !o.circuit_difference(m))
      return std::vector<Failure>{failure("circuit-complementary but not circuit-difference", m)};
    return none();
  });
  return r;
}

inline Result complementary_closure(const Context& ctx) {
  const auto& o = ctx.oracles();
  const auto cc = ctx.select(ctx.binary(), o.circuit_complementary);
  auto ext = corpus::random_series_extensions(cc, 100, ctx.seed_for("2.5"));
  Result r{"2.5", "Circuit-complementary survives contracting one element of a 2-cocircuit and series extension",
           std::to_string(cc.size()) + " circuit-complementary corpus matroids + 100 random series extensions", 0, {}, 0};
  check_all(r, ctx, cc, [&](const BinaryMatroid& m) {
    std::vector<Failure> out;
    for (int e = 0; e < m.size(); ++e)
      for (int f = 0; f < m.size(); ++f)
        if (is_series_pair(m, e, f) && !o.circuit_complementary(contract_elements(m, m.set(cdmat::detail::bit(e)))))
          out.push_back(failure("M/" + m.label(e) + " is not circuit-complementary", m));
    for (int e = 0; e < m.size(); ++e)
      if (!m.is_coloop(e) && !o.circuit_complementary(series_extend(m, e, {"s"})))
        out.push_back(failure("series extension at " + m.label(e) + " is not circuit-complementary", m));
    return out;
  });
  check_all(r, ctx, ext, [&](const BinaryMatroid& m) {
    if (!o.circuit_complementary(m)) return std::vector<Failure>{failure("series extension is not circuit-complementary", m)};
    return none();
  });
  return r;
}

/// Connected cosimple regular circuit-complementary matroids on exactly n
/// elements, grown from the connected regular matroids on n - 1 elements.
inline std::vector<BinaryMatroid> cosimple_cc_regular_level(const Context& ctx, int n) {
  const auto& o = ctx.oracles();
  const auto parents = ctx.select(ctx.binary_up_to(n - 1), [n](const BinaryMatroid& m) {
    return m.size() == n - 1 && is_regular(m);
  });
  const auto grown = parallel_map<std::vector<BinaryMatroid>>(parents.size(), [&](std::size_t i) {
    std::vector<BinaryMatroid> keep;
    for (auto& m : corpus::detail::one_element_growths(parents[i]))
      if (is_cosimple(m) && is_connected(m) && o.circuit_complementary(m) && is_regular(m)) keep.push_back(std::move(m));
    return keep;
  }, ctx.options().threads);
  std::vector<BinaryMatroid> flat;
  for (const auto& g : grown) flat.insert(flat.end(), g.begin(), g.end());
  return corpus::detail::dedupe(flat, false, ctx.options().threads);
}

inline Result cosimple_complementary(const Context& ctx) {
  const int n = ctx.options().max_elements + 1;
  const auto& o = ctx.oracles();
  auto items = ctx.select(ctx.binary(), [&](const BinaryMatroid& m) {
    return is_cosimple(m) && o.circuit_complementary(m) && is_regular(m);
  });
  const auto top = cosimple_cc_regular_level(ctx, n);
  items.insert(items.end(), top.begin(), top.end());
  Result r{"2.8", "Connected cosimple regular circuit-complementary is U1,4 or R10; both occur",
           std::to_string(items.size()) + " such matroids on <= " + std::to_string(n) + " elements (filtered from the corpus and its one-element growths)", 0, {}, 0};
  const IsoProfile u14(zoo::uniform_rank1(4)), r10(zoo::r10());
  const auto which = parallel_map<int>(items.size(), [&](std::size_t i) {
    const IsoProfile p(items[i]);
    return find_isomorphism(p, u14) ? 1 : find_isomorphism(p, r10) ? 2 : 0;
  }, ctx.options().threads);
  r.checked = items.size();
  bool saw_u14 = false, saw_r10 = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (which[i] == 0) r.failures.push_back(failure("neither U1,4 nor R10", items[i]));
    saw_u14 = saw_u14 || which[i] == 1;
    saw_r10 = saw_r10 || which[i] == 2;
  }
  if (!saw_u14) r.failures.push_back({"U1,4 did not arise", ""});
  if (!saw_r10 && n >= 10) r.failures.push_back({"R10 did not arise", ""});
  return r;
}

inline Result base_rank_arithmetic(const Context& ctx) {
  Result r{"2.9", "Series extensions of U1,4 and R10 have (r, r*) = (k+1, 3) and (k+5, 5)",
           "100 seeded series extensions of U1,4 and R10", 0, {}, 0};
  std::mt19937_64 rng(ctx.seed_for("2.9"));
  const auto u14 = zoo::uniform_rank1(4), r10 = zoo::r10();
  std::vector<std::pair<BinaryMatroid, bool>> items;
  for (int i = 0; i < 100; ++i) {
    const bool is_r10 = rng() % 2;
    const int moves = 1 + static_cast<int>(rng() % 6);
    items.emplace_back(corpus::random_series_extension(is_r10 ? r10 : u14, moves, rng), is_r10);
  }
  for (const auto& [m, is_r10] : items) {
    ++r.checked;
    const int k = m.size() - (is_r10 ? 10 : 4);
    const auto expected = is_r10 ? std::pair(k + 5, 5) : std::pair(k + 1, 3);
    if (std::pair(m.rank(), m.corank()) != expected)
      r.failures.push_back(failure("(r, r*) = (" + std::to_string(m.rank()) + ", " + std::to_string(m.corank()) + ")", m));
  }
  return r;
}

inline Result series_minor_closed(const Context& ctx) {
  const auto& o = ctx.oracles();
  const auto cd = ctx.select(ctx.binary(), o.circuit_difference);
  Result r{"4.1", "Every series minor of a circuit-difference matroid is circuit-difference",
           std::to_string(cd.size()) + " circuit-difference corpus matroids, all series minors", 0, {}, 0};
  check_all(r, ctx, cd, [&](const BinaryMatroid& m) {
    std::vector<Failure> out;
    for_each_series_minor_state(m, [&](const BinaryMatroid& n, const ElementSet& d, const ElementSet& c) {
      if (out.empty() && !o.circuit_difference(n))
        out.push_back(failure("series minor is not circuit-difference", m,
                              "deleted " + describe(m, d) + " contracted " + describe(m, c) + "\n"));
    });
    return out;
  });
  return r;
}

inline Result n5_iff_skew(const Context& ctx) {
  Result r{"4.2", "Connected binary: skew pair <=> N5 series minor", ctx.binary_name(), 0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, ctx.binary(), [&](const BinaryMatroid& m) {
    const bool skew = o.has_skew_pair(m), n5 = o.n5_series_minor(m);
    if (skew != n5)
      return std::vector<Failure>{failure("disagreement", m, "skew=" + std::to_string(skew) + " n5-series-minor=" + std::to_string(n5) + "\n")};
    return none();
  });
  return r;
}

inline Result hyperplane_catalog(const Context& ctx) {
  Result r{"4.4", "Simple hyperplane-complementary rank r is AG(r-1,2) \\ X with no AG(r-3,2) copy in X",
           "all subsets X of AG(r-1,2) and all simple binary matroids, r = 2..4", 0, {}, 0};
  const auto& o = ctx.oracles();
  for (int k = 2; k <= 4; ++k) {
    const auto ag = zoo::ag(k);
    const auto sets = affine_deletion_sets(k);
    const std::set<std::uint64_t> valid(sets.begin(), sets.end());
    for (std::uint64_t x = 0; x <= ag.full_mask(); ++x) {
      ++r.checked;
      const auto m = delete_elements(ag, ag.set(x));
      const bool hc = m.rank() == k && o.hyperplane_complementary(m);
      if (hc != static_cast<bool>(valid.count(x)))
        r.failures.push_back(failure("X condition and hyperplane-complementarity disagree", m, "X = " + describe(ag, ag.set(x)) + "\n"));
    }
    const auto catalog = hyperplane_complementary_catalog(k);
    IsoClassSet brute;
    for (const auto& m : corpus::simple_binary_matroids(k)) {
      ++r.checked;
      if (o.hyperplane_complementary(m)) brute.insert(m);
    }
    const std::size_t expected = k == 4 ? 2 : 1;
    if (catalog.size() != brute.size() || catalog.size() != expected)
      r.failures.push_back({"catalog size " + std::to_string(catalog.size()) + ", brute force " + std::to_string(brute.size()) +
                                " at rank " + std::to_string(k),
                            ""});
    for (const auto& e : catalog)
      if (!brute.find(e.matroid)) r.failures.push_back(failure("catalog member not found by brute force", e.matroid));
  }
  return r;
}

inline Result excluded_minors(const Context& ctx) {
  Result r{"4.6", "Excluded series minors are exactly the duals of the family [AG(r-1,2)+e] \\ X", "", 0, {}, 0};
  const auto& o = ctx.oracles();
  const auto fam3 = enumerate_m_family(3), fam4 = enumerate_m_family(4);
  r.checked += 2;
  if (fam3.size() != 1 || !is_isomorphic(fam3[0].matroid, dual(zoo::n5())))
    r.failures.push_back({"rank-3 family is not {N5*}", ""});
  if (fam4.size() != 2 || !is_isomorphic(fam4[0].matroid, zoo::tipped_spike(4)) || !is_isomorphic(fam4[1].matroid, zoo::s8()))
    r.failures.push_back({"rank-4 family is not {tipped 4-spike, S8}", ""});
  std::vector<BinaryMatroid> duals;
  for (const auto* fam : {&fam3, &fam4})
    for (const auto& e : *fam) duals.push_back(dual(e.matroid));
  check_all(r, ctx, duals, [&](const BinaryMatroid& m) {
    if (!o.excluded_series_minor(m) || !is_excluded_series_minor_exhaustive(m))
      return std::vector<Failure>{failure("dual of a family member is not an excluded series minor", m)};
    return none();
  });
  const auto not_cd = ctx.select(ctx.binary(), [&](const BinaryMatroid& m) { return !o.circuit_difference(m); });
  r.corpus = "ranks 3-4 of the family + " + std::to_string(not_cd.size()) + " non-circuit-difference corpus matroids";
  check_all(r, ctx, not_cd, [&](const BinaryMatroid& m) {
    const auto d = dual(m);
    const bool excluded = o.excluded_series_minor(m);
    if (!excluded) {
      bool found = false;
      for_each_series_minor_state(m, [&](const BinaryMatroid& n, const ElementSet& dd, const ElementSet& cc) {
        if (!found && !(dd | cc).empty() && !o.circuit_difference(n)) found = true;
      });
      if (!found) return std::vector<Failure>{failure("not excluded, yet no proper series minor fails circuit-difference", m)};
    }
    // Members of rank above the catalog cap are not decided structurally.
    if (d.rank() > kMaxAffineRank) {
      if (excluded) return std::vector<Failure>{failure("excluded series minor whose dual rank exceeds the catalog", m)};
      return none();
    }
    const bool member = in_m_family(d);
    if (excluded != member)
      return std::vector<Failure>{failure("definitional and structural tests disagree", m,
                                          "excluded=" + std::to_string(excluded) + " dual-in-family=" + std::to_string(member) + "\n")};
    return none();
  });
  return r;
}

inline Result hyperplane_bridge(const Context& ctx) {
  Result r{"hyperplane-bridge", "Hyperplane-complementary <=> dual is circuit-complementary", ctx.binary_name(), 0, {}, 0};
  const auto& o = ctx.oracles();
  check_all(r, ctx, ctx.binary(), [&](const BinaryMatroid& m) {
    if (o.hyperplane_complementary(m) != o.circuit_complementary(dual(m)))
      return std::vector<Failure>{failure("disagreement", m)};
    return none();
  });
  return r;
}

}  // namespace checks

struct Entry {
  std::string id;
  Result (*run)(const Context&);
};

inline const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"s8", checks::s8_facts},
      {"r10", checks::r10_facts},
      {"zoo", checks::zoo_facts},
      {"gf2", checks::gf2_rank},
      {"duality", checks::duality},
      {"orthogonality", checks::orthogonality},
      {"circuit-axioms", checks::circuit_axioms},
      {"series", checks::series_round_trip},
      {"1.1", checks::regular_cd_equivalence},
      {"1.2", checks::skew_excludes_cd},
      {"1.2-identity", checks::difference_identity},
      {"1.3", checks::no_skew_structure},
      {"1.4", checks::regular_recognition},
      {"2.2", checks::skew_survives_series},
      {"2.3", checks::cd_survives_series},
      {"2.4", checks::complementary_implies_cd},
      {"2.5", checks::complementary_closure},
      {"2.8", checks::cosimple_complementary},
      {"2.9", checks::base_rank_arithmetic},
      {"4.1", checks::series_minor_closed},
      {"4.2", checks::n5_iff_skew},
      {"4.4", checks::hyperplane_catalog},
      {"4.6", checks::excluded_minors},
      {"hyperplane-bridge", checks::hyperplane_bridge},
  };
  return entries;
}

inline std::vector<std::string> audit_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.id);
  return out;
}

/// Runs the selected audits in registry order. Throws ParameterOutOfRange for
/// an unknown audit id or an out-of-range element bound.
inline std::vector<Result> run(const Options& options, const Oracles& oracles = {}) {
  if (options.max_elements < 1 || options.max_elements > 14)
    throw ParameterOutOfRange("audit: max elements must be in [1, 14]");
  if (!options.lemma.empty()) {
    const auto ids = audit_ids();
    if (std::find(ids.begin(), ids.end(), options.lemma) == ids.end())
      throw ParameterOutOfRange("audit: unknown lemma '" + options.lemma + "'");
  }
  const Context ctx(options, oracles);
  std::vector<Result> out;
  for (const auto& e : registry()) {
    if (!options.lemma.empty() && options.lemma != e.id) continue;
    const auto start = std::chrono::steady_clock::now();
    auto result = e.run(ctx);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace cdmat::audit
