#pragma once

// Reports for the command-line tool. Every report is built as JSON first; the
// text form is rendered from the same document.

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdmat/audit.hpp"
#include "cdmat/exminors.hpp"
#include "cdmat/io.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/recognizer.hpp"

namespace cdmat::report {

using json = nlohmann::ordered_json;

struct Options {
  std::size_t circuit_cap = 64;    ///< circuits printed by analyze
  std::size_t violation_cap = 16;  ///< circuit-difference violations listed
};

/// Labels of s in element order.
inline json labels(const BinaryMatroid& m, const ElementSet& s) {
  json out = json::array();
  for (int i : s.indices()) out.push_back(m.label(i));
  return out;
}

inline json labels(const BinaryMatroid& m, std::uint64_t s) { return labels(m, m.set(s)); }

/// Value of fn, or null with a note when a cap is hit.
inline json guarded(json& notes, const std::string& what, const std::function<json()>& fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    notes.push_back(what + ": " + e.what());
    return nullptr;
  }
}

inline json pair_json(const BinaryMatroid& m, const CircuitPair& p) {
  return json{{"c1", labels(m, p.first)}, {"c2", labels(m, p.second)}, {"difference", labels(m, p.first ^ p.second)}};
}

inline json script_json(const BinaryMatroid& m, const SeriesMinorScript& s) {
  json steps = json::array();
  for (const auto& st : s.steps)
    steps.push_back(json{{"op", st.op == SeriesMinorStep::Op::Delete ? "delete" : "contract"}, {"element", m.label(st.element)}});
  return json{{"steps", steps}, {"deleted", labels(m, s.deleted)}, {"contracted", labels(m, s.contracted)}};
}

inline json recognition_json(const BinaryMatroid& m) {
  const auto rep = recognize_regular_cd(m);
  json comps = json::array();
  for (const auto& v : rep.components) {
    json c{{"elements", labels(m, v.elements)}, {"circuit_difference", v.positive()}};
    if (v.base) {
      c["base"] = v.base->name();
      json classes = json::array();
      for (const auto& s : v.series) classes.push_back(json{{"survivor", m.label(s.survivor)}, {"members", labels(m, s.members)}});
      c["series_classes"] = classes;
    }
    if (v.witness) c["witness"] = pair_json(m, *v.witness);
    comps.push_back(c);
  }
  return json{{"circuit_difference", rep.circuit_difference}, {"components", comps},
              {"outside_structural_scope", rep.outside_structural_scope}};
}

inline json analyze(const BinaryMatroid& m, const Options& opt = {}) {
  json notes = json::array();
  json r;
  r["elements"] = m.labels();
  r["size"] = m.size();
  r["rank"] = m.rank();
  r["corank"] = m.corank();
  json comps = json::array();
  for (const auto& c : components(m)) comps.push_back(labels(m, c));
  r["connected"] = comps.size() <= 1;
  r["components"] = comps;
  r["simple"] = is_simple(m);
  r["cosimple"] = is_cosimple(m);

  r["circuits"] = guarded(notes, "circuits", [&] {
    const auto masks = m.circuits().masks();
    json list = json::array();
    for (std::size_t i = 0; i < masks.size() && i < opt.circuit_cap; ++i) list.push_back(labels(m, masks[i]));
    return json{{"count", masks.size()}, {"listed", list}, {"truncated", masks.size() > opt.circuit_cap}};
  });

  json pred, wit;
  pred["circuit_difference"] = guarded(notes, "circuit-difference", [&]() -> json {
    const auto all = circuit_difference_violations(m, opt.violation_cap + 1);
    json v = json::array();
    for (std::size_t i = 0; i < all.size() && i < opt.violation_cap; ++i) v.push_back(pair_json(m, all[i]));
    wit["circuit_difference_violations"] = v;
    wit["circuit_difference_violations_truncated"] = all.size() > opt.violation_cap;
    return all.empty();
  });
  pred["skew_circuits"] = guarded(notes, "skew circuits", [&]() -> json {
    const auto p = skew_circuit_pair(m);
    wit["skew_pair"] = p ? json{{"c1", labels(m, p->first)}, {"c2", labels(m, p->second)}} : json(nullptr);
    return p.has_value();
  });
  pred["circuit_complementary"] = guarded(notes, "circuit-complementary", [&] { return json(is_circuit_complementary(m)); });
  pred["hyperplane_complementary"] = guarded(notes, "hyperplane-complementary", [&] { return json(is_hyperplane_complementary(m)); });
  pred["unbreakable"] = guarded(notes, "unbreakable", [&] { return json(is_unbreakable(m)); });
  pred["regular"] = guarded(notes, "regular", [&] { return json(is_regular(m)); });
  pred["excluded_series_minor"] = guarded(notes, "excluded series minor", [&] { return json(is_excluded_series_minor(m)); });
  if (is_connected(m)) {
    pred["n5_series_minor"] = guarded(notes, "N5 series minor", [&]() -> json {
      const auto s = find_n5_series_minor(m);
      wit["n5_series_minor"] = s ? script_json(m, *s) : json(nullptr);
      return s.has_value();
    });
  } else {
    pred["n5_series_minor"] = nullptr;
    notes.push_back("N5 series minor: defined for connected matroids only");
  }
  r["predicates"] = pred;
  r["witnesses"] = wit;

  if (pred["regular"] == true)
    r["recognizer"] = guarded(notes, "recognizer", [&] { return recognition_json(m); });
  else
    r["recognizer"] = nullptr;
  r["notes"] = notes;
  return r;
}

inline json circuits(const BinaryMatroid& m) {
  json list = json::array();
  for (auto c : m.circuits().masks()) list.push_back(labels(m, c));
  return json{{"rank", m.rank()}, {"corank", m.corank()}, {"count", list.size()}, {"circuits", list}};
}

inline json recognize(const BinaryMatroid& m) {
  if (!is_regular(m)) return json{{"rank", m.rank()}, {"corank", m.corank()}, {"regular", false}};
  json r{{"rank", m.rank()}, {"corank", m.corank()}, {"regular", true}};
  r.update(recognition_json(m));
  return r;
}

inline json audit_result(const audit::Result& a) {
  json fails = json::array();
  for (const auto& f : a.failures) fails.push_back(json{{"description", f.description}, {"witness", f.witness}});
  return json{{"lemma", a.lemma}, {"title", a.title}, {"corpus", a.corpus}, {"checked", a.checked},
              {"passed", a.passed()}, {"failures", fails}, {"seconds", a.seconds}};
}

inline json exminors(int r) {
  json entries = json::array();
  for (const auto& e : enumerate_m_family(r)) {
    const auto d = dual(e.matroid);
    const auto ext = zoo::ag_plus_e(r);
    json x = json::array();
    for (int i : e.deleted.indices()) x.push_back(zoo::detail::coordinates(zoo::affine_points(r)[static_cast<std::size_t>(i)], r));
    entries.push_back(json{{"deleted_points", x},
                           {"member", io::to_matrix_string(e.matroid)},
                           {"member_size", e.matroid.size()},
                           {"dual", io::to_matrix_string(d)},
                           {"dual_rank", d.rank()},
                           {"not_circuit_difference", !is_circuit_difference(d)},
                           {"excluded_series_minor", is_excluded_series_minor(d)}});
  }
  return json{{"rank", r}, {"count", entries.size()}, {"entries", entries}};
}

inline json census(int n) {
  json rows = json::array();
  const auto levels = corpus::connected_binary_levels(n);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& level = levels[k];
    const auto flags = parallel_map<std::array<char, 4>>(level.size(), [&](std::size_t i) {
      const auto& m = level[i];
      return std::array<char, 4>{static_cast<char>(is_circuit_difference(m)), static_cast<char>(skew_circuit_pair(m).has_value()),
                                 static_cast<char>(is_regular(m)), static_cast<char>(is_excluded_series_minor(m))};
    });
    std::array<std::size_t, 4> count{};
    for (const auto& f : flags)
      for (int j = 0; j < 4; ++j) count[static_cast<std::size_t>(j)] += static_cast<std::size_t>(f[static_cast<std::size_t>(j)]);
    rows.push_back(json{{"elements", k},
                        {"connected", level.size()},
                        {"circuit_difference", count[0]},
                        {"skew_pair", count[1]},
                        {"regular", count[2]},
                        {"excluded_series_minor", count[3]},
                        {"dedupe", k <= 9 ? "exact" : "signature"}});
  }
  return json{{"max_elements", n}, {"levels", rows}};
}

namespace detail {

inline std::string set_text(const json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].get<std::string>();
  return out + "}";
}

inline std::string value_text(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace detail

inline std::string analyze_text(const json& r) {
  std::ostringstream os;
  os << "elements: " << r["size"] << "\nrank: " << r["rank"] << "\ncorank: " << r["corank"] << "\n";
  os << "connected: " << detail::value_text(r["connected"]) << "\ncomponents:";
  for (const auto& c : r["components"]) os << " " << detail::set_text(c);
  os << "\nsimple: " << detail::value_text(r["simple"]) << "\ncosimple: " << detail::value_text(r["cosimple"]) << "\n";
  if (!r["circuits"].is_null()) {
    os << "circuits: " << r["circuits"]["count"] << "\n";
    for (const auto& c : r["circuits"]["listed"]) os << "  " << detail::set_text(c) << "\n";
    if (r["circuits"]["truncated"] == true) os << "  ...\n";
  }
  for (const auto& [k, v] : r["predicates"].items()) {
    std::string name = k;
    std::replace(name.begin(), name.end(), '_', '-');
    os << name << ": " << detail::value_text(v) << "\n";
  }
  const auto& w = r["witnesses"];
  if (w.contains("circuit_difference_violations"))
    for (const auto& p : w["circuit_difference_violations"])
      os << "  violation: " << detail::set_text(p["c1"]) << " + " << detail::set_text(p["c2"]) << " = " << detail::set_text(p["difference"])
         << "\n";
  if (w.value("circuit_difference_violations_truncated", false)) os << "  ...\n";
  if (w.contains("skew_pair") && !w["skew_pair"].is_null())
    os << "  skew pair: " << detail::set_text(w["skew_pair"]["c1"]) << " " << detail::set_text(w["skew_pair"]["c2"]) << "\n";
  if (w.contains("n5_series_minor") && !w["n5_series_minor"].is_null())
    os << "  N5 series minor: delete " << detail::set_text(w["n5_series_minor"]["deleted"]) << " contract "
       << detail::set_text(w["n5_series_minor"]["contracted"]) << "\n";
  if (!r["recognizer"].is_null())
    for (const auto& c : r["recognizer"]["components"]) {
      os << "recognizer: " << detail::set_text(c["elements"]) << " ";
      if (c.contains("base")) {
        os << "series extension of " << c["base"].get<std::string>() << "; series classes";
        for (const auto& s : c["series_classes"]) os << " " << detail::set_text(s["members"]);
      } else {
        os << "not circuit-difference";
        if (c.contains("witness")) os << "; witness " << detail::set_text(c["witness"]["c1"]) << " " << detail::set_text(c["witness"]["c2"]);
      }
      os << "\n";
    }
  for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << "\n";
  return os.str();
}

inline std::string audit_text(const json& a) {
  std::ostringstream os;
  os << (a["passed"] == true ? "PASS " : "FAIL ") << a["lemma"].get<std::string>() << "  " << a["title"].get<std::string>() << "\n"
     << "     corpus: " << a["corpus"].get<std::string>() << "; checked " << a["checked"] << "; failures " << a["failures"].size()
     << "; " << std::fixed << std::setprecision(2) << a["seconds"].get<double>() << " s\n";
  for (const auto& f : a["failures"]) {
    os << "     - " << f["description"].get<std::string>() << "\n";
    std::istringstream w(f["witness"].get<std::string>());
    for (std::string line; std::getline(w, line);) os << "       " << line << "\n";
  }
  return os.str();
}

}  // namespace cdmat::report
