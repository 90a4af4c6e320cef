// Acceptance criteria 1-12: one PASS/FAIL line each. Exit status is non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cdmat/audit.hpp"

using namespace cdmat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome from_audits(const std::vector<std::string>& ids) {
  Outcome out;
  std::size_t checked = 0, failures = 0;
  for (const auto& id : ids) {
    audit::Options o;
    o.lemma = id;
    for (const auto& r : audit::run(o)) {
      checked += r.checked;
      failures += r.failures.size();
      if (!r.passed()) {
        out.ok = false;
        out.detail += " [" + id + ": " + r.failures.front().description + "]";
      }
    }
  }
  out.detail = std::to_string(checked) + " checked, " + std::to_string(failures) + " failures" + out.detail;
  return out;
}

Outcome s8_facts() {
  auto out = from_audits({"s8"});
  const auto s8 = zoo::s8();
  const auto c1 = s8.set(0b11001001), c2 = s8.set(0b10110110);
  const bool ok = s8.circuits().contains(c1) && s8.circuits().contains(c2) && (c1 ^ c2) == s8.set(0b01111111) &&
                  s8.circuits().contains(s8.set(0b00100011)) && s8.circuits().contains(s8.set(0b01011100)) &&
                  !is_circuit_difference(s8) && !skew_circuit_pair(s8);
  out.ok = out.ok && ok;
  return out;
}

Outcome hyperplane_catalog() {
  auto out = from_audits({"4.4"});
  const auto c3 = hyperplane_complementary_catalog(3), c4 = hyperplane_complementary_catalog(4);
  out.detail += "; catalog sizes " + std::to_string(c3.size()) + ", " + std::to_string(c4.size());
  out.ok = out.ok && c3.size() == 1 && c4.size() == 2;
  return out;
}

Outcome excluded_minors() {
  auto out = from_audits({"4.6"});
  const auto f3 = enumerate_m_family(3), f4 = enumerate_m_family(4);
  const bool shape = f3.size() == 1 && is_isomorphic(dual(f3[0].matroid), zoo::n5()) && f4.size() == 2 &&
                     is_isomorphic(f4[0].matroid, zoo::tipped_spike(4)) && is_isomorphic(f4[1].matroid, zoo::s8());
  out.ok = out.ok && shape;
  return out;
}

Outcome whole_suite(double& first_run_seconds) {
  audit::Options o;
  const auto t = std::chrono::steady_clock::now();
  const auto a = audit::run(o);
  first_run_seconds = seconds_since(t);
  const auto b = audit::run(o);
  Outcome out;
  std::size_t failures = 0;
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    failures += a[i].failures.size();
    same = a[i].lemma == b[i].lemma && a[i].checked == b[i].checked && a[i].corpus == b[i].corpus &&
           a[i].failures.size() == b[i].failures.size();
    for (std::size_t j = 0; same && j < a[i].failures.size(); ++j)
      same = a[i].failures[j].description == b[i].failures[j].description && a[i].failures[j].witness == b[i].failures[j].witness;
  }
  out.ok = same && failures == 0;
  out.detail = std::to_string(a.size()) + " audits, " + std::to_string(failures) + " failures, repeat run " +
               (same ? "identical" : "DIFFERENT");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds; 0 = no limit
    std::function<Outcome()> run;
  };
  double suite_seconds = 0;
  const std::vector<Criterion> criteria{
      {1, "S8 facts", 1, s8_facts},
      {2, "regular: CD <=> no skew <=> recognizer", 120, [] { return from_audits({"1.1"}); }},
      {3, "skew pair rules out CD", 180, [] { return from_audits({"1.2"}); }},
      {4, "series and complementarity closure", 0, [] { return from_audits({"2.2", "2.3", "2.4", "2.5"}); }},
      {5, "cosimple complementary = U1,4, R10", 0, [] { return from_audits({"2.8"}); }},
      {6, "series extension rank arithmetic", 0, [] { return from_audits({"2.9"}); }},
      {7, "CD closed under series minors", 0, [] { return from_audits({"4.1"}); }},
      {8, "N5 series minor <=> skew pair", 300, [] { return from_audits({"4.2"}); }},
      {9, "hyperplane catalog at r = 3, 4", 0, hyperplane_catalog},
      {10, "excluded series minors, ranks 3-4", 0, excluded_minors},
      {11, "R10 self-certification", 0, [] { return from_audits({"r10"}); }},
      {12, "Whole audit suite, deterministic", 600, [&] { return whole_suite(suite_seconds); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = seconds_since(t);
    if (c.id == 12) s = suite_seconds;
    const bool in_time = c.limit == 0 || s < c.limit;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %2d %-40s %8.2f s  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s, o.detail.c_str(),
                in_time ? "" : " (over time limit)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
