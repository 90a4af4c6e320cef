#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdmat/cdmat.hpp"
#include "cdmat/report.hpp"

namespace {

using cdmat::report::json;

enum Exit { kOk = 0, kAuditFailed = 1, kInputError = 2 };

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string circuits_text(const json& j) {
  std::string out = "rank " + j["rank"].dump() + ", corank " + j["corank"].dump() + ", " + j["count"].dump() + " circuits\n";
  for (const auto& c : j["circuits"]) out += cdmat::report::detail::set_text(c) + "\n";
  return out;
}

std::string recognize_text(const json& j) {
  if (j["regular"] == false) return "not regular: the structural recognizer does not apply\n";
  std::string out = std::string("circuit-difference: ") + (j["circuit_difference"] == true ? "true" : "false") + "\n";
  if (j["outside_structural_scope"] == true) out += "note: empty matroid, circuit-difference vacuously\n";
  for (const auto& c : j["components"]) {
    out += "component " + cdmat::report::detail::set_text(c["elements"]) + ": ";
    if (c.contains("base")) {
      out += "series extension of " + c["base"].get<std::string>() + "\n";
      for (const auto& s : c["series_classes"])
        out += "  class " + cdmat::report::detail::set_text(s["members"]) + " kept " + s["survivor"].get<std::string>() + "\n";
    } else {
      out += "not circuit-difference";
      if (c.contains("witness"))
        out += "; " + cdmat::report::detail::set_text(c["witness"]["c1"]) + " + " + cdmat::report::detail::set_text(c["witness"]["c2"]) +
               " = " + cdmat::report::detail::set_text(c["witness"]["difference"]) + " is not a circuit";
      out += "\n";
    }
  }
  return out;
}

std::string exminors_text(const json& j) {
  std::string out = "rank " + j["rank"].dump() + ": " + j["count"].dump() + " member(s)\n";
  int k = 0;
  for (const auto& e : j["entries"]) {
    out += "member " + std::to_string(++k) + ": [AG+e] minus " + std::to_string(e["deleted_points"].size()) + " point(s)";
    for (const auto& p : e["deleted_points"]) out += " " + p.get<std::string>();
    out += "\n" + e["member"].get<std::string>();
    out += "dual (rank " + e["dual_rank"].dump() + "):\n" + e["dual"].get<std::string>();
    const bool ok = e["not_circuit_difference"] == true && e["excluded_series_minor"] == true;
    out += std::string("verified excluded series minor: ") + (ok ? "yes" : "NO") + "\n\n";
  }
  return out;
}

std::string census_text(const json& j) {
  std::string out = "elements  connected  circuit-difference  skew-pair  regular  excluded  dedupe\n";
  for (const auto& r : j["levels"]) {
    char line[128];
    std::snprintf(line, sizeof line, "%8d  %9zu  %18zu  %9zu  %7zu  %8zu  %s\n", r["elements"].get<int>(), r["connected"].get<std::size_t>(),
                  r["circuit_difference"].get<std::size_t>(), r["skew_pair"].get<std::size_t>(), r["regular"].get<std::size_t>(),
                  r["excluded_series_minor"].get<std::size_t>(), r["dedupe"].get<std::string>().c_str());
    out += line;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuit-difference binary matroids: analysis, recognition and audits"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Rank, connectivity, circuits and every predicate with witnesses");
  analyze->add_option("input", input, "Matrix file, graph:@file, or a name such as s8, K:4, r10")->required();
  std::size_t circuit_cap = 64, violation_cap = 16;
  analyze->add_option("--max-circuits", circuit_cap, "Circuits printed");
  analyze->add_option("--max-violations", violation_cap, "Circuit-difference violations listed");
  auto* circuits = app.add_subcommand("circuits", "List all circuits");
  circuits->add_option("input", input)->required();
  auto* recognize = app.add_subcommand("recognize", "Structural recognition of regular circuit-difference matroids");
  recognize->add_option("input", input)->required();

  cdmat::audit::Options audit_opts;
  auto* audit = app.add_subcommand("audit", "Run the audits over generated corpora");
  audit->add_option("--max-elements", audit_opts.max_elements, "Size bound for the binary corpus (at most 14)");
  audit->add_option("--seed", audit_opts.seed, "Seed for random series extensions");
  audit->add_option("--lemma", audit_opts.lemma, "Run only this audit")->check(CLI::IsMember(cdmat::audit::audit_ids()));

  int rank = 3;
  auto* exminors = app.add_subcommand("exminors", "List the excluded series minors of a given dual rank");
  exminors->add_option("--rank", rank, "3, 4 or 5")->required();

  int elements = 8;
  auto* census = app.add_subcommand("census", "Counts of connected binary matroids by size");
  census->add_option("--elements", elements, "Largest size (at most 14)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      const auto m = cdmat::io::parse_input(input);
      const auto r = cdmat::report::analyze(m, {circuit_cap, violation_cap});
      emit(r, as_json, cdmat::report::analyze_text(r));
    } else if (*circuits) {
      const auto r = cdmat::report::circuits(cdmat::io::parse_input(input));
      emit(r, as_json, circuits_text(r));
    } else if (*recognize) {
      const auto r = cdmat::report::recognize(cdmat::io::parse_input(input));
      emit(r, as_json, recognize_text(r));
    } else if (*audit) {
      const auto results = cdmat::audit::run(audit_opts);
      json all = json::array();
      std::string text;
      bool ok = true;
      double total = 0;
      for (const auto& a : results) {
        all.push_back(cdmat::report::audit_result(a));
        text += cdmat::report::audit_text(all.back());
        ok = ok && a.passed();
        total += a.seconds;
      }
      char summary[96];
      std::snprintf(summary, sizeof summary, "%zu audits, %s, %.2f s\n", results.size(), ok ? "all passed" : "FAILURES", total);
      emit(json{{"max_elements", audit_opts.max_elements}, {"seed", audit_opts.seed}, {"passed", ok}, {"audits", all}}, as_json,
           text + summary);
      return ok ? kOk : kAuditFailed;
    } else if (*exminors) {
      if (rank < 3) throw cdmat::ParameterOutOfRange("exminors: rank must be 3, 4 or 5");
      const auto r = cdmat::report::exminors(rank);
      emit(r, as_json, exminors_text(r));
    } else if (*census) {
      if (elements < 1) throw cdmat::ParameterOutOfRange("census: elements must be positive");
      const auto r = cdmat::report::census(elements);
      emit(r, as_json, census_text(r));
    }
  } catch (const cdmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
