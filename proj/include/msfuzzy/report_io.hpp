#pragma once

#include "json.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msfuzzy/verifier.hpp"

namespace msfuzzy {

inline constexpr std::string_view kReportSchema = "msfuzzy-report/1";

/// One line of a report: a check, a property verdict, or a sweep tally.
struct ReportEntry {
  std::string id;
  std::string verdict;
  std::string detail;
  std::vector<std::string> witness;
  /// Sweep counters; absent for single-instance checks.
  struct Counts {
    std::uint64_t checked = 0, passed = 0, failed = 0, unmet = 0;
  };
  std::optional<Counts> counts;
  std::optional<std::string> kind;
  /// Replayable algebra document for a counterexample.
  std::optional<std::string> document;
};

/// A grade table such as Υ or Ω over the carrier.
struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Shared tree behind both renderings, so JSON and text carry the same
/// verdicts and witnesses.
struct ReportDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<ReportEntry> entries;
  std::vector<ReportTable> tables;
  std::optional<double> elapsed_ms;
};

inline ReportEntry entry_from(const CheckResult& c) {
  return {c.id, c.passed ? "pass" : "fail", c.detail, c.witness, std::nullopt, std::nullopt, std::nullopt};
}

inline void add_checks(ReportDocument& doc, const VerificationReport& report) {
  for (const auto& c : report.checks) doc.entries.push_back(entry_from(c));
}

inline ReportEntry entry_from(const std::string& id, const Outcome& o) {
  ReportEntry e{id, std::string(to_string(o.verdict)), o.detail, {}, std::nullopt, std::nullopt, std::nullopt};
  if (o.witness) e.document = witness_text(*o.witness);
  return e;
}

inline ReportEntry entry_from(const PropertyTally& t) {
  std::string verdict = t.failed ? "fail" : (t.passed ? "pass" : (t.unmet ? "hypothesis-unmet" : "vacuous"));
  ReportEntry e{t.id, verdict, {}, {}, ReportEntry::Counts{t.checked, t.passed, t.failed, t.unmet},
                std::string(to_string(t.kind)), std::nullopt};
  if (t.first_witness) {
    e.detail = t.first_witness->detail;
    e.document = witness_text(*t.first_witness);
  }
  return e;
}

inline std::string join_grades(const std::vector<Grade>& gs) {
  std::string out;
  for (const auto& g : gs) out += (out.empty() ? "" : ",") + g.str();
  return out;
}

inline ReportDocument sweep_document(const SweepReport& r) {
  ReportDocument doc;
  doc.command = "sweep";
  const auto& c = r.config;
  doc.meta = {{"mode", c.mode == SearchConfig::Mode::Exhaustive ? "exhaustive" : "randomized"},
              {"min_elements", std::to_string(c.min_elements)},
              {"max_elements", std::to_string(c.max_elements)},
              {"grades", join_grades(c.grade_universe)},
              {"require_valid", c.require_valid ? "true" : "false"}};
  if (c.mode == SearchConfig::Mode::Randomized) {
    doc.meta.emplace_back("seed", std::to_string(c.seed));
    doc.meta.emplace_back("iterations", std::to_string(c.iterations));
  }
  doc.meta.emplace_back("lattices", std::to_string(r.lattices));
  doc.meta.emplace_back("algebras", std::to_string(r.algebras));
  doc.meta.emplace_back("theorem_failures", std::to_string(r.theorem_failures()));
  for (const auto& t : r.tallies) doc.entries.push_back(entry_from(t));
  return doc;
}

inline ReportTable grade_table(const std::string& name, const FuzzySet& mu) {
  ReportTable t{name, {"element", "grade"}, {}};
  for (Element e = 0; e < mu.grades().size(); ++e) t.rows.push_back({mu.carrier()->name(e), mu(e).str()});
  return t;
}

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = doc.command;
  auto& meta = j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.meta) meta[k] = v;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    if (e.kind) je["kind"] = *e.kind;
    je["verdict"] = e.verdict;
    je["detail"] = e.detail;
    je["witness"] = e.witness;
    if (e.counts) {
      je["counts"] = {{"checked", e.counts->checked},
                      {"passed", e.counts->passed},
                      {"failed", e.counts->failed},
                      {"unmet", e.counts->unmet}};
    }
    if (e.document) je["document"] = *e.document;
    entries.push_back(std::move(je));
  }
  auto& tables = j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : doc.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  if (doc.elapsed_ms) j["elapsed_ms"] = *doc.elapsed_ms;
  return j;
}

inline std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << doc.command << "\n";
  for (const auto& [k, v] : doc.meta) out << "  " << k << ": " << v << "\n";
  for (const auto& t : doc.tables) {
    out << t.name << "\n";
    for (const auto& row : t.rows) {
      out << " ";
      for (const auto& cell : row) out << " " << cell;
      out << "\n";
    }
  }
  for (const auto& e : doc.entries) {
    out << "[" << e.verdict << "] " << e.id;
    if (e.kind) out << " (" << *e.kind << ")";
    if (e.counts)
      out << " checked=" << e.counts->checked << " passed=" << e.counts->passed << " failed=" << e.counts->failed
          << " unmet=" << e.counts->unmet;
    out << "\n";
    if (!e.detail.empty()) out << "    " << e.detail << "\n";
    if (!e.witness.empty()) {
      out << "    witness:";
      for (const auto& w : e.witness) out << " " << w;
      out << "\n";
    }
    if (e.document) {
      std::istringstream lines(*e.document);
      for (std::string line; std::getline(lines, line);) out << "    | " << line << "\n";
    }
  }
  if (doc.elapsed_ms) out << "elapsed_ms: " << *doc.elapsed_ms << "\n";
  return out.str();
}

}  // namespace msfuzzy
