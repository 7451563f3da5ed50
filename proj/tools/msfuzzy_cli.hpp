#pragma once

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "msfuzzy/msfuzzy.hpp"

namespace msfuzzy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitWitness = 10;
inline constexpr int kExitInternal = 70;

struct Options {
  std::string format;
  std::string out_path;
  bool timing = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

inline ElementSet resolve_w(const LoadedAlgebra& loaded, const std::string& w) {
  if (!w.empty()) return loaded.lattice->subset(split_list(w));
  if (auto s = loaded.find_subset("W")) return *s;
  throw Error(ErrorCode::EmptyW, "no --w given and the document has no [subset W]");
}

inline const MSAlgebra& require_ms(const LoadedAlgebra& loaded) {
  if (!loaded.ms) throw Error(ErrorCode::IncompleteTable, "document has no [neg] section");
  return *loaded.ms;
}

inline std::string pair_str(const FiniteLattice& lat, ElementPair p) {
  return "(" + lat.name(p.first) + ", " + lat.name(p.second) + ")";
}

inline ReportDocument validate_document(const std::string& text) {
  ReportDocument doc;
  doc.command = "validate";
  LoadedAlgebra loaded;
  try {
    loaded = load_algebra(parse_algebra(text));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInvariant) throw;
    doc.entries.push_back({"document", "fail", e.what(), {}, std::nullopt, std::nullopt, std::nullopt});
    return doc;
  }
  const auto& lat = *loaded.lattice;
  doc.entries.push_back({"lattice", "pass", std::to_string(lat.size()) + " elements, bounded distributive", {},
                         std::nullopt, std::nullopt, std::nullopt});
  if (loaded.ms) add_checks(doc, loaded.ms->axiom_report());
  for (const auto& [name, chi] : loaded.fuzzy) {
    auto cls = classify(lat, chi);
    ReportEntry e{"fuzzy-filter:" + name, cls.is_filter ? "pass" : "fail", "", {}, std::nullopt, std::nullopt,
                  std::nullopt};
    if (cls.is_filter) {
      e.detail = cls.is_proper ? "proper fuzzy filter" : "constant fuzzy filter";
    } else if (cls.filter_witness) {
      auto [a, b] = *cls.filter_witness;
      Element m = lat.meet(a, b);
      e.detail = "χ(" + lat.name(a) + "∧" + lat.name(b) + ")=χ(" + lat.name(m) + ")=" + chi(m).str() + " ≠ χ(" +
                 lat.name(a) + ")∧χ(" + lat.name(b) + ")=" + min(chi(a), chi(b)).str();
      e.witness = {lat.name(a), lat.name(b)};
    } else {
      e.detail = "χ(" + lat.name(lat.top()) + ")=" + chi(lat.top()).str() + " ≠ 1";
      e.witness = {lat.name(lat.top())};
    }
    doc.entries.push_back(std::move(e));
  }
  return doc;
}

inline bool any_failed(const ReportDocument& doc) {
  for (const auto& e : doc.entries)
    if (e.verdict == "fail") return true;
  return false;
}

inline std::vector<Grade> grades_or_default(const std::string& text) {
  if (text.empty()) return {Grade::zero(), Grade::half(), Grade::one()};
  return parse_grade_list(text);
}

/// Runs the command line and returns the process exit code. Reports go to
/// `out` (or --out); diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"MS-algebra fuzzy filter toolkit", "msfuzzy"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("MSFUZZY_FORMAT")) opt.format = env;
  if (opt.format.empty()) opt.format = "text";
  app.add_option("--format", opt.format, "Report format (default from MSFUZZY_FORMAT)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_path, "Write the report to this file");
  app.add_flag("--timing", opt.timing, "Include elapsed time in the report");

  std::string file, chi_name = "chi", w_text, props_text, grades_text, prop;
  std::size_t max_n = 4, min_n = 1, threads = 1;
  std::uint64_t seed = 0, iters = 0;
  bool with_omega = false, allow_invalid = false;

  auto* validate = app.add_subcommand("validate", "Check lattice, ° table and fuzzy sections");
  validate->add_option("file", file)->required();

  auto* extend_cmd = app.add_subcommand("extend", "Print Υ (and Ω) for a fuzzy set and W");
  extend_cmd->add_option("file", file)->required();
  extend_cmd->add_option("--chi", chi_name, "Fuzzy section name");
  extend_cmd->add_option("--w", w_text, "Comma-separated W");
  extend_cmd->add_flag("--omega", with_omega, "Also print Ω");

  auto* fixed = app.add_subcommand("fixed", "Fixedness verdict and canonical fixed sets");
  fixed->add_option("file", file)->required();
  fixed->add_option("--chi", chi_name, "Fuzzy section name");
  fixed->add_option("--w", w_text, "Comma-separated W");

  auto* verify = app.add_subcommand("verify", "Run registered properties on one instance");
  verify->add_option("file", file)->required();
  verify->add_option("--props", props_text, "Comma-separated property ids (default all)");
  verify->add_option("--chi", chi_name, "Fuzzy section name");
  verify->add_option("--w", w_text, "Comma-separated W");
  verify->add_option("--grades", grades_text, "Grade universe for bounded checks");
  verify->add_flag("--allow-invalid", allow_invalid, "Do not gate on algebra validity");

  auto* sweep_cmd = app.add_subcommand("sweep", "Check properties over all small algebras");
  sweep_cmd->add_option("--max-n", max_n, "Largest lattice size")->check(CLI::Range(1, 8));
  sweep_cmd->add_option("--min-n", min_n, "Smallest lattice size")->check(CLI::Range(1, 8));
  sweep_cmd->add_option("--grades", grades_text, "Grade universe, e.g. 0,1/2,1");
  sweep_cmd->add_option("--props", props_text, "Comma-separated property ids (default all)");
  sweep_cmd->add_option("--seed", seed, "Randomized mode seed");
  sweep_cmd->add_option("--iters", iters, "Randomized mode iterations");
  sweep_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_flag("--allow-invalid", allow_invalid, "Do not gate on filter hypotheses");

  auto* search = app.add_subcommand("search", "Find the first counterexample to one property");
  search->add_option("--prop", prop, "Property id")->required();
  search->add_option("--max-n", max_n, "Largest lattice size")->check(CLI::Range(1, 8));
  search->add_option("--min-n", min_n, "Smallest lattice size")->check(CLI::Range(1, 8));
  search->add_option("--grades", grades_text, "Grade universe");
  search->add_option("--seed", seed, "Randomized mode seed");
  search->add_option("--iters", iters, "Randomized mode iterations");
  search->add_flag("--allow-invalid", allow_invalid, "Do not gate on filter hypotheses");

  auto* list = app.add_subcommand("props", "List registered properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int code = kExitOk;
  ReportDocument doc;
  try {
    registry_self_check();
    if (validate->parsed()) {
      doc = validate_document(read_file(file));
      doc.meta.emplace_back("file", file);
      code = any_failed(doc) ? kExitFailure : kExitOk;
    } else if (extend_cmd->parsed()) {
      auto loaded = load_algebra(parse_algebra(read_file(file)));
      const auto& ms = require_ms(loaded);
      ElementSet w = resolve_w(loaded, w_text);
      auto result = extend(ms, loaded.fuzzy_set(chi_name), w);
      doc.command = "extend";
      doc.meta = {{"chi", chi_name}, {"W", ms.lattice().set_str(w)}, {"base_grade", result.base_grade.str()}};
      if (!ms.valid()) doc.meta.emplace_back("warning", "° table violates the MS axioms");
      doc.tables.push_back(grade_table("upsilon", result.upsilon));
      if (with_omega) doc.tables.push_back(grade_table("omega", result.omega));
    } else if (fixed->parsed()) {
      auto loaded = load_algebra(parse_algebra(read_file(file)));
      const auto& ms = require_ms(loaded);
      const auto& chi = loaded.fuzzy_set(chi_name);
      ElementSet w = resolve_w(loaded, w_text);
      doc.command = "fixed";
      doc.meta = {{"chi", chi_name}, {"W", ms.lattice().set_str(w)}};
      bool is_fixed = is_fixed_relative(ms, chi, w);
      doc.entries.push_back({"fixed", is_fixed ? "pass" : "fail",
                             "max χ(w°°)=" + base_grade(ms, chi, w).str() + ", min χ=" + chi.image().front().str(),
                             {}, std::nullopt, std::nullopt, std::nullopt});
      auto canon = fixed_witness_sets(ms, chi);
      for (const auto& set : canon.sets) {
        bool ok = is_fixed_relative(ms, chi, set.members);
        doc.entries.push_back({"canonical:" + set.name, ok ? "pass" : "fail",
                               set.note + ", members " + ms.lattice().set_str(set.members), {}, std::nullopt,
                               std::nullopt, std::nullopt});
      }
      for (const auto& name : canon.skipped)
        doc.entries.push_back({"canonical:" + name, "skipped", "empty set", {}, std::nullopt, std::nullopt,
                               std::nullopt});
    } else if (verify->parsed()) {
      auto loaded = load_algebra(parse_algebra(read_file(file)));
      std::optional<ElementSet> w;
      if (!w_text.empty()) w = loaded.lattice->subset(split_list(w_text));
      auto inst = instance_from(loaded, chi_name, w);
      PropertyContext ctx;
      ctx.grade_universe = grades_or_default(grades_text);
      ctx.require_valid = !allow_invalid;
      doc.command = "verify";
      doc.meta = {{"file", file}, {"chi", chi_name}, {"W", inst.ms.lattice().set_str(inst.w)}};
      auto ids = props_text.empty() ? all_property_ids() : split_list(props_text);
      for (const auto& id : ids) {
        const auto& info = find_property(id);
        auto outcome = run_property(info, inst.view(), ctx);
        auto entry = entry_from(id, outcome);
        entry.kind = std::string(to_string(info.kind));
        doc.entries.push_back(std::move(entry));
        if (outcome.verdict == Verdict::Fail && info.kind == PropertyKind::Theorem) code = kExitFailure;
      }
    } else if (sweep_cmd->parsed()) {
      SearchConfig cfg;
      cfg.min_elements = min_n;
      cfg.max_elements = max_n;
      cfg.grade_universe = grades_or_default(grades_text);
      cfg.require_valid = !allow_invalid;
      cfg.threads = threads;
      if (sweep_cmd->count("--seed") || sweep_cmd->count("--iters")) {
        cfg.mode = SearchConfig::Mode::Randomized;
        cfg.seed = seed;
        if (iters) cfg.iterations = iters;
      }
      auto report = sweep(split_list(props_text), cfg);
      doc = sweep_document(report);
      code = report.theorem_failures() ? kExitFailure : kExitOk;
    } else if (search->parsed()) {
      SearchConfig cfg;
      cfg.min_elements = min_n;
      cfg.max_elements = max_n;
      cfg.grade_universe = grades_or_default(grades_text);
      cfg.require_valid = !allow_invalid;
      if (search->count("--seed") || search->count("--iters")) {
        cfg.mode = SearchConfig::Mode::Randomized;
        cfg.seed = seed;
        if (iters) cfg.iterations = iters;
      }
      doc.command = "search";
      doc.meta = {{"property", prop}, {"max_elements", std::to_string(max_n)},
                  {"grades", join_grades(cfg.grade_universe)}};
      auto found = search_counterexample(prop, cfg);
      if (found) {
        doc.entries.push_back({prop, "fail", found->detail, {}, std::nullopt,
                               std::string(to_string(find_property(prop).kind)), witness_text(*found)});
        code = kExitWitness;
      } else {
        doc.entries.push_back({prop, "pass", "no counterexample within bounds", {}, std::nullopt,
                               std::string(to_string(find_property(prop).kind)), std::nullopt});
      }
    } else if (list->parsed()) {
      doc.command = "props";
      for (const auto& p : property_registry())
        doc.entries.push_back({std::string(p.id), "registered", std::string(p.claim), {}, std::nullopt,
                               std::string(to_string(p.kind)), std::nullopt});
    }
  } catch (const Error& e) {
    err << "msfuzzy: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInvariant ? kExitInternal : kExitFailure;
  }

  if (opt.timing)
    doc.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  std::string rendered = opt.format == "json" ? render_json(doc) : render_text(doc);
  if (opt.out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file_out(opt.out_path, std::ios::binary);
    if (!file_out) {
      err << "msfuzzy: cannot write '" << opt.out_path << "'\n";
      return kExitFailure;
    }
    file_out << rendered;
  }
  return code;
}

}  // namespace msfuzzy::cli
