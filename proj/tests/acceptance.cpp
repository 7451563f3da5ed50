// Acceptance checks. Prints one PASS/FAIL line per criterion; with numeric
// arguments only those criteria run. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msfuzzy_cli.hpp"

using namespace msfuzzy;

namespace {

struct Result {
  bool passed;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Result()> run;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "msfuzzy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

std::string fixture(const std::string& name) { return std::string(MSFUZZY_SOURCE_DIR) + "/fixtures/" + name + ".ms"; }

const nlohmann::json* find_entry(const nlohmann::json& j, const std::string& id) {
  for (const auto& e : j["entries"])
    if (e["id"] == id) return &e;
  return nullptr;
}

std::string table_cell(const nlohmann::json& j, const std::string& table, const std::string& element) {
  for (const auto& t : j["tables"])
    if (t["name"] == table)
      for (const auto& row : t["rows"])
        if (row[0] == element) return row[1];
  return "?";
}

// Claims the theorem sweep must find free of failures.
const std::vector<std::string> kSweepClaims = {
    "prop-2.1",    "thm-ext-filter", "thm-3.1-filter", "lemma-3.2.1",       "lemma-3.2.2", "lemma-3.2.3",
    "lemma-3.2.4", "lemma-3.2.5",    "lemma-3.2.6",    "lemma-3.2.7",       "prop-3.3.1",  "prop-3.3.2",
    "prop-3.6",    "prop-3.7",       "thm-3.8",        "cor-3.9",           "cor-3.10",    "upsilon-sub-omega",
    "thm-4.3",     "remark-4.4",     "thm-4.7",        "thm-4.8",           "thm-5.1",     "prop-5.2",
    "prop-5.3",    "lemma-5.4-meet", "lemma-5.4-join",
};

std::vector<std::string> sweep_args() {
  std::string props;
  for (const auto& id : kSweepClaims) props += (props.empty() ? "" : ",") + id;
  return {"--format", "json", "sweep", "--max-n", "4", "--grades", "0,1/2,1", "--props", props};
}

Result criterion_1() {
  auto r = cli_run({"--format", "json", "extend", fixture("example4_printed"), "--chi", "chi", "--w", "y", "--omega"});
  if (r.code != 0) return {false, "extend exited " + std::to_string(r.code) + ": " + r.out};
  auto j = nlohmann::json::parse(r.out);
  auto ups = table_cell(j, "upsilon", "x");
  auto om = table_cell(j, "omega", "x");
  return {ups == "3/5" && om == "7/10", "Υ(x)=" + ups + ", Ω(x)=" + om};
}

Result criterion_2() {
  auto loaded = load_algebra(parse_algebra(fixtures::diamond));
  const auto& chi = loaded.fuzzy_set("chi");
  auto w = loaded.lattice->subset({"0", "b"});
  bool fixed = is_fixed_relative(*loaded.ms, chi, w);
  auto ups = upsilon(*loaded.ms, chi, w);
  return {fixed && ups == chi, std::string("fixed=") + (fixed ? "true" : "false") + ", Υ=" + ups.str() + ", χ=" +
                                   chi.str()};
}

Result criterion_3() {
  auto r = cli_run({"--format", "json", "validate", fixture("example4_printed")});
  auto j = nlohmann::json::parse(r.out);
  const auto* dbl = find_entry(j, "ms-double");
  const auto* flt = find_entry(j, "fuzzy-filter:chi");
  if (!dbl || !flt) return {false, "missing report entries"};
  bool ok = r.code != 0 && (*dbl)["verdict"] == "fail" && (*dbl)["witness"] == nlohmann::json({"z", "y"}) &&
            (*flt)["verdict"] == "fail" && (*flt)["witness"] == nlohmann::json({"u", "1"}) &&
            (*flt)["detail"] == "χ(u∧1)=χ(u)=4/5 ≠ χ(u)∧χ(1)=7/10";
  return {ok, (*dbl)["detail"].get<std::string>() + "; " + (*flt)["detail"].get<std::string>()};
}

Result criterion_4() {
  auto r = cli_run(sweep_args());
  auto j = nlohmann::json::parse(r.out);
  std::string failing;
  std::uint64_t instances = 0;
  for (const auto& e : j["entries"]) {
    instances += e["counts"]["checked"].get<std::uint64_t>();
    if (e["counts"]["failed"].get<std::uint64_t>() == 0) continue;
    failing += (failing.empty() ? "" : "; ") + e["id"].get<std::string>() + " failed " +
               std::to_string(e["counts"]["failed"].get<std::uint64_t>()) + "x, first: " +
               e["detail"].get<std::string>();
  }
  std::string scope = j["meta"]["algebras"].get<std::string>() + " algebras, " + std::to_string(instances) +
                      " property instances";
  if (failing.empty()) return {r.code == 0, scope + ", zero failures"};
  return {false, scope + "; " + failing};
}

Result criterion_5() {
  auto r = cli_run({"--format", "json", "search", "--prop", "thm-3.1-prime", "--max-n", "4", "--grades", "0,1"});
  if (r.code != 10) return {false, "search exited " + std::to_string(r.code)};
  auto j = nlohmann::json::parse(r.out);
  auto text = j["entries"][0]["document"].get<std::string>();
  auto loaded = load_algebra(parse_algebra(text));
  auto inst = instance_from(loaded);
  const auto& lat = *loaded.lattice;
  bool shape = lat.names() == std::vector<std::string>{"0", "a", "b", "1"} &&
               !lat.leq(lat.index_of("a"), lat.index_of("b")) && !lat.leq(lat.index_of("b"), lat.index_of("a"));
  bool chi_ok = inst.chi.str() == "0:0 a:0 b:0 1:1";
  bool pair_ok = inst.phi && inst.psi && inst.phi->str() == "0:0 a:1 b:0 1:1" && inst.psi->str() == "0:0 a:0 b:1 1:1";
  PropertyContext ctx;
  ctx.grade_universe = {Grade::zero(), Grade::one()};
  bool replays = run_property("thm-3.1-prime", inst, ctx).verdict == Verdict::Fail;
  return {shape && chi_ok && pair_ok && replays,
          "diamond=" + std::string(shape ? "yes" : "no") + ", χ=" + inst.chi.str() + ", Φ=" +
              (inst.phi ? inst.phi->str() : "-") + ", Ψ=" + (inst.psi ? inst.psi->str() : "-") +
              ", replay=" + (replays ? "fail" : "pass")};
}

Result criterion_6() {
  std::size_t lattices = 0, instances = 0, mismatches = 0;
  std::string first;
  for (const auto& lat : enumerate_lattices(1, 4)) {
    ++lattices;
    std::set<std::uint64_t> crisp, fuzzy;
    for (const auto& f : enumerate_filters(lat)) crisp.insert(f.members.bits());
    auto fuzzy_filters = enumerate_fuzzy_filters(lat, {Grade::zero(), Grade::one()});
    for (const auto& mu : fuzzy_filters) {
      fuzzy.insert(level_cut(mu, Grade::one()).bits());
      if (mu != FuzzySet::characteristic(lat, level_cut(mu, Grade::one())))
        return {false, "two-valued filter is not a characteristic map: " + mu.str()};
    }
    if (crisp != fuzzy || fuzzy.size() != fuzzy_filters.size())
      return {false, "filter bijection fails on " + std::to_string(lat->size()) + "-element lattice"};
    for (auto& table : enumerate_ms_operations(*lat)) {
      MSAlgebra ms(lat, std::move(table));
      for (const auto& f : enumerate_filters(lat))
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << lat->size()); ++m, ++instances) {
          ElementSet w(m);
          auto crisp_ext = extended_filter_crisp(ms, f, w).members;
          auto cut = level_cut(upsilon(ms, FuzzySet::characteristic(lat, f.members), w), Grade::one());
          if (crisp_ext == cut) continue;
          if (!mismatches++)
            first = std::to_string(lat->size()) + "-element lattice " + lat->set_str(lat->all()) + ", F=" +
                    lat->set_str(f.members) + ", W=" + lat->set_str(w) + ": E_F(W)=" + lat->set_str(crisp_ext) +
                    " but 1-cut of Υ=" + lat->set_str(cut);
        }
    }
  }
  std::string summary = "filter bijection holds on " + std::to_string(lattices) + " lattices; E_F(W) = 1-cut of Υ on " +
                        std::to_string(instances - mismatches) + "/" + std::to_string(instances) + " (F, W) instances";
  if (mismatches) return {false, summary + "; first mismatch: " + first};
  return {true, summary};
}

Result criterion_7() {
  auto a = cli_run(sweep_args());
  auto b = cli_run(sweep_args());
  bool same = a.out == b.out && a.code == b.code;
  return {same, std::to_string(a.out.size()) + " bytes, " + (same ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "printed seven-element example: Υ(x)=3/5, Ω(x)=7/10", 1.0, criterion_1},
      {2, "diamond fixed relative to {0,b}", 1.0, criterion_2},
      {3, "validate flags z ≰ z°° and χ(u∧1) mismatch", 1.0, criterion_3},
      {4, "theorem sweep, n ≤ 4, grades {0,1/2,1}", 60.0, criterion_4},
      {5, "thm-3.1-prime refuted on the diamond", 10.0, criterion_5},
      {6, "two-valued fuzzy filters and E_F(W) agree with crisp", 30.0, criterion_6},
      {7, "sweep JSON is byte-identical across runs", 120.0, criterion_7},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.number)) continue;
    auto started = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    bool in_time = seconds < c.limit_seconds;
    bool ok = r.passed && in_time;
    failures += ok ? 0 : 1;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds << "s";
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << time.str()
              << (in_time ? "" : " over limit") << "] " << r.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
