// Copyright 2026 The xmut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../unit/oracles.hpp"
#include "../unit/test_support.hpp"
#include "xmut/cli.hpp"
#include "xmut/coverage/lcov.hpp"
#include "xmut/coverage/report.hpp"
#include "xmut/error.hpp"
#include "xmut/format.hpp"
#include "xmut/mutant_gen.hpp"
#include "xmut/orchestrator.hpp"
#include "xmut/subject/discovery.hpp"

using namespace xmut;
namespace fs = std::filesystem;
using Verdicts = std::map<std::string, std::string>;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct RunOutput {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json results;
  std::map<std::string, std::string> report;  // relative path -> content
};

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[relative_generic(e.path(), dir)] = read_file(e.path());
  }
  return out;
}

int run_counter = 0;

RunOutput run_xmut(const fs::path& root, std::vector<std::string> extra = {}) {
  const fs::path out_dir = root.parent_path() / ("out-" + std::to_string(run_counter++));
  std::vector<std::string> args = {"run",           "--project",     root.string(),
                                   "--cache-dir",   XMUT_TEST_CACHE_DIR,
                                   "--results-out", (out_dir / "results.json").string(),
                                   "--report-out",  (out_dir / "report").string(),
                                   "--coverage-out", (out_dir / "adjusted.info").string()};
  args.insert(args.end(), extra.begin(), extra.end());
  std::ostringstream out, err;
  RunOutput r;
  r.code = cli::main_entry(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (r.code == cli::kExitOk || r.code == cli::kExitThreshold) {
    r.results = nlohmann::json::parse(read_file(out_dir / "results.json"));
    r.report = read_dir(out_dir / "report");
  }
  return r;
}

Verdicts verdicts_of(const nlohmann::json& results) {
  Verdicts v;
  for (const auto& c : results.at("classifications")) {
    v[c.at("method_id").get<std::string>()] = c.at("verdict").get<std::string>();
  }
  return v;
}

std::set<std::string> with_verdict(const Verdicts& v, const std::string& verdict) {
  std::set<std::string> out;
  for (const auto& [id, x] : v) {
    if (x == verdict) out.insert(id);
  }
  return out;
}

// Results with timing fields and timestamps blanked.
nlohmann::json without_timing(nlohmann::json j) {
  j.erase("timestamps");
  j["summary"].erase("wall_time_total_ms");
  for (auto& m : j["mutants"]) m.erase("wall_time_ms");
  return j;
}

std::string append_to(const fs::path& file, const std::string& text) {
  write_file(file, read_file(file) + text);
  return file.string();
}

// Shared state between criteria.
struct Context {
  TempDir tmp;
  fs::path gt_root;
  RunOutput first_run;
  bool have_first = false;
  std::vector<std::string> hashes_checked;
};

void check_pristine(const fs::path& root, const std::string& before, const std::string& label) {
  expect(subject::tree_hash(root) == before, "tree changed by " + label);
}

// 1 ------------------------------------------------------------------------
void ground_truth(Context& ctx) {
  ctx.gt_root = copy_fixture("ground_truth", ctx.tmp.path());
  const std::string before = subject::tree_hash(ctx.gt_root);
  const auto start = std::chrono::steady_clock::now();
  ctx.first_run = run_xmut(ctx.gt_root);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(ctx.first_run.code == cli::kExitOk, "run failed: " + ctx.first_run.err);
  ctx.have_first = true;
  check_pristine(ctx.gt_root, before, "the ground-truth run");

  const auto expected = nlohmann::json::parse(read_file(ctx.gt_root / "expected.json"));
  const Verdicts got = verdicts_of(ctx.first_run.results);
  std::map<std::string, std::string> tags;
  for (const auto& c : ctx.first_run.results.at("classifications")) {
    if (!c.at("reason_tag").is_null()) tags[c.at("method_id")] = c.at("reason_tag");
  }
  expect(got.size() == expected.at("methods").size(), "method count differs");
  for (const auto& [id, e] : expected.at("methods").items()) {
    auto it = got.find(id);
    expect(it != got.end(), "missing method " + id);
    expect(it->second == e.at("verdict").get<std::string>(),
           id + ": got " + it->second + ", expected " + e.at("verdict").get<std::string>());
    if (e.contains("tag")) expect(tags[id] == e.at("tag").get<std::string>(), id + ": tag " + tags[id]);
  }
  const auto& s = ctx.first_run.results.at("summary");
  const auto& em = expected.at("mutants");
  expect(s.at("killed") == em.at("killed") && s.at("survived") == em.at("survived") &&
             s.at("invalid") == em.at("invalid") &&
             s.at("killed").get<int>() + s.at("survived").get<int>() + s.at("invalid").get<int>() ==
                 em.at("total").get<int>(),
         "mutant counts differ");
  expect(render_percent(s.at("killed"), s.at("total_valid")) == expected.at("score").get<std::string>(),
         "score differs");
  // Taxonomy coverage of the fixture itself.
  int no_assert = 0, side_effect = 0;
  for (const auto& [id, e] : expected.at("methods").items()) {
    if (e.value("tag", "") == "no-assertion-suspect") ++no_assert;
    if (id.find("logger") != std::string::npos && e.at("verdict") == "pseudo_tested") ++side_effect;
  }
  expect(no_assert >= 2 && side_effect >= 2, "fixture lacks the required categories");
  expect(with_verdict(got, "tested").size() >= 2 && with_verdict(got, "partially_tested").size() >= 1 &&
             with_verdict(got, "uncovered").size() >= 1,
         "fixture lacks tested/partial/uncovered methods");
  expect(secs < 120.0, "run took " + std::to_string(secs) + " s");
}

// 2-4 ----------------------------------------------------------------------
void score_arithmetic(Context&) {
  for (auto [k, t, text] : {std::tuple{2297, 2706, "85%"}, {5813, 7989, "73%"}}) {
    const auto score = classifier::mutation_score(k, t - k);
    expect(score.has_value(), "score undefined");
    expect(render_percent(k, t) == text, std::to_string(k) + "/" + std::to_string(t));
    expect(oracle_percent_text(k, t) == text, "oracle disagrees");
    expect(std::fabs(*score - static_cast<double>(k) / t) < 1e-15, "score ratio");
  }
}

void coverage_arithmetic(Context&) {
  const auto r = coverage::coverage_ratios(11189, 12572, 835);
  expect(render_percent(11189, 12572) == "89%", "original");
  expect(render_percent(11189 - 835, 12572) == "82%", "adjusted");
  expect(oracle_percent_text(11189, 12572) == "89%" && oracle_percent_text(10354, 12572) == "82%", "oracle");
  expect(std::fabs(r.adjusted - 10354.0 / 12572.0) < 1e-12, "adjusted ratio");

  // The same numbers through adjust_coverage on a synthetic model.
  coverage::CoverageModel model;
  for (int i = 1; i <= 12572; ++i) model.add("big.cpp", i, i <= 11189 ? 1 : 0);
  subject::MethodSite m;
  m.id = "big.cpp::pseudo()";
  m.file = "big.cpp";
  m.body = {0, 1, 0, 835};
  for (int i = 1; i <= 835; ++i) m.covered_lines.push_back(i);
  const auto adj = coverage::adjust_coverage(model, {m}, {{m.id, classifier::Verdict::kPseudoTested, {}, {}}});
  expect(adj.forced_covered == 835, "forced count");
  expect(std::fabs(adj.adjusted_ratio - 10354.0 / 12572.0) < 1e-12, "model adjusted ratio");
  expect(render_percent(adj.covered - adj.forced_covered, adj.instrumented) == "82%", "model rendering");
}

void proportion_arithmetic(Context&) {
  for (auto [n, d, text] : {std::tuple{291, 2041, "14%"}, {835, 11189, "7%"}, {1129, 12572, "9%"}}) {
    expect(render_percent(n, d) == text, std::to_string(n) + "/" + std::to_string(d));
    expect(oracle_percent_text(n, d) == text, "oracle disagrees");
  }
}

// 5 ------------------------------------------------------------------------
void determinism(Context& ctx) {
  expect(ctx.have_first, "ground-truth run unavailable");
  const std::string before = subject::tree_hash(ctx.gt_root);
  std::vector<RunOutput> runs = {ctx.first_run, run_xmut(ctx.gt_root), run_xmut(ctx.gt_root)};
  check_pristine(ctx.gt_root, before, "repeated runs");
  for (std::size_t i = 1; i < runs.size(); ++i) {
    expect(runs[i].code == cli::kExitOk, "run failed: " + runs[i].err);
    expect(runs[i].results.at("classifications") == runs[0].results.at("classifications"),
           "classifications differ in run " + std::to_string(i + 1));
    expect(runs[i].report == runs[0].report, "annotated report differs in run " + std::to_string(i + 1));
    expect(without_timing(runs[i].results) == without_timing(runs[0].results),
           "results differ beyond timing in run " + std::to_string(i + 1));
  }
}

// 6 ------------------------------------------------------------------------
void mutant_economy(Context& ctx) {
  const std::map<std::string, std::size_t> per_kind = {
      {"void", 1},       {"boolean", 2},   {"integer_like", 2}, {"float_like", 2},
      {"string_like", 2}, {"char_like", 2}, {"reference", 1}};
  for (const char* name : {"ground_truth", "timeout", "selection", "kinds"}) {
    const fs::path root = copy_fixture(name, ctx.tmp.path() / "economy");
    const auto config = subject::load_project_config(root);
    const auto baseline = orchestrator::verify_baseline(root, config, root / ".xmut", XMUT_TEST_CACHE_DIR, false);
    auto methods = subject::discover_methods(root, config).methods;
    subject::join_coverage(methods, baseline.capture.model, false);
    const auto gen = mutant::generate_mutants(methods);
    std::size_t covered = 0;
    std::size_t expected = 0;
    for (const auto& m : methods) {
      if (m.covered_lines.empty()) continue;
      ++covered;
      if (m.return_kind == subject::ReturnKind::kReference && m.null_equivalent.empty()) continue;
      expected += per_kind.at(std::string(subject::to_string(m.return_kind)));
    }
    std::map<std::string, std::size_t> got_per_method;
    for (const auto& mu : gen.mutants) ++got_per_method[mu.method_id];
    for (const auto& m : methods) {
      if (m.covered_lines.empty() || !mutant::is_mutatable(m)) {
        expect(!got_per_method.count(m.id), std::string(name) + ": mutants for " + m.id);
        continue;
      }
      expect(got_per_method[m.id] == per_kind.at(std::string(subject::to_string(m.return_kind))),
             std::string(name) + ": variant count for " + m.id);
    }
    expect(gen.mutants.size() == expected, std::string(name) + ": total mutant count");
    expect(gen.mutants.size() <= 2 * covered, std::string(name) + ": more than two per covered method");
  }
}

// 7 ------------------------------------------------------------------------
void monotonicity(Context& ctx) {
  expect(ctx.have_first, "ground-truth run unavailable");
  const fs::path root = copy_fixture("ground_truth", ctx.tmp.path() / "monotone");
  Verdicts prev = verdicts_of(ctx.first_run.results);
  const std::string contains_id = "src/inventory.cpp::netkit::Inventory::contains(const std::string&) const";
  const std::string header_id = "src/table.cpp::netkit::TableWriter::header() const";
  const std::string open_id = "src/connection.cpp::netkit::Connection::open(const std::string&)";
  struct Step {
    std::string file;
    std::string test;
    std::string target;
    std::string before;
  };
  const std::vector<Step> steps = {
      {"tests/test_inventory.cpp",
       "\nTEST_CASE(\"inventory lacks missing item\") {\n"
       "  netkit::Inventory inv(netkit::default_logger());\n"
       "  CHECK_FALSE(inv.contains(\"pear\"));\n}\n",
       contains_id, "partially_tested"},
      {"tests/test_table.cpp",
       "\nTEST_CASE(\"table header lists columns\") {\n"
       "  netkit::TableWriter w({\"id\", \"name\"});\n"
       "  CHECK(w.header() == \"id,name\");\n}\n",
       header_id, "pseudo_tested"},
      {"tests/test_connection.cpp",
       "\nTEST_CASE(\"connection counts sessions\") {\n"
       "  netkit::Connection c;\n  c.open(\"a\");\n  c.open(\"b\");\n"
       "  CHECK(c.session_count() == 2);\n}\n",
       open_id, "pseudo_tested"},
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    const std::string label = "step " + std::to_string(i + 1);
    expect(prev.at(s.target) == s.before, label + ": unexpected starting verdict " + prev.at(s.target));
    append_to(root / s.file, s.test);
    const std::string before = subject::tree_hash(root);
    RunOutput r = run_xmut(root);
    expect(r.code == cli::kExitOk, label + ": run failed: " + r.err);
    check_pristine(root, before, label);
    const Verdicts now = verdicts_of(r.results);
    expect(now.at(s.target) == "tested", label + ": target is " + now.at(s.target));
    const auto p0 = with_verdict(prev, "pseudo_tested");
    const auto p1 = with_verdict(now, "pseudo_tested");
    for (const auto& id : p1) expect(p0.count(id) > 0, label + ": new pseudo-tested " + id);
    for (const auto& id : with_verdict(prev, "tested")) {
      expect(now.at(id) == "tested", label + ": demoted " + id);
    }
    for (const auto& id : with_verdict(prev, "partially_tested")) {
      expect(now.at(id) == "tested" || now.at(id) == "partially_tested", label + ": demoted " + id);
    }
    prev = now;
  }
}

// 8 ------------------------------------------------------------------------
void pristine(Context& ctx) {
  const fs::path root = copy_fixture("ground_truth", ctx.tmp.path() / "pristine");
  const auto config = subject::load_project_config(root);
  const std::string before = subject::tree_hash(root);
  const auto baseline = orchestrator::verify_baseline(root, config, root / ".xmut", XMUT_TEST_CACHE_DIR, false);
  auto methods = subject::discover_methods(root, config).methods;
  subject::join_coverage(methods, baseline.capture.model, false);
  const auto gen = mutant::generate_mutants(methods);
  std::vector<mutant::ExtremeMutant> some(gen.mutants.begin(), gen.mutants.begin() + 4);

  orchestrator::CampaignConfig c;
  c.work_dir = root / ".xmut" / "campaign";
  c.cache_dir = XMUT_TEST_CACHE_DIR;
  const fs::path worker = c.work_dir / "worker-0" / "tree";

  // Build failure injected into every mutant.
  c.fault_injection = [](const mutant::ExtremeMutant& m, const fs::path& tree) {
    const fs::path f = tree / m.mutant_id.substr(0, m.mutant_id.find("::"));
    write_file(f, read_file(f) + "\n#error injected\n");
  };
  auto r = orchestrator::execute_campaign(root, config, methods, some, baseline.capture, c);
  for (const auto& m : r.results) expect(m.outcome == orchestrator::Outcome::kInvalid, "injected failure not invalid");
  check_pristine(root, before, "injected build failures");
  expect(subject::tree_hash(worker) == before, "worker tree not reverted after build failures");

  // Abort in the middle of the third mutant, after corrupting the file.
  int seen = 0;
  c.fault_injection = [&seen](const mutant::ExtremeMutant& m, const fs::path& tree) {
    if (++seen < 3) return;
    const fs::path f = tree / m.mutant_id.substr(0, m.mutant_id.find("::"));
    write_file(f, "#error injected\n");
    throw CampaignAborted("injected abort");
  };
  bool aborted = false;
  try {
    orchestrator::execute_campaign(root, config, methods, some, baseline.capture, c);
  } catch (const CampaignAborted&) {
    aborted = true;
  }
  expect(aborted, "campaign was not aborted");
  check_pristine(root, before, "aborted campaign");
  expect(subject::tree_hash(worker) == before, "worker tree not reverted after abort");

  // Every cmd_run in this suite was also checked; repeat once with parallel workers.
  RunOutput pr = run_xmut(root, {"--jobs", "2", "--only", "src/util.cpp"});
  expect(pr.code == cli::kExitOk, "parallel run failed: " + pr.err);
  check_pristine(root, before, "parallel run");
}

// 9 ------------------------------------------------------------------------
void focused(Context& ctx) {
  expect(ctx.have_first, "ground-truth run unavailable");
  const Verdicts full = verdicts_of(ctx.first_run.results);
  const std::string before = subject::tree_hash(ctx.gt_root);
  for (const auto& [id, verdict] : full) {
    RunOutput r = run_xmut(ctx.gt_root, {"--only", id});
    expect(r.code == cli::kExitOk, id + ": run failed: " + r.err);
    const Verdicts got = verdicts_of(r.results);
    expect(got.size() == 1 && got.count(id), id + ": focused run covered other methods");
    expect(got.at(id) == verdict, id + ": focused " + got.at(id) + " vs full " + verdict);
    for (const auto& m : r.results.at("mutants")) {
      expect(m.at("method_id") == id, id + ": foreign mutant executed");
    }
  }
  check_pristine(ctx.gt_root, before, "focused runs");
}

// 10 -----------------------------------------------------------------------
void lcov_round_trip(Context&) {
  int n = 0;
  bool saw_duplicate = false, saw_unknown = false;
  for (const auto& e : fs::directory_iterator(fixture_path("lcov"))) {
    const std::string text = read_file(e.path());
    const auto first = coverage::parse_lcov(text).model;
    const auto second = coverage::parse_lcov(coverage::emit_lcov(first)).model;
    const auto third = coverage::parse_lcov(coverage::emit_lcov(second)).model;
    expect(first == second && second == third, e.path().filename().string() + ": not a fixpoint");
    saw_duplicate = saw_duplicate || e.path().filename() == "duplicate_da.info";
    saw_unknown = saw_unknown || e.path().filename() == "unknown_tags.info";
    ++n;
  }
  expect(n >= 5, "only " + std::to_string(n) + " coverage fixtures");
  expect(saw_duplicate && saw_unknown, "duplicate-DA or unknown-tag fixture missing");
}

}  // namespace

int main() {
  Context ctx;
  const std::vector<std::pair<std::string, std::function<void(Context&)>>> criteria = {
      {"ground-truth fixture classifications", ground_truth},
      {"mutation score arithmetic (85%, 73%)", score_arithmetic},
      {"coverage adjustment arithmetic (89% -> 82%)", coverage_arithmetic},
      {"pseudo-tested proportions (14%, 7%, 9%)", proportion_arithmetic},
      {"determinism over three serial runs", determinism},
      {"mutant economy per return kind", mutant_economy},
      {"monotonicity under suite strengthening", monotonicity},
      {"tree pristine after campaigns and injected failures", pristine},
      {"focused mode matches the full campaign", focused},
      {"LCOV parse/emit fixpoint", lcov_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      criteria[i].second(ctx);
    } catch (const Failure& f) {
      problem = f.what;
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (problem.empty() ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].first << " ("
              << render_duration_ms(ms.count()) << ")";
    if (!problem.empty()) std::cout << ": " << problem;
    std::cout << std::endl;
    failed += problem.empty() ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
