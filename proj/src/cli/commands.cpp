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

#include <ctime>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xmut/cli.hpp"
#include "xmut/coverage/lcov.hpp"
#include "xmut/coverage/report.hpp"
#include "xmut/error.hpp"
#include "xmut/format.hpp"
#include "xmut/io.hpp"
#include "xmut/subject/discovery.hpp"
#include "xmut/subject/test_sources.hpp"

namespace xmut::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  ::gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// CLI11 consumes arguments from the back of the vector.
int parse_args(CLI::App& app, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, bool& done) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    done = true;
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "xmut: " << e.what() << "\n";
    done = true;
    return kExitRefused;
  }
  done = false;
  return kExitOk;
}

std::vector<std::string> read_file_list(const fs::path& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(b, e - b + 1);
    if (entry.rfind("./", 0) == 0) entry.erase(0, 2);
    out.push_back(entry);
  }
  return out;
}

coverage::CoverageModel assumed_model(const std::vector<subject::MethodSite>& methods) {
  coverage::CoverageModel m;
  for (const auto& site : methods) {
    for (int ln = site.body.first_body_line(); ln <= site.body.last_body_line(); ++ln) {
      if (!m.instrumented(site.file, ln)) m.add(site.file, ln, 1);
    }
  }
  return m;
}

void write_report(const coverage::AdjustedCoverage& adjusted, const ResultsFile& results,
                  const fs::path& source_root, const fs::path& coverage_out,
                  const fs::path& report_out) {
  coverage::ReportContext ctx;
  ctx.methods = &results.methods;
  ctx.classifications = &results.classifications;
  ctx.tags = &results.tags;
  ctx.summary = &results.summary;
  ctx.notes = results.notes;
  for (const auto& [rel, text] : coverage::render_annotated_report(adjusted, ctx, source_root)) {
    const fs::path target = report_out / rel;
    fs::create_directories(target.parent_path());
    write_file_atomic(target, text);
  }
  if (coverage_out.has_parent_path()) fs::create_directories(coverage_out.parent_path());
  write_file_atomic(coverage_out, coverage::emit_lcov(adjusted.adjusted_model()));
}

void print_summary(const ResultsFile& r, const coverage::AdjustedCoverage& adjusted,
                   const std::string& format, std::ostream& out) {
  const auto& s = r.summary;
  if (format == "structured") {
    ordered_json j;
    j["summary"] = to_json(r)["summary"];
    j["original_coverage"] = adjusted.original_ratio;
    j["adjusted_coverage"] = adjusted.adjusted_ratio;
    ordered_json pseudo = ordered_json::array();
    for (const auto& c : r.classifications) {
      if (c.verdict == classifier::Verdict::kPseudoTested) pseudo.push_back(c.method_id);
    }
    j["pseudo_tested"] = pseudo;
    out << j.dump(2) << "\n";
    return;
  }
  const std::string score = render_percent(s.killed, s.total_valid);
  const std::string killed = group_thousands(s.killed) + " / " + group_thousands(s.total_valid);
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-16s %-9s %-8s %-15s %s\n", "Score", "Killed / Total",
                "Survived", "Mutators", "Executed Tests", "Time");
  out << line;
  std::snprintf(line, sizeof line, "%-6s %-16s %-9s %-8s %-15s %s\n", score.c_str(), killed.c_str(),
                group_thousands(s.survived).c_str(), std::to_string(s.mutator_kinds_used).c_str(),
                group_thousands(s.executed_tests_total).c_str(),
                render_duration_ms(static_cast<std::uint64_t>(s.wall_time_total.count())).c_str());
  out << line << "\n";
  if (s.invalid > 0) out << "Invalid mutants (excluded): " << s.invalid << "\n";
  out << "Pseudo-tested methods: " << s.methods_pseudo << " of " << s.methods_total << " ("
      << render_percent(s.methods_pseudo, s.methods_total) << ")\n";
  out << "Line coverage: " << render_percent(adjusted.covered, adjusted.instrumented) << " -> "
      << render_percent(adjusted.covered - adjusted.forced_covered, adjusted.instrumented)
      << " adjusted\n";
  for (const auto& c : r.classifications) {
    if (c.verdict != classifier::Verdict::kPseudoTested) continue;
    auto tag = r.tags.find(c.method_id);
    out << "  pseudo-tested: " << c.method_id;
    if (tag != r.tags.end()) out << " [" << tag->second << "]";
    out << "\n";
  }
}

}  // namespace

int cmd_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Run an extreme mutation campaign", "xmut run"};
  std::string project = ".";
  std::vector<std::string> only;
  std::string changed_from;
  bool full_suite = false;
  int jobs = 1;
  double timeout_factor = 3.0;
  long long max_pseudo = -1;
  std::string coverage_out, report_out, results_out, cache_dir;
  std::string format = "text";
  std::vector<std::string> access;
  app.add_option("--project", project, "Subject project root")->check(CLI::ExistingDirectory);
  app.add_option("--only", only, "Method ids or globs over ids and files")->take_all();
  app.add_option("--changed-from", changed_from, "File listing changed source paths")
      ->check(CLI::ExistingFile);
  app.add_flag("--full-suite", full_suite, "Run every test for every mutant");
  app.add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  app.add_option("--timeout-factor", timeout_factor, "Multiplier on baseline test time");
  app.add_option("--max-pseudo", max_pseudo, "Exit 1 when more methods are pseudo-tested");
  app.add_option("--coverage-out", coverage_out, "Adjusted LCOV output");
  app.add_option("--report-out", report_out, "Annotated report directory");
  app.add_option("--results-out", results_out, "Results file");
  app.add_option("--format", format, "Console output")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--access", access, "Only methods with these access levels")
      ->delimiter(',')
      ->check(CLI::IsMember({"public", "package", "protected", "private", "other"}));
  app.add_option("--cache-dir", cache_dir, "Object cache directory");
  bool done = false;
  if (int rc = parse_args(app, args, out, err, done); done) return rc;

  const std::string started = utc_now();
  try {
    const fs::path root = fs::canonical(project);
    const subject::ProjectConfig config = subject::load_project_config(root);
    const fs::path work_dir = root / subject::kWorkDirName;
    const fs::path out_dir = work_dir / "out";
    const fs::path results_path = results_out.empty() ? out_dir / "results.json" : fs::path(results_out);
    const fs::path coverage_path = coverage_out.empty() ? out_dir / "adjusted.info" : fs::path(coverage_out);
    const fs::path report_path = report_out.empty() ? out_dir / "report" : fs::path(report_out);
    const fs::path baseline_path = results_path.parent_path() / "baseline.info";

    orchestrator::CampaignConfig campaign;
    campaign.timeout_factor = timeout_factor;
    campaign.timeout_floor = std::chrono::milliseconds(
        static_cast<long long>(config.timeout_floor_seconds * 1000.0));
    campaign.test_selection =
        full_suite ? orchestrator::TestSelection::kFullSuite : orchestrator::TestSelection::kCoveringTests;
    campaign.parallelism = jobs;
    campaign.work_dir = work_dir / "campaign";
    campaign.cache_dir = cache_dir.empty() ? work_dir / "object-cache" : fs::path(cache_dir);
    campaign.progress = &err;
    campaign.method_filter.only = only;
    if (!changed_from.empty()) campaign.method_filter.changed_files = read_file_list(changed_from);
    for (const std::string& a : access) campaign.method_filter.access.insert(*subject::parse_access(a));
    try {
      campaign.validate();
    } catch (const std::invalid_argument& e) {
      err << "xmut: " << e.what() << "\n";
      return kExitRefused;
    }

    const bool focused = !only.empty() || !changed_from.empty();
    orchestrator::Baseline baseline =
        orchestrator::verify_baseline(root, config, work_dir, campaign.cache_dir, focused);
    if (baseline.reused) err << "xmut: reusing baseline coverage for tree " << baseline.tree_hash << "\n";

    subject::DiscoveryResult discovery = subject::discover_methods(root, config);
    coverage::CoverageModel model = baseline.capture.assumed_covered
                                        ? assumed_model(discovery.methods)
                                        : baseline.capture.model;
    subject::join_coverage(discovery.methods, model, baseline.capture.assumed_covered);

    ResultsFile results;
    results.started_at = started;
    for (auto& m : discovery.methods) {
      if (!campaign.method_filter.active() || campaign.method_filter.matches(m)) {
        results.methods.push_back(std::move(m));
      }
    }
    if (campaign.method_filter.active() && results.methods.empty()) {
      err << "xmut: no method matches the filter\n";
      return kExitRefused;
    }
    for (const auto& d : discovery.diagnostics) results.notes.push_back(d.file + ": skipped, " + d.message);
    if (baseline.capture.per_test.full_suite_fallback && !baseline.capture.assumed_covered) {
      results.notes.push_back("per-test coverage unavailable: every test is treated as covering every covered line");
    }
    if (baseline.capture.assumed_covered) {
      results.notes.push_back("coverage capture failed: every method body is treated as covered");
    }

    mutant::Generation gen = mutant::generate_mutants(results.methods);
    orchestrator::CampaignResult campaign_result =
        orchestrator::execute_campaign(root, config, results.methods, gen.mutants, baseline.capture, campaign);
    results.mutants = std::move(campaign_result.results);
    for (auto& d : campaign_result.diagnostics) results.notes.push_back(std::move(d));

    results.classifications = classifier::classify_all(results.methods, results.mutants);
    const subject::TestSources sources = subject::extract_test_sources(root, config);
    for (const auto& d : sources.diagnostics) results.notes.push_back(d.file + ": " + d.message);
    classifier::ReasonTags tags = classifier::tag_assertion_free_tests(
        results.methods, results.classifications, baseline.capture, sources, config.assertion_patterns);
    results.tags = std::move(tags.tags);
    for (auto& d : tags.diagnostics) results.notes.push_back(std::move(d));
    results.summary = classifier::summarize(results.methods, results.classifications, results.mutants, model);

    ordered_json cfg;
    cfg["project"] = root.string();
    cfg["cxx"] = config.cxx;
    cfg["cxxflags"] = config.cxxflags;
    cfg["test_globs"] = config.test_globs;
    cfg["assertion_patterns"] = config.assertion_patterns;
    cfg["timeout_factor"] = campaign.timeout_factor;
    cfg["timeout_floor_ms"] = campaign.timeout_floor.count();
    cfg["test_selection"] = full_suite ? "full_suite" : "covering_tests";
    cfg["parallelism"] = jobs;
    cfg["only"] = only;
    cfg["changed_files"] = campaign.method_filter.changed_files
                               ? ordered_json(*campaign.method_filter.changed_files)
                               : ordered_json(nullptr);
    cfg["access"] = access;
    cfg["tree_hash"] = baseline.tree_hash;
    cfg["tests"] = baseline.capture.tests.size();
    results.config = cfg;

    const coverage::AdjustedCoverage adjusted =
        coverage::adjust_coverage(model, results.methods, results.classifications);
    results.finished_at = utc_now();

    if (results_path.has_parent_path()) fs::create_directories(results_path.parent_path());
    write_file_atomic(baseline_path, coverage::emit_lcov(model));
    write_report(adjusted, results, root, coverage_path, report_path);
    write_file_atomic(results_path, to_json(results).dump(2) + "\n");

    print_summary(results, adjusted, format, out);
    if (format == "text") {
      out << "\nResults: " << results_path.string() << "\nCoverage: " << coverage_path.string()
          << "\nReport: " << (report_path / "summary.md").string() << "\n";
    }
    if (max_pseudo >= 0 && results.summary.methods_pseudo > static_cast<std::uint64_t>(max_pseudo)) {
      return kExitThreshold;
    }
    return kExitOk;
  } catch (const BaselineRefused& e) {
    err << "xmut: " << e.what() << "; failing tests:\n";
    for (const std::string& t : e.failing_tests()) err << "  " << t << "\n";
    return kExitRefused;
  } catch (const InfrastructureError& e) {
    err << "xmut: " << e.what() << "\n" << e.diagnostics();
    if (!e.diagnostics().empty() && e.diagnostics().back() != '\n') err << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "xmut: " << e.what() << "\n";
    return kExitRefused;
  }
}

int cmd_report(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regenerate reports from a results file", "xmut report"};
  std::string results_in, coverage_in, project, coverage_out, report_out;
  std::string format = "text";
  app.add_option("--results", results_in, "Results file")->required()->check(CLI::ExistingFile);
  app.add_option("--coverage", coverage_in, "Baseline LCOV file")->required()->check(CLI::ExistingFile);
  app.add_option("--project", project, "Source root (defaults to the one recorded)");
  app.add_option("--coverage-out", coverage_out, "Adjusted LCOV output")->required();
  app.add_option("--report-out", report_out, "Annotated report directory")->required();
  app.add_option("--format", format, "Console output")->check(CLI::IsMember({"text", "structured"}));
  bool done = false;
  if (int rc = parse_args(app, args, out, err, done); done) return rc;

  try {
    const nlohmann::json j = nlohmann::json::parse(read_file(results_in));
    const int version = read_schema_version(j);
    if (version != kResultsSchemaVersion) {
      err << "xmut: results file has schema version " << version << ", this xmut reads version "
          << kResultsSchemaVersion << "\n";
      return kExitRefused;
    }
    const ResultsFile results = results_from_json(j);
    const coverage::LcovParseResult lcov = coverage::parse_lcov(read_file(coverage_in));
    for (const auto& w : lcov.warnings) err << "xmut: " << w << "\n";
    const fs::path root = project.empty() ? fs::path(results.config.at("project").get<std::string>())
                                          : fs::path(project);
    const coverage::AdjustedCoverage adjusted =
        coverage::adjust_coverage(lcov.model, results.methods, results.classifications);
    write_report(adjusted, results, root, coverage_out, report_out);
    print_summary(results, adjusted, format, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "xmut: " << coverage_in << ":" << e.line() << ": " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "xmut: " << e.what() << "\n";
    return kExitRefused;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const char* kUsage =
      "usage: xmut run [--project DIR] [options]\n"
      "       xmut report --results FILE --coverage FILE --coverage-out FILE --report-out DIR\n"
      "Run `xmut run --help` or `xmut report --help` for options.\n";
  if (args.empty()) {
    err << kUsage;
    return kExitRefused;
  }
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (args[0] == "run") return cmd_run(rest, out, err);
  if (args[0] == "report") return cmd_report(rest, out, err);
  if (args[0] == "--help" || args[0] == "-h") {
    out << kUsage;
    return kExitOk;
  }
  err << "xmut: unknown command '" << args[0] << "'\n" << kUsage;
  return kExitRefused;
}

}  // namespace xmut::cli
