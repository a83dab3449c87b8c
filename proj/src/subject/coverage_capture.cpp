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

#include "xmut/subject/coverage_capture.hpp"

#include <nlohmann/json.hpp>

#include "xmut/error.hpp"
#include "xmut/io.hpp"
#include "xmut/subject/process.hpp"
#include "xmut/subject/test_runner.hpp"

namespace xmut::subject {

namespace fs = std::filesystem;
using std::chrono::milliseconds;

namespace {

constexpr milliseconds kBaselineTestTimeout{300'000};
// gcov also reports every system header a TU touched.
constexpr std::size_t kGcovOutputCap = std::size_t{1} << 30;

void remove_profile_data(const fs::path& dir) {
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".gcda") fs::remove(entry.path());
  }
}

coverage::CoverageModel run_gcov(const ProjectConfig& config, const Builder& builder,
                                 const std::set<std::string>& keep) {
  std::vector<std::string> cmd{config.gcov, "--json-format", "--stdout"};
  for (const auto& entry : fs::directory_iterator(builder.coverage_object_dir())) {
    if (entry.path().extension() == ".gcda") cmd.push_back(entry.path().string());
  }
  std::sort(cmd.begin() + 3, cmd.end());
  if (cmd.size() == 3) return {};
  ProcessResult pr = run_process(cmd, builder.tree_root(), milliseconds(120'000),
                                 kGcovOutputCap);
  if (!pr.ok()) throw InfrastructureError("gcov failed", pr.output);
  return parse_gcov_json(pr.output, builder.tree_root(), keep);
}

}  // namespace

coverage::CoverageModel parse_gcov_json(std::string_view output, const fs::path& root,
                                        const std::set<std::string>& keep) {
  coverage::CoverageModel model;
  std::size_t pos = 0;
  while (pos < output.size()) {
    std::size_t eol = output.find('\n', pos);
    if (eol == std::string_view::npos) eol = output.size();
    std::string_view line = output.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line.front() != '{') continue;  // gcov chatter
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InfrastructureError(std::string("unreadable gcov output: ") + e.what());
    }
    for (const auto& file : doc.value("files", nlohmann::json::array())) {
      fs::path p = file.at("file").get<std::string>();
      if (!p.is_absolute()) p = root / p;
      const std::string rel = relative_generic(p.lexically_normal(), root);
      if (!keep.count(rel)) continue;
      for (const auto& l : file.at("lines")) {
        model.add(rel, l.at("line_number").get<int>(), l.at("count").get<std::uint64_t>());
      }
    }
  }
  return model;
}

BaselineCapture baseline_coverage(Builder& builder, const ProjectConfig& config) {
  BuildResult build = builder.build(BuildFlavor::kCoverage);
  if (!build.ok) {
    throw InfrastructureError("building the instrumented suite failed", build.diagnostics);
  }
  const ProjectFiles files = list_project_files(builder.tree_root(), config);
  const std::set<std::string> keep(files.sources.begin(), files.sources.end());

  BaselineCapture capture;
  TestBinary binary(build.binary, builder.tree_root());
  capture.tests = binary.list();

  bool coverage_failed = false;
  std::string coverage_error;
  auto before = [&](const std::string&) {
    if (config.per_test_coverage) remove_profile_data(builder.coverage_object_dir());
  };
  auto after = [&](const std::string& test, const SingleTestRun& run) {
    capture.test_time[test] = run.wall_time;
    if (!config.per_test_coverage || coverage_failed) return;
    try {
      coverage::CoverageModel m = run_gcov(config, builder, keep);
      auto& lines = capture.per_test.by_test[test];
      for (const auto& [file, hits] : m.files()) {
        for (const auto& [ln, count] : hits) {
          capture.model.add(file, ln, count);
          if (count > 0) lines.emplace(file, ln);
        }
      }
    } catch (const InfrastructureError& e) {
      coverage_failed = true;
      coverage_error = std::string(e.what()) + "\n" + e.diagnostics();
    }
  };
  if (!config.per_test_coverage) remove_profile_data(builder.coverage_object_dir());
  TestRunResult run = run_test_list(binary, capture.tests,
                                    kBaselineTestTimeout * std::max<std::size_t>(1, capture.tests.size()),
                                    before, after);
  capture.baseline_time = run.wall_time;
  if (run.status == RunStatus::kRunError) {
    throw InfrastructureError("baseline run failed", run.diagnostics);
  }
  if (run.status != RunStatus::kAllPassed) {
    std::vector<std::string> failing = run.failed_tests;
    if (run.status == RunStatus::kTimedOut) failing.push_back("(timeout)");
    throw BaselineRefused("baseline suite is not green", failing);
  }

  if (!config.per_test_coverage && !coverage_failed) {
    try {
      capture.model = run_gcov(config, builder, keep);
    } catch (const InfrastructureError& e) {
      coverage_failed = true;
      coverage_error = std::string(e.what()) + "\n" + e.diagnostics();
    }
    if (!coverage_failed) {
      const auto covered = capture.model.covered_lines();
      for (const std::string& t : capture.tests) capture.per_test.by_test[t] = covered;
      capture.per_test.full_suite_fallback = true;
    }
  }
  if (coverage_failed) {
    if (!config.assume_covered_on_coverage_failure) {
      throw InfrastructureError("coverage capture failed", coverage_error);
    }
    capture.model = {};
    capture.per_test = {};
    capture.per_test.full_suite_fallback = true;
    capture.assumed_covered = true;
  }
  for (const std::string& t : capture.tests) capture.per_test.by_test[t];  // every test present
  return capture;
}

void join_coverage(std::vector<MethodSite>& methods, const coverage::CoverageModel& model,
                   bool assume_all_covered) {
  for (MethodSite& m : methods) {
    m.covered_lines.clear();
    for (int ln = m.body.first_body_line(); ln <= m.body.last_body_line(); ++ln) {
      if (assume_all_covered || model.covered(m.file, ln)) m.covered_lines.push_back(ln);
    }
  }
}

}  // namespace xmut::subject
