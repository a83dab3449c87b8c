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

#include "xmut/subject/test_runner.hpp"

#include <regex>
#include <sstream>

#include "xmut/error.hpp"
#include "xmut/subject/process.hpp"

namespace xmut::subject {

using std::chrono::milliseconds;

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kAllPassed: return "all_passed";
    case RunStatus::kSomeFailed: return "some_failed";
    case RunStatus::kTimedOut: return "timed_out";
    case RunStatus::kRunError: return "run_error";
  }
  return "run_error";
}

std::string escape_test_filter(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == ',' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> TestBinary::list() const {
  ProcessResult pr = run_process(
      {binary_.string(), "--list-test-cases", "--no-version"}, cwd_, milliseconds(60'000));
  if (!pr.ok()) {
    throw InfrastructureError("listing tests failed", pr.output);
  }
  // Names sit between the two separator rules.
  std::vector<std::string> names;
  std::istringstream in(pr.output);
  std::string line;
  int rules = 0;
  while (std::getline(in, line)) {
    if (line.rfind("=====", 0) == 0) {
      ++rules;
      continue;
    }
    if (rules == 1 && !line.empty()) names.push_back(line);
  }
  if (rules < 2) throw InfrastructureError("unrecognised test listing", pr.output);
  return names;
}

SingleTestRun TestBinary::run_one(const std::string& test, milliseconds timeout) const {
  static const std::regex kSummary(R"(test cases:\s*(\d+)\s*\|\s*(\d+) passed\s*\|\s*(\d+) failed)");
  ProcessResult pr = run_process({binary_.string(), "--test-case=" + escape_test_filter(test),
                                  "--no-version", "--no-colors"},
                                 cwd_, timeout);
  SingleTestRun run{SingleTestRun::Verdict::kPassed, pr.wall_time, std::move(pr.output)};
  if (pr.timed_out) {
    run.verdict = SingleTestRun::Verdict::kTimedOut;
    return run;
  }
  if (pr.signal != 0) {
    run.verdict = SingleTestRun::Verdict::kFailed;  // crashed
    return run;
  }
  std::smatch m;
  if (!std::regex_search(run.output, m, kSummary)) {
    // A mutant can make the binary exit before doctest prints a summary.
    run.verdict = pr.exit_code == 0 ? SingleTestRun::Verdict::kProtocolError
                                    : SingleTestRun::Verdict::kFailed;
    return run;
  }
  if (std::stoi(m[1].str()) != 1) {
    run.verdict = SingleTestRun::Verdict::kProtocolError;
    run.output = "filter for '" + test + "' selected " + m[1].str() +
                 " test cases\n" + run.output;
    return run;
  }
  if (pr.exit_code != 0 || std::stoi(m[3].str()) != 0) {
    run.verdict = SingleTestRun::Verdict::kFailed;
  }
  return run;
}

TestRunResult run_test_list(const TestBinary& binary, const std::vector<std::string>& tests,
                            milliseconds timeout, const BeforeTestHook& before,
                            const AfterTestHook& after) {
  TestRunResult result;
  bool timed_out = false;
  for (const std::string& test : tests) {
    const milliseconds left = timeout - result.wall_time;
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    if (before) before(test);
    SingleTestRun run = binary.run_one(test, left);
    ++result.executed_test_count;
    result.wall_time += run.wall_time;
    if (after) after(test, run);
    switch (run.verdict) {
      case SingleTestRun::Verdict::kPassed:
        break;
      case SingleTestRun::Verdict::kFailed:
        result.failed_tests.push_back(test);
        break;
      case SingleTestRun::Verdict::kTimedOut:
        timed_out = true;
        break;
      case SingleTestRun::Verdict::kProtocolError:
        result.status = RunStatus::kRunError;
        result.diagnostics += run.output;
        break;
    }
    if (timed_out) break;
  }
  if (result.status == RunStatus::kRunError) {
    result.failed_tests.clear();
    return result;
  }
  if (!result.failed_tests.empty()) {
    result.status = RunStatus::kSomeFailed;
  } else if (timed_out) {
    result.status = RunStatus::kTimedOut;
  }
  return result;
}

TestRunResult run_tests(Builder& builder, const std::optional<std::vector<std::string>>& selection,
                        milliseconds timeout) {
  BuildResult build = builder.build(BuildFlavor::kPlain);
  if (!build.ok) {
    TestRunResult r;
    r.status = RunStatus::kRunError;
    r.diagnostics = build.diagnostics;
    return r;
  }
  TestBinary binary(build.binary, builder.tree_root());
  if (selection) return run_test_list(binary, *selection, timeout);
  return run_test_list(binary, binary.list(), timeout);
}

}  // namespace xmut::subject
