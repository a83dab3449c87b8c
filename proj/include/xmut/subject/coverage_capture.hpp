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

#pragma once

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "xmut/coverage/model.hpp"
#include "xmut/subject/build.hpp"
#include "xmut/subject/method_site.hpp"

namespace xmut::subject {

/// Test id -> (file, line) pairs that test executed.
struct PerTestCoverage {
  std::map<std::string, std::set<coverage::LineRef>> by_test;
  /// Set when per-test granularity was unavailable and every test is
  /// recorded as covering every covered line.
  bool full_suite_fallback = false;
};

struct BaselineCapture {
  coverage::CoverageModel model;
  PerTestCoverage per_test;
  std::vector<std::string> tests;  // registration order
  std::map<std::string, std::chrono::milliseconds> test_time;
  std::chrono::milliseconds baseline_time{0};
  /// Coverage capture failed and the configuration allowed treating every
  /// method as covered; `model` is empty in that case.
  bool assumed_covered = false;
};

/// Builds the instrumented suite and runs every test in its own process,
/// collecting gcov line data after each one. Throws BaselineRefused when a
/// test fails and InfrastructureError when building or instrumentation
/// fails (unless assume_covered_on_coverage_failure is configured).
BaselineCapture baseline_coverage(Builder& builder, const ProjectConfig& config);

/// Parses `gcov --json-format --stdout` output into hit counts, keeping only
/// files in `keep` (project-relative). Paths are resolved against `root`.
coverage::CoverageModel parse_gcov_json(std::string_view output,
                                        const std::filesystem::path& root,
                                        const std::set<std::string>& keep);

/// Fills MethodSite::covered_lines from the baseline model. With
/// `assume_all_covered` every body line counts as covered.
void join_coverage(std::vector<MethodSite>& methods, const coverage::CoverageModel& model,
                   bool assume_all_covered);

}  // namespace xmut::subject
