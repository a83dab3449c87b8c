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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xmut/mutant_gen.hpp"
#include "xmut/subject/coverage_capture.hpp"
#include "xmut/subject/method_site.hpp"
#include "xmut/subject/project.hpp"
#include "xmut/subject/test_runner.hpp"

namespace xmut::orchestrator {

using subject::MethodSite;

enum class Outcome { kKilled, kSurvived, kInvalid };
enum class Detail { kTestFailure, kTimeout, kBuildFailure, kCleanPass };

std::string_view to_string(Outcome outcome);
std::string_view to_string(Detail detail);
std::optional<Outcome> parse_outcome(std::string_view text);
std::optional<Detail> parse_detail(std::string_view text);

struct MutantResult {
  std::string mutant_id;
  std::string method_id;
  mutant::VariantKind variant = mutant::VariantKind::kEmptyBody;
  Outcome outcome = Outcome::kInvalid;
  Detail detail = Detail::kBuildFailure;
  std::vector<std::string> killed_by;
  int executed_tests = 0;
  std::chrono::milliseconds wall_time{0};
  std::string diagnostics;  // build output or the error that made it invalid

  /// Equality ignoring wall_time and diagnostics.
  bool same_verdict(const MutantResult& other) const;
};

enum class TestSelection { kCoveringTests, kFullSuite };

struct MethodFilter {
  /// Method ids or fnmatch globs over ids and files.
  std::vector<std::string> only;
  /// Project-relative files; methods in other files are skipped.
  std::optional<std::vector<std::string>> changed_files;
  /// Empty means every access level.
  std::set<subject::AccessLevel> access;

  bool active() const { return !only.empty() || changed_files || !access.empty(); }
  bool matches(const MethodSite& method) const;
};

struct CampaignConfig {
  double timeout_factor = 3.0;
  std::chrono::milliseconds timeout_floor{10'000};
  TestSelection test_selection = TestSelection::kCoveringTests;
  MethodFilter method_filter;
  int parallelism = 1;
  /// Worker trees and build directories live here.
  std::filesystem::path work_dir;
  /// Content-addressed object cache shared by all builds.
  std::filesystem::path cache_dir;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
  /// Called with the worker tree after a mutation is applied and before the
  /// build. Used by tests to inject failures.
  std::function<void(const mutant::ExtremeMutant&, const std::filesystem::path&)> fault_injection;

  /// Throws std::invalid_argument on out-of-range settings.
  void validate() const;
};

struct Baseline {
  subject::BaselineCapture capture;
  std::string tree_hash;
  bool reused = false;  // loaded from the cache instead of re-run
};

/// Runs the instrumented baseline in `project_root`. With `allow_cached`, a
/// capture stored for the same tree hash under `work_dir` is reused.
Baseline verify_baseline(const std::filesystem::path& project_root,
                         const subject::ProjectConfig& config,
                         const std::filesystem::path& work_dir,
                         const std::filesystem::path& cache_dir, bool allow_cached);

/// Tests whose recorded lines intersect the method's covered body lines, in
/// suite order. Full-suite mode returns every test.
std::vector<std::string> select_tests(const MethodSite& method,
                                      const subject::BaselineCapture& baseline,
                                      TestSelection mode);

std::pair<Outcome, Detail> classify_outcome(const subject::TestRunResult& run);

std::chrono::milliseconds mutant_timeout(const std::vector<std::string>& tests,
                                         const subject::BaselineCapture& baseline,
                                         const CampaignConfig& config);

struct CampaignResult {
  std::vector<MutantResult> results;  // same order as the mutants
  int executed_tests_total = 0;
  std::chrono::milliseconds wall_time_total{0};
  std::vector<std::string> diagnostics;  // e.g. mutants with no covering test
};

/// Applies, builds, tests and reverts every mutant in private copies of
/// `project_root`; the project itself is never written. Throws
/// CampaignAborted (after reverting) if a mutant run is aborted, and
/// ConsistencyError if a worker tree is not pristine afterwards.
CampaignResult execute_campaign(const std::filesystem::path& project_root,
                                const subject::ProjectConfig& project_config,
                                const std::vector<MethodSite>& methods,
                                const std::vector<mutant::ExtremeMutant>& mutants,
                                const subject::BaselineCapture& baseline,
                                const CampaignConfig& config);

}  // namespace xmut::orchestrator
