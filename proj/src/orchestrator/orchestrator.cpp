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

#include "xmut/orchestrator.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "xmut/coverage/lcov.hpp"
#include "xmut/error.hpp"
#include "xmut/format.hpp"
#include "xmut/io.hpp"
#include "xmut/subject/patch.hpp"

namespace xmut::orchestrator {

namespace fs = std::filesystem;
using std::chrono::milliseconds;
using subject::BaselineCapture;
using subject::RunStatus;

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kKilled: return "killed";
    case Outcome::kSurvived: return "survived";
    case Outcome::kInvalid: return "invalid";
  }
  return "?";
}

std::string_view to_string(Detail detail) {
  switch (detail) {
    case Detail::kTestFailure: return "test_failure";
    case Detail::kTimeout: return "timeout";
    case Detail::kBuildFailure: return "build_failure";
    case Detail::kCleanPass: return "clean_pass";
  }
  return "?";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::kKilled, Outcome::kSurvived, Outcome::kInvalid}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

std::optional<Detail> parse_detail(std::string_view text) {
  for (Detail d : {Detail::kTestFailure, Detail::kTimeout, Detail::kBuildFailure,
                   Detail::kCleanPass}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

bool MutantResult::same_verdict(const MutantResult& o) const {
  return mutant_id == o.mutant_id && method_id == o.method_id && variant == o.variant &&
         outcome == o.outcome && detail == o.detail && killed_by == o.killed_by &&
         executed_tests == o.executed_tests;
}

bool MethodFilter::matches(const MethodSite& m) const {
  if (!access.empty() && !access.count(m.access)) return false;
  if (changed_files &&
      std::find(changed_files->begin(), changed_files->end(), m.file) == changed_files->end()) {
    return false;
  }
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(), [&](const std::string& pattern) {
    return pattern == m.id || ::fnmatch(pattern.c_str(), m.id.c_str(), 0) == 0 ||
           ::fnmatch(pattern.c_str(), m.file.c_str(), 0) == 0;
  });
}

void CampaignConfig::validate() const {
  if (!(timeout_factor > 1.0)) throw std::invalid_argument("timeout factor must be greater than 1");
  if (timeout_floor.count() <= 0) throw std::invalid_argument("timeout floor must be positive");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

// Baseline cache ------------------------------------------------------------

namespace {

constexpr int kBaselineCacheVersion = 1;

nlohmann::json baseline_to_json(const BaselineCapture& b) {
  nlohmann::ordered_json j;
  j["version"] = kBaselineCacheVersion;
  j["tests"] = b.tests;
  nlohmann::ordered_json times = nlohmann::ordered_json::object();
  for (const auto& [t, ms] : b.test_time) times[t] = ms.count();
  j["test_time_ms"] = times;
  j["baseline_time_ms"] = b.baseline_time.count();
  j["assumed_covered"] = b.assumed_covered;
  j["full_suite_fallback"] = b.per_test.full_suite_fallback;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& [t, lines] : b.per_test.by_test) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [file, line] : lines) arr.push_back({file, line});
    per[t] = arr;
  }
  j["per_test"] = per;
  j["lcov"] = coverage::emit_lcov(b.model);
  return j;
}

BaselineCapture baseline_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kBaselineCacheVersion) throw Error("baseline cache version");
  BaselineCapture b;
  b.tests = j.at("tests").get<std::vector<std::string>>();
  for (const auto& [t, ms] : j.at("test_time_ms").items()) b.test_time[t] = milliseconds(ms.get<long long>());
  b.baseline_time = milliseconds(j.at("baseline_time_ms").get<long long>());
  b.assumed_covered = j.at("assumed_covered").get<bool>();
  b.per_test.full_suite_fallback = j.at("full_suite_fallback").get<bool>();
  for (const auto& [t, arr] : j.at("per_test").items()) {
    auto& lines = b.per_test.by_test[t];
    for (const auto& e : arr) lines.emplace(e.at(0).get<std::string>(), e.at(1).get<int>());
  }
  b.model = coverage::parse_lcov(j.at("lcov").get<std::string>()).model;
  return b;
}

}  // namespace

Baseline verify_baseline(const fs::path& project_root, const subject::ProjectConfig& config,
                         const fs::path& work_dir, const fs::path& cache_dir, bool allow_cached) {
  Baseline out;
  out.tree_hash = subject::tree_hash(project_root);
  const fs::path cache_file = work_dir / "baseline" / (out.tree_hash + ".json");
  if (allow_cached && fs::exists(cache_file)) {
    try {
      out.capture = baseline_from_json(nlohmann::json::parse(read_file(cache_file)));
      out.reused = true;
      return out;
    } catch (const std::exception&) {
      // Unreadable cache entry: fall through and measure again.
    }
  }
  if (subject::list_project_files(project_root, config).tests.empty()) {
    throw InfrastructureError("no tests found");
  }
  subject::Builder builder(config, project_root, work_dir / "build", cache_dir);
  out.capture = subject::baseline_coverage(builder, config);
  if (out.capture.tests.empty()) throw InfrastructureError("no tests found");
  fs::create_directories(cache_file.parent_path());
  write_file_atomic(cache_file, baseline_to_json(out.capture).dump() + "\n");
  return out;
}

std::vector<std::string> select_tests(const MethodSite& method, const BaselineCapture& baseline,
                                      TestSelection mode) {
  if (mode == TestSelection::kFullSuite || baseline.assumed_covered) return baseline.tests;
  std::vector<std::string> out;
  for (const std::string& test : baseline.tests) {
    auto it = baseline.per_test.by_test.find(test);
    if (it == baseline.per_test.by_test.end()) continue;
    const bool touches = std::any_of(method.covered_lines.begin(), method.covered_lines.end(),
                                     [&](int line) { return it->second.count({method.file, line}) > 0; });
    if (touches) out.push_back(test);
  }
  return out;
}

std::pair<Outcome, Detail> classify_outcome(const subject::TestRunResult& run) {
  switch (run.status) {
    case RunStatus::kSomeFailed: return {Outcome::kKilled, Detail::kTestFailure};
    case RunStatus::kTimedOut: return {Outcome::kKilled, Detail::kTimeout};
    case RunStatus::kAllPassed: return {Outcome::kSurvived, Detail::kCleanPass};
    case RunStatus::kRunError: break;
  }
  return {Outcome::kInvalid, Detail::kBuildFailure};
}

milliseconds mutant_timeout(const std::vector<std::string>& tests, const BaselineCapture& baseline,
                            const CampaignConfig& config) {
  milliseconds sum{0};
  for (const std::string& t : tests) {
    auto it = baseline.test_time.find(t);
    if (it != baseline.test_time.end()) sum += it->second;
  }
  const auto scaled = milliseconds(static_cast<long long>(config.timeout_factor * sum.count()));
  return std::max(config.timeout_floor, scaled);
}

// Campaign -------------------------------------------------------------------

namespace {

struct Worker {
  fs::path tree;
  std::unique_ptr<subject::Builder> builder;
};

MutantResult run_mutant(const mutant::ExtremeMutant& m, const MethodSite& site, Worker& w,
                        const BaselineCapture& baseline, const CampaignConfig& config) {
  MutantResult r;
  r.mutant_id = m.mutant_id;
  r.method_id = m.method_id;
  r.variant = m.variant.kind;
  const auto tests = select_tests(site, baseline, config.test_selection);
  const milliseconds timeout = mutant_timeout(tests, baseline, config);
  const auto start = std::chrono::steady_clock::now();
  try {
    subject::PatchHandle patch = subject::apply_mutation(w.tree, site, m.variant.rendered_body);
    if (config.fault_injection) config.fault_injection(m, w.tree);
    subject::TestRunResult run = subject::run_tests(*w.builder, tests, timeout);
    std::tie(r.outcome, r.detail) = classify_outcome(run);
    r.executed_tests = run.executed_test_count;
    if (r.detail == Detail::kTestFailure) r.killed_by = run.failed_tests;
    if (r.outcome == Outcome::kInvalid) r.diagnostics = run.diagnostics;
  } catch (const CampaignAborted&) {
    throw;
  } catch (const StaleSpanError&) {
    throw;
  } catch (const std::exception& e) {
    r = MutantResult{};
    r.mutant_id = m.mutant_id;
    r.method_id = m.method_id;
    r.variant = m.variant.kind;
    r.outcome = Outcome::kInvalid;
    r.detail = Detail::kBuildFailure;
    r.diagnostics = e.what();
  }
  r.wall_time = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

CampaignResult execute_campaign(const fs::path& project_root,
                                const subject::ProjectConfig& project_config,
                                const std::vector<MethodSite>& methods,
                                const std::vector<mutant::ExtremeMutant>& mutants,
                                const BaselineCapture& baseline, const CampaignConfig& config) {
  config.validate();
  CampaignResult out;
  if (mutants.empty()) return out;

  const std::string pristine = subject::tree_hash(project_root);
  const int n_workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(config.parallelism), mutants.size()));
  std::vector<Worker> workers(n_workers);
  for (int i = 0; i < n_workers; ++i) {
    const fs::path base = config.work_dir / ("worker-" + std::to_string(i));
    workers[i].tree = base / "tree";
    fs::remove_all(workers[i].tree);
    subject::copy_tree(project_root, workers[i].tree);
    workers[i].builder = std::make_unique<subject::Builder>(project_config, workers[i].tree,
                                                            base / "build", config.cache_dir);
  }

  std::vector<std::optional<MutantResult>> slots(mutants.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;  // guards first_error and progress output
  std::exception_ptr first_error;
  std::size_t done = 0;

  auto work = [&](Worker& w) {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= mutants.size()) return;
      try {
        MutantResult r = run_mutant(mutants[i], methods.at(mutants[i].method_index), w, baseline, config);
        std::lock_guard<std::mutex> lock(mu);
        ++done;
        if (config.progress) {
          *config.progress << "[" << done << "/" << mutants.size() << "] " << r.mutant_id << " "
                           << to_string(r.outcome) << " " << render_duration_ms(r.wall_time.count())
                           << "\n" << std::flush;
        }
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        stop = true;
      }
    }
  };
  if (n_workers == 1) {
    work(workers[0]);
  } else {
    std::vector<std::thread> threads;
    for (Worker& w : workers) threads.emplace_back(work, std::ref(w));
    for (std::thread& t : threads) t.join();
  }

  for (const Worker& w : workers) {
    if (subject::tree_hash(w.tree) != pristine) {
      throw ConsistencyError("worker tree " + w.tree.string() + " differs from the project after reverting");
    }
  }
  if (subject::tree_hash(project_root) != pristine) {
    throw ConsistencyError("project tree changed during the campaign");
  }
  if (first_error) std::rethrow_exception(first_error);

  for (std::size_t i = 0; i < slots.size(); ++i) {
    MutantResult& r = *slots[i];
    out.executed_tests_total += r.executed_tests;
    out.wall_time_total += r.wall_time;
    if (r.executed_tests == 0 && r.outcome == Outcome::kSurvived) {
      out.diagnostics.push_back(r.mutant_id + ": no test covers the method; coverage data is inconsistent");
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace xmut::orchestrator
