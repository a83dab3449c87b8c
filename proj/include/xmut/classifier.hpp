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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "xmut/coverage/model.hpp"
#include "xmut/mutant_gen.hpp"
#include "xmut/orchestrator.hpp"
#include "xmut/subject/test_sources.hpp"

namespace xmut::classifier {

using orchestrator::MutantResult;
using subject::MethodSite;

enum class Verdict { kTested, kPartiallyTested, kPseudoTested, kUncovered, kUnmutatable };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view text);

struct MethodClassification {
  std::string method_id;
  Verdict verdict = Verdict::kUncovered;
  std::vector<mutant::VariantKind> surviving_variants;
  std::set<std::string> killing_tests;

  friend bool operator==(const MethodClassification&, const MethodClassification&) = default;
};

/// `results` must belong to `method`; a foreign mutant throws
/// std::logic_error. Invalid results do not count toward the verdict.
MethodClassification classify_method(const MethodSite& method,
                                     std::span<const MutantResult> results);

/// One classification per method, in method order.
std::vector<MethodClassification> classify_all(const std::vector<MethodSite>& methods,
                                               const std::vector<MutantResult>& results);

/// killed / (killed + survived); nullopt when there is no valid mutant.
std::optional<double> mutation_score(std::uint64_t killed, std::uint64_t survived);
std::optional<double> mutation_score(const std::vector<MutantResult>& results);

struct ReportSummary {
  std::optional<double> score;
  std::uint64_t killed = 0;
  std::uint64_t total_valid = 0;
  std::uint64_t survived = 0;
  std::uint64_t invalid = 0;
  std::uint64_t mutator_kinds_used = 0;
  std::uint64_t executed_tests_total = 0;
  std::chrono::milliseconds wall_time_total{0};
  std::uint64_t methods_total = 0;
  std::uint64_t methods_pseudo = 0;
  std::uint64_t lines_covered_pseudo = 0;
  std::uint64_t lines_total_pseudo = 0;
  std::uint64_t lines_covered_total = 0;
  std::uint64_t lines_instrumented_total = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

ReportSummary summarize(const std::vector<MethodSite>& methods,
                        const std::vector<MethodClassification>& classifications,
                        const std::vector<MutantResult>& results,
                        const coverage::CoverageModel& coverage);

inline constexpr const char* kNoAssertionSuspect = "no-assertion-suspect";
inline constexpr const char* kInspectManually = "inspect-manually";

struct ReasonTags {
  std::map<std::string, std::string> tags;  // pseudo-tested method id -> tag
  std::vector<std::string> diagnostics;
};

/// Tags each pseudo-tested method by whether all its covering tests lack
/// assertions.
ReasonTags tag_assertion_free_tests(const std::vector<MethodSite>& methods,
                                    const std::vector<MethodClassification>& classifications,
                                    const subject::BaselineCapture& baseline,
                                    const subject::TestSources& test_sources,
                                    const std::vector<std::string>& assertion_patterns);

}  // namespace xmut::classifier
