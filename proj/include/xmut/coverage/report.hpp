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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "xmut/classifier.hpp"
#include "xmut/coverage/model.hpp"

namespace xmut::coverage {

struct AdjustedCoverage {
  CoverageModel base;
  std::set<LineRef> forced_uncovered;
  std::uint64_t covered = 0;         // in base
  std::uint64_t instrumented = 0;
  std::uint64_t forced_covered = 0;  // |forced_uncovered ∩ covered|
  double original_ratio = 0.0;
  double adjusted_ratio = 0.0;

  /// `base` with forced lines set to zero hits.
  CoverageModel adjusted_model() const;
};

struct CoverageRatios {
  double original = 0.0;
  double adjusted = 0.0;
};

/// covered/instrumented and (covered - pseudo_covered)/instrumented; both 0
/// when nothing is instrumented.
CoverageRatios coverage_ratios(std::uint64_t covered, std::uint64_t instrumented,
                               std::uint64_t pseudo_covered);

/// Forces the covered body lines of pseudo-tested methods to uncovered.
/// Throws ConsistencyError if a pseudo-tested method has no instrumented
/// line in `coverage`.
AdjustedCoverage adjust_coverage(const CoverageModel& coverage,
                                 const std::vector<subject::MethodSite>& methods,
                                 const std::vector<classifier::MethodClassification>& classifications);

struct ReportContext {
  const std::vector<subject::MethodSite>* methods = nullptr;
  const std::vector<classifier::MethodClassification>* classifications = nullptr;
  const std::map<std::string, std::string>* tags = nullptr;
  const classifier::ReportSummary* summary = nullptr;
  /// Free-form lines listed at the end of the summary page.
  std::vector<std::string> notes;
};

/// Relative output path -> content: "summary.md" plus "files/<source>.md"
/// for every file in the coverage model. No timings, so the output is
/// reproducible.
std::map<std::string, std::string> render_annotated_report(const AdjustedCoverage& adjusted,
                                                           const ReportContext& context,
                                                           const std::filesystem::path& source_root);

}  // namespace xmut::coverage
