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

#include "xmut/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace xmut::classifier {

using orchestrator::Outcome;

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kTested: return "tested";
    case Verdict::kPartiallyTested: return "partially_tested";
    case Verdict::kPseudoTested: return "pseudo_tested";
    case Verdict::kUncovered: return "uncovered";
    case Verdict::kUnmutatable: return "unmutatable";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::kTested, Verdict::kPartiallyTested, Verdict::kPseudoTested,
                    Verdict::kUncovered, Verdict::kUnmutatable}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

MethodClassification classify_method(const MethodSite& method, std::span<const MutantResult> results) {
  MethodClassification c;
  c.method_id = method.id;
  int killed = 0;
  int survived = 0;
  for (const MutantResult& r : results) {
    if (r.method_id != method.id) {
      throw std::logic_error("mutant " + r.mutant_id + " does not belong to " + method.id);
    }
    if (r.outcome == Outcome::kKilled) {
      ++killed;
      c.killing_tests.insert(r.killed_by.begin(), r.killed_by.end());
    } else if (r.outcome == Outcome::kSurvived) {
      ++survived;
      c.surviving_variants.push_back(r.variant);
    }
  }
  if (results.empty()) {
    c.verdict = method.covered_lines.empty() ? Verdict::kUncovered : Verdict::kUnmutatable;
  } else if (killed + survived == 0) {
    c.verdict = Verdict::kUnmutatable;
  } else if (survived == 0) {
    c.verdict = Verdict::kTested;
  } else if (killed == 0) {
    c.verdict = Verdict::kPseudoTested;
  } else {
    c.verdict = Verdict::kPartiallyTested;
  }
  return c;
}

std::vector<MethodClassification> classify_all(const std::vector<MethodSite>& methods,
                                               const std::vector<MutantResult>& results) {
  std::map<std::string, std::vector<MutantResult>> by_method;
  for (const MutantResult& r : results) by_method[r.method_id].push_back(r);
  std::vector<MethodClassification> out;
  for (const MethodSite& m : methods) {
    auto it = by_method.find(m.id);
    if (it == by_method.end()) {
      out.push_back(classify_method(m, {}));
    } else {
      out.push_back(classify_method(m, it->second));
      by_method.erase(it);
    }
  }
  if (!by_method.empty()) {
    throw std::logic_error("results for unknown method " + by_method.begin()->first);
  }
  return out;
}

std::optional<double> mutation_score(std::uint64_t killed, std::uint64_t survived) {
  if (killed + survived == 0) return std::nullopt;
  return static_cast<double>(killed) / static_cast<double>(killed + survived);
}

std::optional<double> mutation_score(const std::vector<MutantResult>& results) {
  std::uint64_t killed = 0;
  std::uint64_t survived = 0;
  for (const MutantResult& r : results) {
    if (r.outcome == Outcome::kKilled) ++killed;
    if (r.outcome == Outcome::kSurvived) ++survived;
  }
  return mutation_score(killed, survived);
}

ReportSummary summarize(const std::vector<MethodSite>& methods,
                        const std::vector<MethodClassification>& classifications,
                        const std::vector<MutantResult>& results,
                        const coverage::CoverageModel& coverage) {
  ReportSummary s;
  std::set<mutant::VariantKind> kinds;
  for (const MutantResult& r : results) {
    kinds.insert(r.variant);
    switch (r.outcome) {
      case Outcome::kKilled: ++s.killed; break;
      case Outcome::kSurvived: ++s.survived; break;
      case Outcome::kInvalid: ++s.invalid; break;
    }
    s.executed_tests_total += static_cast<std::uint64_t>(r.executed_tests);
    s.wall_time_total += r.wall_time;
  }
  s.total_valid = s.killed + s.survived;
  s.score = mutation_score(s.killed, s.survived);
  s.mutator_kinds_used = kinds.size();
  s.methods_total = methods.size();
  std::map<std::string, const MethodSite*> by_id;
  for (const MethodSite& m : methods) by_id[m.id] = &m;
  for (const MethodClassification& c : classifications) {
    if (c.verdict != Verdict::kPseudoTested) continue;
    ++s.methods_pseudo;
    if (auto it = by_id.find(c.method_id); it != by_id.end()) {
      s.lines_covered_pseudo += it->second->covered_lines.size();
      s.lines_total_pseudo += static_cast<std::uint64_t>(it->second->body_line_count());
    }
  }
  s.lines_covered_total = coverage.covered_count();
  s.lines_instrumented_total = coverage.instrumented_count();
  return s;
}

ReasonTags tag_assertion_free_tests(const std::vector<MethodSite>& methods,
                                    const std::vector<MethodClassification>& classifications,
                                    const subject::BaselineCapture& baseline,
                                    const subject::TestSources& test_sources,
                                    const std::vector<std::string>& assertion_patterns) {
  ReasonTags out;
  std::map<std::string, const MethodSite*> by_id;
  for (const MethodSite& m : methods) by_id[m.id] = &m;
  for (const MethodClassification& c : classifications) {
    if (c.verdict != Verdict::kPseudoTested) continue;
    auto it = by_id.find(c.method_id);
    if (it == by_id.end()) throw std::logic_error("classification for unknown method " + c.method_id);
    const auto covering =
        orchestrator::select_tests(*it->second, baseline, orchestrator::TestSelection::kCoveringTests);
    bool any_assertion = false;
    bool unreadable = covering.empty();
    for (const std::string& test : covering) {
      auto body = test_sources.bodies.find(test);
      if (body == test_sources.bodies.end()) {
        out.diagnostics.push_back(c.method_id + ": source of test '" + test + "' not found");
        unreadable = true;
        break;
      }
      if (subject::contains_assertion(body->second, assertion_patterns)) {
        any_assertion = true;
        break;
      }
    }
    out.tags[c.method_id] = (any_assertion || unreadable) ? kInspectManually : kNoAssertionSuspect;
  }
  return out;
}

}  // namespace xmut::classifier
