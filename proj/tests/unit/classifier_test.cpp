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

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "xmut/classifier.hpp"
#include "xmut/format.hpp"

using namespace xmut;
using namespace xmut::classifier;
using mutant::VariantKind;
using orchestrator::Detail;
using orchestrator::Outcome;
using subject::MethodSite;
using subject::ReturnKind;

namespace {

MethodSite method(const std::string& id, ReturnKind kind, std::vector<int> covered = {2, 3}) {
  MethodSite m;
  m.id = id;
  m.file = "src/a.cpp";
  m.return_kind = kind;
  m.body = {0, 40, 1, 4};
  m.covered_lines = std::move(covered);
  return m;
}

MutantResult result(const std::string& method_id, VariantKind v, Outcome o,
                    std::vector<std::string> killed_by = {}) {
  MutantResult r;
  r.mutant_id = method_id + "#" + std::string(mutant::to_string(v));
  r.method_id = method_id;
  r.variant = v;
  r.outcome = o;
  r.detail = o == Outcome::kKilled      ? (killed_by.empty() ? Detail::kTimeout : Detail::kTestFailure)
             : o == Outcome::kSurvived ? Detail::kCleanPass
                                       : Detail::kBuildFailure;
  r.killed_by = std::move(killed_by);
  r.executed_tests = 1;
  return r;
}

}  // namespace

TEST_CASE("method verdicts") {
  const MethodSite v = method("v", ReturnKind::kVoid);
  const MethodSite b = method("b", ReturnKind::kBoolean);
  std::vector<MutantResult> rs;

  rs = {result("v", VariantKind::kEmptyBody, Outcome::kSurvived)};
  CHECK(classify_method(v, rs).verdict == Verdict::kPseudoTested);
  CHECK(classify_method(v, rs).surviving_variants == std::vector<VariantKind>{VariantKind::kEmptyBody});

  rs = {result("b", VariantKind::kReturnTrue, Outcome::kSurvived),
        result("b", VariantKind::kReturnFalse, Outcome::kKilled, {"t1"})};
  auto c = classify_method(b, rs);
  CHECK(c.verdict == Verdict::kPartiallyTested);
  CHECK(c.killing_tests == std::set<std::string>{"t1"});

  rs = {result("b", VariantKind::kReturnTrue, Outcome::kKilled, {"t1"}),
        result("b", VariantKind::kReturnFalse, Outcome::kKilled, {"t2"})};
  CHECK(classify_method(b, rs).verdict == Verdict::kTested);

  rs = {result("b", VariantKind::kReturnTrue, Outcome::kInvalid),
        result("b", VariantKind::kReturnFalse, Outcome::kSurvived)};
  CHECK(classify_method(b, rs).verdict == Verdict::kPseudoTested);

  rs = {result("b", VariantKind::kReturnTrue, Outcome::kInvalid),
        result("b", VariantKind::kReturnFalse, Outcome::kInvalid)};
  CHECK(classify_method(b, rs).verdict == Verdict::kUnmutatable);

  CHECK(classify_method(method("u", ReturnKind::kVoid, {}), {}).verdict == Verdict::kUncovered);
  CHECK(classify_method(method("r", ReturnKind::kReference), {}).verdict == Verdict::kUnmutatable);

  rs = {result("other", VariantKind::kEmptyBody, Outcome::kKilled, {"t"})};
  CHECK_THROWS_AS(classify_method(v, rs), std::logic_error);
}

TEST_CASE("classify_all gives every method exactly one verdict") {
  std::vector<MethodSite> ms = {method("a", ReturnKind::kVoid), method("b", ReturnKind::kVoid, {})};
  auto cs = classify_all(ms, {result("a", VariantKind::kEmptyBody, Outcome::kKilled, {"t"})});
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].verdict == Verdict::kTested);
  CHECK(cs[1].verdict == Verdict::kUncovered);
  CHECK_THROWS_AS(classify_all(ms, {result("zz", VariantKind::kEmptyBody, Outcome::kKilled)}),
                  std::logic_error);
}

TEST_CASE("mutation score") {
  CHECK(render_percent(2297, 2706) == "85%");
  REQUIRE(mutation_score(2297, 2706 - 2297));
  CHECK(*mutation_score(2297, 2706 - 2297) == doctest::Approx(2297.0 / 2706.0));
  CHECK(*mutation_score(0, 5) == 0.0);
  CHECK(*mutation_score(5, 0) == 1.0);
  CHECK_FALSE(mutation_score(0, 0));
  std::vector<MutantResult> rs = {result("a", VariantKind::kEmptyBody, Outcome::kKilled, {"t"}),
                                  result("b", VariantKind::kEmptyBody, Outcome::kInvalid),
                                  result("c", VariantKind::kEmptyBody, Outcome::kSurvived)};
  CHECK(*mutation_score(rs) == 0.5);
}

TEST_CASE("summary fields") {
  std::vector<MethodSite> ms = {method("p", ReturnKind::kVoid, {2, 3}), method("t", ReturnKind::kBoolean),
                                method("u", ReturnKind::kVoid, {})};
  std::vector<MutantResult> rs = {result("p", VariantKind::kEmptyBody, Outcome::kSurvived),
                                  result("t", VariantKind::kReturnTrue, Outcome::kKilled, {"x"}),
                                  result("t", VariantKind::kReturnFalse, Outcome::kKilled, {"y"})};
  coverage::CoverageModel cov;
  for (int ln : {2, 3}) cov.add("src/a.cpp", ln, 1);
  cov.add("src/a.cpp", 4, 0);
  auto cs = classify_all(ms, rs);
  ReportSummary s = summarize(ms, cs, rs, cov);
  CHECK(s.killed == 2);
  CHECK(s.survived == 1);
  CHECK(s.total_valid == 3);
  CHECK(s.invalid == 0);
  CHECK(s.mutator_kinds_used == 3);
  CHECK(s.executed_tests_total == 3);
  CHECK(s.methods_total == 3);
  CHECK(s.methods_pseudo == 1);
  CHECK(s.lines_covered_pseudo == 2);
  CHECK(s.lines_total_pseudo == 3);  // lines 2..4
  CHECK(s.lines_covered_total == 2);
  CHECK(s.lines_instrumented_total == 3);
  CHECK(*s.score == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("empty campaign summary") {
  ReportSummary s = summarize({}, {}, {}, {});
  CHECK(s == ReportSummary{});
  CHECK_FALSE(s.score);
  CHECK(render_percent(s.killed, s.total_valid) == "n/a");
}

TEST_CASE("table proportions") {
  CHECK(render_percent(291, 2041) == oracle_percent_text(291, 2041));
  CHECK(render_percent(291, 2041) == "14%");
}

TEST_CASE("assertion-free tagging") {
  std::vector<MethodSite> ms = {method("quiet", ReturnKind::kVoid, {2}),
                                method("loud", ReturnKind::kVoid, {3}),
                                method("fine", ReturnKind::kVoid, {2})};
  ms[1].file = "src/b.cpp";
  std::vector<MethodClassification> cs = {{"quiet", Verdict::kPseudoTested, {}, {}},
                                          {"loud", Verdict::kPseudoTested, {}, {}},
                                          {"fine", Verdict::kTested, {}, {}}};
  subject::BaselineCapture base;
  base.tests = {"silent", "asserting"};
  base.per_test.by_test["silent"] = {{"src/a.cpp", 2}};
  base.per_test.by_test["asserting"] = {{"src/b.cpp", 3}};
  subject::TestSources src;
  src.bodies["silent"] = "run ( ) ;";
  src.bodies["asserting"] = "CHECK ( run ( ) == 1 ) ;";
  const subject::ProjectConfig defaults;
  auto tags = tag_assertion_free_tests(ms, cs, base, src, defaults.assertion_patterns);
  CHECK(tags.tags.size() == 2);
  CHECK(tags.tags.at("quiet") == kNoAssertionSuspect);
  CHECK(tags.tags.at("loud") == kInspectManually);
  CHECK_FALSE(tags.tags.count("fine"));

  src.bodies.erase("silent");
  tags = tag_assertion_free_tests(ms, cs, base, src, defaults.assertion_patterns);
  CHECK(tags.tags.at("quiet") == kInspectManually);
  CHECK(tags.diagnostics.size() == 1);
}

TEST_CASE("monotonicity under added kills") {
  // Flipping any surviving mutant to killed never moves a method toward
  // pseudo-tested.
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::kPseudoTested: return 0;
      case Verdict::kPartiallyTested: return 1;
      case Verdict::kTested: return 2;
      default: return -1;
    }
  };
  const MethodSite b = method("b", ReturnKind::kBoolean);
  const Outcome outcomes[] = {Outcome::kKilled, Outcome::kSurvived, Outcome::kInvalid};
  for (Outcome o1 : outcomes) {
    for (Outcome o2 : outcomes) {
      std::vector<MutantResult> rs = {result("b", VariantKind::kReturnTrue, o1, {"t"}),
                                      result("b", VariantKind::kReturnFalse, o2, {"t"})};
      const Verdict before = classify_method(b, rs).verdict;
      for (auto& r : rs) {
        if (r.outcome != Outcome::kSurvived) continue;
        auto stronger = rs;
        for (auto& s : stronger) {
          if (s.mutant_id == r.mutant_id) s = result("b", s.variant, Outcome::kKilled, {"new"});
        }
        const Verdict after = classify_method(b, stronger).verdict;
        CHECK(rank(after) >= rank(before));
      }
    }
  }
}
