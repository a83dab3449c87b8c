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

#include "xmut/cli.hpp"

#include "xmut/error.hpp"

namespace xmut::cli {

using nlohmann::ordered_json;
using std::chrono::milliseconds;

namespace {

ordered_json method_json(const subject::MethodSite& m) {
  ordered_json j;
  j["id"] = m.id;
  j["file"] = m.file;
  j["name"] = m.name;
  j["qualified_name"] = m.qualified_name;
  j["signature"] = m.signature;
  j["return_type"] = m.return_type;
  j["access"] = subject::to_string(m.access);
  j["return_kind"] = subject::to_string(m.return_kind);
  j["null_equivalent"] = m.null_equivalent;
  j["generic_return"] = m.generic_return;
  j["body"] = {{"begin", m.body.begin},
               {"end", m.body.end},
               {"open_line", m.body.open_line},
               {"close_line", m.body.close_line}};
  j["body_line_count"] = m.body_line_count();
  j["file_hash"] = m.file_hash;
  j["covered_lines"] = m.covered_lines;
  return j;
}

subject::MethodSite method_from(const nlohmann::json& j) {
  subject::MethodSite m;
  m.id = j.at("id").get<std::string>();
  m.file = j.at("file").get<std::string>();
  m.name = j.at("name").get<std::string>();
  m.qualified_name = j.at("qualified_name").get<std::string>();
  m.signature = j.at("signature").get<std::string>();
  m.return_type = j.at("return_type").get<std::string>();
  auto access = subject::parse_access(j.at("access").get<std::string>());
  auto kind = subject::parse_return_kind(j.at("return_kind").get<std::string>());
  if (!access || !kind) throw Error("bad access or return kind for " + m.id);
  m.access = *access;
  m.return_kind = *kind;
  m.null_equivalent = j.at("null_equivalent").get<std::string>();
  m.generic_return = j.at("generic_return").get<bool>();
  const auto& b = j.at("body");
  m.body = {b.at("begin").get<std::size_t>(), b.at("end").get<std::size_t>(),
            b.at("open_line").get<int>(), b.at("close_line").get<int>()};
  m.file_hash = j.at("file_hash").get<std::string>();
  m.covered_lines = j.at("covered_lines").get<std::vector<int>>();
  return m;
}

ordered_json mutant_json(const orchestrator::MutantResult& r) {
  ordered_json j;
  j["mutant_id"] = r.mutant_id;
  j["method_id"] = r.method_id;
  j["variant"] = mutant::to_string(r.variant);
  j["outcome"] = orchestrator::to_string(r.outcome);
  j["detail"] = orchestrator::to_string(r.detail);
  j["killed_by"] = r.killed_by;
  j["executed_tests"] = r.executed_tests;
  j["wall_time_ms"] = r.wall_time.count();
  j["diagnostics"] = r.diagnostics;
  return j;
}

orchestrator::MutantResult mutant_from(const nlohmann::json& j) {
  orchestrator::MutantResult r;
  r.mutant_id = j.at("mutant_id").get<std::string>();
  r.method_id = j.at("method_id").get<std::string>();
  auto variant = mutant::parse_variant_kind(j.at("variant").get<std::string>());
  auto outcome = orchestrator::parse_outcome(j.at("outcome").get<std::string>());
  auto detail = orchestrator::parse_detail(j.at("detail").get<std::string>());
  if (!variant || !outcome || !detail) throw Error("bad mutant record " + r.mutant_id);
  r.variant = *variant;
  r.outcome = *outcome;
  r.detail = *detail;
  r.killed_by = j.at("killed_by").get<std::vector<std::string>>();
  r.executed_tests = j.at("executed_tests").get<int>();
  r.wall_time = milliseconds(j.at("wall_time_ms").get<long long>());
  r.diagnostics = j.at("diagnostics").get<std::string>();
  return r;
}

ordered_json summary_json(const classifier::ReportSummary& s) {
  ordered_json j;
  j["score"] = s.score ? ordered_json(*s.score) : ordered_json(nullptr);
  j["killed"] = s.killed;
  j["total_valid"] = s.total_valid;
  j["survived"] = s.survived;
  j["invalid"] = s.invalid;
  j["mutator_kinds_used"] = s.mutator_kinds_used;
  j["executed_tests_total"] = s.executed_tests_total;
  j["wall_time_total_ms"] = s.wall_time_total.count();
  j["methods_total"] = s.methods_total;
  j["methods_pseudo"] = s.methods_pseudo;
  j["lines_covered_pseudo"] = s.lines_covered_pseudo;
  j["lines_total_pseudo"] = s.lines_total_pseudo;
  j["lines_covered_total"] = s.lines_covered_total;
  j["lines_instrumented_total"] = s.lines_instrumented_total;
  return j;
}

classifier::ReportSummary summary_from(const nlohmann::json& j) {
  classifier::ReportSummary s;
  if (!j.at("score").is_null()) s.score = j.at("score").get<double>();
  s.killed = j.at("killed").get<std::uint64_t>();
  s.total_valid = j.at("total_valid").get<std::uint64_t>();
  s.survived = j.at("survived").get<std::uint64_t>();
  s.invalid = j.at("invalid").get<std::uint64_t>();
  s.mutator_kinds_used = j.at("mutator_kinds_used").get<std::uint64_t>();
  s.executed_tests_total = j.at("executed_tests_total").get<std::uint64_t>();
  s.wall_time_total = milliseconds(j.at("wall_time_total_ms").get<long long>());
  s.methods_total = j.at("methods_total").get<std::uint64_t>();
  s.methods_pseudo = j.at("methods_pseudo").get<std::uint64_t>();
  s.lines_covered_pseudo = j.at("lines_covered_pseudo").get<std::uint64_t>();
  s.lines_total_pseudo = j.at("lines_total_pseudo").get<std::uint64_t>();
  s.lines_covered_total = j.at("lines_covered_total").get<std::uint64_t>();
  s.lines_instrumented_total = j.at("lines_instrumented_total").get<std::uint64_t>();
  return s;
}

}  // namespace

ordered_json to_json(const ResultsFile& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["config"] = r.config;
  j["summary"] = summary_json(r.summary);
  ordered_json methods = ordered_json::array();
  for (const auto& m : r.methods) methods.push_back(method_json(m));
  j["methods"] = methods;
  ordered_json mutants = ordered_json::array();
  for (const auto& m : r.mutants) mutants.push_back(mutant_json(m));
  j["mutants"] = mutants;
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classifications) {
    ordered_json e;
    e["method_id"] = c.method_id;
    e["verdict"] = classifier::to_string(c.verdict);
    ordered_json surviving = ordered_json::array();
    for (auto k : c.surviving_variants) surviving.push_back(mutant::to_string(k));
    e["surviving_variants"] = surviving;
    e["killing_tests"] = c.killing_tests;
    auto tag = r.tags.find(c.method_id);
    e["reason_tag"] = tag == r.tags.end() ? ordered_json(nullptr) : ordered_json(tag->second);
    classes.push_back(e);
  }
  j["classifications"] = classes;
  j["notes"] = r.notes;
  j["timestamps"] = {{"started_at", r.started_at}, {"finished_at", r.finished_at}};
  return j;
}

int read_schema_version(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
    throw Error("not a results file: schema_version missing");
  }
  return j["schema_version"].get<int>();
}

ResultsFile results_from_json(const nlohmann::json& j) {
  ResultsFile r;
  try {
    r.schema_version = read_schema_version(j);
    r.config = j.at("config");
    r.summary = summary_from(j.at("summary"));
    for (const auto& m : j.at("methods")) r.methods.push_back(method_from(m));
    for (const auto& m : j.at("mutants")) r.mutants.push_back(mutant_from(m));
    for (const auto& e : j.at("classifications")) {
      classifier::MethodClassification c;
      c.method_id = e.at("method_id").get<std::string>();
      auto verdict = classifier::parse_verdict(e.at("verdict").get<std::string>());
      if (!verdict) throw Error("bad verdict for " + c.method_id);
      c.verdict = *verdict;
      for (const auto& k : e.at("surviving_variants")) {
        auto kind = mutant::parse_variant_kind(k.get<std::string>());
        if (!kind) throw Error("bad variant for " + c.method_id);
        c.surviving_variants.push_back(*kind);
      }
      c.killing_tests = e.at("killing_tests").get<std::set<std::string>>();
      if (!e.at("reason_tag").is_null()) r.tags[c.method_id] = e.at("reason_tag").get<std::string>();
      r.classifications.push_back(std::move(c));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.started_at = j.at("timestamps").at("started_at").get<std::string>();
    r.finished_at = j.at("timestamps").at("finished_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed results file: ") + e.what());
  }
  return r;
}

}  // namespace xmut::cli
