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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmut/classifier.hpp"
#include "xmut/orchestrator.hpp"
#include "xmut/subject/method_site.hpp"

namespace xmut::cli {

inline constexpr int kResultsSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitThreshold = 1, kExitRefused = 2 };

/// Everything a run produced; reports can be regenerated from this plus the
/// baseline coverage file.
struct ResultsFile {
  int schema_version = kResultsSchemaVersion;
  nlohmann::ordered_json config;  // snapshot of the effective settings
  std::vector<subject::MethodSite> methods;
  std::vector<orchestrator::MutantResult> mutants;
  std::vector<classifier::MethodClassification> classifications;
  std::map<std::string, std::string> tags;
  classifier::ReportSummary summary;
  std::vector<std::string> notes;
  std::string started_at;   // UTC, ISO 8601
  std::string finished_at;
};

nlohmann::ordered_json to_json(const ResultsFile& results);

/// Throws xmut::Error on malformed input. Schema versions are not checked
/// here; see read_schema_version.
ResultsFile results_from_json(const nlohmann::json& j);

int read_schema_version(const nlohmann::json& j);

/// `xmut run ...`; args exclude the program name and the subcommand.
int cmd_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `xmut report ...`
int cmd_report(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Dispatches on the first argument.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xmut::cli
