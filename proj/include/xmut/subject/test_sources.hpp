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
#include <string>
#include <vector>

#include "xmut/subject/discovery.hpp"
#include "xmut/subject/project.hpp"

namespace xmut::subject {

struct TestSources {
  /// Test id (as the runner reports it) -> comment-free body text.
  std::map<std::string, std::string> bodies;
  std::vector<Diagnostic> diagnostics;
};

/// Extracts doctest TEST_CASE, TEST_CASE_FIXTURE and SCENARIO bodies from
/// the project's test files.
TestSources extract_test_sources(const std::filesystem::path& project_root,
                                 const ProjectConfig& config);

/// Same, over in-memory text. `file` is only used for diagnostics.
void extract_test_sources_from(const std::string& file, std::string_view text,
                               TestSources& out);

/// True when any of the regex patterns matches `body`.
bool contains_assertion(const std::string& body,
                        const std::vector<std::string>& patterns);

}  // namespace xmut::subject
