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
#include <span>
#include <string>
#include <vector>

#include "xmut/subject/method_site.hpp"

namespace xmut::subject {

struct ProjectConfig;

struct Diagnostic {
  std::string file;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct DiscoveryResult {
  std::vector<MethodSite> methods;       // sorted by file, then body start
  std::vector<Diagnostic> diagnostics;   // files skipped and why
};

struct SourceUnit {
  std::string file;  // project-relative path used in ids
  std::string text;
};

/// Finds every function definition with a body in the given sources.
/// Constructors, destructors, conversion operators, `main`, and declarations
/// without a body are not reported. Out-of-class member definitions take
/// their access level from the in-class declaration when one of the units
/// declares it.
DiscoveryResult discover_in_sources(std::span<const SourceUnit> units);

/// Reads the project's non-test sources and runs discover_in_sources.
DiscoveryResult discover_methods(const std::filesystem::path& project_root,
                                 const ProjectConfig& config);

struct ReturnTypeInfo {
  ReturnKind kind;
  std::string null_equivalent;  // only meaningful for kReference
};

/// Maps a normalised return-type token sequence to a return kind.
ReturnTypeInfo classify_return_type(const std::vector<std::string>& tokens);

/// Joins tokens with a space only between two word-like tokens:
/// {"const","std","::","string","&"} -> "const std::string&".
std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace xmut::subject
