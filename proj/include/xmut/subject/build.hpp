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

#include "xmut/subject/project.hpp"

namespace xmut::subject {

enum class BuildFlavor { kPlain, kCoverage };

struct BuildResult {
  bool ok = false;
  std::filesystem::path binary;
  std::string diagnostics;  // compiler output of the failing step
  int compiled = 0;         // translation units compiled (cache misses)
  int reused = 0;           // translation units served from the cache
};

/// Compiles a subject tree into one test binary with the configured
/// compiler.
///
/// Plain builds go through a content-addressed object cache shared by every
/// tree and campaign: the key covers the compiler, flags, the translation
/// unit's bytes and the bytes of every project header it reaches, so a
/// mutated file only recompiles the units that include it. Coverage builds
/// are written below the build directory because the profile data location
/// is fixed at compile time; test units that reach no project header cannot
/// carry subject code and are taken from the plain cache instead.
class Builder {
 public:
  Builder(ProjectConfig config, std::filesystem::path tree_root,
          std::filesystem::path build_dir, std::filesystem::path cache_dir);

  BuildResult build(BuildFlavor flavor);

  const std::filesystem::path& tree_root() const { return tree_root_; }
  const std::filesystem::path& build_dir() const { return build_dir_; }
  /// Directory holding the coverage objects and their .gcno/.gcda files.
  std::filesystem::path coverage_object_dir() const;

  /// Project files reachable through `#include` from `rel`, `rel` included.
  std::vector<std::string> project_dependencies(const std::string& rel);

 private:
  std::vector<std::string> compile_flags(BuildFlavor flavor) const;
  std::string object_key(const std::string& rel, BuildFlavor flavor);
  std::string resolve_include(const std::string& from, const std::string& name,
                              bool quoted) const;

  ProjectConfig config_;
  std::filesystem::path tree_root_;
  std::filesystem::path build_dir_;
  std::filesystem::path cache_dir_;
  std::vector<std::filesystem::path> include_dirs_;
  std::map<std::string, std::vector<std::string>> direct_includes_;
};

}  // namespace xmut::subject
