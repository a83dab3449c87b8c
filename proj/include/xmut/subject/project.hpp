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
#include <string>
#include <vector>

namespace xmut::subject {

/// Layout and toolchain settings of a subject project. Read from an optional
/// `xmut.json` at the project root; every field has a default.
struct ProjectConfig {
  /// Paths (relative, forward slashes) matching any of these are test code
  /// and never mutation targets. Matched with fnmatch(3), `*` crosses '/'.
  std::vector<std::string> test_globs{"tests/*", "test/*", "*_test.cpp",
                                      "*_test.cc"};
  std::vector<std::string> exclude_globs{"build/*", "build-*/*",
                                         "cmake-build-*/*"};
  std::vector<std::string> include_dirs{"include", "src"};
  std::string cxx = "c++";
  std::vector<std::string> cxxflags{"-std=c++20", "-O0"};
  std::vector<std::string> ldflags;
  /// Adds the doctest header shipped with xmut to the include path.
  bool bundled_doctest = true;
  /// Regexes searched in test bodies; a body matching none is assertion-free.
  std::vector<std::string> assertion_patterns{
      R"(\b(CHECK|REQUIRE|WARN)(_[A-Z_]+)?\s*\()",
      R"(\b(EXPECT|ASSERT)_[A-Z_]+\s*\()",
      R"(\bFAIL(_CHECK)?\s*\()",
      R"(\bassert\s*\()",
  };
  /// When false, every test is assumed to cover every covered line.
  bool per_test_coverage = true;
  /// When coverage capture fails, treat all method bodies as covered
  /// instead of aborting.
  bool assume_covered_on_coverage_failure = false;
  double timeout_floor_seconds = 10.0;
  std::string gcov = "gcov";
};

inline constexpr const char* kManifestName = "xmut.json";
inline constexpr const char* kWorkDirName = ".xmut";

/// Loads `<root>/xmut.json` over the defaults. Unknown keys are rejected.
ProjectConfig load_project_config(const std::filesystem::path& root);

struct ProjectFiles {
  std::vector<std::string> sources;  // non-test C++ files, headers included
  std::vector<std::string> tests;    // test C++ files
};

bool is_cxx_source(const std::filesystem::path& path);
bool is_translation_unit(const std::filesystem::path& path);
bool matches_any(const std::string& relative_path,
                 const std::vector<std::string>& globs);

/// Walks the tree, skipping hidden directories and excluded paths.
/// Both lists are sorted.
ProjectFiles list_project_files(const std::filesystem::path& root,
                                const ProjectConfig& config);

/// SHA-256 over every regular file below `root` (paths and contents),
/// hidden directories excluded.
std::string tree_hash(const std::filesystem::path& root);

/// Copies every non-hidden file below `root` into `dest`.
void copy_tree(const std::filesystem::path& root,
               const std::filesystem::path& dest);

}  // namespace xmut::subject
