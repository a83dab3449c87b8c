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

#include "xmut/subject/project.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "xmut/error.hpp"
#include "xmut/hash.hpp"
#include "xmut/io.hpp"

namespace xmut::subject {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

bool hidden(const fs::path& name) {
  const std::string s = name.filename().string();
  return !s.empty() && s[0] == '.';
}

// Regular files below root, hidden entries pruned, sorted by generic path.
std::vector<std::string> walk(const fs::path& root) {
  std::vector<std::string> out;
  if (!fs::is_directory(root)) return out;
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    if (hidden(it->path())) {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file()) out.push_back(relative_generic(it->path(), root));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ProjectConfig load_project_config(const fs::path& root) {
  ProjectConfig config;
  const fs::path manifest = root / kManifestName;
  if (!fs::exists(manifest)) return config;
  json j;
  try {
    j = json::parse(read_file(manifest));
  } catch (const json::parse_error& e) {
    throw Error(manifest.string() + ": " + e.what());
  }
  static const std::vector<std::string> kKnown = {
      "test_globs", "exclude_globs", "include_dirs", "cxx", "cxxflags",
      "ldflags", "bundled_doctest", "assertion_patterns", "per_test_coverage",
      "assume_covered_on_coverage_failure", "timeout_floor_seconds", "gcov"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw Error(manifest.string() + ": unknown key '" + key + "'");
    }
  }
  try {
    read_field(j, "test_globs", config.test_globs);
    read_field(j, "exclude_globs", config.exclude_globs);
    read_field(j, "include_dirs", config.include_dirs);
    read_field(j, "cxx", config.cxx);
    read_field(j, "cxxflags", config.cxxflags);
    read_field(j, "ldflags", config.ldflags);
    read_field(j, "bundled_doctest", config.bundled_doctest);
    read_field(j, "assertion_patterns", config.assertion_patterns);
    read_field(j, "per_test_coverage", config.per_test_coverage);
    read_field(j, "assume_covered_on_coverage_failure",
               config.assume_covered_on_coverage_failure);
    read_field(j, "timeout_floor_seconds", config.timeout_floor_seconds);
    read_field(j, "gcov", config.gcov);
  } catch (const json::exception& e) {
    throw Error(manifest.string() + ": " + e.what());
  }
  return config;
}

bool is_cxx_source(const fs::path& path) {
  static const std::vector<std::string> kExt = {
      ".cpp", ".cc", ".cxx", ".c++", ".hpp", ".hh", ".h", ".hxx", ".ipp"};
  return std::find(kExt.begin(), kExt.end(), path.extension().string()) !=
         kExt.end();
}

bool is_translation_unit(const fs::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".cpp" || ext == ".cc" || ext == ".cxx" || ext == ".c++";
}

bool matches_any(const std::string& relative_path,
                 const std::vector<std::string>& globs) {
  return std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
    return ::fnmatch(g.c_str(), relative_path.c_str(), 0) == 0;
  });
}

ProjectFiles list_project_files(const fs::path& root,
                                const ProjectConfig& config) {
  ProjectFiles files;
  for (const std::string& rel : walk(root)) {
    if (!is_cxx_source(rel) || matches_any(rel, config.exclude_globs)) continue;
    (matches_any(rel, config.test_globs) ? files.tests : files.sources)
        .push_back(rel);
  }
  return files;
}

std::string tree_hash(const fs::path& root) {
  Sha256 h;
  for (const std::string& rel : walk(root)) {
    h.field(rel);
    h.field(read_file(root / rel));
  }
  return h.hex();
}

void copy_tree(const fs::path& root, const fs::path& dest) {
  fs::create_directories(dest);
  for (const std::string& rel : walk(root)) {
    const fs::path target = dest / rel;
    fs::create_directories(target.parent_path());
    fs::copy_file(root / rel, target, fs::copy_options::overwrite_existing);
  }
}

}  // namespace xmut::subject
