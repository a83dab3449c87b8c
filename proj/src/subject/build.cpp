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

#include "xmut/subject/build.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <regex>
#include <set>

#include "xmut/error.hpp"
#include "xmut/hash.hpp"
#include "xmut/io.hpp"
#include "xmut/subject/process.hpp"

#ifndef XMUT_BUNDLED_INCLUDE_DIR
#define XMUT_BUNDLED_INCLUDE_DIR ""
#endif

namespace xmut::subject {

namespace fs = std::filesystem;

namespace {

std::string sanitize(const std::string& rel) {
  std::string out = rel;
  std::replace(out.begin(), out.end(), '/', '_');
  return out;
}

// Unique temporary name next to `target` for write-then-rename.
fs::path temp_sibling(const fs::path& target) {
  static std::atomic<unsigned> counter{0};
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  return tmp;
}

}  // namespace

Builder::Builder(ProjectConfig config, fs::path tree_root, fs::path build_dir,
                 fs::path cache_dir)
    : config_(std::move(config)),
      tree_root_(fs::absolute(tree_root)),
      build_dir_(fs::absolute(build_dir)),
      cache_dir_(fs::absolute(cache_dir)) {
  for (const std::string& dir : config_.include_dirs) {
    fs::path p = dir;
    include_dirs_.push_back(p.is_absolute() ? p : tree_root_ / p);
  }
}

fs::path Builder::coverage_object_dir() const { return build_dir_ / "coverage" / "obj"; }

std::vector<std::string> Builder::compile_flags(BuildFlavor flavor) const {
  std::vector<std::string> flags = config_.cxxflags;
  for (const fs::path& dir : include_dirs_) {
    // Relative spelling keeps objects independent of where the tree lives.
    const std::string rel = relative_generic(dir, tree_root_);
    flags.push_back("-I" + (rel.rfind("..", 0) == 0 ? dir.string() : rel));
  }
  if (config_.bundled_doctest && std::string(XMUT_BUNDLED_INCLUDE_DIR).size() > 0) {
    flags.push_back(std::string("-isystem") + XMUT_BUNDLED_INCLUDE_DIR);
  }
  if (flavor == BuildFlavor::kCoverage) flags.push_back("--coverage");
  return flags;
}

std::string Builder::resolve_include(const std::string& from, const std::string& name,
                                     bool quoted) const {
  std::vector<fs::path> candidates;
  if (quoted) candidates.push_back((tree_root_ / from).parent_path() / name);
  for (const fs::path& dir : include_dirs_) candidates.push_back(dir / name);
  for (const fs::path& c : candidates) {
    const fs::path normal = c.lexically_normal();
    const std::string rel = relative_generic(normal, tree_root_);
    if (rel.rfind("..", 0) == 0) continue;  // outside the project
    if (fs::is_regular_file(normal)) return rel;
  }
  return {};
}

std::vector<std::string> Builder::project_dependencies(const std::string& rel) {
  static const std::regex kInclude(R"re(^\s*#\s*include\s*([<"])([^>"]+)[>"])re");
  std::set<std::string> seen;
  std::vector<std::string> stack{rel};
  while (!stack.empty()) {
    const std::string file = stack.back();
    stack.pop_back();
    if (!seen.insert(file).second) continue;
    auto it = direct_includes_.find(file);
    if (it == direct_includes_.end()) {
      std::vector<std::string> direct;
      const std::string text = read_file(tree_root_ / file);
      std::size_t pos = 0;
      while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string line = text.substr(pos, eol - pos);
        std::smatch m;
        if (line.find("include") != std::string::npos && std::regex_search(line, m, kInclude)) {
          std::string dep = resolve_include(file, m[2].str(), m[1].str() == "\"");
          if (!dep.empty()) direct.push_back(std::move(dep));
        }
        pos = eol + 1;
      }
      it = direct_includes_.emplace(file, std::move(direct)).first;
    }
    for (const std::string& dep : it->second) stack.push_back(dep);
  }
  return {seen.begin(), seen.end()};
}

std::string Builder::object_key(const std::string& rel, BuildFlavor flavor) {
  Sha256 h;
  h.field("xmut-object-v1");
  h.field(config_.cxx);
  for (const std::string& f : compile_flags(flavor)) h.field(f);
  h.field(rel);
  for (const std::string& dep : project_dependencies(rel)) {
    h.field(dep);
    h.field(read_file(tree_root_ / dep));
  }
  return h.hex();
}

BuildResult Builder::build(BuildFlavor flavor) {
  // Contents change between builds (that is the point); forget scanned includes.
  direct_includes_.clear();
  const ProjectFiles files = list_project_files(tree_root_, config_);
  std::vector<std::pair<std::string, bool>> units;  // (path, is test)
  for (const std::string& s : files.sources) {
    if (is_translation_unit(s)) units.emplace_back(s, false);
  }
  for (const std::string& t : files.tests) {
    if (is_translation_unit(t)) units.emplace_back(t, true);
  }

  BuildResult result;
  const fs::path out_dir =
      build_dir_ / (flavor == BuildFlavor::kCoverage ? "coverage" : "plain");
  fs::create_directories(out_dir);
  fs::create_directories(cache_dir_);
  if (flavor == BuildFlavor::kCoverage) {
    fs::remove_all(coverage_object_dir());
    fs::create_directories(coverage_object_dir());
  }

  std::vector<std::string> objects;
  for (const auto& [rel, is_test] : units) {
    bool instrument = flavor == BuildFlavor::kCoverage;
    if (instrument && is_test) {
      const auto deps = project_dependencies(rel);
      instrument = std::any_of(deps.begin(), deps.end(), [&](const std::string& d) {
        return d != rel;
      });
    }
    const BuildFlavor unit_flavor = instrument ? BuildFlavor::kCoverage : BuildFlavor::kPlain;
    fs::path object;
    if (instrument) {
      object = coverage_object_dir() / (sanitize(rel) + ".o");
    } else {
      object = cache_dir_ / (object_key(rel, BuildFlavor::kPlain) + ".o");
      if (fs::exists(object)) {
        ++result.reused;
        objects.push_back(object.string());
        continue;
      }
    }
    const fs::path target = instrument ? object : temp_sibling(object);
    std::vector<std::string> cmd{config_.cxx};
    for (const std::string& f : compile_flags(unit_flavor)) cmd.push_back(f);
    cmd.insert(cmd.end(), {"-c", rel, "-o", target.string()});
    ProcessResult pr = run_process(cmd, tree_root_);
    if (!pr.ok()) {
      std::error_code ec;
      fs::remove(target, ec);
      result.diagnostics = "compiling " + rel + " failed:\n" + pr.output;
      return result;
    }
    if (!instrument) {
      std::error_code ec;
      fs::rename(target, object, ec);
      if (ec) throw InfrastructureError("cannot store object " + object.string());
    }
    ++result.compiled;
    objects.push_back(object.string());
  }

  result.binary = out_dir / "subject_tests";
  std::vector<std::string> link{config_.cxx};
  link.insert(link.end(), objects.begin(), objects.end());
  if (flavor == BuildFlavor::kCoverage) link.push_back("--coverage");
  for (const std::string& f : config_.ldflags) link.push_back(f);
  link.push_back("-o");
  link.push_back(result.binary.string());
  ProcessResult pr = run_process(link, tree_root_);
  if (!pr.ok()) {
    result.diagnostics = "linking failed:\n" + pr.output;
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace xmut::subject
