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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace xmut::coverage {

/// (file, line) with a project-relative file path.
using LineRef = std::pair<std::string, int>;

/// Line hit counts per file. A line present in the map is instrumented; it
/// is covered when its count is at least one.
class CoverageModel {
 public:
  using FileHits = std::map<int, std::uint64_t>;

  /// Adds `hits` to the line, creating it as instrumented if absent.
  void add(const std::string& file, int line, std::uint64_t hits);

  bool instrumented(const std::string& file, int line) const;
  bool covered(const std::string& file, int line) const;
  std::uint64_t hits(const std::string& file, int line) const;

  std::size_t instrumented_count() const;
  std::size_t covered_count() const;
  std::set<LineRef> covered_lines() const;

  const std::map<std::string, FileHits>& files() const { return files_; }
  bool empty() const { return files_.empty(); }

  friend bool operator==(const CoverageModel&, const CoverageModel&) = default;

 private:
  std::map<std::string, FileHits> files_;
};

}  // namespace xmut::coverage
