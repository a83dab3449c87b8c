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

#include "xmut/coverage/model.hpp"

namespace xmut::coverage {

void CoverageModel::add(const std::string& file, int line, std::uint64_t hits) {
  files_[file][line] += hits;
}

bool CoverageModel::instrumented(const std::string& file, int line) const {
  auto f = files_.find(file);
  return f != files_.end() && f->second.count(line) > 0;
}

bool CoverageModel::covered(const std::string& file, int line) const {
  return hits(file, line) > 0;
}

std::uint64_t CoverageModel::hits(const std::string& file, int line) const {
  auto f = files_.find(file);
  if (f == files_.end()) return 0;
  auto l = f->second.find(line);
  return l == f->second.end() ? 0 : l->second;
}

std::size_t CoverageModel::instrumented_count() const {
  std::size_t n = 0;
  for (const auto& [file, lines] : files_) n += lines.size();
  return n;
}

std::size_t CoverageModel::covered_count() const {
  std::size_t n = 0;
  for (const auto& [file, lines] : files_) {
    for (const auto& [line, hits] : lines) n += hits > 0 ? 1 : 0;
  }
  return n;
}

std::set<LineRef> CoverageModel::covered_lines() const {
  std::set<LineRef> out;
  for (const auto& [file, lines] : files_) {
    for (const auto& [line, hits] : lines) {
      if (hits > 0) out.emplace(file, line);
    }
  }
  return out;
}

}  // namespace xmut::coverage
