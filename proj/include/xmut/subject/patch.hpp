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
#include <string_view>

#include "xmut/subject/method_site.hpp"

namespace xmut::subject {

/// An applied body replacement. Reverts on destruction unless reverted
/// explicitly; revert restores the file byte for byte.
class PatchHandle {
 public:
  PatchHandle(std::filesystem::path file, std::string original);
  ~PatchHandle();
  PatchHandle(PatchHandle&& other) noexcept;
  PatchHandle& operator=(PatchHandle&&) = delete;
  PatchHandle(const PatchHandle&) = delete;
  PatchHandle& operator=(const PatchHandle&) = delete;

  void revert();
  bool active() const { return active_; }
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::string original_;
  bool active_ = true;
};

/// Replaces `body` in `file` with `replacement`. The file must still hash to
/// `expected_file_hash` (captured at discovery); otherwise StaleSpanError is
/// thrown and the file is left untouched.
[[nodiscard]] PatchHandle apply_mutation(const std::filesystem::path& file,
                                         const BodySpan& body,
                                         std::string_view replacement,
                                         const std::string& expected_file_hash);

/// Convenience overload resolving `site.file` below `tree_root`.
[[nodiscard]] PatchHandle apply_mutation(const std::filesystem::path& tree_root,
                                         const MethodSite& site,
                                         std::string_view replacement);

}  // namespace xmut::subject
