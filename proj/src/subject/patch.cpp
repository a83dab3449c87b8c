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

#include "xmut/subject/patch.hpp"

#include "xmut/error.hpp"
#include "xmut/hash.hpp"
#include "xmut/io.hpp"

namespace xmut::subject {

namespace fs = std::filesystem;

PatchHandle::PatchHandle(fs::path file, std::string original)
    : file_(std::move(file)), original_(std::move(original)) {}

PatchHandle::PatchHandle(PatchHandle&& other) noexcept
    : file_(std::move(other.file_)),
      original_(std::move(other.original_)),
      active_(other.active_) {
  other.active_ = false;
}

PatchHandle::~PatchHandle() {
  try {
    revert();
  } catch (...) {
    // Destructors must not throw; the orchestrator verifies tree hashes.
  }
}

void PatchHandle::revert() {
  if (!active_) return;
  write_file(file_, original_);
  active_ = false;
}

PatchHandle apply_mutation(const fs::path& file, const BodySpan& body,
                           std::string_view replacement,
                           const std::string& expected_file_hash) {
  std::string original = read_file(file);
  if (sha256_hex(original) != expected_file_hash) {
    throw StaleSpanError(file.string() +
                         " changed since discovery; re-run discovery");
  }
  if (body.end > original.size() || body.begin >= body.end ||
      original[body.begin] != '{' || original[body.end - 1] != '}') {
    throw StaleSpanError(file.string() + ": body span does not match file");
  }
  std::string mutated = original.substr(0, body.begin);
  mutated += replacement;
  mutated += original.substr(body.end);
  PatchHandle handle(file, std::move(original));
  write_file(file, mutated);
  return handle;
}

PatchHandle apply_mutation(const fs::path& tree_root, const MethodSite& site,
                           std::string_view replacement) {
  return apply_mutation(tree_root / site.file, site.body, replacement, site.file_hash);
}

}  // namespace xmut::subject
