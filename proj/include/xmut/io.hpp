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

namespace xmut {

std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temporary and renames, so readers never observe
/// a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

/// Truncates and rewrites in place; keeps the inode and permissions.
void write_file(const std::filesystem::path& path, std::string_view data);

/// Forward-slash path of `path` relative to `base`.
std::string relative_generic(const std::filesystem::path& path,
                             const std::filesystem::path& base);

}  // namespace xmut
