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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xmut::subject {

enum class AccessLevel { kPublic, kPackage, kProtected, kPrivate, kOther };

enum class ReturnKind {
  kVoid,
  kBoolean,
  kIntegerLike,
  kFloatLike,
  kStringLike,
  kCharLike,
  kReference,
};

std::string_view to_string(AccessLevel access);
std::string_view to_string(ReturnKind kind);
std::optional<AccessLevel> parse_access(std::string_view text);
std::optional<ReturnKind> parse_return_kind(std::string_view text);

/// Byte range of a method body, braces included, plus the lines of those
/// braces. `begin` is the offset of '{' and `end` is one past the '}'.
struct BodySpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int open_line = 0;
  int close_line = 0;

  /// First line attributed to the body. The line holding the opening brace
  /// carries the function entry and is excluded unless the whole body sits
  /// on one line.
  int first_body_line() const {
    return open_line == close_line ? open_line : open_line + 1;
  }
  int last_body_line() const { return close_line; }
  bool contains_line(int line) const {
    return line >= first_body_line() && line <= last_body_line();
  }

  friend bool operator==(const BodySpan&, const BodySpan&) = default;
};

/// A function or member function definition with a replaceable body.
struct MethodSite {
  std::string id;              // file + "::" + qualified name + signature
  std::string file;            // project-relative, forward slashes
  std::string name;            // unqualified declared name
  std::string qualified_name;  // namespaces and classes included
  std::string signature;       // "(int, const std::string&) const"
  std::string return_type;     // normalised spelling
  AccessLevel access = AccessLevel::kOther;
  ReturnKind return_kind = ReturnKind::kReference;
  /// Expression that stands in for "null" when the kind is kReference;
  /// empty when the declared type has none (for example an lvalue
  /// reference or a deduced `auto`).
  std::string null_equivalent;
  bool generic_return = false;  // return type names a template parameter
  BodySpan body;
  std::string file_hash;  // sha256 of the whole file at discovery
  std::vector<int> covered_lines;  // sorted; filled by the coverage join

  int body_line_count() const {
    return body.last_body_line() - body.first_body_line() + 1;
  }

  friend bool operator==(const MethodSite&, const MethodSite&) = default;
};

}  // namespace xmut::subject
