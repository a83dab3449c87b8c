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

#include "xmut/subject/method_site.hpp"

#include <array>
#include <utility>

namespace xmut::subject {

namespace {

constexpr std::array<std::pair<AccessLevel, std::string_view>, 5> kAccess{{
    {AccessLevel::kPublic, "public"},
    {AccessLevel::kPackage, "package"},
    {AccessLevel::kProtected, "protected"},
    {AccessLevel::kPrivate, "private"},
    {AccessLevel::kOther, "other"},
}};

constexpr std::array<std::pair<ReturnKind, std::string_view>, 7> kKinds{{
    {ReturnKind::kVoid, "void"},
    {ReturnKind::kBoolean, "boolean"},
    {ReturnKind::kIntegerLike, "integer_like"},
    {ReturnKind::kFloatLike, "float_like"},
    {ReturnKind::kStringLike, "string_like"},
    {ReturnKind::kCharLike, "char_like"},
    {ReturnKind::kReference, "reference"},
}};

}  // namespace

std::string_view to_string(AccessLevel access) {
  for (const auto& [value, name] : kAccess) {
    if (value == access) return name;
  }
  return "other";
}

std::string_view to_string(ReturnKind kind) {
  for (const auto& [value, name] : kKinds) {
    if (value == kind) return name;
  }
  return "reference";
}

std::optional<AccessLevel> parse_access(std::string_view text) {
  for (const auto& [value, name] : kAccess) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::optional<ReturnKind> parse_return_kind(std::string_view text) {
  for (const auto& [value, name] : kKinds) {
    if (name == text) return value;
  }
  return std::nullopt;
}

}  // namespace xmut::subject
