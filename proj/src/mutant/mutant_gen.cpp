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

#include "xmut/mutant_gen.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace xmut::mutant {

namespace {

constexpr std::array<std::pair<VariantKind, std::string_view>, 10> kNames{{
    {VariantKind::kEmptyBody, "empty_body"},
    {VariantKind::kReturnTrue, "return_true"},
    {VariantKind::kReturnFalse, "return_false"},
    {VariantKind::kReturnZero, "return_zero"},
    {VariantKind::kReturnOne, "return_one"},
    {VariantKind::kReturnEmptyString, "return_empty_string"},
    {VariantKind::kReturnConstantStringA, "return_constant_string_A"},
    {VariantKind::kReturnCharSpace, "return_char_space"},
    {VariantKind::kReturnCharA, "return_char_A"},
    {VariantKind::kReturnNullEquivalent, "return_null_equivalent"},
}};

std::string literal_for(const MethodSite& m, VariantKind kind) {
  switch (kind) {
    case VariantKind::kReturnTrue: return "true";
    case VariantKind::kReturnFalse: return "false";
    case VariantKind::kReturnZero: return m.return_kind == ReturnKind::kFloatLike ? "0.0" : "0";
    case VariantKind::kReturnOne: return m.return_kind == ReturnKind::kFloatLike ? "1.0" : "1";
    case VariantKind::kReturnEmptyString: return "\"\"";
    case VariantKind::kReturnConstantStringA: return "\"A\"";
    case VariantKind::kReturnCharSpace: return "' '";
    case VariantKind::kReturnCharA: return "'A'";
    case VariantKind::kReturnNullEquivalent: return m.null_equivalent;
    case VariantKind::kEmptyBody: break;
  }
  return {};
}

}  // namespace

std::string_view to_string(VariantKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<VariantKind> parse_variant_kind(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::vector<VariantKind> variants_for(ReturnKind kind) {
  switch (kind) {
    case ReturnKind::kVoid: return {VariantKind::kEmptyBody};
    case ReturnKind::kBoolean: return {VariantKind::kReturnTrue, VariantKind::kReturnFalse};
    case ReturnKind::kIntegerLike:
    case ReturnKind::kFloatLike: return {VariantKind::kReturnZero, VariantKind::kReturnOne};
    case ReturnKind::kStringLike:
      return {VariantKind::kReturnEmptyString, VariantKind::kReturnConstantStringA};
    case ReturnKind::kCharLike: return {VariantKind::kReturnCharSpace, VariantKind::kReturnCharA};
    case ReturnKind::kReference: return {VariantKind::kReturnNullEquivalent};
  }
  return {};
}

std::string render_replacement(const MethodSite& method, VariantKind kind) {
  const auto allowed = variants_for(method.return_kind);
  if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) {
    throw std::logic_error(std::string(to_string(kind)) + " does not apply to " +
                           std::string(subject::to_string(method.return_kind)) + " method " +
                           method.id);
  }
  if (kind == VariantKind::kEmptyBody) return "{}";
  const std::string value = literal_for(method, kind);
  if (value.empty()) {
    throw std::logic_error("no null-equivalent for " + method.return_type + " in " + method.id);
  }
  return "{ return " + value + "; }";
}

bool is_mutatable(const MethodSite& method) {
  return method.return_kind != ReturnKind::kReference || !method.null_equivalent.empty();
}

Generation generate_mutants(const std::vector<MethodSite>& methods) {
  Generation out;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const MethodSite& m = methods[i];
    if (m.covered_lines.empty()) {
      out.uncovered.push_back(m.id);
      continue;
    }
    if (!is_mutatable(m)) {
      out.unmutatable.push_back(m.id);
      continue;
    }
    for (VariantKind kind : variants_for(m.return_kind)) {
      ExtremeMutant mutant;
      mutant.mutant_id = m.id + "#" + std::string(to_string(kind));
      mutant.method_id = m.id;
      mutant.method_index = i;
      mutant.variant = {kind, render_replacement(m, kind)};
      out.mutants.push_back(std::move(mutant));
    }
  }
  return out;
}

}  // namespace xmut::mutant
