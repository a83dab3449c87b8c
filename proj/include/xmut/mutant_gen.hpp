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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmut/subject/method_site.hpp"

namespace xmut::mutant {

using subject::MethodSite;
using subject::ReturnKind;

enum class VariantKind {
  kEmptyBody,
  kReturnTrue,
  kReturnFalse,
  kReturnZero,
  kReturnOne,
  kReturnEmptyString,
  kReturnConstantStringA,
  kReturnCharSpace,
  kReturnCharA,
  kReturnNullEquivalent,
};

std::string_view to_string(VariantKind kind);
std::optional<VariantKind> parse_variant_kind(std::string_view text);

struct ReplacementVariant {
  VariantKind kind;
  std::string rendered_body;

  friend bool operator==(const ReplacementVariant&, const ReplacementVariant&) = default;
};

struct ExtremeMutant {
  std::string mutant_id;  // method id + "#" + variant name
  std::string method_id;
  std::size_t method_index = 0;  // into the list given to generate_mutants
  ReplacementVariant variant;

  friend bool operator==(const ExtremeMutant&, const ExtremeMutant&) = default;
};

/// The replacement kinds applied to a method of the given return kind.
std::vector<VariantKind> variants_for(ReturnKind kind);

/// Replacement text for the `{...}` span. Throws std::logic_error when the
/// variant does not apply to the method's return kind, or when a reference
/// method has no null-equivalent spelling.
std::string render_replacement(const MethodSite& method, VariantKind kind);

/// A method gets mutants only if it has covered lines and can be rendered.
bool is_mutatable(const MethodSite& method);

struct Generation {
  std::vector<ExtremeMutant> mutants;
  std::vector<std::string> uncovered;    // method ids without covered lines
  std::vector<std::string> unmutatable;  // covered but nothing to render
};

/// Mutants in method order, then variants_for order.
Generation generate_mutants(const std::vector<MethodSite>& methods);

}  // namespace xmut::mutant
