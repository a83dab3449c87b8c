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
#include <string_view>
#include <vector>

namespace xmut::subject {

enum class TokenKind { kIdentifier, kNumber, kString, kChar, kPunct };

/// A C++ token. Comments and preprocessor directives never become tokens.
struct Token {
  TokenKind kind;
  std::string_view text;  // view into the lexed source
  std::size_t offset;
  int line;

  bool is(std::string_view s) const { return text == s; }
  bool is_word() const {
    return kind == TokenKind::kIdentifier || kind == TokenKind::kNumber;
  }
};

/// Tokenises C++ source. Multi-character punctuators are limited to `::`,
/// `->`, `...` and `&&`; everything else (including `>>`) is split into
/// single characters so template brackets can be counted.
/// Throws ParseError on unterminated comments or literals.
std::vector<Token> tokenize(std::string_view source);

}  // namespace xmut::subject
