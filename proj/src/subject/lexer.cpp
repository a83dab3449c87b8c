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

#include "xmut/subject/lexer.hpp"

#include <cctype>
#include <string>

#include "xmut/error.hpp"

namespace xmut::subject {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_literal_prefix(std::string_view id) {
  return id == "L" || id == "u" || id == "U" || id == "u8" || id == "R" ||
         id == "LR" || id == "uR" || id == "UR" || id == "u8R";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        at_line_start_ = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        skip_line_comment();
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (c == '#' && at_line_start_) {
        skip_directive();
        continue;
      }
      at_line_start_ = false;
      const std::size_t start = pos_;
      const int start_line = line_;
      if (ident_start(c)) {
        while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
        std::string_view id = src_.substr(start, pos_ - start);
        if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'') &&
            is_literal_prefix(id)) {
          const bool raw = id.back() == 'R';
          if (src_[pos_] == '"') {
            raw ? lex_raw_string() : lex_quoted('"');
            out.push_back(make(TokenKind::kString, start, start_line));
          } else {
            lex_quoted('\'');
            out.push_back(make(TokenKind::kChar, start, start_line));
          }
          continue;
        }
        out.push_back(make(TokenKind::kIdentifier, start, start_line));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        lex_number();
        out.push_back(make(TokenKind::kNumber, start, start_line));
        continue;
      }
      if (c == '"') {
        lex_quoted('"');
        out.push_back(make(TokenKind::kString, start, start_line));
        continue;
      }
      if (c == '\'') {
        lex_quoted('\'');
        out.push_back(make(TokenKind::kChar, start, start_line));
        continue;
      }
      std::size_t len = 1;
      if ((c == ':' && peek(1) == ':') || (c == '-' && peek(1) == '>') ||
          (c == '&' && peek(1) == '&')) {
        len = 2;
      } else if (c == '.' && peek(1) == '.' && peek(2) == '.') {
        len = 3;
      }
      pos_ += len;
      out.push_back(make(TokenKind::kPunct, start, start_line));
    }
    return out;
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  Token make(TokenKind kind, std::size_t start, int line) const {
    return Token{kind, src_.substr(start, pos_ - start), start, line};
  }

  void skip_line_comment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && peek(1) == '\n') {
        pos_ += 2;
        ++line_;
        continue;
      }
      ++pos_;
    }
  }

  void skip_block_comment() {
    const int start_line = line_;
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && peek(1) == '/') {
        pos_ += 2;
        return;
      }
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    throw ParseError("unterminated block comment", start_line);
  }

  void skip_directive() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && peek(1) == '\n') {
        pos_ += 2;
        ++line_;
        continue;
      }
      if (src_[pos_] == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (src_[pos_] == '/' && peek(1) == '/') {
        skip_line_comment();
        return;
      }
      ++pos_;
    }
  }

  void lex_quoted(char quote) {
    const int start_line = line_;
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        if (peek(1) == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == '\n') break;
      ++pos_;
      if (c == quote) return;
    }
    throw ParseError(quote == '"' ? "unterminated string literal"
                                  : "unterminated character literal",
                     start_line);
  }

  void lex_raw_string() {
    const int start_line = line_;
    ++pos_;  // opening quote
    const std::size_t delim_start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '(') ++pos_;
    if (pos_ >= src_.size()) {
      throw ParseError("malformed raw string literal", start_line);
    }
    const std::string closing = ")" +
                                std::string(src_.substr(delim_start, pos_ - delim_start)) +
                                "\"";
    const std::size_t end = src_.find(closing, pos_);
    if (end == std::string_view::npos) {
      throw ParseError("unterminated raw string literal", start_line);
    }
    for (std::size_t i = pos_; i < end; ++i) {
      if (src_[i] == '\n') ++line_;
    }
    pos_ = end + closing.size();
  }

  void lex_number() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (ident_char(c) || c == '.' || c == '\'') {
        ++pos_;
        continue;
      }
      const char prev = src_[pos_ - 1];
      if ((c == '+' || c == '-') &&
          (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')) {
        ++pos_;
        continue;
      }
      break;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  bool at_line_start_ = true;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace xmut::subject
