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

#include "xmut/subject/discovery.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "xmut/error.hpp"
#include "xmut/hash.hpp"
#include "xmut/io.hpp"
#include "xmut/subject/lexer.hpp"
#include "xmut/subject/project.hpp"

namespace xmut::subject {

namespace fs = std::filesystem;

namespace {

const std::set<std::string_view> kSpecifiers = {
    "static",      "inline",       "virtual",  "constexpr", "consteval",
    "constinit",   "explicit",     "friend",   "extern",    "mutable",
    "thread_local", "register",    "__inline", "__forceinline"};

const std::set<std::string_view> kBuiltinTypeWords = {
    "void",     "bool",     "char",  "wchar_t", "char8_t", "char16_t",
    "char32_t", "short",    "int",   "long",    "signed",  "unsigned",
    "float",    "double",   "auto",  "const",   "volatile"};

// Keywords that can precede '(' without naming a function.
const std::set<std::string_view> kNotCallee = {
    "decltype", "sizeof",  "alignof", "noexcept",   "alignas", "__attribute__",
    "__declspec", "typeof", "requires", "throw",    "return",  "if",
    "while",    "for",     "switch",  "static_assert"};

bool is_identifier(const Token& t) { return t.kind == TokenKind::kIdentifier; }

bool is_integer_name(const std::string& name) {
  static const std::set<std::string> kNames = {
      "size_t",   "ssize_t",  "ptrdiff_t", "intptr_t", "uintptr_t",
      "intmax_t", "uintmax_t", "off_t"};
  std::string base = name;
  if (base.rfind("std::", 0) == 0) base = base.substr(5);
  if (kNames.count(base)) return true;
  // [u]int{8,16,32,64}_t and the fast/least variants.
  std::string_view v = base;
  if (v.substr(0, 1) == "u") v.remove_prefix(1);
  if (v.substr(0, 3) != "int") return false;
  v.remove_prefix(3);
  if (v.substr(0, 5) == "_fast") v.remove_prefix(5);
  else if (v.substr(0, 6) == "_least") v.remove_prefix(6);
  return v == "8_t" || v == "16_t" || v == "32_t" || v == "64_t";
}

struct Scope {
  enum class Kind { kNamespace, kClass, kLinkage };
  Scope(Kind k, std::string n) : kind(k), name(std::move(n)) {}

  Kind kind;
  std::string name;
  AccessLevel access = AccessLevel::kPublic;
  bool anonymous = false;
  bool shares_brace = false;  // inner component of `namespace a::b {`
  std::vector<std::string> template_params;
};

struct FunctionHeader {
  std::size_t name_begin = 0;  // indices into the declaration token list
  std::size_t name_end = 0;    // one past the name
  std::size_t params_open = 0;
  std::size_t params_close = 0;
  bool ctor_initializer = false;
  std::vector<std::size_t> return_tokens;
  std::set<std::string_view> specifiers;
};

// A definition found before access levels of out-of-class members are known.
struct PendingDefinition {
  MethodSite site;
  bool in_class = false;
  bool internal_linkage = false;
  std::string lookup_key;  // qualified name with template arguments removed
  bool qualified_declarator = false;  // declared as `A::f`
};

std::string strip_template_args(std::string_view name) {
  std::string out;
  int depth = 0;
  for (char c : name) {
    if (c == '<') ++depth;
    else if (c == '>' && depth > 0) --depth;
    else if (depth == 0) out.push_back(c);
  }
  return out;
}

class Parser {
 public:
  Parser(const SourceUnit& unit, std::map<std::string, AccessLevel>& access)
      : unit_(unit), tokens_(tokenize(unit.text)), access_(access) {}

  std::vector<PendingDefinition> run() {
    std::size_t i = 0;
    const std::size_t n = tokens_.size();
    while (i < n) {
      const Token& t = tokens_[i];
      if (t.is(";")) {
        finish_declaration();
        ++i;
        continue;
      }
      if (t.is("}")) {
        if (scopes_.empty()) throw ParseError("unbalanced '}'", t.line);
        bool shared = true;
        while (shared && !scopes_.empty()) {
          shared = scopes_.back().shares_brace;
          scopes_.pop_back();
        }
        reset();
        ++i;
        continue;
      }
      if (decl_.empty()) {
        if (std::optional<std::size_t> next = declaration_start(i)) {
          i = *next;
          continue;
        }
      }
      if (t.is("[") && peek(i + 1, "[")) {
        i = skip_group(i);  // attribute
        continue;
      }
      if (t.is("__attribute__") || t.is("alignas") || t.is("__declspec")) {
        i = peek(i + 1, "(") ? skip_group(i + 1) : i + 1;
        continue;
      }
      if (t.is("(") || t.is("[")) {
        const std::size_t end = skip_group(i);
        for (std::size_t k = i; k < end; ++k) decl_.push_back(k);
        i = end;
        continue;
      }
      if (t.is("{")) {
        i = open_brace(i);
        continue;
      }
      decl_.push_back(i);
      ++i;
    }
    if (!scopes_.empty()) {
      throw ParseError("unbalanced '{'", tokens_.empty() ? 1 : tokens_.back().line);
    }
    return std::move(found_);
  }

 private:
  bool peek(std::size_t i, std::string_view text) const {
    return i < tokens_.size() && tokens_[i].is(text);
  }

  void reset() {
    decl_.clear();
    pending_template_params_.clear();
  }

  // Index one past the group opened at `open` ('(', '[' or '{').
  std::size_t skip_group(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < tokens_.size(); ++k) {
      const Token& t = tokens_[k];
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) {
        if (--depth == 0) return k + 1;
      }
    }
    throw ParseError("unbalanced bracket", tokens_[open].line);
  }

  std::size_t skip_to_semicolon(std::size_t i) const {
    while (i < tokens_.size() && !tokens_[i].is(";")) {
      if (tokens_[i].is("(") || tokens_[i].is("[") || tokens_[i].is("{")) {
        i = skip_group(i);
      } else {
        ++i;
      }
    }
    return std::min(i + 1, tokens_.size());
  }

  bool in_class() const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->kind == Scope::Kind::kLinkage) continue;
      return it->kind == Scope::Kind::kClass;
    }
    return false;
  }

  Scope* innermost_class() {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->kind == Scope::Kind::kLinkage) continue;
      return it->kind == Scope::Kind::kClass ? &*it : nullptr;
    }
    return nullptr;
  }

  std::string scope_prefix() const {
    std::string out;
    for (const Scope& s : scopes_) {
      if (s.kind == Scope::Kind::kLinkage) continue;
      out += s.name + "::";
    }
    return out;
  }

  // Handles constructs recognisable from the first token of a declaration.
  // Returns the index to continue from, or nullopt for ordinary tokens.
  std::optional<std::size_t> declaration_start(std::size_t i) {
    const Token& t = tokens_[i];
    if (t.is("inline") && peek(i + 1, "namespace")) return i + 1;
    if (t.is("namespace")) return open_namespace(i);
    if (t.is("extern") && i + 2 < tokens_.size() &&
        tokens_[i + 1].kind == TokenKind::kString && peek(i + 2, "{")) {
      scopes_.emplace_back(Scope::Kind::kLinkage, std::string());
      return i + 3;
    }
    if (t.is("template") && peek(i + 1, "<")) return template_header(i + 1);
    if ((t.is("public") || t.is("protected") || t.is("private")) &&
        peek(i + 1, ":") && in_class()) {
      innermost_class()->access = t.is("public")      ? AccessLevel::kPublic
                                  : t.is("protected") ? AccessLevel::kProtected
                                                      : AccessLevel::kPrivate;
      return i + 2;
    }
    if (t.is("using") || t.is("typedef") || t.is("static_assert") ||
        t.is("enum")) {
      reset();
      return skip_to_semicolon(i);
    }
    if (t.is("class") || t.is("struct") || t.is("union")) return open_class(i);
    return std::nullopt;
  }

  std::size_t open_namespace(std::size_t i) {
    std::vector<std::string> names;
    std::size_t k = i + 1;
    for (; k < tokens_.size(); ++k) {
      const Token& t = tokens_[k];
      if (t.is("{")) break;
      if (t.is(";") || t.is("=")) {  // using-directive or alias
        reset();
        return skip_to_semicolon(i);
      }
      if (t.is("inline") || t.is("::")) continue;
      if (t.is("[") && peek(k + 1, "[")) {
        k = skip_group(k) - 1;
        continue;
      }
      if (is_identifier(t)) names.emplace_back(t.text);
    }
    if (k >= tokens_.size()) throw ParseError("namespace without body", tokens_[i].line);
    if (names.empty()) {
      Scope s{Scope::Kind::kNamespace, "(anonymous)"};
      s.anonymous = true;
      scopes_.push_back(std::move(s));
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      Scope s{Scope::Kind::kNamespace, std::move(names[c])};
      s.shares_brace = c > 0;  // closed together with the first component
      scopes_.push_back(std::move(s));
    }
    reset();
    return k + 1;
  }

  std::size_t template_header(std::size_t open) {
    int depth = 0;
    std::size_t k = open;
    std::string last_ident;
    bool in_default = false;
    for (; k < tokens_.size(); ++k) {
      const Token& t = tokens_[k];
      if (t.is("(") || t.is("[") || t.is("{")) {
        k = skip_group(k) - 1;
        continue;
      }
      if (t.is("<")) {
        ++depth;
        continue;
      }
      if (t.is(">") || (t.is(",") && depth == 1)) {
        if (depth == 1 && !last_ident.empty()) {
          pending_template_params_.push_back(last_ident);
        }
        last_ident.clear();
        in_default = false;
        if (t.is(">") && --depth == 0) break;
        continue;
      }
      if (t.is("=") && depth == 1) in_default = true;
      if (depth == 1 && !in_default && is_identifier(t) &&
          !kBuiltinTypeWords.count(t.text) && !t.is("typename") &&
          !t.is("class")) {
        last_ident = std::string(t.text);
      }
    }
    return k + 1;
  }

  std::size_t open_class(std::size_t i) {
    std::string name;
    std::size_t k = i + 1;
    for (; k < tokens_.size(); ++k) {
      const Token& t = tokens_[k];
      if (t.is("{")) break;
      if (t.is(";") || t.is("(") || t.is("=") || t.is(")") || t.is("*") ||
          t.is("&")) {
        return plain_token(i);
      }
      if (t.is("[") && peek(k + 1, "[")) {
        k = skip_group(k) - 1;
        continue;
      }
      if (t.is("alignas") && peek(k + 1, "(")) {
        k = skip_group(k + 1) - 1;
        continue;
      }
      if (t.is(":")) {
        // Base clause: skip to the brace.
        while (k < tokens_.size() && !tokens_[k].is("{")) {
          if (tokens_[k].is(";")) return plain_token(i);
          ++k;
        }
        break;
      }
      if (t.is("<")) {
        // Partial specialisation arguments.
        int depth = 0;
        for (; k < tokens_.size(); ++k) {
          if (tokens_[k].is("<")) ++depth;
          if (tokens_[k].is(">") && --depth == 0) break;
        }
        continue;
      }
      if (is_identifier(t) && !t.is("final")) name = std::string(t.text);
    }
    if (k >= tokens_.size()) throw ParseError("class without body", tokens_[i].line);
    Scope s{Scope::Kind::kClass, name.empty() ? "(unnamed)" : name};
    s.access = tokens_[i].is("class") ? AccessLevel::kPrivate : AccessLevel::kPublic;
    s.template_params = std::move(pending_template_params_);
    scopes_.push_back(std::move(s));
    reset();
    return k + 1;
  }

  // `class` used as an elaborated type specifier: treat as a plain token.
  std::size_t plain_token(std::size_t i) {
    decl_.push_back(i);
    return i + 1;
  }

  std::optional<FunctionHeader> analyze() const {
    FunctionHeader h;
    const std::size_t n = decl_.size();
    auto tok = [&](std::size_t k) -> const Token& { return tokens_[decl_[k]]; };
    std::optional<std::size_t> open;
    std::optional<std::size_t> operator_at;
    int paren = 0;
    int angle = 0;
    for (std::size_t k = 0; k < n && !open; ++k) {
      const Token& t = tok(k);
      if (t.is("(") || t.is("[") || t.is("{")) {
        if (paren == 0 && angle == 0 && t.is("(") && k > 0) {
          const Token& prev = tok(k - 1);
          if (is_identifier(prev) && !kNotCallee.count(prev.text) &&
              !kBuiltinTypeWords.count(prev.text)) {
            open = k;
            break;
          }
        }
        ++paren;
        continue;
      }
      if (t.is(")") || t.is("]") || t.is("}")) {
        --paren;
        continue;
      }
      if (paren > 0) continue;
      if (t.is("operator")) {
        operator_at = k;
        std::size_t p = k + 1;
        if (p + 1 < n && tok(p).is("(") && tok(p + 1).is(")")) p += 2;
        while (p < n && !tok(p).is("(")) ++p;
        if (p >= n) return std::nullopt;
        open = p;
        break;
      }
      if (t.is("=") && angle == 0) return std::nullopt;
      if (t.is("<") && k > 0 && is_identifier(tok(k - 1))) ++angle;
      else if (t.is(">") && angle > 0) --angle;
    }
    if (!open) return std::nullopt;
    h.params_open = *open;
    // Matching ')'.
    int depth = 0;
    std::size_t close = h.params_open;
    for (; close < n; ++close) {
      if (tok(close).is("(") || tok(close).is("[") || tok(close).is("{")) ++depth;
      if (tok(close).is(")") || tok(close).is("]") || tok(close).is("}")) {
        if (--depth == 0) break;
      }
    }
    if (close >= n) return std::nullopt;
    h.params_close = close;
    h.name_end = h.params_open;

    // Walk back over the (possibly qualified) name.
    std::size_t b;
    if (operator_at) {
      b = *operator_at;
    } else {
      b = h.params_open - 1;
      if (b > 0 && tok(b - 1).is("~")) --b;
    }
    while (b >= 2 && tok(b - 1).is("::")) {
      std::size_t q = b - 2;
      if (tok(q).is(">")) {
        int d = 0;
        while (true) {
          if (tok(q).is(">")) ++d;
          if (tok(q).is("<") && --d == 0) break;
          if (q == 0) return std::nullopt;
          --q;
        }
        if (q == 0) return std::nullopt;
        --q;
      }
      if (!is_identifier(tok(q))) break;
      b = q;
    }
    if (b >= 1 && tok(b - 1).is("::") && b == 1) b = 0;  // global ::f
    h.name_begin = b;

    for (std::size_t k = 0; k < h.name_begin; ++k) {
      const Token& t = tok(k);
      if (kSpecifiers.count(t.text)) {
        h.specifiers.insert(t.text);
        continue;
      }
      if (t.is("::") && k + 1 == h.name_begin) continue;
      h.return_tokens.push_back(decl_[k]);
    }

    // Trailing part: qualifiers, trailing return type, ctor initialisers.
    std::vector<std::size_t> trailing_return;
    bool after_arrow = false;
    for (std::size_t k = h.params_close + 1; k < n; ++k) {
      const Token& t = tok(k);
      if (t.is(":") && !after_arrow) {
        h.ctor_initializer = true;
        break;
      }
      if (t.is("->")) {
        after_arrow = true;
        continue;
      }
      if (after_arrow) {
        if (t.is("override") || t.is("final") || t.is("requires")) break;
        trailing_return.push_back(decl_[k]);
      }
    }
    if (after_arrow && !trailing_return.empty()) {
      h.return_tokens = std::move(trailing_return);
    }
    return h;
  }

  std::vector<std::string> texts(const std::vector<std::size_t>& idx) const {
    std::vector<std::string> out;
    for (std::size_t k : idx) out.emplace_back(tokens_[k].text);
    return out;
  }

  std::string decl_text(std::size_t from, std::size_t to) const {
    std::vector<std::string> parts;
    for (std::size_t k = from; k < to; ++k) parts.emplace_back(tokens_[decl_[k]].text);
    return join_tokens(parts);
  }

  // Parameter types without names or default arguments, plus qualifiers.
  std::string signature(const FunctionHeader& h) const {
    std::vector<std::string> params;
    std::vector<std::string> current;
    int depth = 0;
    bool in_default = false;
    auto flush = [&] {
      if (!current.empty()) {
        const std::string& last = current.back();
        const bool word = std::isalpha(static_cast<unsigned char>(last[0])) ||
                          last[0] == '_';
        const bool named = current.size() >= 2 && word &&
                           !kBuiltinTypeWords.count(last) &&
                           current[current.size() - 2] != "::";
        if (named) current.pop_back();
        params.push_back(join_tokens(current));
      }
      current.clear();
      in_default = false;
    };
    for (std::size_t k = h.params_open + 1; k < h.params_close; ++k) {
      const Token& t = tokens_[decl_[k]];
      if (t.is("(") || t.is("[") || t.is("{") || t.is("<")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}") || t.is(">")) --depth;
      if (depth == 0 && t.is(",")) {
        flush();
        continue;
      }
      if (depth == 0 && t.is("=")) in_default = true;
      if (!in_default) current.emplace_back(t.text);
    }
    flush();
    if (params.size() == 1 && params[0] == "void") params.clear();
    std::string out = "(";
    for (std::size_t p = 0; p < params.size(); ++p) {
      if (p > 0) out += ", ";
      out += params[p];
    }
    out += ")";
    std::vector<std::string> quals;
    for (std::size_t k = h.params_close + 1; k < decl_.size(); ++k) {
      const Token& t = tokens_[decl_[k]];
      if (t.is("const") || t.is("volatile") || t.is("&") || t.is("&&")) {
        quals.emplace_back(t.text);
      } else {
        break;
      }
    }
    if (!quals.empty()) out += " " + join_tokens(quals);
    return out;
  }

  std::size_t open_brace(std::size_t i) {
    std::optional<FunctionHeader> h = analyze();
    if (h && h->ctor_initializer) {
      const Token& prev = tokens_[i - 1];
      if (!(prev.is(")") || prev.is("}") || prev.is("..."))) {
        return absorb_group(i);  // brace-initialised member
      }
    }
    if (!h) {
      if (decl_.empty()) {
        reset();
        return skip_group(i);  // stray block
      }
      return absorb_group(i);  // brace initialiser
    }
    const std::size_t end = skip_group(i);
    record(*h, i, end - 1);
    reset();
    return end;
  }

  std::size_t absorb_group(std::size_t i) {
    const std::size_t end = skip_group(i);
    for (std::size_t k = i; k < end; ++k) decl_.push_back(k);
    return end;
  }

  void record(const FunctionHeader& h, std::size_t open, std::size_t close) {
    const std::vector<std::string> ret = texts(h.return_tokens);
    if (ret.empty()) return;  // constructor, destructor, conversion or macro
    const std::string name = decl_text(h.name_begin, h.name_end);
    if (name.find('~') != std::string::npos) return;
    if (name == "main" && scopes_.empty()) return;

    std::string short_name = name;
    if (auto pos = short_name.rfind("::"); pos != std::string::npos &&
                                           name.rfind("operator", 0) != 0) {
      short_name = short_name.substr(pos + 2);
    }

    PendingDefinition def;
    MethodSite& m = def.site;
    m.file = unit_.file;
    m.name = short_name;
    m.qualified_name = scope_prefix() + name;
    m.signature = signature(h);
    m.id = m.file + "::" + m.qualified_name + m.signature;

    std::vector<std::string> cleaned;
    for (const std::string& t : ret) {
      if (t == "typename") continue;
      cleaned.push_back(t);
    }
    m.return_type = join_tokens(cleaned);
    ReturnTypeInfo info = classify_return_type(cleaned);
    m.return_kind = info.kind;
    m.null_equivalent = info.null_equivalent;

    std::set<std::string> params(pending_template_params_.begin(),
                                 pending_template_params_.end());
    for (const Scope& s : scopes_) {
      params.insert(s.template_params.begin(), s.template_params.end());
    }
    m.generic_return = std::any_of(cleaned.begin(), cleaned.end(),
                                   [&](const std::string& t) { return params.count(t) > 0; });

    const Token& ob = tokens_[open];
    const Token& cb = tokens_[close];
    m.body = BodySpan{ob.offset, cb.offset + 1, ob.line, cb.line};

    if (Scope* cls = innermost_class()) {
      def.in_class = true;
      m.access = cls->access;
      access_[strip_template_args(m.qualified_name)] = cls->access;
    } else {
      def.internal_linkage =
          h.specifiers.count("static") > 0 ||
          std::any_of(scopes_.begin(), scopes_.end(),
                      [](const Scope& s) { return s.anonymous; });
      def.lookup_key = strip_template_args(m.qualified_name);
      def.qualified_declarator = name.rfind("operator", 0) != 0 &&
                                 name.find("::") != std::string::npos;
    }
    found_.push_back(std::move(def));
  }

  void finish_declaration() {
    if (in_class() && !decl_.empty()) {
      if (std::optional<FunctionHeader> h = analyze()) {
        const std::string name = decl_text(h->name_begin, h->name_end);
        access_[strip_template_args(scope_prefix() + name)] =
            innermost_class()->access;
      }
    }
    reset();
  }

  const SourceUnit& unit_;
  std::vector<Token> tokens_;
  std::map<std::string, AccessLevel>& access_;
  std::vector<Scope> scopes_;
  std::vector<std::size_t> decl_;
  std::vector<std::string> pending_template_params_;
  std::vector<PendingDefinition> found_;
};

}  // namespace

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  auto wordy = [](const std::string& s) {
    return !s.empty() && (std::isalnum(static_cast<unsigned char>(s.front())) ||
                          s.front() == '_');
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && wordy(tokens[i - 1]) && wordy(tokens[i])) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

ReturnTypeInfo classify_return_type(const std::vector<std::string>& input) {
  std::vector<std::string> t;
  for (const std::string& s : input) {
    if (s == "typename" || s == "struct" || s == "class" || s == "enum" ||
        s == "union" || s == "volatile") {
      continue;
    }
    t.push_back(s);
  }
  while (!t.empty() && t.back() == "const") t.pop_back();
  if (t.empty()) return {ReturnKind::kReference, ""};
  if (t.back() == "&" || t.back() == "&&") return {ReturnKind::kReference, ""};
  if (std::find(t.begin(), t.end(), "decltype") != t.end() ||
      std::find(t.begin(), t.end(), "auto") != t.end()) {
    return {ReturnKind::kReference, ""};
  }
  if (t.back() == "*") {
    const long stars = std::count(t.begin(), t.end(), std::string("*"));
    std::vector<std::string> base;
    bool has_const = false;
    for (const std::string& s : t) {
      if (s == "*") continue;
      if (s == "const") {
        has_const = true;
        continue;
      }
      base.push_back(s);
    }
    if (stars == 1 && has_const && base == std::vector<std::string>{"char"}) {
      return {ReturnKind::kStringLike, ""};
    }
    return {ReturnKind::kReference, "nullptr"};
  }
  std::vector<std::string> base;
  for (const std::string& s : t) {
    if (s != "const") base.push_back(s);
  }
  const std::string name = join_tokens(base);
  if (name == "void") return {ReturnKind::kVoid, ""};
  if (name == "bool") return {ReturnKind::kBoolean, ""};
  if (name == "float" || name == "double" || name == "long double") {
    return {ReturnKind::kFloatLike, ""};
  }
  if (name == "char" || name == "wchar_t" || name == "char8_t" ||
      name == "char16_t" || name == "char32_t") {
    return {ReturnKind::kCharLike, ""};
  }
  static const std::set<std::string> kIntWords = {"int", "long", "short",
                                                  "signed", "unsigned", "char"};
  if (std::all_of(base.begin(), base.end(),
                  [](const std::string& s) { return kIntWords.count(s) > 0; })) {
    return {ReturnKind::kIntegerLike, ""};
  }
  if (is_integer_name(name)) return {ReturnKind::kIntegerLike, ""};
  static const std::set<std::string> kStrings = {
      "std::string", "string", "std::string_view", "string_view",
      "std::pmr::string"};
  if (kStrings.count(name)) return {ReturnKind::kStringLike, ""};
  return {ReturnKind::kReference, "{}"};
}

DiscoveryResult discover_in_sources(std::span<const SourceUnit> units) {
  DiscoveryResult result;
  std::map<std::string, AccessLevel> access;
  std::vector<PendingDefinition> pending;
  for (const SourceUnit& unit : units) {
    try {
      std::vector<PendingDefinition> defs = Parser(unit, access).run();
      const std::string hash = sha256_hex(unit.text);
      for (PendingDefinition& d : defs) {
        d.site.file_hash = hash;
        pending.push_back(std::move(d));
      }
    } catch (const ParseError& e) {
      result.diagnostics.push_back({unit.file, e.what()});
    }
  }
  for (PendingDefinition& d : pending) {
    if (!d.in_class) {
      auto it = access.find(d.lookup_key);
      if (it != access.end()) {
        d.site.access = it->second;
      } else if (d.qualified_declarator) {
        d.site.access = AccessLevel::kOther;  // member of an unseen class
      } else {
        d.site.access =
            d.internal_linkage ? AccessLevel::kPackage : AccessLevel::kPublic;
      }
    }
    result.methods.push_back(std::move(d.site));
  }
  std::stable_sort(result.methods.begin(), result.methods.end(),
                   [](const MethodSite& a, const MethodSite& b) {
                     if (a.file != b.file) return a.file < b.file;
                     return a.body.begin < b.body.begin;
                   });
  // Ids must be unique within one pass; repeated definitions (for example in
  // alternative preprocessor branches) get an ordinal suffix.
  std::map<std::string, int> seen;
  for (MethodSite& m : result.methods) {
    const int count = ++seen[m.id];
    if (count > 1) m.id += "#" + std::to_string(count);
  }
  return result;
}

DiscoveryResult discover_methods(const fs::path& project_root,
                                 const ProjectConfig& config) {
  std::vector<SourceUnit> units;
  for (const std::string& rel : list_project_files(project_root, config).sources) {
    units.push_back({rel, read_file(project_root / rel)});
  }
  return discover_in_sources(units);
}

}  // namespace xmut::subject
