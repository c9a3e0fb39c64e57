// Copyright 2026 The hoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoq/type_expr.hpp"

#include <cctype>
#include <ostream>
#include <set>

#include "hoq/errors.hpp"

namespace hoq {

struct TypeExpr::Node {
  std::variant<SystemString, BistochElem, Arrow> value;
};

TypeExpr TypeExpr::systems(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("system string must be nonempty");
  for (const auto& l : labels) {
    if (!is_valid_label(l)) throw Error("invalid system label '" + l + "'");
    if (l == kTrivialLabel && labels.size() > 1) {
      throw Error("the trivial system I cannot appear inside a longer system string");
    }
  }
  return TypeExpr(std::make_shared<const Node>(Node{SystemString{std::move(labels)}}));
}

TypeExpr TypeExpr::trivial() { return systems({std::string(kTrivialLabel)}); }

TypeExpr TypeExpr::bistoch(std::string hat_in, std::vector<std::string> in_tail,
                           std::string hat_out, std::vector<std::string> out_tail) {
  for (const auto* hat : {&hat_in, &hat_out}) {
    if (!is_valid_label(*hat)) throw Error("invalid system label '" + *hat + "'");
    if (*hat == kTrivialLabel) throw Error("the trivial system cannot be hatted");
  }
  for (const auto* tail : {&in_tail, &out_tail}) {
    for (const auto& l : *tail) {
      if (!is_valid_label(l)) throw Error("invalid system label '" + l + "'");
      if (l == kTrivialLabel) {
        throw Error("the trivial system cannot appear in a bistochastic tail");
      }
    }
  }
  return TypeExpr(std::make_shared<const Node>(
      Node{BistochElem{std::move(hat_in), std::move(in_tail), std::move(hat_out),
                       std::move(out_tail)}}));
}

TypeExpr TypeExpr::arrow(TypeExpr lhs, TypeExpr rhs) {
  return TypeExpr(
      std::make_shared<const Node>(Node{Arrow{std::move(lhs), std::move(rhs)}}));
}

TypeKind TypeExpr::kind() const {
  return static_cast<TypeKind>(node_->value.index());
}

bool TypeExpr::is_trivial() const {
  const auto* s = std::get_if<SystemString>(&node_->value);
  return s != nullptr && s->labels.size() == 1 && s->labels[0] == kTrivialLabel;
}

const SystemString& TypeExpr::as_systems() const {
  return std::get<SystemString>(node_->value);
}
const BistochElem& TypeExpr::as_bistoch() const {
  return std::get<BistochElem>(node_->value);
}
const TypeExpr& TypeExpr::lhs() const { return std::get<Arrow>(node_->value).lhs; }
const TypeExpr& TypeExpr::rhs() const { return std::get<Arrow>(node_->value).rhs; }

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::kSystems:
      return a.as_systems() == b.as_systems();
    case TypeKind::kBistoch:
      return a.as_bistoch() == b.as_bistoch();
    case TypeKind::kArrow:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kLParen, kRParen, kArrow, kHat, kLabel, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kArrow: return "'->'";
    case Tok::kHat: return "'^'";
    case Tok::kLabel: return "label '" + t.text + "'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", i++});
    } else if (c == '^') {
      out.push_back({Tok::kHat, "^", i++});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", i});
      i += 2;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kLabel, std::string(s.substr(start, i - start)), start});
    } else {
      throw SyntaxError(i, {"'('", "'^'", "label"},
                        std::string("character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  TypeExpr parse() {
    TypeExpr t = type();
    if (peek().kind != Tok::kEnd) fail({"end of input"});
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, std::move(expected), describe(peek()));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    ++pos_;
  }

  std::string label() {
    if (peek().kind != Tok::kLabel) fail({"label"});
    return next().text;
  }

  std::vector<std::string> labels_opt() {
    std::vector<std::string> out;
    while (peek().kind == Tok::kLabel) out.push_back(next().text);
    return out;
  }

  TypeExpr type() {
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      TypeExpr t = arrow_body();
      expect(Tok::kRParen, "')'");
      return t;
    }
    if (peek().kind != Tok::kLabel) fail({"'('", "label"});
    std::size_t at = peek().pos;
    auto ls = labels_opt();
    try {
      return TypeExpr::systems(std::move(ls));
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(at, {"system string"}, e.what());
    }
  }

  TypeExpr arrow_body() {
    if (peek().kind == Tok::kHat) {
      std::size_t at = peek().pos;
      ++pos_;
      std::string x = label();
      auto u = labels_opt();
      expect(Tok::kArrow, "'->'");
      expect(Tok::kHat, "'^'");
      std::string y = label();
      auto v = labels_opt();
      try {
        return TypeExpr::bistoch(std::move(x), std::move(u), std::move(y), std::move(v));
      } catch (const Error& e) {
        throw SyntaxError(at, {"bistochastic pair"}, e.what());
      }
    }
    TypeExpr lhs = type();
    expect(Tok::kArrow, "'->'");
    TypeExpr rhs = type();
    return TypeExpr::arrow(std::move(lhs), std::move(rhs));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void join_labels(std::string& out, const std::vector<std::string>& ls) {
  for (const auto& l : ls) {
    out += ' ';
    out += l;
  }
}

void print_into(std::string& out, const TypeExpr& t) {
  switch (t.kind()) {
    case TypeKind::kSystems: {
      const auto& ls = t.as_systems().labels;
      out += ls[0];
      for (std::size_t i = 1; i < ls.size(); ++i) {
        out += ' ';
        out += ls[i];
      }
      break;
    }
    case TypeKind::kBistoch: {
      const auto& b = t.as_bistoch();
      out += "(^" + b.hat_in;
      join_labels(out, b.in_tail);
      out += " -> ^" + b.hat_out;
      join_labels(out, b.out_tail);
      out += ')';
      break;
    }
    case TypeKind::kArrow:
      out += '(';
      print_into(out, t.lhs());
      out += " -> ";
      print_into(out, t.rhs());
      out += ')';
      break;
  }
}

void collect_labels(const TypeExpr& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case TypeKind::kSystems:
      for (const auto& l : t.as_systems().labels) {
        if (l != kTrivialLabel) out.push_back(l);
      }
      break;
    case TypeKind::kBistoch: {
      const auto& b = t.as_bistoch();
      out.push_back(b.hat_in);
      out.insert(out.end(), b.in_tail.begin(), b.in_tail.end());
      out.push_back(b.hat_out);
      out.insert(out.end(), b.out_tail.begin(), b.out_tail.end());
      break;
    }
    case TypeKind::kArrow:
      collect_labels(t.lhs(), out);
      collect_labels(t.rhs(), out);
      break;
  }
}

void check_hats(const TypeExpr& t, const SystemRegistry& reg) {
  switch (t.kind()) {
    case TypeKind::kSystems:
      break;
    case TypeKind::kBistoch: {
      const auto& b = t.as_bistoch();
      int dx = reg.dim(b.hat_in);
      int dy = reg.dim(b.hat_out);
      if (dx != dy) throw HatDimMismatch(b.hat_in, dx, b.hat_out, dy);
      break;
    }
    case TypeKind::kArrow:
      check_hats(t.lhs(), reg);
      check_hats(t.rhs(), reg);
      break;
  }
}

}  // namespace

TypeExpr parse_type_syntax(std::string_view text) { return Parser(text).parse(); }

TypeExpr parse_type(std::string_view text, const SystemRegistry& reg) {
  TypeExpr t = parse_type_syntax(text);
  validate_type(t, reg);
  return t;
}

std::string print_type(const TypeExpr& t) {
  std::string out;
  print_into(out, t);
  return out;
}

std::ostream& operator<<(std::ostream& os, const TypeExpr& t) {
  return os << print_type(t);
}

void validate_type(const TypeExpr& t, const SystemRegistry& reg) {
  std::vector<std::string> all;
  collect_labels(t, all);
  std::set<std::string> seen;
  for (const auto& l : all) {
    reg.dim(l);
    if (!seen.insert(l).second) throw DuplicateLabel(l);
  }
  check_hats(t, reg);
}

std::vector<std::string> system_labels(const TypeExpr& t) {
  std::vector<std::string> out;
  collect_labels(t, out);
  return out;
}

std::vector<Factor> systems_of(const TypeExpr& t, const SystemRegistry& reg) {
  std::vector<Factor> out;
  for (auto& l : system_labels(t)) {
    int d = reg.dim(l);
    out.push_back({std::move(l), d});
  }
  return out;
}

long long type_dim(const TypeExpr& t, const SystemRegistry& reg) {
  return product_of_dims(systems_of(t, reg));
}

TypeExpr extend(const TypeExpr& t, const std::string& e, const SystemRegistry& reg) {
  reg.dim(e);
  if (e == kTrivialLabel) return t;
  switch (t.kind()) {
    case TypeKind::kSystems: {
      if (t.is_trivial()) return TypeExpr::systems({e});
      auto ls = t.as_systems().labels;
      ls.push_back(e);
      return TypeExpr::systems(std::move(ls));
    }
    case TypeKind::kBistoch: {
      const auto& b = t.as_bistoch();
      auto tail = b.out_tail;
      tail.push_back(e);
      return TypeExpr::bistoch(b.hat_in, b.in_tail, b.hat_out, std::move(tail));
    }
    case TypeKind::kArrow:
      return TypeExpr::arrow(t.lhs(), extend(t.rhs(), e, reg));
  }
  return t;
}

TypeExpr dual(const TypeExpr& t) { return TypeExpr::arrow(t, TypeExpr::trivial()); }

TypeExpr tensor(const TypeExpr& a, const TypeExpr& b) {
  return dual(TypeExpr::arrow(a, dual(b)));
}

TypeExpr tensor_all(const std::vector<TypeExpr>& ts) {
  if (ts.empty()) throw Error("tensor of an empty list of types");
  TypeExpr acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = tensor(acc, ts[i]);
  return acc;
}

bool precedes(const TypeExpr& a, const TypeExpr& b) {
  if (b.kind() != TypeKind::kArrow) return false;
  return a == b.lhs() || a == b.rhs() || precedes(a, b.lhs()) || precedes(a, b.rhs());
}

TypeExpr dehat(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeKind::kSystems:
      return t;
    case TypeKind::kBistoch: {
      const auto& b = t.as_bistoch();
      std::vector<std::string> in{b.hat_in};
      in.insert(in.end(), b.in_tail.begin(), b.in_tail.end());
      std::vector<std::string> out{b.hat_out};
      out.insert(out.end(), b.out_tail.begin(), b.out_tail.end());
      return TypeExpr::arrow(TypeExpr::systems(std::move(in)),
                             TypeExpr::systems(std::move(out)));
    }
    case TypeKind::kArrow:
      return TypeExpr::arrow(dehat(t.lhs()), dehat(t.rhs()));
  }
  return t;
}

bool contains_bistoch(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeKind::kSystems: return false;
    case TypeKind::kBistoch: return true;
    case TypeKind::kArrow: return contains_bistoch(t.lhs()) || contains_bistoch(t.rhs());
  }
  return false;
}

int type_depth(const TypeExpr& t) {
  if (t.kind() != TypeKind::kArrow) return 0;
  return 1 + std::max(type_depth(t.lhs()), type_depth(t.rhs()));
}

}  // namespace hoq
