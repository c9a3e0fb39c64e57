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

// Types of higher-order maps on (partially) bistochastic channels.
//
// Concrete syntax:
//
//   type     := '(' arrow ')' | labels
//   arrow    := '^' LABEL labels? '->' '^' LABEL labels?     (bistochastic pair)
//             | type '->' type
//   labels   := LABEL+                                        (system string)
//
// `I` is the trivial system; it may only appear alone as a system string.
// Each non-trivial label occurs at most once per type.

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hoq/registry.hpp"

namespace hoq {

class TypeExpr;

/// Elementary type A1 A2 ... An (or the trivial system I).
struct SystemString {
  std::vector<std::string> labels;
  friend bool operator==(const SystemString&, const SystemString&) = default;
};

/// Elementary partially bistochastic type (^X u -> ^Y v).
struct BistochElem {
  std::string hat_in;
  std::vector<std::string> in_tail;
  std::string hat_out;
  std::vector<std::string> out_tail;
  friend bool operator==(const BistochElem&, const BistochElem&) = default;
};

struct Arrow;

enum class TypeKind { kSystems, kBistoch, kArrow };

/// Immutable AST node of the type grammar. Copies share structure.
class TypeExpr {
 public:
  static TypeExpr systems(std::vector<std::string> labels);
  static TypeExpr trivial();
  static TypeExpr bistoch(std::string hat_in, std::vector<std::string> in_tail,
                          std::string hat_out, std::vector<std::string> out_tail);
  static TypeExpr arrow(TypeExpr lhs, TypeExpr rhs);

  TypeKind kind() const;
  bool is_trivial() const;

  const SystemString& as_systems() const;
  const BistochElem& as_bistoch() const;
  const TypeExpr& lhs() const;
  const TypeExpr& rhs() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Arrow {
  TypeExpr lhs;
  TypeExpr rhs;
};

/// Parses and validates against `reg` (labels known, hat dims equal, no
/// duplicate labels).
TypeExpr parse_type(std::string_view text, const SystemRegistry& reg);
/// Parses without consulting a registry (syntax and label rules only).
TypeExpr parse_type_syntax(std::string_view text);

std::string print_type(const TypeExpr& t);
std::ostream& operator<<(std::ostream& os, const TypeExpr& t);

/// Throws UnknownSystem, HatDimMismatch or DuplicateLabel.
void validate_type(const TypeExpr& t, const SystemRegistry& reg);

/// Non-trivial labels in order of first occurrence in the printed form.
std::vector<std::string> system_labels(const TypeExpr& t);
/// Canonical tensor-factor ordering of every operator of type `t`.
std::vector<Factor> systems_of(const TypeExpr& t, const SystemRegistry& reg);
/// Product of the dimensions of all systems of `t`.
long long type_dim(const TypeExpr& t, const SystemRegistry& reg);

/// x || E. Extending by I is a no-op.
TypeExpr extend(const TypeExpr& t, const std::string& e, const SystemRegistry& reg);

/// x -> I
TypeExpr dual(const TypeExpr& t);
/// dual(a -> dual(b))
TypeExpr tensor(const TypeExpr& a, const TypeExpr& b);
/// Left fold of tensor over a nonempty list.
TypeExpr tensor_all(const std::vector<TypeExpr>& ts);

/// a strictly precedes b under the transitive closure of the parent relation.
bool precedes(const TypeExpr& a, const TypeExpr& b);

/// Replaces every (^X u -> ^Y v) by (X u -> Y v).
TypeExpr dehat(const TypeExpr& t);
bool contains_bistoch(const TypeExpr& t);

int type_depth(const TypeExpr& t);

}  // namespace hoq
