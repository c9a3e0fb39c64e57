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

#include <gtest/gtest.h>

#include "hoq/errors.hpp"
#include "hoq/type_expr.hpp"
#include "test_support.hpp"

namespace hoq {
namespace {

SystemRegistry qubits(std::initializer_list<const char*> labels) {
  SystemRegistry reg;
  for (const char* l : labels) reg.add(l, 2);
  return reg;
}

TEST(Parse, HattedElementary) {
  auto reg = qubits({"A", "B"});
  TypeExpr t = parse_type("(^A -> ^B)", reg);
  EXPECT_EQ(t, TypeExpr::bistoch("A", {}, "B", {}));
}

TEST(Parse, TimeFlipType) {
  auto reg = qubits({"A", "B", "P", "F"});
  TypeExpr t = parse_type("((^A -> ^B) -> (P -> F))", reg);
  EXPECT_EQ(t, TypeExpr::arrow(TypeExpr::bistoch("A", {}, "B", {}),
                               TypeExpr::arrow(TypeExpr::systems({"P"}),
                                               TypeExpr::systems({"F"}))));
}

TEST(Parse, HatDimMismatch) {
  SystemRegistry reg;
  reg.add("A", 2);
  reg.add("B", 2);
  reg.add("C", 3);
  EXPECT_THROW(parse_type("(^A B -> ^C)", reg), HatDimMismatch);
}

TEST(Parse, UnknownSystem) {
  auto reg = qubits({"A"});
  EXPECT_THROW(parse_type("(A -> Q)", reg), UnknownSystem);
}

TEST(Parse, DuplicateLabelRejected) {
  auto reg = qubits({"A", "B"});
  EXPECT_THROW(parse_type("(A -> (B -> A))", reg), DuplicateLabel);
}

TEST(Parse, SyntaxErrorReportsPosition) {
  auto reg = qubits({"A", "B"});
  try {
    parse_type("(A -> B", reg);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_type("A -> B", reg), SyntaxError);
  EXPECT_THROW(parse_type("(^A)", reg), SyntaxError);
  EXPECT_THROW(parse_type("", reg), SyntaxError);
  EXPECT_THROW(parse_type("(A -> B) C", reg), SyntaxError);
}

TEST(Parse, TrivialSystemRules) {
  auto reg = qubits({"A"});
  EXPECT_TRUE(parse_type("I", reg).is_trivial());
  EXPECT_THROW(parse_type("A I", reg), SyntaxError);
  EXPECT_THROW(parse_type("(^I -> ^A)", reg), SyntaxError);
}

TEST(Print, Elementary) {
  EXPECT_EQ(print_type(TypeExpr::bistoch("A", {}, "B", {})), "(^A -> ^B)");
  EXPECT_EQ(print_type(TypeExpr::arrow(TypeExpr::systems({"A"}), TypeExpr::trivial())), "(A -> I)");
  EXPECT_EQ(print_type(TypeExpr::bistoch("X", {"B"}, "Y", {"C", "D"})), "(^X B -> ^Y C D)");
}

TEST(Print, RoundTripRandomCorpus) {
  for (int i = 0; i < 1000; ++i) {
    testing::TypeGen gen(1000 + i, 12);
    TypeExpr t = gen.generate(6);
    const std::string s = print_type(t);
    EXPECT_EQ(parse_type(s, gen.registry()), t) << s;
    EXPECT_EQ(parse_type_syntax(s), t) << s;
  }
}

TEST(Systems, NestedArrowExample) {
  SystemRegistry reg;
  for (const char* l : {"A", "B", "C", "D", "E", "F", "G", "H"}) reg.add(l, 2);
  TypeExpr t = parse_type("((A -> (^B C -> ^D E)) -> ((^F -> ^G) -> H))", reg);
  EXPECT_EQ(system_labels(t),
            (std::vector<std::string>{"A", "B", "C", "D", "E", "F", "G", "H"}));
  EXPECT_EQ(type_dim(t, reg), 256);
}

TEST(Systems, TrivialAndElementary) {
  auto reg = qubits({"A", "B"});
  EXPECT_TRUE(system_labels(parse_type("I", reg)).empty());
  EXPECT_EQ(system_labels(parse_type("(^A -> ^B)", reg)), (std::vector<std::string>{"A", "B"}));
  EXPECT_THROW(systems_of(TypeExpr::systems({"Z"}), reg), UnknownSystem);
}

TEST(Extend, Clauses) {
  auto reg = qubits({"X", "B", "Y", "C", "E", "A", "P", "F"});
  EXPECT_EQ(print_type(extend(parse_type("(^X B -> ^Y C)", reg), "E", reg)), "(^X B -> ^Y C E)");
  EXPECT_EQ(print_type(extend(parse_type("A B", reg), "E", reg)), "A B E");
  EXPECT_EQ(print_type(extend(parse_type("((^A -> ^B) -> (P -> F))", reg), "E", reg)),
            "((^A -> ^B) -> (P -> F E))");
  EXPECT_EQ(extend(parse_type("A", reg), "I", reg), parse_type("A", reg));
}

TEST(Extend, SystemsAppendProperty) {
  for (int i = 0; i < 200; ++i) {
    testing::TypeGen gen(5000 + i, 8);
    TypeExpr t = gen.generate(4);
    gen.registry().add("Ext", 2);
    std::vector<std::string> want = system_labels(t);
    want.push_back("Ext");
    EXPECT_EQ(system_labels(extend(t, "Ext", gen.registry())), want) << print_type(t);
  }
}

TEST(Derived, DualAndTensor) {
  auto reg = qubits({"A", "B"});
  EXPECT_EQ(print_type(dual(parse_type("(^A -> ^B)", reg))), "((^A -> ^B) -> I)");
  TypeExpr a = TypeExpr::systems({"A"}), b = TypeExpr::systems({"B"});
  EXPECT_EQ(tensor(a, b), TypeExpr::arrow(TypeExpr::arrow(a, TypeExpr::arrow(b, TypeExpr::trivial())),
                                          TypeExpr::trivial()));
  EXPECT_EQ(print_type(tensor(a, b)), "((A -> (B -> I)) -> I)");
}

TEST(Order, Precedes) {
  TypeExpr a = TypeExpr::systems({"A"}), b = TypeExpr::systems({"B"}),
           c = TypeExpr::systems({"C"});
  EXPECT_TRUE(precedes(a, TypeExpr::arrow(a, b)));
  EXPECT_TRUE(precedes(a, TypeExpr::arrow(TypeExpr::arrow(a, b), c)));
  EXPECT_FALSE(precedes(c, TypeExpr::arrow(a, b)));
}

TEST(Order, StrictPartialOrderOnSamples) {
  testing::TypeGen gen(77, 10);
  for (int i = 0; i < 100; ++i) {
    TypeExpr t = gen.generate(5);
    EXPECT_FALSE(precedes(t, t));
    if (t.kind() == TypeKind::kArrow) {
      const TypeExpr& l = t.lhs();
      EXPECT_TRUE(precedes(l, t));
      EXPECT_FALSE(precedes(t, l));
      if (l.kind() == TypeKind::kArrow) {
        EXPECT_TRUE(precedes(l.lhs(), l));
        EXPECT_TRUE(precedes(l.lhs(), t));
      }
    }
  }
}

TEST(Dehat, Examples) {
  auto reg = qubits({"A", "B", "P", "F"});
  EXPECT_EQ(print_type(dehat(parse_type("(^A -> ^B)", reg))), "(A -> B)");
  EXPECT_EQ(print_type(dehat(parse_type("((^A -> ^B) -> (P -> F))", reg))),
            "((A -> B) -> (P -> F))");
}

TEST(Dehat, IdempotentAndHatFree) {
  testing::TypeGen gen(99, 10);
  for (int i = 0; i < 200; ++i) {
    TypeExpr t = gen.generate(5);
    TypeExpr d = dehat(t);
    EXPECT_FALSE(contains_bistoch(d));
    EXPECT_EQ(dehat(d), d);
    EXPECT_EQ(system_labels(d), system_labels(t));
  }
}

TEST(Registry, InlineAndConflicts) {
  SystemRegistry reg = SystemRegistry::parse_inline("A=2,B=2,P=4,F=4");
  EXPECT_EQ(reg.dim("P"), 4);
  EXPECT_EQ(reg.dim("I"), 1);
  EXPECT_THROW(reg.add("A", 3), DimMismatch);
  EXPECT_NO_THROW(reg.add("A", 2));
  EXPECT_THROW(SystemRegistry::parse_inline("A=x"), ConfigError);
  EXPECT_THROW(SystemRegistry::parse_inline("1A=2"), ConfigError);
  EXPECT_THROW(reg.dim("Q"), UnknownSystem);
}

}  // namespace
}  // namespace hoq
