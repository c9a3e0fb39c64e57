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
#include "hoq/network.hpp"
#include "hoq/processes.hpp"
#include "hoq/rational.hpp"
#include "hoq/sectors.hpp"
#include "test_support.hpp"

namespace hoq {
namespace {

SystemRegistry reg_of(std::initializer_list<std::pair<const char*, int>> entries) {
  SystemRegistry reg;
  for (const auto& [l, d] : entries) reg.add(l, d);
  return reg;
}

// Pattern set from product terms; each term has one letter per system:
// 'I' identity span, 'T' traceless, 'H' either.
SectorSet from_terms(const std::vector<Factor>& systems, const std::vector<std::string>& terms) {
  SectorSet s(systems);
  const int k = static_cast<int>(systems.size());
  for (const auto& term : terms) {
    EXPECT_EQ(static_cast<int>(term.size()), k) << term;
    for (Pattern p = 0; p < (Pattern{1} << k); ++p) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const bool t = (p >> i) & 1;
        ok = term[i] == 'H' || (term[i] == 'T') == t;
      }
      if (ok) s.insert(p);
    }
  }
  return s;
}

std::vector<std::string> pattern_strings(const SectorSet& s) {
  std::vector<std::string> out;
  for (Pattern p : s.patterns()) out.push_back(s.pattern_string(p));
  return out;
}

TEST(RationalArith, Basics) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(6, 2).str(), "3");
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2, 1));
  EXPECT_DOUBLE_EQ(Rational(1, 8).to_double(), 0.125);
}

TEST(Patterns, StringsAndParsing) {
  SectorSet s({{"A", 2}, {"B", 2}, {"F", 2}});
  EXPECT_EQ(s.pattern_string(0b101), "A:T B:I F:T");
  EXPECT_EQ(s.parse_pattern("A:T B:I F:T"), 0b101u);
  EXPECT_THROW(s.parse_pattern("A:T B:I"), SchemaError);
  EXPECT_THROW(s.parse_pattern("A:X B:I F:T"), SchemaError);
}

TEST(Delta, HattedElementary) {
  auto reg = reg_of({{"A", 2}, {"B", 2}});
  auto c = characterize(parse_type("(^A -> ^B)", reg), reg, Hierarchy::kBistoch);
  EXPECT_EQ(pattern_strings(c.delta), (std::vector<std::string>{"A:T B:T"}));
  EXPECT_EQ(c.lambda, Rational(1, 2));
}

TEST(Delta, DualOfHattedElementary) {
  auto reg = reg_of({{"A", 2}, {"B", 2}});
  auto d = delta_of(parse_type("((^A -> ^B) -> I)", reg), reg, Hierarchy::kBistoch);
  EXPECT_EQ(pattern_strings(d), (std::vector<std::string>{"A:T B:I", "A:I B:T"}));
}

TEST(Delta, TimeFlipType) {
  auto reg = reg_of({{"A", 2}, {"B", 2}, {"P", 4}, {"F", 4}});
  auto c = characterize(parse_type(time_flip_type(), reg), reg, Hierarchy::kBistoch);
  EXPECT_EQ(labels_of(c.systems), (std::vector<std::string>{"A", "B", "P", "F"}));
  EXPECT_EQ(c.delta, from_terms(c.systems, {"HHHT", "TIHI", "ITHI"}));
  EXPECT_EQ(c.lambda, Rational(1, 8));
}

TEST(Lambda, TimeFlipScalesAsInverseTwoDSquared) {
  for (int d = 2; d <= 4; ++d) {
    SystemRegistry reg;
    reg.add("A", d);
    reg.add("B", d);
    reg.add("P", 2 * d);
    reg.add("F", 2 * d);
    EXPECT_EQ(lambda_of(parse_type(time_flip_type(), reg), reg, Hierarchy::kBistoch),
              Rational(1, 2 * d * d));
  }
}

TEST(Lambda, HattedWithTails) {
  auto reg = reg_of({{"X", 2}, {"U", 3}, {"Y", 2}, {"V", 5}});
  EXPECT_EQ(lambda_of(parse_type("(^X U -> ^Y V)", reg), reg, Hierarchy::kBistoch),
            Rational(1, 10));
}

TEST(Lambda, TrivialAndDoubleDual) {
  SystemRegistry reg;
  EXPECT_EQ(lambda_of(TypeExpr::trivial(), reg, Hierarchy::kBistoch), Rational(1, 1));
  for (int i = 0; i < 100; ++i) {
    testing::TypeGen gen(300 + i, 8);
    TypeExpr t = gen.generate(4);
    auto a = characterize(t, gen.registry(), Hierarchy::kBistoch);
    auto b = characterize(dual(dual(t)), gen.registry(), Hierarchy::kBistoch);
    EXPECT_EQ(a.lambda, b.lambda) << print_type(t);
    EXPECT_EQ(a.delta, b.delta) << print_type(t);
  }
}

TEST(Delta, TensorOfQubits) {
  auto reg = reg_of({{"A", 2}, {"B", 2}});
  auto d = delta_of(tensor(TypeExpr::systems({"A"}), TypeExpr::systems({"B"})), reg,
                    Hierarchy::kBistoch);
  EXPECT_EQ(d, from_terms(d.systems(), {"TI", "TT", "IT"}));
  EXPECT_EQ(delta_tensor_direct(TypeExpr::systems({"A"}), TypeExpr::systems({"B"}), reg), d);
  EXPECT_TRUE(delta_dual_direct(TypeExpr::systems({"A"}), reg).empty());
}

TEST(Delta, DirectFormulasAgreeWithRecursion) {
  for (int i = 0; i < 200; ++i) {
    testing::TypeGen gen(900 + i, 7);
    TypeExpr a = gen.generate(5);
    TypeExpr b = gen.generate(3);
    const auto& reg = gen.registry();
    EXPECT_EQ(delta_dual_direct(a, reg), delta_of(dual(a), reg, Hierarchy::kBistoch))
        << print_type(a);
    EXPECT_EQ(delta_tensor_direct(a, b, reg), delta_of(tensor(a, b), reg, Hierarchy::kBistoch))
        << print_type(a) << " | " << print_type(b);
  }
}

TEST(Delta, CorpusInvariants) {
  for (int i = 0; i < 200; ++i) {
    testing::TypeGen gen(2000 + i, 10);
    TypeExpr t = gen.generate(5);
    auto c = characterize(t, gen.registry(), Hierarchy::kBistoch);
    EXPECT_FALSE(c.delta.contains(0)) << print_type(t);
    EXPECT_GT(c.lambda.to_double(), 0.0);
    TypeExpr plain = dehat(t);
    auto b = characterize(plain, gen.registry(), Hierarchy::kBistoch);
    auto s = characterize(plain, gen.registry(), Hierarchy::kStandard);
    EXPECT_EQ(b.delta, s.delta) << print_type(plain);
    EXPECT_EQ(b.lambda, s.lambda);
  }
}

TEST(Delta, StandardRejectsHats) {
  auto reg = reg_of({{"A", 2}, {"B", 2}});
  EXPECT_THROW(characterize(parse_type("(^A -> ^B)", reg), reg, Hierarchy::kStandard),
               HatInStandardHierarchy);
}

TEST(Delta, BistochStrictlyLargerForFlippedInputs) {
  auto reg = reg_of({{"A", 2}, {"B", 2}, {"P", 4}, {"F", 4}});
  TypeExpr t = parse_type(time_flip_type(), reg);
  SectorSet db = delta_of(t, reg, Hierarchy::kBistoch);
  SectorSet ds = delta_of(dehat(t), reg, Hierarchy::kStandard);
  EXPECT_EQ(set_intersection(db, ds), ds);
  SectorSet diff = set_difference(db, ds);
  EXPECT_EQ(diff, from_terms(db.systems(), {"ITHI"}));
}

TEST(Delta, RecursionLimit) {
  SystemRegistry reg;
  reg.add("A", 2);
  TypeExpr t = TypeExpr::systems({"A"});
  for (int i = 0; i < 70; ++i) t = dual(t);
  EXPECT_THROW(characterize(t, reg, Hierarchy::kBistoch, 64), RecursionLimit);
  EXPECT_NO_THROW(characterize(t, reg, Hierarchy::kBistoch, 100));
}

TEST(Delta, Bsp2MatchesDisplayedSubspace) {
  auto reg = comb_registry({2, 2}, 2, 2);
  TypeExpr t = parse_type(bsp_type(2), reg);
  auto c = characterize(t, reg, Hierarchy::kBistoch);
  EXPECT_EQ(c.lambda, Rational(1, 8));
  // Factors P A1 B1 A2 B2 F.
  std::vector<Factor> sys{{"P", 2}, {"A1", 2}, {"B1", 2}, {"A2", 2}, {"B2", 2}, {"F", 2}};
  SectorSet expected = from_terms(sys, {"HHHHHT", "HHHTII", "HHHITI", "HTITTI", "HTIIII",
                                        "HITTTI", "HITIII"});
  EXPECT_EQ(c.delta.reordered(labels_of(sys)), expected);

  SectorSet ordinary = delta_of(dehat(t), reg, Hierarchy::kStandard);
  SectorSet diff = set_difference(c.delta, ordinary).reordered(labels_of(sys));
  EXPECT_EQ(diff, from_terms(sys, {"HIIITI", "HITIII", "HITITI", "HTTITI", "HITTTI"}));
}

TEST(Delta, BspGeneralFormula) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> dims(n, 2);
    auto reg = comb_registry(dims, 2, 2);
    auto c = characterize(parse_type(bsp_type(n), reg), reg, Hierarchy::kBistoch);
    std::vector<Factor> sys{{"P", 2}};
    for (int i = 1; i <= n; ++i) {
      sys.push_back({"A" + std::to_string(i), 2});
      sys.push_back({"B" + std::to_string(i), 2});
    }
    sys.push_back({"F", 2});
    std::vector<std::string> terms{"H" + std::string(2 * n, 'H') + "T"};
    // Later slots range over {TT, II}: expand them explicitly.
    for (int i = 0; i < n; ++i) {
      for (const char* bar : {"TI", "IT"}) {
        const int rest = n - i - 1;
        for (int mask = 0; mask < (1 << rest); ++mask) {
          std::string t = "H" + std::string(2 * i, 'H') + bar;
          for (int j = 0; j < rest; ++j) t += ((mask >> j) & 1) ? "TT" : "II";
          terms.push_back(t + "I");
        }
      }
    }
    EXPECT_EQ(c.delta.reordered(labels_of(sys)), from_terms(sys, terms)) << "n=" << n;
    EXPECT_EQ(c.lambda, Rational(1, 2 << n));
  }
}

TEST(Network, BiToothFormula) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = 2 + (i % 2);
    auto reg = comb_registry(dims);
    auto c = network_characterization(bitooth_spec(n), reg);
    long long prod = 1;
    for (int d : dims) prod *= d;
    EXPECT_EQ(c.lambda, Rational(1, prod));
    std::vector<std::string> terms;
    for (int i = 0; i < n; ++i) {
      terms.push_back(std::string(2 * i, 'H') + "TT" + std::string(2 * (n - i - 1), 'I'));
    }
    EXPECT_EQ(c.delta, from_terms(c.systems, terms)) << "n=" << n;
  }
}

TEST(Network, BiToothTwoQubitsLambda) {
  auto c = network_characterization(bitooth_spec(2), comb_registry({2, 2}));
  EXPECT_EQ(c.lambda, Rational(1, 4));
}

TEST(Network, BiSlotFormula) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> dims(n, 2);
    auto reg = comb_registry(dims, 2, 3);
    NetworkSpec spec = bislot_spec(n);
    spec.memories.front() = {"P", 2};
    spec.memories.back() = {"F", 3};
    auto c = network_characterization(spec, reg);
    EXPECT_EQ(c.lambda, Rational(1, 3 << n));
    std::vector<std::string> terms{"H" + std::string(2 * n, 'H') + "T"};
    for (int i = 0; i < n; ++i) {
      for (const char* bar : {"TI", "IT"}) {
        terms.push_back("H" + std::string(2 * i, 'H') + bar + std::string(2 * (n - i - 1), 'I') +
                        "I");
      }
    }
    EXPECT_EQ(c.delta, from_terms(c.systems, terms)) << "n=" << n;
  }
}

TEST(Network, SingleSlotReducesToSupermap) {
  auto reg = comb_registry({2}, 4, 4);
  NetworkSpec spec = bislot_spec(1);
  spec.memories = {{"P", 4}, {"F", 4}};
  auto net = network_characterization(spec, reg);
  auto direct = characterize(parse_type("((^A1 -> ^B1) -> (P -> F))", reg), reg,
                             Hierarchy::kBistoch);
  EXPECT_EQ(net.lambda, direct.lambda);
  EXPECT_EQ(net.delta.reordered(labels_of(direct.systems)), direct.delta);
}

TEST(Network, BiSlotIsBiToothIntoChannel) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> dims(n, 2);
    auto reg = comb_registry(dims, 2, 2);
    NetworkSpec slot = bislot_spec(n);
    slot.memories.front() = {"P", 2};
    slot.memories.back() = {"F", 2};
    auto s = network_characterization(slot, reg);
    auto t = network_characterization(bitooth_spec(n), reg);
    auto pf = characterize(parse_type("(P -> F)", reg), reg, Hierarchy::kBistoch);
    auto arrow = arrow_characterization(t, pf);
    EXPECT_EQ(arrow.lambda, s.lambda);
    EXPECT_EQ(arrow.delta.reordered(labels_of(s.systems)), s.delta) << "n=" << n;
  }
}

TEST(Components, IdentityAndPauli) {
  std::vector<Factor> fs{{"A", 2}, {"B", 2}};
  auto id = LabeledOperator::identity(fs);
  EXPECT_LT((sector_component(id, fs, 0).matrix() - id.matrix()).norm(), 1e-15);
  for (Pattern p = 1; p < 4; ++p) EXPECT_LT(sector_component(id, fs, p).matrix().norm(), 1e-15);

  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  auto zi = tensor_op(LabeledOperator({fs[0]}, z), LabeledOperator::identity({fs[1]}));
  EXPECT_LT((sector_component(zi, fs, 0b01).matrix() - zi.matrix()).norm(), 1e-15);
  for (Pattern p : {0u, 2u, 3u}) EXPECT_LT(sector_component(zi, fs, p).matrix().norm(), 1e-15);
}

TEST(Components, ParsevalAndProjection) {
  Rng rng(17);
  std::vector<Factor> fs{{"A", 2}, {"B", 3}, {"C", 2}};
  for (int t = 0; t < 20; ++t) {
    auto h = testing::random_hermitian_op(fs, rng);
    auto norms = pattern_norms(h, fs);
    double sq = 0.0;
    for (double x : norms) sq += x * x;
    EXPECT_NEAR(sq, h.matrix().squaredNorm(), 1e-10 * h.matrix().squaredNorm());

    SectorSet s(fs);
    s.insert(0b011);
    s.insert(0b100);
    auto p = sector_project(h, s);
    EXPECT_LT((sector_project(p, s).matrix() - p.matrix()).norm(), 1e-12);
    auto q = h - p;
    EXPECT_LT(std::abs((p.matrix().adjoint() * q.matrix()).trace()), 1e-10);
  }
}

}  // namespace
}  // namespace hoq
