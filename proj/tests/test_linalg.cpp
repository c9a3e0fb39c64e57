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
#include "hoq/labeled_operator.hpp"
#include "hoq/random.hpp"
#include "test_support.hpp"

namespace hoq {
namespace {

const Factor kA{"A", 2}, kB{"B", 2}, kC{"C", 2};

CMatrix ket_projector(int d, int i) {
  CMatrix m = CMatrix::Zero(d, d);
  m(i, i) = 1.0;
  return m;
}

LabeledOperator identity_choi(const std::string& in, const std::string& out, int d = 2) {
  return projector(max_entangled(d), {{in, d}, {out, d}});
}

double dist(const LabeledOperator& a, const LabeledOperator& b) {
  return (a.matrix() - align_to(b, a.factors()).matrix()).norm();
}

TEST(Tensor, Identities) {
  auto a = LabeledOperator::identity({kA});
  auto b = LabeledOperator::identity({kB});
  auto ab = tensor_op(a, b);
  EXPECT_EQ(ab.dim(), 4);
  EXPECT_EQ(ab.matrix(), CMatrix::Identity(4, 4));
  EXPECT_THROW(tensor_op(a, a), LabelCollision);
}

TEST(Tensor, ProductProjector) {
  LabeledOperator p = tensor_op(LabeledOperator({kA}, ket_projector(2, 0)),
                                LabeledOperator({kB}, ket_projector(2, 1)));
  EXPECT_EQ(p.matrix(), ket_projector(4, 1));
}

TEST(Tensor, TraceMultiplies) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    LabeledOperator a({{"A", 3}}, ginibre(3, 3, rng));
    LabeledOperator b({kB, kC}, ginibre(4, 4, rng));
    EXPECT_LT(std::abs(tensor_op(a, b).trace() - a.trace() * b.trace()), 1e-12);
  }
}

TEST(Permute, IdentityAndSwap) {
  Rng rng(1);
  LabeledOperator m({kA, {"B", 3}}, ginibre(6, 6, rng));
  EXPECT_EQ(permute_systems(m, {"A", "B"}).matrix(), m.matrix());
  LabeledOperator p({kA, kB}, ket_projector(4, 1));
  LabeledOperator s = permute_systems(p, {"B", "A"});
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"B", "A"}));
  EXPECT_EQ(s.matrix(), ket_projector(4, 2));
  EXPECT_THROW(permute_systems(m, {"A"}), BadPermutation);
  EXPECT_THROW(permute_systems(m, {"A", "A"}), BadPermutation);
}

TEST(Permute, SpectrumInvariant) {
  Rng rng(2);
  std::vector<Factor> fs{kA, {"B", 3}, kC};
  for (int i = 0; i < 10; ++i) {
    LabeledOperator h = testing::random_hermitian_op(fs, rng);
    RVector e1 = eigvalsh(h.matrix());
    RVector e2 = eigvalsh(permute_systems(h, {"C", "A", "B"}).matrix());
    EXPECT_LT((e1 - e2).norm(), 1e-10);
  }
}

TEST(PartialTrace, Examples) {
  auto id = LabeledOperator::identity({kA, {"B", 3}});
  auto r = partial_trace(id, {"B"});
  EXPECT_EQ(r.labels(), (std::vector<std::string>{"A"}));
  EXPECT_EQ(r.matrix(), 3.0 * CMatrix::Identity(2, 2));

  auto phi = identity_choi("A", "B", 3);
  EXPECT_LT((partial_trace(phi, {"A"}).matrix() - CMatrix::Identity(3, 3)).norm(), 1e-14);

  Rng rng(4);
  LabeledOperator m({kA, kB, kC}, ginibre(8, 8, rng));
  LabeledOperator all = partial_trace(m, {"A", "B", "C"});
  EXPECT_EQ(all.dim(), 1);
  EXPECT_LT(std::abs(all.matrix()(0, 0) - m.trace()), 1e-12);
  EXPECT_THROW(partial_trace(m, {"Z"}), UnknownLabel);
}

TEST(PartialTrace, RecoversMarginals) {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    auto a = testing::random_state({kA}, rng);
    auto b = testing::random_state({{"B", 3}}, rng);
    auto ab = tensor_op(a, b);
    EXPECT_LT((partial_trace(ab, {"B"}).matrix() - a.matrix()).norm(), 1e-13);
    EXPECT_LT((partial_trace(ab, {"A"}).matrix() - b.matrix()).norm(), 1e-13);
  }
}

TEST(PartialTranspose, Examples) {
  Rng rng(6);
  LabeledOperator h = testing::random_hermitian_op({kA, kB}, rng);
  EXPECT_LT((transpose(h).matrix() - h.matrix().conjugate()).norm(), 1e-15);
  LabeledOperator m({kA, kB}, ginibre(4, 4, rng));
  EXPECT_EQ(partial_transpose(partial_transpose(m, {"B"}), {"B"}).matrix(), m.matrix());

  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_EQ(partial_transpose(identity_choi("A", "B"), {"B"}).matrix(), swap);
}

TEST(Link, DisjointIsTensor) {
  Rng rng(7);
  LabeledOperator n({kA}, ginibre(2, 2, rng)), m({kB}, ginibre(2, 2, rng));
  EXPECT_LT(dist(link_product(n, m), tensor_op(n, m)), 1e-14);
}

TEST(Link, FullContraction) {
  auto one = LabeledOperator::identity({kA});
  LabeledOperator r = link_product(one, one);
  EXPECT_EQ(r.dim(), 1);
  EXPECT_LT(std::abs(r.matrix()(0, 0) - cd(2.0)), 1e-15);

  Rng rng(8);
  LabeledOperator n({kA, kB}, ginibre(4, 4, rng)), m({kB, kA}, ginibre(4, 4, rng));
  const cd expected = (transpose(n).matrix() * align_to(m, n.factors()).matrix()).trace();
  EXPECT_LT(std::abs(link_product(n, m).matrix()(0, 0) - expected), 1e-12);
}

TEST(Link, IdentityChannelsCompose) {
  LabeledOperator r = link_product(identity_choi("A", "B"), identity_choi("B", "C"));
  EXPECT_EQ(r.labels(), (std::vector<std::string>{"A", "C"}));
  EXPECT_LT(dist(r, identity_choi("A", "C")), 1e-14);
}

TEST(Link, MatchesNaiveOracle) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    LabeledOperator n({{"A", 2}, {"S", 3}, {"B", 2}, {"T", 2}}, ginibre(24, 24, rng));
    LabeledOperator m({{"T", 2}, {"C", 3}, {"S", 3}}, ginibre(18, 18, rng));
    LabeledOperator fast = link_product(n, m);
    LabeledOperator slow = testing::naive_link(n, m);
    EXPECT_EQ(fast.labels(), slow.labels());
    EXPECT_LT((fast.matrix() - slow.matrix()).norm(), 1e-10 * slow.matrix().norm());
  }
}

TEST(Link, DimMismatch) {
  LabeledOperator n({{"A", 2}}, CMatrix::Identity(2, 2));
  LabeledOperator m({{"A", 3}}, CMatrix::Identity(3, 3));
  EXPECT_THROW(link_product(n, m), DimMismatch);
}

TEST(Link, Associative) {
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    LabeledOperator a({kA, kB}, ginibre(4, 4, rng));
    LabeledOperator b({kB, kC, {"D", 2}}, ginibre(8, 8, rng));
    LabeledOperator c({{"D", 2}, {"E", 3}, kA}, ginibre(12, 12, rng));
    LabeledOperator l = link_product(link_product(a, b), c);
    LabeledOperator r = link_product(a, link_product(b, c));
    EXPECT_LT(dist(l, r), 1e-10 * l.matrix().norm());
  }
}

TEST(Link, PositiveStaysPositive) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    auto a = testing::random_state({kA, kB, kC}, rng);
    auto b = testing::random_state({kC, {"D", 3}, kB}, rng);
    EXPECT_TRUE(is_psd(link_product(a, b).matrix(), 1e-12));
  }
}

TEST(Choi, IdentityChannel) {
  auto c = choi_of_kraus({CMatrix::Identity(2, 2)}, kA, kB);
  EXPECT_LT((c.matrix() - identity_choi("A", "B").matrix()).norm(), 1e-15);
  EXPECT_LT(std::abs(c.trace() - cd(2.0)), 1e-15);
  EXPECT_THROW(choi_of_kraus({CMatrix::Identity(3, 2)}, kA, kB), ShapeMismatch);
}

TEST(Choi, UnitaryApplication) {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    CMatrix u = haar_unitary(2, rng);
    auto c = choi_of_kraus({u}, kA, kB);
    auto rho = testing::random_state({kA}, rng);
    auto out = apply_choi(c, {"A"}, rho);
    EXPECT_EQ(out.labels(), (std::vector<std::string>{"B"}));
    EXPECT_LT((out.matrix() - u * rho.matrix() * u.adjoint()).norm(), 1e-12);
  }
}

TEST(Choi, KrausActionMatches) {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    auto ks = random_channel_kraus(2, 3, 2, rng);
    auto c = choi_of_kraus(ks, kA, {"B", 3});
    auto rho = testing::random_state({kA}, rng);
    CMatrix direct = CMatrix::Zero(3, 3);
    for (const auto& k : ks) direct += k * rho.matrix() * k.adjoint();
    EXPECT_LT((apply_choi(c, {"A"}, rho).matrix() - direct).norm(), 1e-12);
    EXPECT_LT((partial_trace(c, {"B"}).matrix() - CMatrix::Identity(2, 2)).norm(), 1e-12);
  }
}

TEST(Choi, DepolarizingMarginal) {
  auto dep = LabeledOperator::identity({kA, kB}) * cd(0.5);
  EXPECT_LT((partial_trace(dep, {"B"}).matrix() - CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(Spectral, PsdRoots) {
  auto r = psd_sqrt_pinv(CMatrix::Identity(2, 2));
  EXPECT_LT((r.sqrt - CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((r.pinv_sqrt - CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_TRUE(is_psd(CMatrix::Identity(2, 2)));

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1e-12;
  EXPECT_TRUE(is_psd(d, 1e-9));
  d(1, 1) = -1e-6;
  EXPECT_FALSE(is_psd(d, 1e-9));

  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    CMatrix g = ginibre(5, 5, rng);
    CMatrix p = g.adjoint() * g;
    auto roots = psd_sqrt_pinv(p);
    EXPECT_LT((roots.sqrt * roots.sqrt - p).norm(), 1e-10 * p.norm());
  }
}

TEST(Spectral, NotHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigh(m), NotHermitian);
  EXPECT_GT(hermiticity_defect(m), 0.5);
}

TEST(Structure, MergeSplitRelabel) {
  Rng rng(15);
  LabeledOperator m({kA, {"B", 3}, kC}, ginibre(12, 12, rng));
  LabeledOperator merged = merge_factors(m, {"B", "C"}, "BC");
  EXPECT_EQ(merged.factors(), (std::vector<Factor>{kA, {"BC", 6}}));
  EXPECT_EQ(merged.matrix(), m.matrix());
  EXPECT_EQ(split_factor(merged, "BC", {{"B", 3}, kC}).factors(), m.factors());
  EXPECT_EQ(relabel(m, {{"A", "Z"}}).labels(), (std::vector<std::string>{"Z", "B", "C"}));
  EXPECT_THROW(relabel(m, {{"Q", "Z"}}), UnknownLabel);
  EXPECT_THROW(LabeledOperator({kA}, CMatrix::Identity(3, 3)), ShapeMismatch);
  EXPECT_THROW(LabeledOperator({kA, kA}, CMatrix::Identity(4, 4)), LabelCollision);
}

TEST(Structure, EmbedIdentity) {
  Rng rng(16);
  LabeledOperator m({kA, kC}, ginibre(4, 4, rng));
  LabeledOperator e = embed_identity(m, {"B", 3}, 1);
  EXPECT_EQ(e.labels(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_LT((partial_trace(e, {"B"}).matrix() - 3.0 * m.matrix()).norm(), 1e-12);
}

}  // namespace
}  // namespace hoq
