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

// Subspaces of Hermitian operators spanned by tensor products of
// {identity span, traceless} factors, and the exact (lambda, Delta)
// characterization of deterministic events of every type.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoq/labeled_operator.hpp"
#include "hoq/rational.hpp"
#include "hoq/registry.hpp"
#include "hoq/type_expr.hpp"

namespace hoq {

enum class Hierarchy { kBistoch, kStandard };

const char* hierarchy_name(Hierarchy h);
/// "bistoch" / "standard" (case-insensitive). Throws ConfigError.
Hierarchy parse_hierarchy(const std::string& s);

/// Bit i set means factor i of the owning SectorSet is traceless (T);
/// clear means identity span (I).
using Pattern = std::uint32_t;

inline constexpr int kMaxSectorFactors = 24;

class SectorSet {
 public:
  SectorSet() : member_(1, 0) {}
  /// Empty set over `systems`. Throws SizeLimit beyond kMaxSectorFactors.
  explicit SectorSet(std::vector<Factor> systems);

  /// Every pattern (the whole Hermitian space).
  static SectorSet all(std::vector<Factor> systems);
  /// Every pattern except all-I (the traceless operators).
  static SectorSet traceless(std::vector<Factor> systems);

  const std::vector<Factor>& systems() const { return systems_; }
  int num_factors() const { return static_cast<int>(systems_.size()); }
  std::size_t universe() const { return member_.size(); }

  bool contains(Pattern p) const { return member_[p] != 0; }
  void insert(Pattern p) { member_[p] = 1; }
  void erase(Pattern p) { member_[p] = 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  /// Members in increasing order.
  std::vector<Pattern> patterns() const;

  /// "A:T B:I F:T"
  std::string pattern_string(Pattern p) const;
  /// Inverse of pattern_string; every factor must be named. Throws SchemaError.
  Pattern parse_pattern(const std::string& text) const;

  /// Same systems in a different order.
  SectorSet reordered(const std::vector<std::string>& order) const;

  const std::vector<std::uint8_t>& indicator() const { return member_; }

  friend bool operator==(const SectorSet&, const SectorSet&) = default;

 private:
  std::vector<Factor> systems_;
  std::vector<std::uint8_t> member_;
};

/// Set algebra over identical system lists (FactorMismatch otherwise).
SectorSet set_union(const SectorSet& a, const SectorSet& b);
SectorSet set_difference(const SectorSet& a, const SectorSet& b);
SectorSet set_intersection(const SectorSet& a, const SectorSet& b);
/// Patterns over a ++ b systems: {(pa, pb) : pa in a, pb in b}.
SectorSet set_product(const SectorSet& a, const SectorSet& b);

/// Systems, identity coefficient and traceless subspace of deterministic
/// events: R = lambda * 1 + X with X in delta.
struct Characterization {
  std::vector<Factor> systems;
  Rational lambda;
  SectorSet delta;
};

/// The arrow rule: characterization of (x -> y) from those of x and y.
Characterization arrow_characterization(const Characterization& x, const Characterization& y);

/// Throws HatInStandardHierarchy, UnknownSystem, RecursionLimit, SizeLimit.
Characterization characterize(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h,
                              int recursion_limit = 64);
SectorSet delta_of(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h);
Rational lambda_of(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h);

/// Memoization of characterize(); on by default.
void set_characterization_cache(bool enabled);
void clear_characterization_cache();

/// Closed forms for dual and tensor, independent of the arrow rule.
SectorSet delta_dual_direct(const TypeExpr& t, const SystemRegistry& reg,
                            Hierarchy h = Hierarchy::kBistoch);
SectorSet delta_tensor_direct(const TypeExpr& a, const TypeExpr& b, const SystemRegistry& reg,
                              Hierarchy h = Hierarchy::kBistoch);

/// Deterministic networks with slots xs and memories e0 (before the first
/// slot) and en (after the last). Systems: e0, xs..., en (trivial ones
/// omitted).
Characterization delta_network(const std::vector<TypeExpr>& xs, const std::string& e0,
                               const std::string& en, const SystemRegistry& reg,
                               Hierarchy h = Hierarchy::kBistoch);

// Numerical side ------------------------------------------------------------------

/// Orthogonal projection onto the span of the patterns in s. The operator is
/// permuted to s.systems() first. Throws FactorMismatch, NotHermitian.
LabeledOperator sector_project(const LabeledOperator& op, const SectorSet& s,
                               double tol_herm = 1e-10);
LabeledOperator sector_component(const LabeledOperator& op,
                                 const std::vector<Factor>& systems, Pattern p,
                                 double tol_herm = 1e-10);
/// Frobenius norm of every pattern component, indexed by pattern.
std::vector<double> pattern_norms(const LabeledOperator& op, const std::vector<Factor>& systems);

}  // namespace hoq
