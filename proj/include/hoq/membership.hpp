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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hoq/labeled_operator.hpp"
#include "hoq/sectors.hpp"
#include "hoq/tolerances.hpp"
#include "hoq/type_expr.hpp"

namespace hoq {

struct ComponentNorm {
  std::string pattern;
  double norm = 0.0;
};

struct CheckReport {
  std::string subject;    // printed type or network description
  std::string hierarchy;  // "bistoch" / "standard"
  std::vector<std::string> input_order;
  std::vector<std::string> canonical_order;

  double hermiticity_defect = 0.0;
  bool hermitian_ok = false;
  double min_eigenvalue = 0.0;
  bool psd_ok = false;

  std::string lambda_exact;
  double lambda_expected = 0.0;
  double lambda_measured = 0.0;
  bool lambda_ok = false;

  double sector_residual = 0.0;
  bool sector_ok = false;
  /// Components of R - lambda*1 outside Delta above the sector tolerance.
  std::vector<ComponentNorm> residual_components;
  /// Filled by classify().
  std::vector<ComponentNorm> forbidden_components;

  bool pass = false;
  const char* verdict() const { return pass ? "PASS" : "FAIL"; }
};

/// Checks R = lambda*1 + X with X in Delta and R >= 0. The operator is
/// permuted into c.systems order. Throws FactorMismatch.
CheckReport check_characterization(const LabeledOperator& op, const Characterization& c,
                                   const Tolerances& tol, std::string subject = "",
                                   Hierarchy h = Hierarchy::kBistoch);

CheckReport is_deterministic(const LabeledOperator& op, const TypeExpr& t,
                             const SystemRegistry& reg, Hierarchy h = Hierarchy::kBistoch,
                             const Tolerances& tol = {});

enum class Admissibility { kFeasible, kNotAdmissible, kUndecided };
const char* admissibility_name(Admissibility a);

struct AdmissibilityResult {
  Admissibility verdict = Admissibility::kUndecided;
  std::optional<LabeledOperator> witness;  // D with op <= D, D deterministic
  std::string reason;
  double residual = 0.0;
  int iterations = 0;
};

struct AdmissibilityOptions {
  Tolerances tol;
  int max_iter = 5000;
  /// Exact test Tr <= 1 for plain system-string types.
  bool state_fast_path = true;
};

/// Existence of a deterministic D >= op, decided by Dykstra's alternating
/// projections between the PSD cone and {lambda*1 - op + X : X in Delta}.
AdmissibilityResult is_admissible(const LabeledOperator& op, const TypeExpr& t,
                                  const SystemRegistry& reg, Hierarchy h = Hierarchy::kBistoch,
                                  const AdmissibilityOptions& opt = {});

enum class ClassVerdict { kBoth, kBistochOnly, kStandardOnly, kNeither };
const char* class_verdict_name(ClassVerdict v);

struct Classification {
  ClassVerdict verdict = ClassVerdict::kNeither;
  CheckReport bistoch;
  CheckReport standard;
  /// Patterns of Delta_bistoch \ Delta_standard carrying weight.
  std::vector<ComponentNorm> forbidden;
  /// Projection of the operator onto Delta_bistoch \ Delta_standard.
  LabeledOperator forbidden_part;
};

/// Throws NoHattedSystems if t has no hatted pair.
Classification classify(const LabeledOperator& op, const TypeExpr& t, const SystemRegistry& reg,
                        const Tolerances& tol = {});

/// lambda*1 + s * P_Delta(H) for a seeded random Hermitian H, scaled so the
/// smallest eigenvalue stays >= (1 - eps) * lambda.
LabeledOperator sample_deterministic(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h,
                                     double eps, std::uint64_t seed);
/// Same, for an explicit characterization.
LabeledOperator sample_characterization(const Characterization& c, double eps,
                                        std::uint64_t seed);

}  // namespace hoq
