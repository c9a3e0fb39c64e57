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

// Causally ordered networks R = M1 * M2 * ... * Mn of higher-order maps,
// where block i has type dual(x_i) -> (E_{i-1} -> E_i).

#pragma once

#include <string>
#include <vector>

#include "hoq/labeled_operator.hpp"
#include "hoq/membership.hpp"
#include "hoq/sectors.hpp"
#include "hoq/tolerances.hpp"
#include "hoq/type_expr.hpp"

namespace hoq {

struct NetworkSpec {
  std::vector<TypeExpr> slot_types;
  /// E_0 .. E_n; label "I" (dimension 1) for a trivial memory.
  std::vector<Factor> memories;
};

/// Throws NotANetwork on a malformed spec. Registers the memories in `reg`.
void validate_network_spec(const NetworkSpec& spec, SystemRegistry& reg);
/// Block type dual(x_i) -> (E_i -> E_{i+1}), i zero-based.
TypeExpr block_type(const NetworkSpec& spec, int i);
/// (lambda, Delta) of the whole network; systems E_0, x_1 .. x_n, E_n.
Characterization network_characterization(const NetworkSpec& spec, const SystemRegistry& reg);

/// Links the blocks over the memories and returns the result in canonical
/// order. Throws BlockCheckFailed, MemoryDimMismatch.
LabeledOperator compose_network(const std::vector<LabeledOperator>& blocks,
                                const NetworkSpec& spec, const SystemRegistry& reg,
                                const Tolerances& tol = {});

CheckReport check_network(const LabeledOperator& r, const NetworkSpec& spec,
                          const SystemRegistry& reg, const Tolerances& tol = {});

struct DecomposeOptions {
  Tolerances tol;
  /// Support cut-off relative to the largest eigenvalue.
  double rank_tol = 1e-9;
};

struct NetworkDecomposition {
  std::vector<LabeledOperator> blocks;
  /// Input spec with the inner memories replaced by fresh labels whose
  /// dimensions are the discovered ranks.
  NetworkSpec spec;
};

/// Splits a deterministic network into blocks by peeling the last slot.
/// Throws NotANetwork, RankInstability.
NetworkDecomposition decompose_network(const LabeledOperator& r, const NetworkSpec& spec,
                                       const SystemRegistry& reg,
                                       const DecomposeOptions& opt = {});

// Comb families over slots (^Ai -> ^Bi), i = 1..n, dims[i-1] = d_Ai = d_Bi.

NetworkSpec bitooth_spec(int n);
NetworkSpec bislot_spec(int n);
SystemRegistry comb_registry(const std::vector<int>& dims, int d_p = 1, int d_f = 1);

CheckReport check_bitooth(const LabeledOperator& r, const std::vector<int>& dims,
                          const Tolerances& tol = {});
CheckReport check_bislot(const LabeledOperator& r, const std::vector<int>& dims, int d_p, int d_f,
                         const Tolerances& tol = {});
CheckReport check_bsp(const LabeledOperator& r, const std::vector<int>& dims, int d_p, int d_f,
                      const Tolerances& tol = {});

}  // namespace hoq
