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
#include <string>
#include <utility>
#include <vector>

#include "hoq/labeled_operator.hpp"
#include "hoq/registry.hpp"

namespace hoq {

// Types of the canonical processes ------------------------------------------------

/// "((^A -> ^B) -> (P -> F))"
std::string time_flip_type();
/// (tensor of (^A1 -> ^B1) ... (^An -> ^Bn)) -> (P -> F)
std::string bsp_type(int n);
/// Bipartite process type with trivial global past and future: the dual of
/// (^A1 -> ^B1) tensor (^A2 -> ^B2).
std::string lc_type();

/// Registry holding exactly the factors of `op`.
SystemRegistry registry_of(const LabeledOperator& op);
/// Fuses Pt,Pc into P and Ft,Fc into F.
LabeledOperator merge_target_control(const LabeledOperator& op);

// Constructors -------------------------------------------------------------------

/// Ket of a sum over branches, each branch a product of maximally entangled
/// pairs |1>> on label pairs times basis states on the remaining factors.
struct Branch {
  std::vector<std::pair<std::string, std::string>> wires;
  std::vector<std::pair<std::string, int>> basis;
};
CVector wire_ket(const std::vector<Factor>& factors, const std::vector<Branch>& branches);

/// Convex mixture of k Haar unitary channels (or their transposes) on the
/// hatted pair, each tensored with a random channel on the tails. Factors
/// (hat_in, tail_in, hat_out, tail_out); tails of dimension 1 are omitted.
struct BistochLabels {
  std::string hat_in = "A";
  std::string tail_in = "E0";
  std::string hat_out = "B";
  std::string tail_out = "E1";
};
LabeledOperator random_bistochastic_channel(int d, int tail_in_dim, int tail_out_dim, int k,
                                            std::uint64_t seed, const BistochLabels& labels = {});

/// Factors Pt(d) Pc(2) A(d) B(d) Ft(d) Fc(2).
LabeledOperator time_flip_choi(int d);
/// Output on Ft, Fc of the time flip applied to a channel (input factor
/// first), a target state and a control state.
LabeledOperator time_flip_apply(const LabeledOperator& channel_choi, const LabeledOperator& rho,
                                const LabeledOperator& omega);
/// Factors Pt(d) Pc(2^n) A1 B1 ... An Bn Ft(d) Fc(2^n); control bits ordered
/// k-ascending, first slot most significant. Throws SizeLimit above max_dim.
LabeledOperator n_time_flip_choi(int n, int d, long long max_dim = 4096);
/// Same operator written down branch by branch.
LabeledOperator n_time_flip_choi_direct(int n, int d, long long max_dim = 4096);
/// Factors Pt Pc A1 B1 A2 B2 Ft Fc.
LabeledOperator flippable_switch_choi(int d);
/// Factors A1 B1 A2 B2, each of dimension n.
LabeledOperator lc_23_process(int n);
/// Throws BadLevels when x == y or out of range.
LabeledOperator lc_22_process(int d, int x, int y);

// Functionals --------------------------------------------------------------------

struct FunctionalDecomposition {
  double p = 0.0;
  LabeledOperator rho_fwd;
  LabeledOperator sigma_bwd;
};

/// p rho (x) 1 + (1-p) 1 (x) sigma on (rho's factor, sigma's factor).
/// Throws BadProbability, NotDensity, DimMismatch.
LabeledOperator functional_compose(double p, const LabeledOperator& rho,
                                   const LabeledOperator& sigma, double tol = 1e-9);
/// Throws NotAFunctional.
FunctionalDecomposition functional_decompose(const LabeledOperator& r, double tol = 1e-9);

}  // namespace hoq
