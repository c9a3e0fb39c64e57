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

// Index-structure kernels on dense operators over a tensor product of
// factors. Row-major multi-indices, first factor most significant.
//
// Two implementations share one interface: `serial` decomposes every index
// into digits and is the reference; `parallel` precomputes offset tables and
// runs the outer loop under OpenMP. The unqualified functions dispatch.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace hoq {

using cd = std::complex<double>;
using CMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::Matrix<cd, Eigen::Dynamic, 1>;
using RVector = Eigen::VectorXd;

namespace kernels {

/// An axis of the 2k-index tensor view of an operator on k factors:
/// axes 0..k-1 are row digits, k..2k-1 column digits.
struct Realign {
  std::vector<int> row_axes;
  std::vector<int> col_axes;
};

#define HOQ_KERNEL_DECLS                                                           \
  /* out factor j is in factor perm[j] */                                          \
  CMatrix permute(const CMatrix& m, const std::vector<int>& dims,                  \
                  const std::vector<int>& perm);                                   \
  CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,            \
                        const std::vector<bool>& traced);                          \
  CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,        \
                            const std::vector<bool>& mask);                        \
  /* inserts 1_d so that it becomes factor `position` of the result */             \
  CMatrix embed_identity(const CMatrix& m, const std::vector<int>& dims,           \
                         int position, int d);                                     \
  /* general reshuffle of the row/column digits into a new rectangular matrix */   \
  CMatrix realign(const CMatrix& m, const std::vector<int>& dims, const Realign& r);

namespace serial {
HOQ_KERNEL_DECLS
}  // namespace serial

namespace parallel {
HOQ_KERNEL_DECLS
}  // namespace parallel

HOQ_KERNEL_DECLS

#undef HOQ_KERNEL_DECLS

/// True when the parallel variants were compiled with OpenMP.
bool openmp_enabled();
/// Threads the parallel variants will use (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace hoq
