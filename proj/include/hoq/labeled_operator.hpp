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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hoq/kernels.hpp"
#include "hoq/registry.hpp"

namespace hoq {

/// Square complex matrix over an ordered list of labelled factors.
class LabeledOperator {
 public:
  /// The 1x1 operator 1 with no factors.
  LabeledOperator();
  /// Throws ShapeMismatch if the matrix size does not match, LabelCollision
  /// on repeated labels.
  LabeledOperator(std::vector<Factor> factors, CMatrix matrix);

  static LabeledOperator identity(std::vector<Factor> factors);
  static LabeledOperator zero(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  const CMatrix& matrix() const { return matrix_; }
  long long dim() const { return matrix_.rows(); }

  std::vector<std::string> labels() const { return labels_of(factors_); }
  std::vector<int> dims() const { return dims_of(factors_); }
  /// -1 when absent.
  int index_of(const std::string& label) const;
  bool has(const std::string& label) const { return index_of(label) >= 0; }

  cd trace() const { return matrix_.trace(); }

  LabeledOperator operator+(const LabeledOperator& o) const;
  LabeledOperator operator-(const LabeledOperator& o) const;
  LabeledOperator operator*(cd s) const;

 private:
  std::vector<Factor> factors_;
  CMatrix matrix_;
};

// Structure ------------------------------------------------------------------

/// Kronecker product with factors a ++ b. Throws LabelCollision.
LabeledOperator tensor_op(const LabeledOperator& a, const LabeledOperator& b);
/// Reorders factors to `order`. Throws BadPermutation.
LabeledOperator permute_systems(const LabeledOperator& a,
                                const std::vector<std::string>& order);
/// Permutes `b` into the factor order of `a`; throws FactorMismatch if the
/// factor sets differ.
LabeledOperator align_to(const LabeledOperator& b, const std::vector<Factor>& order);
/// Throws UnknownLabel.
LabeledOperator partial_trace(const LabeledOperator& a, const std::set<std::string>& subset);
LabeledOperator partial_transpose(const LabeledOperator& a,
                                  const std::set<std::string>& subset);
LabeledOperator transpose(const LabeledOperator& a);
LabeledOperator adjoint(const LabeledOperator& a);
/// a with 1_f inserted as factor `position`.
LabeledOperator embed_identity(const LabeledOperator& a, const Factor& f, int position);
/// Renames factors; unknown keys throw UnknownLabel.
LabeledOperator relabel(const LabeledOperator& a,
                        const std::map<std::string, std::string>& renames);
/// Fuses the adjacent factors `parts` (in order) into one factor `merged`.
LabeledOperator merge_factors(const LabeledOperator& a, const std::vector<std::string>& parts,
                              const std::string& merged);
/// Inverse of merge_factors.
LabeledOperator split_factor(const LabeledOperator& a, const std::string& label,
                             const std::vector<Factor>& parts);

// Link product and Choi maps ----------------------------------------------------

/// N * M = Tr_S[(1 (x) M^{T_S}) (N (x) 1)] over the shared labels S. Output
/// factors: N's unshared factors, then M's. Throws DimMismatch.
LabeledOperator link_product(const LabeledOperator& n, const LabeledOperator& m);
/// Left fold of link_product.
LabeledOperator link_all(const std::vector<LabeledOperator>& ops);

/// Choi operator sum_i |K_i>><<K_i| with the input factor first. Each Kraus
/// operator is d_out x d_in. Throws ShapeMismatch.
LabeledOperator choi_of_kraus(const std::vector<CMatrix>& kraus, const Factor& in,
                              const Factor& out);
/// Tr_in[(O^T (x) 1) M]. `state` must carry exactly the factors `in_labels`.
LabeledOperator apply_choi(const LabeledOperator& m, const std::vector<std::string>& in_labels,
                           const LabeledOperator& state);
/// |1>> = sum_n |n>|n> on d (x) d.
CVector max_entangled(int d);
LabeledOperator projector(const CVector& ket, std::vector<Factor> factors);

// Spectral ---------------------------------------------------------------------

struct Eigh {
  RVector values;  // ascending
  CMatrix vectors;  // columns
};

struct PsdRoots {
  CMatrix sqrt;
  CMatrix pinv_sqrt;
  CMatrix support;
};

double hermiticity_defect(const CMatrix& m);
double frobenius_norm(const LabeledOperator& a);
double spectral_norm_hermitian(const CMatrix& m);
/// Throws NotHermitian when max|M - M^dag| > tol_herm.
Eigh eigh(const CMatrix& m, double tol_herm = 1e-10);
RVector eigvalsh(const CMatrix& m, double tol_herm = 1e-10);
double min_eigenvalue(const CMatrix& m, double tol_herm = 1e-10);
bool is_psd(const CMatrix& m, double tol = 1e-9, double tol_herm = 1e-10);
/// Eigenvalues below tol * max(max eigenvalue, 1) are treated as zero.
PsdRoots psd_sqrt_pinv(const CMatrix& m, double tol = 1e-9, double tol_herm = 1e-10);
/// Projection onto the PSD cone (negative eigenvalues clamped).
CMatrix psd_part(const CMatrix& m);

}  // namespace hoq
