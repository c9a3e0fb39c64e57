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

#include "hoq/labeled_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "hoq/errors.hpp"

namespace hoq {

namespace {

using ColMatrix = Eigen::MatrixXcd;

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return "[" + s + "]";
}

std::vector<bool> mask_for(const LabeledOperator& a, const std::set<std::string>& subset) {
  std::vector<bool> mask(a.factors().size(), false);
  for (const auto& l : subset) {
    int i = a.index_of(l);
    if (i < 0) throw UnknownLabel("operator on " + join(a.labels()) + " has no factor '" + l + "'");
    mask[i] = true;
  }
  return mask;
}

}  // namespace

LabeledOperator::LabeledOperator() : matrix_(CMatrix::Ones(1, 1)) {}

LabeledOperator::LabeledOperator(std::vector<Factor> factors, CMatrix matrix)
    : factors_(std::move(factors)), matrix_(std::move(matrix)) {
  long long n = product_of_dims(factors_);
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ShapeMismatch("matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + " but factors " +
                        join(labels()) + " multiply to " + std::to_string(n));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dim < 1) throw ShapeMismatch("factor dimension must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (factors_[i].label == factors_[j].label) {
        throw LabelCollision("factor '" + factors_[i].label + "' appears twice");
      }
    }
  }
}

LabeledOperator LabeledOperator::identity(std::vector<Factor> factors) {
  long long n = product_of_dims(factors);
  return LabeledOperator(std::move(factors), CMatrix::Identity(n, n));
}

LabeledOperator LabeledOperator::zero(std::vector<Factor> factors) {
  long long n = product_of_dims(factors);
  return LabeledOperator(std::move(factors), CMatrix::Zero(n, n));
}

int LabeledOperator::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

LabeledOperator LabeledOperator::operator+(const LabeledOperator& o) const {
  LabeledOperator b = align_to(o, factors_);
  return LabeledOperator(factors_, matrix_ + b.matrix_);
}

LabeledOperator LabeledOperator::operator-(const LabeledOperator& o) const {
  LabeledOperator b = align_to(o, factors_);
  return LabeledOperator(factors_, matrix_ - b.matrix_);
}

LabeledOperator LabeledOperator::operator*(cd s) const {
  return LabeledOperator(factors_, matrix_ * s);
}

LabeledOperator tensor_op(const LabeledOperator& a, const LabeledOperator& b) {
  for (const auto& f : b.factors()) {
    if (a.has(f.label)) throw LabelCollision("both operators carry factor '" + f.label + "'");
  }
  std::vector<Factor> fs = a.factors();
  fs.insert(fs.end(), b.factors().begin(), b.factors().end());
  const auto& A = a.matrix();
  const auto& B = b.matrix();
  const Eigen::Index nb = B.rows();
  CMatrix out(A.rows() * nb, A.cols() * nb);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      out.block(i * nb, j * nb, nb, nb) = A(i, j) * B;
    }
  }
  return LabeledOperator(std::move(fs), std::move(out));
}

LabeledOperator permute_systems(const LabeledOperator& a, const std::vector<std::string>& order) {
  if (order.size() != a.factors().size()) {
    throw BadPermutation(join(order) + " is not a permutation of " + join(a.labels()));
  }
  std::vector<int> perm;
  std::vector<bool> used(order.size(), false);
  std::vector<Factor> fs;
  for (const auto& l : order) {
    int i = a.index_of(l);
    if (i < 0 || used[i]) {
      throw BadPermutation(join(order) + " is not a permutation of " + join(a.labels()));
    }
    used[i] = true;
    perm.push_back(i);
    fs.push_back(a.factors()[i]);
  }
  bool is_identity = true;
  for (std::size_t j = 0; j < perm.size(); ++j) is_identity &= perm[j] == static_cast<int>(j);
  if (is_identity) return a;
  return LabeledOperator(std::move(fs), kernels::permute(a.matrix(), a.dims(), perm));
}

LabeledOperator align_to(const LabeledOperator& b, const std::vector<Factor>& order) {
  if (order.size() != b.factors().size()) {
    throw FactorMismatch("operator factors " + join(b.labels()) + " do not match " +
                         join(labels_of(order)));
  }
  for (const auto& f : order) {
    int i = b.index_of(f.label);
    if (i < 0 || b.factors()[i].dim != f.dim) {
      throw FactorMismatch("operator factors " + join(b.labels()) + " do not match " +
                           join(labels_of(order)));
    }
  }
  return permute_systems(b, labels_of(order));
}

LabeledOperator partial_trace(const LabeledOperator& a, const std::set<std::string>& subset) {
  auto mask = mask_for(a, subset);
  std::vector<Factor> kept;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) kept.push_back(a.factors()[i]);
  }
  if (subset.empty()) return a;
  return LabeledOperator(std::move(kept), kernels::partial_trace(a.matrix(), a.dims(), mask));
}

LabeledOperator partial_transpose(const LabeledOperator& a,
                                  const std::set<std::string>& subset) {
  auto mask = mask_for(a, subset);
  return LabeledOperator(a.factors(), kernels::partial_transpose(a.matrix(), a.dims(), mask));
}

LabeledOperator transpose(const LabeledOperator& a) {
  return LabeledOperator(a.factors(), a.matrix().transpose());
}

LabeledOperator adjoint(const LabeledOperator& a) {
  return LabeledOperator(a.factors(), a.matrix().adjoint());
}

LabeledOperator embed_identity(const LabeledOperator& a, const Factor& f, int position) {
  if (a.has(f.label)) throw LabelCollision("operator already carries factor '" + f.label + "'");
  if (position < 0 || position > static_cast<int>(a.factors().size())) {
    throw BadPermutation("identity position out of range");
  }
  std::vector<Factor> fs = a.factors();
  fs.insert(fs.begin() + position, f);
  return LabeledOperator(std::move(fs),
                         kernels::embed_identity(a.matrix(), a.dims(), position, f.dim));
}

LabeledOperator relabel(const LabeledOperator& a,
                        const std::map<std::string, std::string>& renames) {
  std::vector<Factor> fs = a.factors();
  for (const auto& [from, to] : renames) {
    int i = a.index_of(from);
    if (i < 0) throw UnknownLabel("operator has no factor '" + from + "'");
    fs[i].label = to;
  }
  return LabeledOperator(std::move(fs), a.matrix());
}

LabeledOperator merge_factors(const LabeledOperator& a, const std::vector<std::string>& parts,
                              const std::string& merged) {
  if (parts.empty()) throw BadPermutation("nothing to merge");
  int first = a.index_of(parts[0]);
  if (first < 0) throw UnknownLabel("operator has no factor '" + parts[0] + "'");
  int d = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    int i = a.index_of(parts[j]);
    if (i != first + static_cast<int>(j)) {
      throw BadPermutation("factors " + join(parts) + " are not adjacent in " + join(a.labels()));
    }
    d *= a.factors()[i].dim;
  }
  std::vector<Factor> fs(a.factors().begin(), a.factors().begin() + first);
  fs.push_back({merged, d});
  fs.insert(fs.end(), a.factors().begin() + first + parts.size(), a.factors().end());
  return LabeledOperator(std::move(fs), a.matrix());
}

LabeledOperator split_factor(const LabeledOperator& a, const std::string& label,
                             const std::vector<Factor>& parts) {
  int i = a.index_of(label);
  if (i < 0) throw UnknownLabel("operator has no factor '" + label + "'");
  if (product_of_dims(parts) != a.factors()[i].dim) {
    throw DimMismatch("split of '" + label + "' does not preserve its dimension");
  }
  std::vector<Factor> fs(a.factors().begin(), a.factors().begin() + i);
  fs.insert(fs.end(), parts.begin(), parts.end());
  fs.insert(fs.end(), a.factors().begin() + i + 1, a.factors().end());
  return LabeledOperator(std::move(fs), a.matrix());
}

LabeledOperator link_product(const LabeledOperator& n, const LabeledOperator& m) {
  const int kn = static_cast<int>(n.factors().size());
  const int km = static_cast<int>(m.factors().size());
  std::vector<int> n_only, m_only, n_shared, m_shared;
  for (int i = 0; i < kn; ++i) {
    const auto& f = n.factors()[i];
    int j = m.index_of(f.label);
    if (j < 0) {
      n_only.push_back(i);
      continue;
    }
    if (m.factors()[j].dim != f.dim) {
      throw DimMismatch("shared system '" + f.label + "' has dimension " +
                        std::to_string(f.dim) + " and " +
                        std::to_string(m.factors()[j].dim));
    }
    n_shared.push_back(i);
    m_shared.push_back(j);
  }
  for (int j = 0; j < km; ++j) {
    if (!n.has(m.factors()[j].label)) m_only.push_back(j);
  }

  // A[(n,n'),(s1,s)] = N[(n,s1),(n',s)],  B[(s1,s),(m,m')] = M[(s1,m),(s,m')]
  kernels::Realign ra, rb;
  for (int i : n_only) ra.row_axes.push_back(i);
  for (int i : n_only) ra.row_axes.push_back(i + kn);
  for (int i : n_shared) ra.col_axes.push_back(i);
  for (int i : n_shared) ra.col_axes.push_back(i + kn);
  for (int j : m_shared) rb.row_axes.push_back(j);
  for (int j : m_shared) rb.row_axes.push_back(j + km);
  for (int j : m_only) rb.col_axes.push_back(j);
  for (int j : m_only) rb.col_axes.push_back(j + km);
  CMatrix A = kernels::realign(n.matrix(), n.dims(), ra);
  CMatrix B = kernels::realign(m.matrix(), m.dims(), rb);
  CMatrix C = A * B;

  std::vector<Factor> fs;
  long long dn = 1, dm = 1;
  for (int i : n_only) {
    fs.push_back(n.factors()[i]);
    dn *= n.factors()[i].dim;
  }
  for (int j : m_only) {
    fs.push_back(m.factors()[j]);
    dm *= m.factors()[j].dim;
  }
  // C[(n,n'),(m,m')] -> R[(n,m),(n',m')]
  CMatrix R(dn * dm, dn * dm);
  for (long long a = 0; a < dn; ++a) {
    for (long long ap = 0; ap < dn; ++ap) {
      for (long long b = 0; b < dm; ++b) {
        for (long long bp = 0; bp < dm; ++bp) {
          R(a * dm + b, ap * dm + bp) = C(a * dn + ap, b * dm + bp);
        }
      }
    }
  }
  return LabeledOperator(std::move(fs), std::move(R));
}

LabeledOperator link_all(const std::vector<LabeledOperator>& ops) {
  if (ops.empty()) return LabeledOperator();
  LabeledOperator acc = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i) acc = link_product(acc, ops[i]);
  return acc;
}

CVector max_entangled(int d) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v;
}

LabeledOperator projector(const CVector& ket, std::vector<Factor> factors) {
  return LabeledOperator(std::move(factors), ket * ket.adjoint());
}

LabeledOperator choi_of_kraus(const std::vector<CMatrix>& kraus, const Factor& in,
                              const Factor& out) {
  if (kraus.empty()) throw ShapeMismatch("empty Kraus list");
  const int din = in.dim, dout = out.dim;
  CMatrix M = CMatrix::Zero(din * dout, din * dout);
  for (const auto& K : kraus) {
    if (K.rows() != dout || K.cols() != din) {
      throw ShapeMismatch("Kraus operator is " + std::to_string(K.rows()) + "x" +
                          std::to_string(K.cols()) + ", expected " + std::to_string(dout) +
                          "x" + std::to_string(din));
    }
    CVector v(din * dout);
    for (int n = 0; n < din; ++n) {
      for (int b = 0; b < dout; ++b) v(n * dout + b) = K(b, n);
    }
    M += v * v.adjoint();
  }
  return LabeledOperator({in, out}, std::move(M));
}

LabeledOperator apply_choi(const LabeledOperator& m, const std::vector<std::string>& in_labels,
                           const LabeledOperator& state) {
  if (state.factors().size() != in_labels.size()) {
    throw ShapeMismatch("state factors " + join(state.labels()) + " do not match inputs " +
                        join(in_labels));
  }
  for (const auto& l : in_labels) {
    int i = m.index_of(l);
    if (i < 0) throw ShapeMismatch("Choi operator has no input factor '" + l + "'");
    int j = state.index_of(l);
    if (j < 0 || state.factors()[j].dim != m.factors()[i].dim) {
      throw ShapeMismatch("state factors " + join(state.labels()) + " do not match inputs " +
                          join(in_labels));
    }
  }
  return link_product(state, m);
}

double hermiticity_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double frobenius_norm(const LabeledOperator& a) { return a.matrix().norm(); }

Eigh eigh(const CMatrix& m, double tol_herm) {
  double defect = hermiticity_defect(m);
  if (defect > tol_herm) {
    throw NotHermitian("operator is not Hermitian (max |M - M^dag| = " +
                       std::to_string(defect) + ")");
  }
  ColMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ColMatrix> es(h, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

RVector eigvalsh(const CMatrix& m, double tol_herm) {
  double defect = hermiticity_defect(m);
  if (defect > tol_herm) {
    throw NotHermitian("operator is not Hermitian (max |M - M^dag| = " +
                       std::to_string(defect) + ")");
  }
  ColMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ColMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const CMatrix& m, double tol_herm) {
  return eigvalsh(m, tol_herm).minCoeff();
}

double spectral_norm_hermitian(const CMatrix& m) {
  RVector ev = eigvalsh(m, std::numeric_limits<double>::infinity());
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

bool is_psd(const CMatrix& m, double tol, double tol_herm) {
  return min_eigenvalue(m, tol_herm) >= -tol;
}

PsdRoots psd_sqrt_pinv(const CMatrix& m, double tol, double tol_herm) {
  Eigh e = eigh(m, tol_herm);
  const double cut = tol * std::max(e.values.maxCoeff(), 1.0);
  const Eigen::Index n = m.rows();
  RVector s = RVector::Zero(n), is = RVector::Zero(n), p = RVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (e.values(i) >= cut && e.values(i) > 0) {
      s(i) = std::sqrt(e.values(i));
      is(i) = 1.0 / s(i);
      p(i) = 1.0;
    }
  }
  const auto& V = e.vectors;
  return {V * s.cast<cd>().asDiagonal() * V.adjoint(),
          V * is.cast<cd>().asDiagonal() * V.adjoint(),
          V * p.cast<cd>().asDiagonal() * V.adjoint()};
}

CMatrix psd_part(const CMatrix& m) {
  Eigh e = eigh(m, std::numeric_limits<double>::infinity());
  RVector v = e.values.cwiseMax(0.0);
  return e.vectors * v.cast<cd>().asDiagonal() * e.vectors.adjoint();
}

}  // namespace hoq
