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

#include "hoq/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace hoq {

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = cd(g(rng), g(rng));
  }
  return m;
}

CMatrix haar_unitary(int d, Rng& rng) {
  Eigen::MatrixXcd z = ginibre(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    cd rjj = r(j, j);
    double a = std::abs(rjj);
    if (a > 0) q.col(j) *= rjj / a;
  }
  return q;
}

CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

CMatrix random_density(int d, Rng& rng, int rank) {
  if (rank <= 0) rank = d;
  CMatrix g = ginibre(d, rank, rng);
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<CMatrix> random_channel_kraus(int d_in, int d_out, int k, Rng& rng) {
  // Columns of a Haar unitary restricted to d_in give an isometry.
  CMatrix u = haar_unitary(d_out * k, rng);
  int big = d_out * k;
  CMatrix v = u.leftCols(std::min(d_in, big));
  if (d_in > big) {
    // Too few Kraus operators for an isometry; pad k.
    return random_channel_kraus(d_in, d_out, (d_in + d_out - 1) / d_out, rng);
  }
  std::vector<CMatrix> kraus;
  for (int i = 0; i < k; ++i) kraus.push_back(v.middleRows(i * d_out, d_out));
  return kraus;
}

}  // namespace hoq
