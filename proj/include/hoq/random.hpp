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
#include <random>
#include <vector>

#include "hoq/kernels.hpp"

namespace hoq {

using Rng = std::mt19937_64;

/// i.i.d. standard complex Gaussian entries.
CMatrix ginibre(int rows, int cols, Rng& rng);
/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
CMatrix haar_unitary(int d, Rng& rng);
/// GUE-like Hermitian matrix (G + G^dag)/2.
CMatrix random_hermitian(int n, Rng& rng);
/// Density operator from a Ginibre matrix of the given rank (full rank if 0).
CMatrix random_density(int d, Rng& rng, int rank = 0);
/// Kraus operators (d_out x d_in) of a random channel via an isometry
/// d_in -> d_out * k.
std::vector<CMatrix> random_channel_kraus(int d_in, int d_out, int k, Rng& rng);

}  // namespace hoq
