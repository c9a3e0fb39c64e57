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

namespace hoq {

struct Tolerances {
  double herm = 1e-10;
  double psd = 1e-9;
  /// Used for the identity coefficient (relative) and the sector residual.
  double sector = 1e-9;
  double feas = 1e-7;
};

struct Limits {
  long long max_dim = 4096;
  int max_iter = 5000;
  int recursion = 64;
};

}  // namespace hoq
