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

// Serial reference kernels against the OpenMP variants on operators of
// n qubit factors (dimension 2^n).

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "hoq/kernels.hpp"
#include "hoq/labeled_operator.hpp"
#include "hoq/random.hpp"

namespace {

using hoq::CMatrix;
namespace k = hoq::kernels;

CMatrix random_matrix(int n) {
  hoq::Rng rng(7);
  return hoq::ginibre(1 << n, 1 << n, rng);
}

std::vector<int> qubits(int n) { return std::vector<int>(n, 2); }

std::vector<int> reversed(int n) {
  std::vector<int> p(n);
  std::iota(p.rbegin(), p.rend(), 0);
  return p;
}

std::vector<bool> half_mask(int n) {
  std::vector<bool> m(n, false);
  for (int i = 0; i < n; i += 2) m[i] = true;
  return m;
}

template <CMatrix (*F)(const CMatrix&, const std::vector<int>&, const std::vector<int>&)>
void BM_Permute(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const CMatrix m = random_matrix(n);
  for (auto _ : st) benchmark::DoNotOptimize(F(m, qubits(n), reversed(n)));
  st.SetBytesProcessed(st.iterations() * m.size() * sizeof(hoq::cd));
}

template <CMatrix (*F)(const CMatrix&, const std::vector<int>&, const std::vector<bool>&)>
void BM_Mask(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const CMatrix m = random_matrix(n);
  for (auto _ : st) benchmark::DoNotOptimize(F(m, qubits(n), half_mask(n)));
  st.SetBytesProcessed(st.iterations() * m.size() * sizeof(hoq::cd));
}

template <CMatrix (*F)(const CMatrix&, const std::vector<int>&, int, int)>
void BM_Embed(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const CMatrix m = random_matrix(n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(F(m, qubits(n - 1), n / 2, 2));
}

void BM_LinkProduct(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  hoq::Rng rng(11);
  std::vector<hoq::Factor> fa, fb;
  for (int i = 0; i < n; ++i) fa.push_back({"A" + std::to_string(i), 2});
  for (int i = n / 2; i < n + n / 2; ++i) fb.push_back({"A" + std::to_string(i), 2});
  const hoq::LabeledOperator a(fa, hoq::ginibre(1 << n, 1 << n, rng));
  const hoq::LabeledOperator b(fb, hoq::ginibre(1 << n, 1 << n, rng));
  for (auto _ : st) benchmark::DoNotOptimize(hoq::link_product(a, b));
}

}  // namespace

BENCHMARK(BM_Permute<k::serial::permute>)->Name("permute/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_Permute<k::parallel::permute>)->Name("permute/parallel")->DenseRange(6, 10, 2);
BENCHMARK(BM_Mask<k::serial::partial_trace>)->Name("partial_trace/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_Mask<k::parallel::partial_trace>)->Name("partial_trace/parallel")->DenseRange(6, 10, 2);
BENCHMARK(BM_Mask<k::serial::partial_transpose>)->Name("partial_transpose/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_Mask<k::parallel::partial_transpose>)->Name("partial_transpose/parallel")->DenseRange(6, 10, 2);
BENCHMARK(BM_Embed<k::serial::embed_identity>)->Name("embed_identity/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_Embed<k::parallel::embed_identity>)->Name("embed_identity/parallel")->DenseRange(6, 10, 2);
BENCHMARK(BM_LinkProduct)->Name("link_product")->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
