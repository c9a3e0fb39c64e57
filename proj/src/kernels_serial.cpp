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

#include <numeric>

#include "hoq/errors.hpp"
#include "hoq/kernels.hpp"

namespace hoq::kernels::serial {

namespace {

using Digits = std::vector<int>;

std::int64_t total(const std::vector<int>& dims) {
  std::int64_t p = 1;
  for (int d : dims) p *= d;
  return p;
}

Digits to_digits(std::int64_t index, const std::vector<int>& dims) {
  Digits out(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
  return out;
}

std::int64_t from_digits(const Digits& digits, const std::vector<int>& dims) {
  std::int64_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + digits[i];
  return index;
}

void check_square(const CMatrix& m, const std::vector<int>& dims) {
  std::int64_t n = total(dims);
  if (m.rows() != n || m.cols() != n) {
    throw ShapeMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " but factors multiply to " +
                        std::to_string(n));
  }
}

}  // namespace

CMatrix permute(const CMatrix& m, const std::vector<int>& dims,
                const std::vector<int>& perm) {
  check_square(m, dims);
  std::vector<int> new_dims(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) new_dims[j] = dims[perm[j]];
  const std::int64_t n = m.rows();
  CMatrix out(n, n);
  Digits old_r(dims.size()), old_c(dims.size());
  for (std::int64_t r = 0; r < n; ++r) {
    Digits nr = to_digits(r, new_dims);
    for (std::size_t j = 0; j < perm.size(); ++j) old_r[perm[j]] = nr[j];
    std::int64_t ro = from_digits(old_r, dims);
    for (std::int64_t c = 0; c < n; ++c) {
      Digits nc = to_digits(c, new_dims);
      for (std::size_t j = 0; j < perm.size(); ++j) old_c[perm[j]] = nc[j];
      out(r, c) = m(ro, from_digits(old_c, dims));
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<bool>& traced) {
  check_square(m, dims);
  std::vector<int> kept_dims, traced_dims;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    (traced[i] ? traced_dims : kept_dims).push_back(dims[i]);
  }
  const std::int64_t nk = total(kept_dims), nt = total(traced_dims);
  CMatrix out = CMatrix::Zero(nk, nk);
  Digits full_r(dims.size()), full_c(dims.size());
  for (std::int64_t r = 0; r < nk; ++r) {
    for (std::int64_t c = 0; c < nk; ++c) {
      Digits kr = to_digits(r, kept_dims), kc = to_digits(c, kept_dims);
      cd acc = 0;
      for (std::int64_t t = 0; t < nt; ++t) {
        Digits td = to_digits(t, traced_dims);
        std::size_t ik = 0, it = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
          if (traced[i]) {
            full_r[i] = full_c[i] = td[it++];
          } else {
            full_r[i] = kr[ik];
            full_c[i] = kc[ik++];
          }
        }
        acc += m(from_digits(full_r, dims), from_digits(full_c, dims));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,
                          const std::vector<bool>& mask) {
  check_square(m, dims);
  const std::int64_t n = m.rows();
  CMatrix out(n, n);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c) {
      Digits dr = to_digits(r, dims), dc = to_digits(c, dims);
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (mask[i]) std::swap(dr[i], dc[i]);
      }
      out(r, c) = m(from_digits(dr, dims), from_digits(dc, dims));
    }
  }
  return out;
}

CMatrix embed_identity(const CMatrix& m, const std::vector<int>& dims, int position,
                       int d) {
  check_square(m, dims);
  std::vector<int> new_dims = dims;
  new_dims.insert(new_dims.begin() + position, d);
  const std::int64_t n = total(new_dims);
  CMatrix out = CMatrix::Zero(n, n);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c) {
      Digits dr = to_digits(r, new_dims), dc = to_digits(c, new_dims);
      if (dr[position] != dc[position]) continue;
      dr.erase(dr.begin() + position);
      dc.erase(dc.begin() + position);
      out(r, c) = m(from_digits(dr, dims), from_digits(dc, dims));
    }
  }
  return out;
}

CMatrix realign(const CMatrix& m, const std::vector<int>& dims, const Realign& ra) {
  check_square(m, dims);
  const int k = static_cast<int>(dims.size());
  auto axis_dim = [&](int a) { return dims[a % k]; };
  std::vector<int> rdims, cdims;
  for (int a : ra.row_axes) rdims.push_back(axis_dim(a));
  for (int a : ra.col_axes) cdims.push_back(axis_dim(a));
  if (ra.row_axes.size() + ra.col_axes.size() != static_cast<std::size_t>(2 * k)) {
    throw BadPermutation("realign must use every axis exactly once");
  }
  const std::int64_t nr = total(rdims), nc = total(cdims);
  CMatrix out(nr, nc);
  Digits axes(2 * k);
  for (std::int64_t r = 0; r < nr; ++r) {
    Digits drow = to_digits(r, rdims);
    for (std::size_t j = 0; j < drow.size(); ++j) axes[ra.row_axes[j]] = drow[j];
    for (std::int64_t c = 0; c < nc; ++c) {
      Digits dcol = to_digits(c, cdims);
      for (std::size_t j = 0; j < dcol.size(); ++j) axes[ra.col_axes[j]] = dcol[j];
      Digits src_r(axes.begin(), axes.begin() + k), src_c(axes.begin() + k, axes.end());
      out(r, c) = m(from_digits(src_r, dims), from_digits(src_c, dims));
    }
  }
  return out;
}

}  // namespace hoq::kernels::serial
