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

#include <string>

#include "hoq/errors.hpp"
#include "hoq/kernels.hpp"

#ifdef HOQ_HAVE_OPENMP
#include <omp.h>
#endif

namespace hoq::kernels {

namespace {

using Offsets = std::vector<std::int64_t>;

std::int64_t total(const std::vector<int>& dims) {
  std::int64_t p = 1;
  for (int d : dims) p *= d;
  return p;
}

std::vector<std::int64_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::int64_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

void check_square(const CMatrix& m, const std::vector<int>& dims) {
  std::int64_t n = total(dims);
  if (m.rows() != n || m.cols() != n) {
    throw ShapeMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " but factors multiply to " +
                        std::to_string(n));
  }
}

// For each linear index over `axis_dims` (first most significant), the
// contribution to the source row and the source column.
struct Table {
  Offsets row;
  Offsets col;
};

Table make_table(const std::vector<int>& axis_dims, const std::vector<std::int64_t>& to_row,
                 const std::vector<std::int64_t>& to_col) {
  const std::int64_t n = total(axis_dims);
  Table t{Offsets(n), Offsets(n)};
  std::vector<int> digit(axis_dims.size(), 0);
  std::int64_t r = 0, c = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    t.row[i] = r;
    t.col[i] = c;
    for (std::size_t j = axis_dims.size(); j-- > 0;) {
      if (++digit[j] < axis_dims[j]) {
        r += to_row[j];
        c += to_col[j];
        break;
      }
      r -= to_row[j] * (axis_dims[j] - 1);
      c -= to_col[j] * (axis_dims[j] - 1);
      digit[j] = 0;
    }
  }
  return t;
}

Table axes_table(const std::vector<int>& axes, const std::vector<int>& dims,
                 const std::vector<std::int64_t>& strides) {
  const int k = static_cast<int>(dims.size());
  std::vector<int> adims;
  std::vector<std::int64_t> to_row, to_col;
  for (int a : axes) {
    adims.push_back(dims[a % k]);
    to_row.push_back(a < k ? strides[a] : 0);
    to_col.push_back(a < k ? 0 : strides[a - k]);
  }
  return make_table(adims, to_row, to_col);
}

CMatrix gather(const CMatrix& m, const Table& rows, const Table& cols) {
  const std::int64_t nr = static_cast<std::int64_t>(rows.row.size());
  const std::int64_t nc = static_cast<std::int64_t>(cols.row.size());
  CMatrix out(nr, nc);
  const cd* src = m.data();
  const std::int64_t ld = m.cols();
#pragma omp parallel for schedule(static) if (nr * nc > 4096)
  for (std::int64_t r = 0; r < nr; ++r) {
    cd* dst = out.data() + r * nc;
    const std::int64_t rr = rows.row[r], rc = rows.col[r];
    for (std::int64_t c = 0; c < nc; ++c) {
      dst[c] = src[(rr + cols.row[c]) * ld + rc + cols.col[c]];
    }
  }
  return out;
}

}  // namespace

namespace parallel {

CMatrix realign(const CMatrix& m, const std::vector<int>& dims, const Realign& ra) {
  check_square(m, dims);
  if (ra.row_axes.size() + ra.col_axes.size() != 2 * dims.size()) {
    throw BadPermutation("realign must use every axis exactly once");
  }
  auto strides = strides_of(dims);
  return gather(m, axes_table(ra.row_axes, dims, strides),
                axes_table(ra.col_axes, dims, strides));
}

CMatrix permute(const CMatrix& m, const std::vector<int>& dims,
                const std::vector<int>& perm) {
  const int k = static_cast<int>(dims.size());
  Realign ra;
  for (int p : perm) ra.row_axes.push_back(p);
  for (int p : perm) ra.col_axes.push_back(p + k);
  return parallel::realign(m, dims, ra);
}

CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,
                          const std::vector<bool>& mask) {
  const int k = static_cast<int>(dims.size());
  Realign ra;
  for (int i = 0; i < k; ++i) ra.row_axes.push_back(mask[i] ? i + k : i);
  for (int i = 0; i < k; ++i) ra.col_axes.push_back(mask[i] ? i : i + k);
  return parallel::realign(m, dims, ra);
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<bool>& traced) {
  check_square(m, dims);
  auto strides = strides_of(dims);
  std::vector<int> kdims, tdims;
  std::vector<std::int64_t> kstr, tstr, zeros_k, zeros_t;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (traced[i]) {
      tdims.push_back(dims[i]);
      tstr.push_back(strides[i]);
      zeros_t.push_back(0);
    } else {
      kdims.push_back(dims[i]);
      kstr.push_back(strides[i]);
      zeros_k.push_back(0);
    }
  }
  Offsets keep = make_table(kdims, kstr, zeros_k).row;
  Offsets tr = make_table(tdims, tstr, zeros_t).row;
  const std::int64_t nk = static_cast<std::int64_t>(keep.size());
  const std::int64_t nt = static_cast<std::int64_t>(tr.size());
  const std::int64_t ld = m.cols();
  const cd* src = m.data();
  CMatrix out(nk, nk);
#pragma omp parallel for schedule(static) if (nk * nk * nt > 4096)
  for (std::int64_t r = 0; r < nk; ++r) {
    for (std::int64_t c = 0; c < nk; ++c) {
      cd acc = 0;
      for (std::int64_t t = 0; t < nt; ++t) {
        acc += src[(keep[r] + tr[t]) * ld + keep[c] + tr[t]];
      }
      out(r, c) = acc;
    }
  }
  return out;
}

CMatrix embed_identity(const CMatrix& m, const std::vector<int>& dims, int position,
                       int d) {
  check_square(m, dims);
  std::vector<int> new_dims = dims;
  new_dims.insert(new_dims.begin() + position, d);
  auto old_strides = strides_of(dims);
  // Source offsets per new factor; the inserted factor contributes nothing.
  std::vector<std::int64_t> to_src, zeros(new_dims.size(), 0);
  for (std::size_t i = 0; i < new_dims.size(); ++i) {
    if (static_cast<int>(i) == position) {
      to_src.push_back(0);
    } else {
      to_src.push_back(old_strides[static_cast<int>(i) < position ? i : i - 1]);
    }
  }
  Offsets src_off = make_table(new_dims, to_src, zeros).row;
  std::vector<std::int64_t> digit_stride(new_dims.size(), 0);
  digit_stride[position] = 1;
  Offsets ident = make_table(new_dims, digit_stride, zeros).row;
  const std::int64_t n = static_cast<std::int64_t>(src_off.size());
  const std::int64_t ld = m.cols();
  const cd* src = m.data();
  CMatrix out(n, n);
#pragma omp parallel for schedule(static) if (n * n > 4096)
  for (std::int64_t r = 0; r < n; ++r) {
    cd* dst = out.data() + r * n;
    for (std::int64_t c = 0; c < n; ++c) {
      dst[c] = ident[r] == ident[c] ? src[src_off[r] * ld + src_off[c]] : cd(0);
    }
  }
  return out;
}

}  // namespace parallel

CMatrix permute(const CMatrix& m, const std::vector<int>& dims,
                const std::vector<int>& perm) {
  return parallel::permute(m, dims, perm);
}
CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<bool>& traced) {
  return parallel::partial_trace(m, dims, traced);
}
CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,
                          const std::vector<bool>& mask) {
  return parallel::partial_transpose(m, dims, mask);
}
CMatrix embed_identity(const CMatrix& m, const std::vector<int>& dims, int position,
                       int d) {
  return parallel::embed_identity(m, dims, position, d);
}
CMatrix realign(const CMatrix& m, const std::vector<int>& dims, const Realign& r) {
  return parallel::realign(m, dims, r);
}

bool openmp_enabled() {
#ifdef HOQ_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef HOQ_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hoq::kernels
