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

#include "hoq/processes.hpp"

#include <algorithm>
#include <cmath>

#include "hoq/errors.hpp"
#include "hoq/membership.hpp"
#include "hoq/random.hpp"
#include "hoq/type_expr.hpp"

namespace hoq {

std::string time_flip_type() { return "((^A -> ^B) -> (P -> F))"; }

std::string bsp_type(int n) {
  if (n < 1) throw Error("a process needs at least one party");
  std::vector<TypeExpr> pairs;
  for (int i = 1; i <= n; ++i) {
    pairs.push_back(TypeExpr::bistoch("A" + std::to_string(i), {}, "B" + std::to_string(i), {}));
  }
  TypeExpr pf = TypeExpr::arrow(TypeExpr::systems({"P"}), TypeExpr::systems({"F"}));
  return print_type(TypeExpr::arrow(tensor_all(pairs), pf));
}

std::string lc_type() {
  TypeExpr a = TypeExpr::bistoch("A1", {}, "B1", {});
  TypeExpr b = TypeExpr::bistoch("A2", {}, "B2", {});
  return print_type(dual(tensor(a, b)));
}

SystemRegistry registry_of(const LabeledOperator& op) {
  SystemRegistry reg;
  reg.add(op.factors());
  return reg;
}

LabeledOperator merge_target_control(const LabeledOperator& op) {
  LabeledOperator out = permute_systems(op, [&] {
    // Keep every factor in place but make Pt,Pc and Ft,Fc adjacent.
    std::vector<std::string> order;
    for (const auto& l : op.labels()) {
      if (l == "Pc" || l == "Fc") continue;
      order.push_back(l);
      if (l == "Pt") order.push_back("Pc");
      if (l == "Ft") order.push_back("Fc");
    }
    return order;
  }());
  out = merge_factors(out, {"Pt", "Pc"}, "P");
  return merge_factors(out, {"Ft", "Fc"}, "F");
}

CVector wire_ket(const std::vector<Factor>& factors, const std::vector<Branch>& branches) {
  const int k = static_cast<int>(factors.size());
  std::vector<long long> stride(k, 1);
  for (int i = k - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i].dim;
  auto pos = [&](const std::string& l) {
    for (int i = 0; i < k; ++i) {
      if (factors[i].label == l) return i;
    }
    throw UnknownLabel("ket has no factor '" + l + "'");
  };
  CVector v = CVector::Zero(product_of_dims(factors));
  for (const auto& br : branches) {
    std::vector<int> covered(k, 0);
    long long base = 0;
    for (const auto& [l, val] : br.basis) {
      int i = pos(l);
      if (val < 0 || val >= factors[i].dim) throw BadLevels("basis level out of range");
      covered[i]++;
      base += val * stride[i];
    }
    std::vector<std::pair<long long, int>> wire;  // combined stride, dim
    for (const auto& [a, b] : br.wires) {
      int i = pos(a), j = pos(b);
      if (factors[i].dim != factors[j].dim) {
        throw DimMismatch("wire " + a + "-" + b + " joins unequal dimensions");
      }
      covered[i]++;
      covered[j]++;
      wire.push_back({stride[i] + stride[j], factors[i].dim});
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) {
      throw Error("every factor must appear exactly once per branch");
    }
    std::vector<int> digit(wire.size(), 0);
    while (true) {
      long long idx = base;
      for (std::size_t w = 0; w < wire.size(); ++w) idx += digit[w] * wire[w].first;
      v(idx) += 1.0;
      std::size_t w = 0;
      while (w < wire.size() && ++digit[w] == wire[w].second) digit[w++] = 0;
      if (w == wire.size()) break;
    }
  }
  return v;
}

LabeledOperator random_bistochastic_channel(int d, int tail_in_dim, int tail_out_dim, int k,
                                            std::uint64_t seed, const BistochLabels& labels) {
  if (k < 1) throw Error("mixture needs at least one term");
  if (d < 1 || tail_in_dim < 1 || tail_out_dim < 1) throw Error("dimensions must be >= 1");
  Rng rng(seed);
  std::exponential_distribution<double> ex(1.0);
  std::bernoulli_distribution coin(0.5);
  const Factor X{labels.hat_in, d}, Y{labels.hat_out, d};
  const Factor Ti{labels.tail_in, tail_in_dim}, To{labels.tail_out, tail_out_dim};
  const bool tails = tail_in_dim > 1 || tail_out_dim > 1;

  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) total += (x = ex(rng));

  std::vector<Factor> order{X};
  if (tail_in_dim > 1) order.push_back(Ti);
  order.push_back(Y);
  if (tail_out_dim > 1) order.push_back(To);

  LabeledOperator acc = LabeledOperator::zero(order);
  for (int i = 0; i < k; ++i) {
    CMatrix u = haar_unitary(d, rng);
    if (coin(rng)) u.transposeInPlace();
    LabeledOperator term = choi_of_kraus({u}, X, Y);
    if (tails) {
      auto kraus = random_channel_kraus(tail_in_dim, tail_out_dim, 2, rng);
      LabeledOperator tail = choi_of_kraus(kraus, Ti, To);
      std::set<std::string> trivial;
      if (tail_in_dim == 1) trivial.insert(Ti.label);
      if (tail_out_dim == 1) trivial.insert(To.label);
      tail = partial_trace(tail, trivial);
      term = tensor_op(term, tail);
    }
    acc = acc + term * cd(w[i] / total);
  }
  return acc;
}

namespace {

std::vector<Factor> flip_factors(int d) {
  return {{"Pt", d}, {"Pc", 2}, {"A", d}, {"B", d}, {"Ft", d}, {"Fc", 2}};
}

void check_d(int d) {
  if (d < 2) throw Error("dimension must be at least 2");
}

}  // namespace

LabeledOperator time_flip_choi(int d) {
  check_d(d);
  auto fs = flip_factors(d);
  CVector v = wire_ket(fs, {{{{"Pt", "A"}, {"B", "Ft"}}, {{"Pc", 0}, {"Fc", 0}}},
                            {{{"Pt", "B"}, {"A", "Ft"}}, {{"Pc", 1}, {"Fc", 1}}}});
  return projector(v, fs);
}

LabeledOperator time_flip_apply(const LabeledOperator& channel_choi, const LabeledOperator& rho,
                                const LabeledOperator& omega) {
  if (channel_choi.factors().size() != 2 || rho.factors().size() != 1 ||
      omega.factors().size() != 1) {
    throw DimMismatch("time flip expects a two-factor channel, a target state and a control state");
  }
  const int d = channel_choi.factors()[0].dim;
  if (channel_choi.factors()[1].dim != d || rho.factors()[0].dim != d ||
      omega.factors()[0].dim != 2) {
    throw DimMismatch("time flip needs a channel on d x d, a target of dimension d and a qubit "
                      "control");
  }
  LabeledOperator c = relabel(channel_choi, {{channel_choi.factors()[0].label, "A"},
                                             {channel_choi.factors()[1].label, "B"}});
  LabeledOperator r = relabel(rho, {{rho.factors()[0].label, "Pt"}});
  LabeledOperator w = relabel(omega, {{omega.factors()[0].label, "Pc"}});
  LabeledOperator out = link_all({time_flip_choi(d), r, w, c});
  return permute_systems(out, {"Ft", "Fc"});
}

namespace {

long long n_flip_dim(int n, int d) {
  long long total = static_cast<long long>(d) * d;
  for (int k = 0; k < n; ++k) {
    total *= 4LL * d * d;
    if (total > (1LL << 40)) break;
  }
  return total;
}

void check_n_flip(int n, int d, long long max_dim) {
  check_d(d);
  if (n < 1) throw Error("n-time flip needs n >= 1");
  long long total = n_flip_dim(n, d);
  if (total > max_dim) {
    throw SizeLimit("n-time flip with n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                    " has dimension " + std::to_string(total) + " > limit " +
                    std::to_string(max_dim));
  }
}

std::vector<std::string> n_flip_order(int n) {
  std::vector<std::string> order{"Pt"};
  for (int k = 1; k <= n; ++k) order.push_back("Pc" + std::to_string(k));
  for (int k = 1; k <= n; ++k) {
    order.push_back("A" + std::to_string(k));
    order.push_back("B" + std::to_string(k));
  }
  order.push_back("Ft");
  for (int k = 1; k <= n; ++k) order.push_back("Fc" + std::to_string(k));
  return order;
}

LabeledOperator merge_controls(const LabeledOperator& op, int n) {
  std::vector<std::string> pc, fc;
  for (int k = 1; k <= n; ++k) {
    pc.push_back("Pc" + std::to_string(k));
    fc.push_back("Fc" + std::to_string(k));
  }
  return merge_factors(merge_factors(op, pc, "Pc"), fc, "Fc");
}

}  // namespace

LabeledOperator n_time_flip_choi(int n, int d, long long max_dim) {
  check_n_flip(n, d, max_dim);
  // Block k is a single time flip from target wire T(k-1) to T(k) controlled
  // by its own qubit; linking over the target wires chains them.
  auto wire = [n](int k) {
    if (k == 0) return std::string("Pt");
    if (k == n) return std::string("Ft");
    return "T" + std::to_string(k);
  };
  std::vector<LabeledOperator> blocks;
  for (int k = 1; k <= n; ++k) {
    const std::string a = "A" + std::to_string(k), b = "B" + std::to_string(k);
    const std::string pc = "Pc" + std::to_string(k), fc = "Fc" + std::to_string(k);
    std::vector<Factor> fs{{wire(k - 1), d}, {pc, 2}, {a, d}, {b, d}, {wire(k), d}, {fc, 2}};
    CVector v = wire_ket(fs, {{{{wire(k - 1), a}, {b, wire(k)}}, {{pc, 0}, {fc, 0}}},
                              {{{wire(k - 1), b}, {a, wire(k)}}, {{pc, 1}, {fc, 1}}}});
    blocks.push_back(projector(v, fs));
  }
  LabeledOperator r = permute_systems(link_all(blocks), n_flip_order(n));
  return merge_controls(r, n);
}

LabeledOperator n_time_flip_choi_direct(int n, int d, long long max_dim) {
  check_n_flip(n, d, max_dim);
  std::vector<Factor> fs;
  for (const auto& l : n_flip_order(n)) {
    fs.push_back({l, (l.rfind("Pc", 0) == 0 || l.rfind("Fc", 0) == 0) ? 2 : d});
  }
  std::vector<Branch> branches;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Branch br;
    std::string prev = "Pt";
    for (int k = 1; k <= n; ++k) {
      const bool flipped = (bits >> (n - k)) & 1;
      const std::string a = "A" + std::to_string(k), b = "B" + std::to_string(k);
      br.wires.push_back({prev, flipped ? b : a});
      prev = flipped ? a : b;
      br.basis.push_back({"Pc" + std::to_string(k), flipped ? 1 : 0});
      br.basis.push_back({"Fc" + std::to_string(k), flipped ? 1 : 0});
    }
    br.wires.push_back({prev, "Ft"});
    branches.push_back(std::move(br));
  }
  return merge_controls(projector(wire_ket(fs, branches), fs), n);
}

LabeledOperator flippable_switch_choi(int d) {
  check_d(d);
  std::vector<Factor> fs{{"Pt", d}, {"Pc", 2}, {"A1", d}, {"B1", d},
                         {"A2", d}, {"B2", d}, {"Ft", d}, {"Fc", 2}};
  CVector v = wire_ket(
      fs, {{{{"Pt", "A1"}, {"B1", "A2"}, {"B2", "Ft"}}, {{"Pc", 0}, {"Fc", 0}}},
           {{{"Pt", "B2"}, {"A2", "B1"}, {"A1", "Ft"}}, {{"Pc", 1}, {"Fc", 1}}}});
  return projector(v, fs);
}

LabeledOperator lc_23_process(int n) {
  if (n != 2 && n != 3) throw BadLevels("the LC (2,3) process is defined for n = 2, 3");
  std::vector<Factor> fs{{"A1", n}, {"B1", n}, {"A2", n}, {"B2", n}};
  CMatrix m = CMatrix::Zero(n * n * n * n, n * n * n * n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      int i = (j + l) % n, k = ((j - l) % n + n) % n;
      int idx = ((i * n + j) * n + k) * n + l;
      m(idx, idx) = 1.0;
    }
  }
  return LabeledOperator(fs, m);
}

LabeledOperator lc_22_process(int d, int x, int y) {
  if (d < 2) throw BadLevels("dimension must be at least 2");
  if (x == y || x < 0 || y < 0 || x >= d || y >= d) {
    throw BadLevels("levels x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                    " must be distinct and below " + std::to_string(d));
  }
  RVector px = RVector::Zero(d), py = RVector::Zero(d), one = RVector::Ones(d);
  px(x) = 1.0;
  py(y) = 1.0;
  auto kron4 = [](const RVector& a, const RVector& b, const RVector& c, const RVector& e) {
    const int n = static_cast<int>(a.size());
    RVector out(n * n * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) out(((i * n + j) * n + k) * n + l) = a(i) * b(j) * c(k) * e(l);
    return out;
  };
  RVector diag = kron4(one - py, px, px, px) + kron4(one - py, py, px, py) +
                 kron4(py, px, one - px, py) + kron4(py, py, one - px, px) +
                 kron4(py, one - px - py, px, one - px - py);
  std::vector<Factor> fs{{"A1", d}, {"B1", d}, {"A2", d}, {"B2", d}};
  return LabeledOperator(fs, diag.cast<cd>().asDiagonal().toDenseMatrix());
}

namespace {

void check_density(const LabeledOperator& s, const char* what, double tol) {
  if (s.factors().size() != 1) {
    throw NotDensity(std::string(what) + " must act on a single factor");
  }
  if (hermiticity_defect(s.matrix()) > tol || std::abs(s.trace().real() - 1.0) > tol ||
      std::abs(s.trace().imag()) > tol || min_eigenvalue(s.matrix(), 1e300) < -tol) {
    throw NotDensity(std::string(what) + " is not a density operator");
  }
}

}  // namespace

LabeledOperator functional_compose(double p, const LabeledOperator& rho,
                                   const LabeledOperator& sigma, double tol) {
  if (!(p >= 0.0 && p <= 1.0)) throw BadProbability("p = " + std::to_string(p) + " outside [0,1]");
  check_density(rho, "rho", tol);
  check_density(sigma, "sigma", tol);
  if (rho.factors()[0].dim != sigma.factors()[0].dim) {
    throw DimMismatch("rho and sigma live on systems of different dimension");
  }
  LabeledOperator fwd = tensor_op(rho, LabeledOperator::identity(sigma.factors()));
  LabeledOperator bwd = tensor_op(LabeledOperator::identity(rho.factors()), sigma);
  return fwd * cd(p) + bwd * cd(1.0 - p);
}

FunctionalDecomposition functional_decompose(const LabeledOperator& r, double tol) {
  if (r.factors().size() != 2 || r.factors()[0].dim != r.factors()[1].dim) {
    throw NotAFunctional("a functional acts on two factors of equal dimension");
  }
  const Factor fa = r.factors()[0], fb = r.factors()[1];
  const int d = fa.dim;
  SystemRegistry reg = registry_of(r);
  TypeExpr t = dual(TypeExpr::bistoch(fa.label, {}, fb.label, {}));
  Tolerances tl;
  tl.psd = tl.sector = tol;
  CheckReport rep = is_deterministic(r, t, reg, Hierarchy::kBistoch, tl);
  if (!rep.pass) {
    throw NotAFunctional("operator is not a deterministic functional on (^" + fa.label +
                         " -> ^" + fb.label + ")");
  }
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix xa = (partial_trace(r, {fb.label}).matrix() - id) / static_cast<double>(d);
  CMatrix xb = (partial_trace(r, {fa.label}).matrix() - id) / static_cast<double>(d);
  xa = 0.5 * (xa + xa.adjoint());
  xb = 0.5 * (xb + xb.adjoint());
  const double mu_min = 1.0 / d + eigvalsh(xa, 1e300).minCoeff();
  double p = std::clamp(1.0 - d * mu_min, 0.0, 1.0);

  FunctionalDecomposition out;
  out.p = p;
  const CMatrix mixed = id / static_cast<double>(d);
  out.rho_fwd = LabeledOperator({fa}, p > tol ? CMatrix(mixed + xa / p) : mixed);
  out.sigma_bwd = LabeledOperator({fb}, 1.0 - p > tol ? CMatrix(mixed + xb / (1.0 - p)) : mixed);
  return out;
}

}  // namespace hoq
