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

#include "hoq/network.hpp"

#include <cmath>
#include <set>

#include "hoq/errors.hpp"
#include "hoq/processes.hpp"

namespace hoq {

namespace {

std::string describe(const NetworkSpec& spec) {
  std::string s = "network[";
  for (std::size_t i = 0; i < spec.slot_types.size(); ++i) {
    if (i > 0) s += ", ";
    s += print_type(spec.slot_types[i]);
  }
  s += "; ";
  for (std::size_t i = 0; i < spec.memories.size(); ++i) {
    if (i > 0) s += " ";
    s += spec.memories[i].label;
  }
  return s + "]";
}

TypeExpr memory_type(const Factor& f) { return TypeExpr::systems({f.label}); }

}  // namespace

void validate_network_spec(const NetworkSpec& spec, SystemRegistry& reg) {
  const std::size_t n = spec.slot_types.size();
  if (n == 0) throw NotANetwork("a network needs at least one slot");
  if (spec.memories.size() != n + 1) {
    throw NotANetwork("a network with " + std::to_string(n) + " slots needs " +
                      std::to_string(n + 1) + " memories, got " +
                      std::to_string(spec.memories.size()));
  }
  std::set<std::string> seen;
  for (const auto& m : spec.memories) {
    if (m.label == kTrivialLabel) {
      if (m.dim != 1) throw MemoryDimMismatch("the trivial memory I has dimension 1");
      continue;
    }
    reg.add(m.label, m.dim);
    if (!seen.insert(m.label).second) throw NotANetwork("memory '" + m.label + "' repeated");
  }
  for (const auto& x : spec.slot_types) {
    validate_type(x, reg);
    for (const auto& l : system_labels(x)) {
      if (!seen.insert(l).second) {
        throw NotANetwork("system '" + l + "' occurs in more than one place of the network");
      }
    }
  }
}

TypeExpr block_type(const NetworkSpec& spec, int i) {
  return TypeExpr::arrow(dual(spec.slot_types.at(i)),
                         TypeExpr::arrow(memory_type(spec.memories.at(i)),
                                         memory_type(spec.memories.at(i + 1))));
}

Characterization network_characterization(const NetworkSpec& spec, const SystemRegistry& reg) {
  SystemRegistry r = reg;
  validate_network_spec(spec, r);
  return delta_network(spec.slot_types, spec.memories.front().label, spec.memories.back().label,
                       r);
}

LabeledOperator compose_network(const std::vector<LabeledOperator>& blocks,
                                const NetworkSpec& spec, const SystemRegistry& reg,
                                const Tolerances& tol) {
  SystemRegistry r = reg;
  validate_network_spec(spec, r);
  const std::size_t n = spec.slot_types.size();
  if (blocks.size() != n) {
    throw NotANetwork("spec has " + std::to_string(n) + " slots but " +
                      std::to_string(blocks.size()) + " blocks were given");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e : {i, i + 1}) {
      const Factor& m = spec.memories[e];
      if (m.label == kTrivialLabel) continue;
      int j = blocks[i].index_of(m.label);
      if (j < 0 || blocks[i].factors()[j].dim != m.dim) {
        throw MemoryDimMismatch("block " + std::to_string(i + 1) + " does not carry memory " +
                                m.label + " of dimension " + std::to_string(m.dim));
      }
    }
    TypeExpr bt = block_type(spec, static_cast<int>(i));
    CheckReport rep;
    try {
      rep = is_deterministic(blocks[i], bt, r, Hierarchy::kBistoch, tol);
    } catch (const FactorMismatch& e) {
      throw BlockCheckFailed("block " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!rep.pass) {
      throw BlockCheckFailed("block " + std::to_string(i + 1) + " is not a deterministic " +
                             print_type(bt) + " (residual " +
                             std::to_string(rep.sector_residual) + ", min eigenvalue " +
                             std::to_string(rep.min_eigenvalue) + ")");
    }
  }
  const Characterization c = delta_network(spec.slot_types, spec.memories.front().label,
                                           spec.memories.back().label, r);
  return align_to(link_all(blocks), c.systems);
}

CheckReport check_network(const LabeledOperator& r, const NetworkSpec& spec,
                          const SystemRegistry& reg, const Tolerances& tol) {
  return check_characterization(r, network_characterization(spec, reg), tol, describe(spec));
}

namespace {

std::string fresh_label(const SystemRegistry& reg, int& counter) {
  while (true) {
    std::string l = "M" + std::to_string(++counter);
    if (!reg.contains(l)) return l;
  }
}

}  // namespace

NetworkDecomposition decompose_network(const LabeledOperator& r, const NetworkSpec& spec,
                                       const SystemRegistry& reg, const DecomposeOptions& opt) {
  SystemRegistry sreg = reg;
  validate_network_spec(spec, sreg);
  for (const auto& f : r.factors()) {
    if (!sreg.contains(f.label)) sreg.add(f.label, f.dim);
  }
  const Characterization c = network_characterization(spec, sreg);
  CheckReport rep = check_characterization(r, c, opt.tol, describe(spec));
  if (!rep.pass) {
    throw NotANetwork("operator is not a deterministic " + describe(spec) + " (residual " +
                      std::to_string(rep.sector_residual) + ")");
  }

  NetworkSpec out_spec = spec;
  const int n = static_cast<int>(spec.slot_types.size());
  std::vector<LabeledOperator> blocks(n);
  LabeledOperator current = align_to(r, c.systems);
  int counter = 0;

  for (int i = n - 1; i >= 1; --i) {
    const TypeExpr& x = spec.slot_types[i];
    const Factor en = out_spec.memories[i + 1];
    std::set<std::string> tail;
    std::vector<Factor> tail_factors = systems_of(x, sreg);
    if (en.label != kTrivialLabel) tail_factors.push_back(en);
    for (const auto& f : tail_factors) tail.insert(f.label);
    const long long dm = product_of_dims(tail_factors);

    const Rational lam_dual = characterize(dual(x), sreg, Hierarchy::kBistoch).lambda;
    LabeledOperator s = partial_trace(current, tail) * cd(lam_dual.to_double());

    Eigh e = eigh(s.matrix(), opt.tol.herm * 1e3);
    const double top = e.values.maxCoeff();
    const double cut = opt.rank_tol * top;
    std::vector<int> support;
    for (Eigen::Index k = 0; k < e.values.size(); ++k) {
      const double v = e.values(k);
      if (v > cut / 10 && v < cut * 10) {
        throw RankInstability("memory support eigenvalue " + std::to_string(v) +
                              " is within a factor 10 of the rank threshold " +
                              std::to_string(cut));
      }
      if (v >= cut) support.push_back(static_cast<int>(k));
    }
    const int rank = static_cast<int>(support.size());
    const long long da = s.dim();
    CMatrix v(da, rank);
    RVector sv(rank);
    for (int k = 0; k < rank; ++k) {
      v.col(k) = e.vectors.col(support[k]);
      sv(k) = e.values(support[k]);
    }

    const std::string mem = fresh_label(sreg, counter);
    sreg.add(mem, rank);
    out_spec.memories[i] = {mem, rank};

    // S' = |w><w| with |w> = sum_k sqrt(s_k) |v_k>|k>.
    CVector w = CVector::Zero(da * rank);
    for (long long a = 0; a < da; ++a) {
      for (int k = 0; k < rank; ++k) w(a * rank + k) = std::sqrt(sv(k)) * v(a, k);
    }
    std::vector<Factor> sf = s.factors();
    sf.push_back({mem, rank});
    LabeledOperator s_lift = projector(w, sf);

    // R'[(k,m),(l,m')] = <v_k|R|v_l>[m,m'] / sqrt(s_k s_l)
    CMatrix kv = CMatrix::Zero(da * dm, rank * dm);
    for (long long a = 0; a < da; ++a) {
      for (int k = 0; k < rank; ++k) {
        for (long long m = 0; m < dm; ++m) kv(a * dm + m, k * dm + m) = v(a, k);
      }
    }
    LabeledOperator aligned = align_to(current, [&] {
      std::vector<Factor> fs = s.factors();
      fs.insert(fs.end(), tail_factors.begin(), tail_factors.end());
      return fs;
    }());
    CMatrix wmat = kv.adjoint() * aligned.matrix() * kv;
    for (int k = 0; k < rank; ++k) {
      for (int l = 0; l < rank; ++l) {
        wmat.block(k * dm, l * dm, dm, dm) /= std::sqrt(sv(k) * sv(l));
      }
    }
    std::vector<Factor> bf{{mem, rank}};
    bf.insert(bf.end(), tail_factors.begin(), tail_factors.end());
    LabeledOperator block(bf, std::move(wmat));
    blocks[i] = align_to(block, characterize(block_type(out_spec, i), sreg,
                                              Hierarchy::kBistoch).systems);
    current = s_lift;
  }
  blocks[0] = align_to(current, characterize(block_type(out_spec, 0), sreg,
                                              Hierarchy::kBistoch).systems);
  return {std::move(blocks), std::move(out_spec)};
}

NetworkSpec bitooth_spec(int n) {
  NetworkSpec s;
  for (int i = 1; i <= n; ++i) {
    s.slot_types.push_back(
        TypeExpr::bistoch("A" + std::to_string(i), {}, "B" + std::to_string(i), {}));
  }
  s.memories.assign(n + 1, Factor{std::string(kTrivialLabel), 1});
  return s;
}

NetworkSpec bislot_spec(int n) {
  NetworkSpec s;
  for (int i = 1; i <= n; ++i) {
    s.slot_types.push_back(
        dual(TypeExpr::bistoch("A" + std::to_string(i), {}, "B" + std::to_string(i), {})));
  }
  s.memories.assign(n + 1, Factor{std::string(kTrivialLabel), 1});
  return s;
}

SystemRegistry comb_registry(const std::vector<int>& dims, int d_p, int d_f) {
  SystemRegistry reg;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    reg.add("A" + std::to_string(i + 1), dims[i]);
    reg.add("B" + std::to_string(i + 1), dims[i]);
  }
  reg.add("P", d_p);
  reg.add("F", d_f);
  return reg;
}

CheckReport check_bitooth(const LabeledOperator& r, const std::vector<int>& dims,
                          const Tolerances& tol) {
  return check_network(r, bitooth_spec(static_cast<int>(dims.size())), comb_registry(dims), tol);
}

CheckReport check_bislot(const LabeledOperator& r, const std::vector<int>& dims, int d_p, int d_f,
                         const Tolerances& tol) {
  NetworkSpec s = bislot_spec(static_cast<int>(dims.size()));
  s.memories.front() = {"P", d_p};
  s.memories.back() = {"F", d_f};
  return check_network(r, s, comb_registry(dims, d_p, d_f), tol);
}

CheckReport check_bsp(const LabeledOperator& r, const std::vector<int>& dims, int d_p, int d_f,
                      const Tolerances& tol) {
  SystemRegistry reg = comb_registry(dims, d_p, d_f);
  return is_deterministic(r, parse_type(bsp_type(static_cast<int>(dims.size())), reg), reg,
                          Hierarchy::kBistoch, tol);
}

}  // namespace hoq
