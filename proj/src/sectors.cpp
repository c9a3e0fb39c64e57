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

#include "hoq/sectors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hoq/errors.hpp"

namespace hoq {

const char* hierarchy_name(Hierarchy h) {
  return h == Hierarchy::kBistoch ? "bistoch" : "standard";
}

Hierarchy parse_hierarchy(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "bistoch" || l == "bistochastic") return Hierarchy::kBistoch;
  if (l == "standard" || l == "ordinary") return Hierarchy::kStandard;
  throw ConfigError("unknown hierarchy '" + s + "' (expected bistoch or standard)");
}

// SectorSet --------------------------------------------------------------------

SectorSet::SectorSet(std::vector<Factor> systems) : systems_(std::move(systems)) {
  if (systems_.size() > static_cast<std::size_t>(kMaxSectorFactors)) {
    throw SizeLimit("sector sets are limited to " + std::to_string(kMaxSectorFactors) +
                    " factors, got " + std::to_string(systems_.size()));
  }
  member_.assign(std::size_t{1} << systems_.size(), 0);
}

SectorSet SectorSet::all(std::vector<Factor> systems) {
  SectorSet s(std::move(systems));
  std::fill(s.member_.begin(), s.member_.end(), 1);
  return s;
}

SectorSet SectorSet::traceless(std::vector<Factor> systems) {
  SectorSet s = all(std::move(systems));
  s.member_[0] = 0;
  return s;
}

std::size_t SectorSet::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

std::vector<Pattern> SectorSet::patterns() const {
  std::vector<Pattern> out;
  for (std::size_t p = 0; p < member_.size(); ++p) {
    if (member_[p]) out.push_back(static_cast<Pattern>(p));
  }
  return out;
}

std::string SectorSet::pattern_string(Pattern p) const {
  std::string out;
  for (std::size_t i = 0; i < systems_.size(); ++i) {
    if (i > 0) out += ' ';
    out += systems_[i].label;
    out += (p >> i) & 1u ? ":T" : ":I";
  }
  return out;
}

Pattern SectorSet::parse_pattern(const std::string& text) const {
  std::istringstream in(text);
  std::string item;
  Pattern p = 0;
  std::vector<bool> seen(systems_.size(), false);
  while (in >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon + 2 != item.size() ||
        (item.back() != 'T' && item.back() != 'I')) {
      throw SchemaError("bad pattern item '" + item + "' (expected LABEL:T or LABEL:I)");
    }
    std::string label = item.substr(0, colon);
    std::size_t i = 0;
    while (i < systems_.size() && systems_[i].label != label) ++i;
    if (i == systems_.size()) throw SchemaError("pattern names unknown system '" + label + "'");
    if (seen[i]) throw SchemaError("pattern names '" + label + "' twice");
    seen[i] = true;
    if (item.back() == 'T') p |= Pattern{1} << i;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw SchemaError("pattern '" + text + "' does not name every system");
  }
  return p;
}

SectorSet SectorSet::reordered(const std::vector<std::string>& order) const {
  if (order.size() != systems_.size()) throw FactorMismatch("reorder size mismatch");
  std::vector<int> from(order.size());
  std::vector<Factor> fs;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t i = 0;
    while (i < systems_.size() && systems_[i].label != order[j]) ++i;
    if (i == systems_.size()) throw FactorMismatch("unknown system '" + order[j] + "'");
    from[j] = static_cast<int>(i);
    fs.push_back(systems_[i]);
  }
  SectorSet out(std::move(fs));
  for (std::size_t q = 0; q < member_.size(); ++q) {
    Pattern np = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if ((q >> from[j]) & 1u) np |= Pattern{1} << j;
    }
    out.member_[np] = member_[q];
  }
  return out;
}

namespace {

void require_same_systems(const SectorSet& a, const SectorSet& b) {
  if (a.systems() != b.systems()) throw FactorMismatch("sector sets over different systems");
}

std::vector<Factor> concat(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out = a;
  for (const auto& f : b) {
    for (const auto& g : a) {
      if (g.label == f.label) throw LabelCollision("system '" + f.label + "' occurs twice");
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

SectorSet set_union(const SectorSet& a, const SectorSet& b) {
  require_same_systems(a, b);
  SectorSet out(a.systems());
  for (std::size_t p = 0; p < a.universe(); ++p) {
    if (a.contains(p) || b.contains(p)) out.insert(p);
  }
  return out;
}

SectorSet set_difference(const SectorSet& a, const SectorSet& b) {
  require_same_systems(a, b);
  SectorSet out(a.systems());
  for (std::size_t p = 0; p < a.universe(); ++p) {
    if (a.contains(p) && !b.contains(p)) out.insert(p);
  }
  return out;
}

SectorSet set_intersection(const SectorSet& a, const SectorSet& b) {
  require_same_systems(a, b);
  SectorSet out(a.systems());
  for (std::size_t p = 0; p < a.universe(); ++p) {
    if (a.contains(p) && b.contains(p)) out.insert(p);
  }
  return out;
}

SectorSet set_product(const SectorSet& a, const SectorSet& b) {
  SectorSet out(concat(a.systems(), b.systems()));
  const int ka = a.num_factors();
  for (Pattern pa : a.patterns()) {
    for (Pattern pb : b.patterns()) out.insert(pa | (pb << ka));
  }
  return out;
}

// Characterization ---------------------------------------------------------------

Characterization arrow_characterization(const Characterization& x, const Characterization& y) {
  Characterization out{concat(x.systems, y.systems), Rational(1), SectorSet()};
  out.delta = SectorSet(out.systems);
  const int kx = static_cast<int>(x.systems.size());
  const std::size_t nx = x.delta.universe(), ny = y.delta.universe();
  for (std::size_t py = 0; py < ny; ++py) {
    const bool in_y = y.delta.contains(py);
    for (std::size_t px = 0; px < nx; ++px) {
      if (in_y || (px != 0 && !x.delta.contains(px))) out.delta.insert(px | (py << kx));
    }
  }
  long long dx = product_of_dims(x.systems);
  out.lambda = y.lambda / (Rational(dx) * x.lambda);
  return out;
}

namespace {

std::mutex g_cache_mu;
std::atomic<bool> g_cache_on{true};
std::unordered_map<std::string, Characterization> g_cache;

std::string cache_key(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h) {
  std::string key = hierarchy_name(h);
  key += '|';
  key += print_type(t);
  for (const auto& l : system_labels(t)) key += '|' + l + '=' + std::to_string(reg.dim(l));
  return key;
}

Characterization base_systems(const TypeExpr& t, const SystemRegistry& reg) {
  auto systems = systems_of(t, reg);
  long long d = product_of_dims(systems);
  Characterization c{systems, Rational(1, d), SectorSet::traceless(systems)};
  return c;
}

Characterization base_bistoch(const TypeExpr& t, const SystemRegistry& reg) {
  const auto& b = t.as_bistoch();
  auto systems = systems_of(t, reg);
  const int ka = static_cast<int>(b.in_tail.size());
  const Pattern x_bit = 1u, y_bit = Pattern{1} << (ka + 1);
  SectorSet delta(systems);
  for (std::size_t p = 0; p < delta.universe(); ++p) {
    const bool b_nonzero = (p >> (ka + 2)) != 0;
    if (b_nonzero || ((p & x_bit) && (p & y_bit))) delta.insert(p);
  }
  long long dyb = reg.dim(b.hat_out);
  for (const auto& l : b.out_tail) dyb *= reg.dim(l);
  return {systems, Rational(1, dyb), delta};
}

Characterization characterize_rec(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h) {
  std::string key;
  if (g_cache_on) {
    key = cache_key(t, reg, h);
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Characterization c;
  switch (t.kind()) {
    case TypeKind::kSystems:
      c = base_systems(t, reg);
      break;
    case TypeKind::kBistoch:
      if (h == Hierarchy::kStandard) {
        throw HatInStandardHierarchy("type " + print_type(t) +
                                     " has hatted systems; dehat it for the standard hierarchy");
      }
      c = base_bistoch(t, reg);
      break;
    case TypeKind::kArrow:
      c = arrow_characterization(characterize_rec(t.lhs(), reg, h),
                                 characterize_rec(t.rhs(), reg, h));
      break;
  }
  if (g_cache_on) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    g_cache.emplace(key, c);
  }
  return c;
}

}  // namespace

void set_characterization_cache(bool enabled) {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache_on = enabled;
  g_cache.clear();
}

void clear_characterization_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache.clear();
}

Characterization characterize(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h,
                              int recursion_limit) {
  if (type_depth(t) > recursion_limit) {
    throw RecursionLimit("type nesting depth " + std::to_string(type_depth(t)) +
                         " exceeds the limit " + std::to_string(recursion_limit));
  }
  validate_type(t, reg);
  if (system_labels(t).size() > static_cast<std::size_t>(kMaxSectorFactors)) {
    throw SizeLimit("type has more than " + std::to_string(kMaxSectorFactors) + " systems");
  }
  return characterize_rec(t, reg, h);
}

SectorSet delta_of(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h) {
  return characterize(t, reg, h).delta;
}

Rational lambda_of(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h) {
  return characterize(t, reg, h).lambda;
}

SectorSet delta_dual_direct(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h) {
  SectorSet d = delta_of(t, reg, h);
  return set_difference(SectorSet::traceless(d.systems()), d);
}

SectorSet delta_tensor_direct(const TypeExpr& a, const TypeExpr& b, const SystemRegistry& reg,
                              Hierarchy h) {
  SectorSet da = delta_of(a, reg, h), db = delta_of(b, reg, h);
  SectorSet out(concat(da.systems(), db.systems()));
  const int ka = da.num_factors();
  for (std::size_t pb = 0; pb < db.universe(); ++pb) {
    for (std::size_t pa = 0; pa < da.universe(); ++pa) {
      const bool ina = da.contains(pa), inb = db.contains(pb);
      if ((pb == 0 && ina) || (ina && inb) || (pa == 0 && inb)) out.insert(pa | (pb << ka));
    }
  }
  return out;
}

Characterization delta_network(const std::vector<TypeExpr>& xs, const std::string& e0,
                               const std::string& en, const SystemRegistry& reg, Hierarchy h) {
  if (xs.empty()) throw NotANetwork("a network needs at least one slot");
  std::vector<Factor> systems;
  if (e0 != kTrivialLabel) systems.push_back({e0, reg.dim(e0)});
  std::vector<Characterization> slots;
  std::vector<int> offset;
  Rational lambda(1);
  for (const auto& x : xs) {
    slots.push_back(characterize(x, reg, h));
    offset.push_back(static_cast<int>(systems.size()));
    systems = concat(systems, slots.back().systems);
    lambda = lambda * slots.back().lambda;
  }
  const int kn_at = static_cast<int>(systems.size());
  if (en != kTrivialLabel) systems = concat(systems, {{en, reg.dim(en)}});
  lambda = lambda / Rational(reg.dim(en));

  SectorSet delta(systems);
  for (std::size_t p = 0; p < delta.universe(); ++p) {
    if (p >> kn_at) {
      delta.insert(p);
      continue;
    }
    // Last slot carrying a traceless factor decides.
    for (std::size_t i = slots.size(); i-- > 0;) {
      const int ki = static_cast<int>(slots[i].systems.size());
      const std::size_t pi = (p >> offset[i]) & ((std::size_t{1} << ki) - 1);
      if (pi == 0) continue;
      if (slots[i].delta.contains(pi)) delta.insert(p);
      break;
    }
  }
  return {systems, lambda, delta};
}

// Projections ----------------------------------------------------------------------

namespace {

CMatrix idn_reduce(const CMatrix& x, const std::vector<int>& dims, int j) {
  std::vector<bool> mask(dims.size(), false);
  mask[j] = true;
  return kernels::partial_trace(x, dims, mask);
}

// Projects x (over `dims`) onto the patterns `sel` over the factors j.. of x.
CMatrix project_rec(const CMatrix& x, std::vector<int> dims, int j,
                    const std::vector<std::uint8_t>& sel) {
  bool any = false, every = true;
  for (auto v : sel) {
    any |= v != 0;
    every &= v != 0;
  }
  if (!any) return CMatrix::Zero(x.rows(), x.cols());
  if (every) return x;
  const std::size_t half = sel.size() / 2;
  std::vector<std::uint8_t> s0(half), s1(half);
  for (std::size_t q = 0; q < half; ++q) {
    s0[q] = sel[q << 1];
    s1[q] = sel[(q << 1) | 1];
  }
  if (s0 == s1) return project_rec(x, dims, j + 1, s0);

  const int d = dims[j];
  CMatrix reduced = idn_reduce(x, dims, j) / static_cast<double>(d);
  CMatrix idn_full = kernels::embed_identity(reduced, [&] {
    auto rd = dims;
    rd.erase(rd.begin() + j);
    return rd;
  }(), j, d);
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  if (std::find(s1.begin(), s1.end(), 1) != s1.end()) {
    out += project_rec(x - idn_full, dims, j + 1, s1);
  }
  if (std::find(s0.begin(), s0.end(), 1) != s0.end()) {
    auto rd = dims;
    rd.erase(rd.begin() + j);
    CMatrix pr = project_rec(reduced, rd, j, s0);
    out += kernels::embed_identity(pr, rd, j, d);
  }
  return out;
}

void norms_rec(const CMatrix& x, std::vector<int> dims, int j, int bit, Pattern prefix,
               int k, std::vector<double>& out) {
  if (bit == k) {
    out[prefix] = x.norm();
    return;
  }
  const int d = dims[j];
  CMatrix tr = idn_reduce(x, dims, j);
  auto rd = dims;
  rd.erase(rd.begin() + j);
  CMatrix trl = x - kernels::embed_identity(tr, rd, j, d) / static_cast<double>(d);
  // ||Tr_j(X) (x) 1 / d|| = ||Tr_j X|| / sqrt(d), component-wise.
  norms_rec(tr / std::sqrt(static_cast<double>(d)), rd, j, bit + 1, prefix, k, out);
  norms_rec(trl, dims, j + 1, bit + 1, prefix | (Pattern{1} << bit), k, out);
}

LabeledOperator checked_align(const LabeledOperator& op, const std::vector<Factor>& systems,
                              double tol_herm) {
  LabeledOperator a = align_to(op, systems);
  double defect = hermiticity_defect(a.matrix());
  if (defect > tol_herm) {
    throw NotHermitian("sector projection needs a Hermitian operator (defect " +
                       std::to_string(defect) + ")");
  }
  return a;
}

}  // namespace

LabeledOperator sector_project(const LabeledOperator& op, const SectorSet& s, double tol_herm) {
  LabeledOperator a = checked_align(op, s.systems(), tol_herm);
  return LabeledOperator(s.systems(), project_rec(a.matrix(), a.dims(), 0, s.indicator()));
}

LabeledOperator sector_component(const LabeledOperator& op, const std::vector<Factor>& systems,
                                 Pattern p, double tol_herm) {
  SectorSet s(systems);
  s.insert(p);
  return sector_project(op, s, tol_herm);
}

std::vector<double> pattern_norms(const LabeledOperator& op, const std::vector<Factor>& systems) {
  LabeledOperator a = align_to(op, systems);
  const int k = static_cast<int>(systems.size());
  if (k > kMaxSectorFactors) throw SizeLimit("too many factors for a pattern decomposition");
  std::vector<double> out(std::size_t{1} << k, 0.0);
  norms_rec(a.matrix(), a.dims(), 0, 0, 0, k, out);
  return out;
}

}  // namespace hoq
