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

#include "hoq/membership.hpp"

#include <cmath>
#include <limits>

#include "hoq/errors.hpp"
#include "hoq/random.hpp"

namespace hoq {

namespace {

constexpr double kNoHermCheck = std::numeric_limits<double>::infinity();

}  // namespace

CheckReport check_characterization(const LabeledOperator& op, const Characterization& c,
                                   const Tolerances& tol, std::string subject, Hierarchy h) {
  CheckReport r;
  r.subject = std::move(subject);
  r.hierarchy = hierarchy_name(h);
  r.input_order = op.labels();
  r.canonical_order = labels_of(c.systems);
  LabeledOperator a = align_to(op, c.systems);

  r.hermiticity_defect = hermiticity_defect(a.matrix());
  r.hermitian_ok = r.hermiticity_defect <= tol.herm;
  if (r.hermitian_ok) {
    r.min_eigenvalue = min_eigenvalue(a.matrix(), kNoHermCheck);
    r.psd_ok = r.min_eigenvalue >= -tol.psd;
  } else {
    r.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    r.psd_ok = false;
  }

  r.lambda_exact = c.lambda.str();
  r.lambda_expected = c.lambda.to_double();
  r.lambda_measured = a.trace().real() / static_cast<double>(a.dim());
  r.lambda_ok = std::abs(r.lambda_measured - r.lambda_expected) <= tol.sector * r.lambda_expected;

  std::vector<double> norms = pattern_norms(a, c.systems);
  double sq = 0.0;
  for (std::size_t p = 1; p < norms.size(); ++p) {
    if (c.delta.contains(p)) continue;
    sq += norms[p] * norms[p];
    if (norms[p] > tol.sector) {
      r.residual_components.push_back({c.delta.pattern_string(p), norms[p]});
    }
  }
  r.sector_residual = std::sqrt(sq);
  r.sector_ok = r.sector_residual <= tol.sector;
  r.pass = r.hermitian_ok && r.psd_ok && r.lambda_ok && r.sector_ok;
  return r;
}

CheckReport is_deterministic(const LabeledOperator& op, const TypeExpr& t,
                             const SystemRegistry& reg, Hierarchy h, const Tolerances& tol) {
  return check_characterization(op, characterize(t, reg, h), tol, print_type(t), h);
}

const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::kFeasible: return "FEASIBLE";
    case Admissibility::kNotAdmissible: return "NOT_ADMISSIBLE";
    case Admissibility::kUndecided: return "UNDECIDED";
  }
  return "?";
}

AdmissibilityResult is_admissible(const LabeledOperator& op, const TypeExpr& t,
                                  const SystemRegistry& reg, Hierarchy h,
                                  const AdmissibilityOptions& opt) {
  const Characterization c = characterize(t, reg, h);
  const LabeledOperator m = align_to(op, c.systems);
  const Eigen::Index n = m.dim();
  AdmissibilityResult res;

  const double defect = hermiticity_defect(m.matrix());
  if (defect > opt.tol.herm) {
    res.verdict = Admissibility::kNotAdmissible;
    res.reason = "operator is not Hermitian";
    res.residual = defect;
    return res;
  }
  const double min_ev = min_eigenvalue(m.matrix(), kNoHermCheck);
  if (min_ev < -opt.tol.psd) {
    res.verdict = Admissibility::kNotAdmissible;
    res.reason = "operator is not positive semidefinite (min eigenvalue " +
                 std::to_string(min_ev) + ")";
    res.residual = -min_ev;
    return res;
  }

  const double lambda = c.lambda.to_double();
  if (opt.state_fast_path && t.kind() == TypeKind::kSystems) {
    // States: M <= D for some density D iff Tr M <= 1.
    const double tr = m.trace().real();
    if (tr <= 1.0 + opt.tol.feas) {
      res.verdict = Admissibility::kFeasible;
      const double slack = std::max(0.0, 1.0 - tr);
      res.witness = m + LabeledOperator::identity(c.systems) * cd(slack / static_cast<double>(n));
      res.reason = "trace at most one";
    } else {
      res.verdict = Admissibility::kNotAdmissible;
      res.reason = "trace " + std::to_string(tr) + " exceeds one";
      res.residual = tr - 1.0;
    }
    return res;
  }

  // Y = D - M ranges over PSD  and  c0 + Delta with c0 = lambda*1 - M.
  const CMatrix c0 = lambda * CMatrix::Identity(n, n) - m.matrix();
  auto proj_affine = [&](const CMatrix& y) -> CMatrix {
    LabeledOperator diff(c.systems, y - c0);
    return c0 + sector_project(diff, c.delta, kNoHermCheck).matrix();
  };
  auto finish = [&](const CMatrix& y, int iters, double gap) {
    res.verdict = Admissibility::kFeasible;
    res.witness = LabeledOperator(c.systems, y + m.matrix());
    res.iterations = iters;
    res.residual = gap;
    res.reason = "dominating deterministic operator found";
  };

  CMatrix y = proj_affine(CMatrix::Zero(n, n));
  if (min_eigenvalue(y, kNoHermCheck) >= -opt.tol.feas) {
    finish(y, 0, 0.0);
    return res;
  }

  CMatrix x = y, p = CMatrix::Zero(n, n), q = CMatrix::Zero(n, n);
  double gap = std::numeric_limits<double>::infinity();
  double gap_mark = gap;
  constexpr int kStallWindow = 200;
  for (int it = 1; it <= opt.max_iter; ++it) {
    CMatrix xp = psd_part(y + p);
    p = y + p - xp;
    x = xp;
    CMatrix yn = proj_affine(x + q);
    q = x + q - yn;
    y = yn;
    gap = (x - y).norm();
    if (gap < opt.tol.feas) {
      finish(y, it, gap);
      return res;
    }
    if (it % kStallWindow == 0) {
      // The gap converges to the distance between the two sets; a stable
      // positive limit means they do not intersect.
      if (gap > 1e3 * opt.tol.feas && std::abs(gap_mark - gap) <= 1e-6 * gap) {
        res.verdict = Admissibility::kNotAdmissible;
        res.reason = "alternating projections converged to a positive gap";
        res.residual = gap;
        res.iterations = it;
        return res;
      }
      gap_mark = gap;
    }
  }
  res.verdict = Admissibility::kUndecided;
  res.reason = "no decision within the iteration limit";
  res.residual = gap;
  res.iterations = opt.max_iter;
  return res;
}

const char* class_verdict_name(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::kBoth: return "BOTH";
    case ClassVerdict::kBistochOnly: return "BISTOCH_ONLY";
    case ClassVerdict::kStandardOnly: return "STANDARD_ONLY";
    case ClassVerdict::kNeither: return "NEITHER";
  }
  return "?";
}

Classification classify(const LabeledOperator& op, const TypeExpr& t, const SystemRegistry& reg,
                        const Tolerances& tol) {
  if (!contains_bistoch(t)) {
    throw NoHattedSystems("type " + print_type(t) + " has no hatted systems to classify");
  }
  const TypeExpr plain = dehat(t);
  const Characterization cb = characterize(t, reg, Hierarchy::kBistoch);
  const Characterization cs = characterize(plain, reg, Hierarchy::kStandard);

  Classification out;
  out.bistoch = check_characterization(op, cb, tol, print_type(t), Hierarchy::kBistoch);
  out.standard = check_characterization(op, cs, tol, print_type(plain), Hierarchy::kStandard);

  const SectorSet diff = set_difference(cb.delta, cs.delta);
  const LabeledOperator a = align_to(op, cb.systems);
  std::vector<double> norms = pattern_norms(a, cb.systems);
  for (Pattern p : diff.patterns()) {
    if (norms[p] > tol.sector) out.forbidden.push_back({diff.pattern_string(p), norms[p]});
  }
  out.forbidden_part = sector_project(a, diff, kNoHermCheck);

  if (out.bistoch.pass && out.standard.pass) {
    out.verdict = ClassVerdict::kBoth;
  } else if (out.bistoch.pass) {
    out.verdict = ClassVerdict::kBistochOnly;
    out.bistoch.forbidden_components = out.forbidden;
  } else if (out.standard.pass) {
    out.verdict = ClassVerdict::kStandardOnly;
  } else {
    out.verdict = ClassVerdict::kNeither;
  }
  return out;
}

LabeledOperator sample_characterization(const Characterization& c, double eps,
                                        std::uint64_t seed) {
  if (!(eps >= 0.0 && eps < 1.0)) throw Error("eps must lie in [0, 1)");
  const double lambda = c.lambda.to_double();
  LabeledOperator base = LabeledOperator::identity(c.systems) * cd(lambda);
  if (eps == 0.0 || c.delta.empty()) return base;
  Rng rng(seed);
  LabeledOperator h(c.systems, random_hermitian(static_cast<int>(base.dim()), rng));
  LabeledOperator x = sector_project(h, c.delta, kNoHermCheck);
  const double norm = spectral_norm_hermitian(x.matrix());
  if (norm == 0.0) return base;
  return base + x * cd(eps * lambda / norm);
}

LabeledOperator sample_deterministic(const TypeExpr& t, const SystemRegistry& reg, Hierarchy h,
                                     double eps, std::uint64_t seed) {
  return sample_characterization(characterize(t, reg, h), eps, seed);
}

}  // namespace hoq
