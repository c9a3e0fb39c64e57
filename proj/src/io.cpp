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

#include "hoq/io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hoq/errors.hpp"

namespace hoq {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json factor_list(const std::vector<Factor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(Json::array({f.label, f.dim}));
  return out;
}

std::vector<Factor> parse_factor_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of [label, dim]");
  std::vector<Factor> out;
  for (const auto& e : j) {
    if (e.is_string() && e.get<std::string>() == kTrivialLabel) {
      out.push_back({std::string(kTrivialLabel), 1});
      continue;
    }
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer()) {
      throw SchemaError(std::string(what) + " entries must be [label, dim], got " + e.dump());
    }
    const int d = e[1].get<int>();
    if (d < 1) throw SchemaError("dimension must be positive, got " + e.dump());
    out.push_back({e[0].get<std::string>(), d});
  }
  return out;
}

}  // namespace

Json operator_to_json(const LabeledOperator& op, const std::string& type) {
  Json j;
  if (!type.empty()) j["type"] = type;
  j["factors"] = factor_list(op.factors());
  Json rows = Json::array();
  const CMatrix& m = op.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

LabeledOperator operator_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("operator must be a JSON object");
  if (!j.contains("factors") || !j.contains("matrix")) {
    throw SchemaError("operator needs \"factors\" and \"matrix\"");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "factors" && key != "matrix" && key != "type") {
      throw SchemaError("unknown operator key \"" + key + "\"");
    }
  }
  std::vector<Factor> fs = parse_factor_list(j["factors"], "factors");
  const long long n = product_of_dims(fs);
  const Json& rows = j["matrix"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) {
    throw SchemaError("matrix must have " + std::to_string(n) + " rows");
  }
  CMatrix m(n, n);
  for (long long r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      throw SchemaError("matrix row " + std::to_string(r) + " must have " + std::to_string(n) +
                        " entries");
    }
    for (long long c = 0; c < n; ++c) {
      const Json& e = row[c];
      if (e.is_number()) {
        m(r, c) = cd(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = cd(e[0].get<double>(), e[1].get<double>());
      } else {
        throw SchemaError("matrix entries must be [re, im], got " + e.dump());
      }
    }
  }
  try {
    return LabeledOperator(std::move(fs), std::move(m));
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
}

std::string read_file(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw Error("cannot open '" + path + "'");
  std::string out;
  char buf[1 << 16];
  int got;
  while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, got);
  const bool bad = got < 0;
  gzclose(f);
  if (bad) throw Error("cannot read '" + path + "'");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  if (ends_with(path, ".gz")) {
    gzFile f = gzopen(path.c_str(), "wb");
    if (f == nullptr) throw Error("cannot write '" + path + "'");
    const int put = content.empty() ? 0 : gzwrite(f, content.data(), static_cast<unsigned>(content.size()));
    gzclose(f);
    if (put != static_cast<int>(content.size())) throw Error("cannot write '" + path + "'");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("cannot write '" + path + "'");
}

namespace {

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

OperatorFile read_operator(const std::string& path) {
  const Json j = parse_json_text(read_file(path), path);
  OperatorFile f{operator_from_json(j), std::nullopt};
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw SchemaError("\"type\" must be a string");
    f.type = j["type"].get<std::string>();
  }
  return f;
}

void write_operator(const std::string& path, const LabeledOperator& op, const std::string& type) {
  write_file(path, operator_to_json(op, type).dump() + "\n");
}

Json spec_to_json(const NetworkSpec& spec) {
  Json j;
  j["slot_types"] = Json::array();
  for (const auto& t : spec.slot_types) j["slot_types"].push_back(print_type(t));
  j["memories"] = factor_list(spec.memories);
  return j;
}

NetworkSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("slot_types") || !j.contains("memories")) {
    throw SchemaError("network spec needs \"slot_types\" and \"memories\"");
  }
  NetworkSpec s;
  if (!j["slot_types"].is_array()) throw SchemaError("\"slot_types\" must be an array");
  for (const auto& t : j["slot_types"]) {
    if (!t.is_string()) throw SchemaError("slot types must be strings");
    s.slot_types.push_back(parse_type_syntax(t.get<std::string>()));
  }
  s.memories = parse_factor_list(j["memories"], "memories");
  return s;
}

Json bundle_to_json(const Bundle& b) {
  Json j;
  j["blocks"] = Json::array();
  for (const auto& op : b.blocks) j["blocks"].push_back(operator_to_json(op));
  j["spec"] = spec_to_json(b.spec);
  return j;
}

Bundle bundle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("spec")) throw SchemaError("bundle needs \"spec\"");
  Bundle b;
  b.spec = spec_from_json(j["spec"]);
  if (j.contains("blocks")) {
    if (!j["blocks"].is_array()) throw SchemaError("\"blocks\" must be an array");
    for (const auto& e : j["blocks"]) b.blocks.push_back(operator_from_json(e));
  }
  return b;
}

namespace {

Json components(const std::vector<ComponentNorm>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"pattern", c.pattern}, {"norm", c.norm}});
  return out;
}

Json number_or_null(double x) { return std::isnan(x) ? Json(nullptr) : Json(x); }

}  // namespace

Json report_to_json(const CheckReport& r) {
  return {
      {"subject", r.subject},
      {"hierarchy", r.hierarchy},
      {"verdict", r.verdict()},
      {"input_order", r.input_order},
      {"canonical_order", r.canonical_order},
      {"hermiticity_defect", r.hermiticity_defect},
      {"hermitian_ok", r.hermitian_ok},
      {"min_eigenvalue", number_or_null(r.min_eigenvalue)},
      {"psd_ok", r.psd_ok},
      {"lambda_exact", r.lambda_exact},
      {"lambda_expected", r.lambda_expected},
      {"lambda_measured", r.lambda_measured},
      {"lambda_ok", r.lambda_ok},
      {"sector_residual", r.sector_residual},
      {"sector_ok", r.sector_ok},
      {"residual_components", components(r.residual_components)},
      {"forbidden_components", components(r.forbidden_components)},
  };
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os.precision(6);
  auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  os << r.verdict() << "  " << r.subject << "  [" << r.hierarchy << "]\n";
  os << "  order       ";
  for (const auto& l : r.input_order) os << ' ' << l;
  os << "  ->";
  for (const auto& l : r.canonical_order) os << ' ' << l;
  os << '\n';
  os << "  hermitian    defect " << r.hermiticity_defect << "  " << ok(r.hermitian_ok) << '\n';
  os << "  psd          min eigenvalue " << r.min_eigenvalue << "  " << ok(r.psd_ok) << '\n';
  os << "  lambda       " << r.lambda_exact << " expected, " << r.lambda_measured
     << " measured  " << ok(r.lambda_ok) << '\n';
  os << "  sectors      residual " << r.sector_residual << "  " << ok(r.sector_ok) << '\n';
  for (const auto& c : r.residual_components) {
    os << "    outside    " << c.pattern << "  " << c.norm << '\n';
  }
  for (const auto& c : r.forbidden_components) {
    os << "    forbidden  " << c.pattern << "  " << c.norm << '\n';
  }
  return os.str();
}

Json classification_to_json(const Classification& c) {
  return {{"verdict", class_verdict_name(c.verdict)},
          {"bistoch", report_to_json(c.bistoch)},
          {"standard", report_to_json(c.standard)},
          {"forbidden", components(c.forbidden)}};
}

std::string classification_to_text(const Classification& c) {
  std::ostringstream os;
  os.precision(6);
  os << class_verdict_name(c.verdict) << '\n';
  for (const auto& f : c.forbidden) os << "  forbidden  " << f.pattern << "  " << f.norm << '\n';
  os << report_to_text(c.bistoch) << report_to_text(c.standard);
  return os.str();
}

Json admissibility_to_json(const AdmissibilityResult& a) {
  return {{"verdict", admissibility_name(a.verdict)},
          {"reason", a.reason},
          {"residual", a.residual},
          {"iterations", a.iterations}};
}

}  // namespace hoq
