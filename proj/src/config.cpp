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

#include "hoq/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hoq/errors.hpp"

namespace hoq {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_positive_double(const std::string& v, const std::string& where) {
  double x = 0.0;
  try {
    std::size_t used = 0;
    x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
  } catch (const std::exception&) {
    throw ConfigError(where + ": '" + v + "' is not a number");
  }
  if (!(x > 0.0)) throw ConfigError(where + ": value must be positive");
  return x;
}

long long parse_positive_int(const std::string& v, const std::string& where) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(where + ": '" + v + "' is not an integer");
  }
  if (x < 1) throw ConfigError(where + ": value must be positive");
  return x;
}

}  // namespace

Config parse_config(std::string_view text) {
  Config cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (value.empty()) throw ConfigError(where + ": missing value for '" + key + "'");

    if (key.rfind("registry.", 0) == 0) {
      const std::string label = key.substr(9);
      const long long d = parse_positive_int(value, where);
      if (d > (1 << 20)) throw ConfigError(where + ": dimension too large");
      try {
        cfg.registry.add(label, static_cast<int>(d));
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
      }
    } else if (key == "tol.herm") {
      cfg.tol.herm = parse_positive_double(value, where);
    } else if (key == "tol.psd") {
      cfg.tol.psd = parse_positive_double(value, where);
    } else if (key == "tol.sector") {
      cfg.tol.sector = parse_positive_double(value, where);
    } else if (key == "tol.feas") {
      cfg.tol.feas = parse_positive_double(value, where);
    } else if (key == "limit.max_dim") {
      cfg.limits.max_dim = parse_positive_int(value, where);
    } else if (key == "limit.max_iter") {
      cfg.limits.max_iter = static_cast<int>(parse_positive_int(value, where));
    } else if (key == "limit.recursion") {
      cfg.limits.recursion = static_cast<int>(parse_positive_int(value, where));
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace hoq
