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

#include "hoq/registry.hpp"

#include <cctype>
#include <charconv>

#include "hoq/errors.hpp"

namespace hoq {

std::vector<std::string> labels_of(const std::vector<Factor>& factors) {
  std::vector<std::string> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.label);
  return out;
}

std::vector<int> dims_of(const std::vector<Factor>& factors) {
  std::vector<int> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.dim);
  return out;
}

long long product_of_dims(const std::vector<Factor>& factors) {
  long long p = 1;
  for (const auto& f : factors) p *= f.dim;
  return p;
}

bool is_valid_label(std::string_view label) {
  if (label.empty() || !std::isalpha(static_cast<unsigned char>(label[0]))) {
    return false;
  }
  for (char c : label) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

SystemRegistry::SystemRegistry() { dims_.emplace(std::string(kTrivialLabel), 1); }

SystemRegistry SystemRegistry::parse_inline(std::string_view spec) {
  SystemRegistry reg;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("registry entry '" + std::string(item) + "' is not LABEL=DIM");
    }
    std::string label(item.substr(0, eq));
    std::string_view num = item.substr(eq + 1);
    int dim = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), dim);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw ConfigError("bad dimension in registry entry '" + std::string(item) + "'");
    }
    reg.add(label, dim);
  }
  return reg;
}

void SystemRegistry::add(const std::string& label, int dim) {
  if (!is_valid_label(label)) throw ConfigError("invalid system label '" + label + "'");
  if (dim < 1) {
    throw ConfigError("dimension of '" + label + "' must be >= 1");
  }
  auto [it, inserted] = dims_.emplace(label, dim);
  if (!inserted && it->second != dim) {
    throw DimMismatch("system '" + label + "' already registered with dimension " +
                      std::to_string(it->second) + ", not " + std::to_string(dim));
  }
}

void SystemRegistry::add(const std::vector<Factor>& factors) {
  for (const auto& f : factors) add(f.label, f.dim);
}

bool SystemRegistry::contains(const std::string& label) const {
  return dims_.count(label) > 0;
}

int SystemRegistry::dim(const std::string& label) const {
  auto it = dims_.find(label);
  if (it == dims_.end()) throw UnknownSystem(label);
  return it->second;
}

}  // namespace hoq
