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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hoq {

/// Label of the one-dimensional system.
inline constexpr std::string_view kTrivialLabel = "I";

/// One tensor factor of an operator: a system label and its dimension.
struct Factor {
  std::string label;
  int dim = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

std::vector<std::string> labels_of(const std::vector<Factor>& factors);
std::vector<int> dims_of(const std::vector<Factor>& factors);
long long product_of_dims(const std::vector<Factor>& factors);

/// True iff `label` matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_label(std::string_view label);

/// Maps system labels to finite dimensions. "I" is always present with
/// dimension 1 and cannot be redefined.
class SystemRegistry {
 public:
  SystemRegistry();

  /// Parses the inline form "A=2,B=2,P=4".
  static SystemRegistry parse_inline(std::string_view spec);

  /// Adds or confirms a label. Re-adding with a different dimension throws
  /// DimMismatch.
  void add(const std::string& label, int dim);
  void add(const std::vector<Factor>& factors);

  bool contains(const std::string& label) const;
  /// Throws UnknownSystem.
  int dim(const std::string& label) const;

  const std::map<std::string, int>& entries() const { return dims_; }

 private:
  std::map<std::string, int> dims_;
};

}  // namespace hoq
