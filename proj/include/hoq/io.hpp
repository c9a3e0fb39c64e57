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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hoq/labeled_operator.hpp"
#include "hoq/membership.hpp"
#include "hoq/network.hpp"

namespace hoq {

using Json = nlohmann::json;

/// {"factors":[["A",2],...], "matrix":[[[re,im],...],...]} with an optional
/// "type" string. Rows are row-major, first factor most significant.
Json operator_to_json(const LabeledOperator& op, const std::string& type = "");
/// Throws SchemaError.
LabeledOperator operator_from_json(const Json& j);

struct OperatorFile {
  LabeledOperator op;
  std::optional<std::string> type;
};

/// Reads plain or gzip-compressed text (detected from the magic bytes).
/// Throws Error when the file cannot be opened.
std::string read_file(const std::string& path);
/// Compresses when the path ends in ".gz".
void write_file(const std::string& path, const std::string& content);

/// Throws SchemaError on malformed content.
OperatorFile read_operator(const std::string& path);
void write_operator(const std::string& path, const LabeledOperator& op,
                    const std::string& type = "");

Json spec_to_json(const NetworkSpec& spec);
/// Slot types are parsed syntactically; validation happens when the spec
/// is used against a registry.
NetworkSpec spec_from_json(const Json& j);

struct Bundle {
  std::vector<LabeledOperator> blocks;
  NetworkSpec spec;
};
Json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const Json& j);

Json report_to_json(const CheckReport& r);
std::string report_to_text(const CheckReport& r);
Json classification_to_json(const Classification& c);
std::string classification_to_text(const Classification& c);
Json admissibility_to_json(const AdmissibilityResult& a);

}  // namespace hoq
