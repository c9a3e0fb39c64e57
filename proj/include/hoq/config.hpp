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

// Key-value configuration files:
//
//   # comment
//   registry.A = 2
//   tol.sector = 1e-9
//   limit.max_dim = 4096

#pragma once

#include <string>
#include <string_view>

#include "hoq/registry.hpp"
#include "hoq/tolerances.hpp"

namespace hoq {

struct Config {
  SystemRegistry registry;
  Tolerances tol;
  Limits limits;
};

/// Throws ConfigError on unknown keys or malformed values.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

}  // namespace hoq
