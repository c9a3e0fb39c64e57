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

#include "hoq/errors.hpp"

namespace hoq {

namespace {

std::string syntax_message(std::size_t position,
                           const std::vector<std::string>& expected,
                           const std::string& found) {
  std::string msg = "syntax error at position " + std::to_string(position) +
                    ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error(syntax_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

HatDimMismatch::HatDimMismatch(const std::string& x, int dx, const std::string& y,
                               int dy)
    : Error("hatted systems must be isomorphic: d_" + x + " = " +
            std::to_string(dx) + " but d_" + y + " = " + std::to_string(dy)) {}

}  // namespace hoq
