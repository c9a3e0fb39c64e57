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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownSystem : public Error {
 public:
  explicit UnknownSystem(const std::string& label)
      : Error("unknown system '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class HatDimMismatch : public Error {
 public:
  HatDimMismatch(const std::string& x, int dx, const std::string& y, int dy);
};

/// A label occurs more than once inside one type.
class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("system '" + label + "' occurs more than once in the type") {}
};

#define HOQ_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

HOQ_DEFINE_ERROR(LabelCollision)
HOQ_DEFINE_ERROR(BadPermutation)
HOQ_DEFINE_ERROR(UnknownLabel)
HOQ_DEFINE_ERROR(DimMismatch)
HOQ_DEFINE_ERROR(ShapeMismatch)
HOQ_DEFINE_ERROR(NotHermitian)
HOQ_DEFINE_ERROR(FactorMismatch)
HOQ_DEFINE_ERROR(HatInStandardHierarchy)
HOQ_DEFINE_ERROR(NoHattedSystems)
HOQ_DEFINE_ERROR(SizeLimit)
HOQ_DEFINE_ERROR(RecursionLimit)
HOQ_DEFINE_ERROR(BadLevels)
HOQ_DEFINE_ERROR(NotAFunctional)
HOQ_DEFINE_ERROR(BadProbability)
HOQ_DEFINE_ERROR(NotDensity)
HOQ_DEFINE_ERROR(BlockCheckFailed)
HOQ_DEFINE_ERROR(MemoryDimMismatch)
HOQ_DEFINE_ERROR(NotANetwork)
HOQ_DEFINE_ERROR(RankInstability)
HOQ_DEFINE_ERROR(SchemaError)
HOQ_DEFINE_ERROR(ConfigError)

#undef HOQ_DEFINE_ERROR

}  // namespace hoq
