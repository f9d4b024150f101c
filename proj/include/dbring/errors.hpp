// Copyright 2026 The dbring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dbring {

// Invalid parameters or malformed input.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size or work budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused because the search space is too large.
class EnumerationTooLarge : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// A composition plan cannot be realised by column trimming.
class InfeasibleError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// A construction invariant was violated. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An observed window is not contained in the map.
class NotInMapError : public std::runtime_error {
 public:
  NotInMapError(const std::string& what, int layer)
      : std::runtime_error(what), layer_(layer) {}

  // 1 or 2: which layer lookup missed first.
  int layer() const noexcept { return layer_; }

 private:
  int layer_;
};

}  // namespace dbring
