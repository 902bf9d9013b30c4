// Copyright 2026 The multiphoton Authors
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

namespace multiphoton {

// Each failure mode gets its own type so callers (and the CLI) can map them
// to distinct exit paths without parsing messages.

class InvalidOccupation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnnormalizedState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ShellOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

class IndefiniteGram : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace multiphoton
