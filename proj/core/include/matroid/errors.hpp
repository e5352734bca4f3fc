// Copyright 2026 The Authors.
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

#ifndef MATROID_ERRORS_HPP_
#define MATROID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matroid {

/// Invalid input: malformed documents, axiom violations, exceeded guards.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that should be unreachable for valid inputs was produced: two
/// independent computations of the same quantity disagreed.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an enumeration would exceed its configured size guard.
class GuardError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace matroid

#endif  // MATROID_ERRORS_HPP_
