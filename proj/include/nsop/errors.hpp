// Copyright 2026 The nsop Authors
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

#ifndef NSOP_ERRORS_HPP_
#define NSOP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsop {

// Raised when a caller breaks a documented precondition (index out of range,
// infeasible incumbent, non-positive parameter, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by the OR-Library and catalog readers. `position()` is the byte
// offset of the offending token, `token()` its 0-based ordinal.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t token)
      : std::runtime_error(what), position_(position), token_(token) {}

  std::size_t position() const { return position_; }
  std::size_t token() const { return token_; }

 private:
  std::size_t position_;
  std::size_t token_;
};

}  // namespace nsop

#endif  // NSOP_ERRORS_HPP_
