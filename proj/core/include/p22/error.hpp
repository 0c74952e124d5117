// Copyright 2026 The p22 Authors
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

#ifndef P22_ERROR_HPP_
#define P22_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p22 {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex count is zero or above the representation limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A vertex index is not below the digraph order.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Attempted to add an arc (u, u).
class LoopError : public Error {
 public:
  using Error::Error;
};

// Input lies outside the mathematical domain of an operation, e.g. the
// closed-form extremal size below n = 13 or an inadmissible family order.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of the caller was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized digraph. `position()` is a byte offset for syntax
// errors and an arc index for semantic ones (see `what()`).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace p22

#endif  // P22_ERROR_HPP_
