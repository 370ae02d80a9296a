// Copyright 2026 The icpriv Authors
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

#ifndef ICPRIV_ERRORS_HPP_
#define ICPRIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace icpriv {

// Invalid scheme, field or sweep parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroInverseError : public std::domain_error {
 public:
  ZeroInverseError() : std::domain_error("zero has no multiplicative inverse") {}
};

// An exhaustive enumeration would exceed its configured work cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDecodableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed inputs to the decoder or posterior engine (e.g. a strategy
// table whose support includes a pattern that does not satisfy the pair).
class InconsistentInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace icpriv

#endif  // ICPRIV_ERRORS_HPP_
