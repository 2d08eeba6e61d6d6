// Copyright 2023 The Authors.
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

#ifndef MCUBE_ERROR_H_
#define MCUBE_ERROR_H_

#include <stdexcept>
#include <string>

namespace mcube {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad shapes, out-of-range coordinates, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input that fails an axiom system. The message carries the first violation.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// A configured size guard was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcube

#endif  // MCUBE_ERROR_H_
