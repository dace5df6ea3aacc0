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

#ifndef DSMIN_ERRORS_H_
#define DSMIN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dsmin {

// Element index out of range, or an argument outside a function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input: instance files, datasets, constraint or cost specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller (e.g. a permutation
// whose chain does not contain the requested set).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive routines refuse ground sets above their guard.
class TooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dsmin

#endif  // DSMIN_ERRORS_H_
