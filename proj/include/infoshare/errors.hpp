// Copyright 2026 The Infoshare Authors.
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

#ifndef INFOSHARE_ERRORS_HPP_
#define INFOSHARE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace infoshare {

// An input violates a documented invariant (bad strategy, negative weight,
// malformed graph, ...). The message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument is well-formed but outside the domain of the operation
// (unknown node, empty neighborhood, zero mass).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scenario document could not be read or parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infoshare

#endif  // INFOSHARE_ERRORS_HPP_
