/*
  Copyright (c) 2026 the sepchan authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef SEPCHAN_CORE_ERRORS_HPP
#define SEPCHAN_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepchan {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed a value outside an operation's domain (bad dimension,
/// probability out of [0,1], zero vector where a state was expected, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Shapes or bipartite dimensions of the operands do not match.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A declared invariant failed to hold on the data (norm, trace,
/// Hermiticity, Kraus completeness, majorization, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to deliver its accuracy contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but outside the supported problem class.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace sepchan

#endif
