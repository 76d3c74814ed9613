// Copyright 2026 The qpqc Authors
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

namespace qpqc {

/// Base of every error thrown by the library. Subclasses map one-to-one onto
/// the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed numeric input: a probability list that is not a distribution,
/// an argument outside a function's domain, a non-Hermitian matrix.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Bloch vector outside the ball or a matrix that is not a density operator.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Channel parameters outside the completely positive tetrahedron, or a term
/// list that is not a random-unitary channel.
class CpViolation : public Error {
 public:
  using Error::Error;
};

/// Requested ciphertext distance cannot be reached for the plaintext hull.
class InfeasibleTheta : public Error {
 public:
  using Error::Error;
};

}  // namespace qpqc
