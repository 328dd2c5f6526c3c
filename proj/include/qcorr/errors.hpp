// Copyright 2026 The qcorr authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input matrix fails the Hermiticity tolerance.
class NonHermitianError : public Error {
public:
  using Error::Error;
};

// Scalar function undefined (non-finite) at an eigenvalue.
class DomainError : public Error {
public:
  using Error::Error;
};

// Operand dimensions are incompatible.
class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

// Probability vector outside the simplex.
class InvalidProbabilitiesError : public Error {
public:
  using Error::Error;
};

// Scalar parameter outside its declared range.
class OutOfRangeError : public Error {
public:
  using Error::Error;
};

// Matrix fails density-matrix validation (trace or positivity).
class InvalidStateError : public Error {
public:
  using Error::Error;
};

// Bisection bracket carries no sign change.
class BisectionFailureError : public Error {
public:
  using Error::Error;
};

// A numerical identity that the analysis relies on failed to hold.
class VerificationError : public Error {
public:
  using Error::Error;
};

// Artifact could not be written.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace qcorr
