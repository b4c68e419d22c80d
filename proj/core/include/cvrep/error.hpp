// Copyright 2026 The cvrepeater Authors
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

namespace cvrep {

// Every library error derives from Error so callers (sweeps, the CLI) can
// annotate a failing parameter point and keep going.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the operation's domain (sub-vacuum variance, negative
// time, transmittance outside (0, 1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A covariance matrix that violates the uncertainty principle.
class UnphysicalStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A denominator in a closed-form expression vanished.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Parameters are individually in range but jointly give no real solution.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Numerical degeneracy inside a matrix computation (singular measurement
// matrix, negative discriminant beyond rounding).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cvrep
