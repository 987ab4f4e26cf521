// Copyright 2026 The qnb authors
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

namespace qnb {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state failed one of its construction invariants. `kind()` is one of
/// "non-hermitian", "bad-trace", "not-psd", "dim-mismatch"; `magnitude()`
/// is the measured size of the violation.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, double magnitude, const std::string& what)
      : Error(what), kind_(std::move(kind)), magnitude_(magnitude) {}

  const std::string& kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string kind_;
  double magnitude_;
};

/// Operands whose dimensions cannot be combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Subsystem index outside the declared factorization.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The optimizer's best value disagrees with the certification oracle.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A marginal required to be nondegenerate has a degenerate spectrum.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A degeneracy structure is incompatible with the requested oracle.
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace qnb
