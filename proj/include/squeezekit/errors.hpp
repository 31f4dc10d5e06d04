// Copyright 2026 The squeezekit Authors
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

namespace squeezekit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request would exceed a configured size limit (Dicke dimension or 2^N).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The mean spin vanishes, so the transverse plane is undefined.
class DegenerateMeanSpin : public Error {
 public:
  using Error::Error;
};

/// 1 + (N-1) * tperp_min fell below -1e-10.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

/// A brute-force reduced density matrix does not fit the symmetric
/// two-qubit template, or carries an imaginary residue.
class TemplateViolation : public Error {
 public:
  using Error::Error;
};

/// Both spinors of a two-spinor state coincide, so the state is a product.
class DegenerateSpinors : public Error {
 public:
  using Error::Error;
};

/// Reading or writing an output file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace squeezekit
