// Copyright 2026 The casimir-spectra Authors
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
//
#ifndef CASIMIR_ERRORS_HPP_
#define CASIMIR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested quantity
/// (non-positive coupling, xi <= 0, lambda0 == 0 where it divides, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The scattering denominator i*mu0 + omega*(1 + lambda0^2) vanished.
class DegenerateScattering : public Error {
 public:
  using Error::Error;
};

/// A bracketing root search was handed an interval without a sign change.
class RootBracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir

#endif  // CASIMIR_ERRORS_HPP_
