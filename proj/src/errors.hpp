// polyaxial: numerical harmonic analysis on the positive orthant with
// power-weighted measures.
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

namespace pax {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition (domain error, dimension
// mismatch, out-of-range parameter).
class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// A run configuration failed validation. The message names the offending
// field, e.g. "alpha[0] <= -1/2".
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A computation left the representable range (overflow, non-finite
// intermediate) or an iteration failed to converge.
class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Pointwise evaluation was requested at a point where the translation kernel
// density is unbounded (support endpoint with axis parameter < 1/2).
class EndpointSingular : public InvalidArgument {
public:
  explicit EndpointSingular(const std::string& msg) : InvalidArgument(msg) {}
};

}  // namespace pax
