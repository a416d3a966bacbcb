/******************************************************************************
 * Copyright 2026 The mrac-lab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace mrac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial whose z^0 coefficient is zero (no forward-power form),
/// or a non-monic divisor handed to the predictor split.
class DegeneratePolynomial : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The admissible parameter set cannot be used as S: its high-frequency-gain
/// interval contains zero or changes sign.
class InadmissibleSet : public Error {
 public:
  using Error::Error;
};

/// Minimum-phase / stable-reference / known-gain-sign requirements failed.
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

/// The estimate left the sign region of the gain box. Unreachable after
/// projection; raised only when state was corrupted externally.
class CorruptedState : public Error {
 public:
  using Error::Error;
};

/// A closed-loop run produced NaN/Inf.
class NumericAbort : public Error {
 public:
  using Error::Error;
};

/// Configuration problem; `field()` holds a JSON-pointer-like path.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace mrac
