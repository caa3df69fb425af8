// Copyright 2026 The holonomy-lab Authors
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

#ifndef HOLO_ERRORS_H
#define HOLO_ERRORS_H

#include <stdexcept>
#include <string>

namespace holo {

/// A value violated a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The master-equation integrator lost trace or Hermiticity beyond its bound.
class IntegrationDiverged : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine (quadrature, root search) failed to converge.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An experiment configuration field is missing or malformed.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string field, const std::string &what)
        : std::runtime_error("config field '" + field + "': " + what), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

}  // namespace holo

#endif
