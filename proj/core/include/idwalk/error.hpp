// Copyright 2026 The idwalk Authors
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

namespace idwalk {

/// Base class of every error raised by the library. `exit_code()` follows the
/// CLI contract: 1 validation, 2 numeric/verification, 3 I/O.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Coordinates or indices outside the lattice / ensemble.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Operands of incompatible dimension or lattice.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Inputs violating a documented precondition (duplicate S0 entries, bad
/// config values, non-Hermitian matrices, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A model/boundary combination the engine does not define.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Problem size beyond what a dense routine is built for.
class CapabilityError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// Iterative routine failed to converge, or a numerical check tripped.
class NumericError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

}  // namespace idwalk
