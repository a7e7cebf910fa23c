// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hodgefock {

/// Operands live in spaces of different shape (dimension, degree, signature).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A degree-lowering or degree-raising operation was asked to leave its range.
class DegreeOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A position or basis index lies outside its admissible range.
class InvalidIndex : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A subspace is not mapped into itself by the requested action.
class NotInvariant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid verification configuration (bad ranges, unknown suite, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace hodgefock
