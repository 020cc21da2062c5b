// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qci {

/// Register size or basis index outside the representable range.
class SizeError : public std::out_of_range {
 public:
  explicit SizeError(const std::string& what) : std::out_of_range(what) {}
};

/// A constructed object violates its own invariants (non-unitary matrix,
/// duplicate labels, wrong record count, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A call argument is malformed (duplicate targets, unknown counter, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Value outside the codec's encodable domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A digital interpreter was handed an analog outcome, or vice versa.
class KindError : public std::invalid_argument {
 public:
  explicit KindError(const std::string& what) : std::invalid_argument(what) {}
};

/// Outcome has the right kind but the wrong dimensions.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Lookup key absent from a table or registry.
class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// An assignment table no longer covers the measured state index.
class CorruptionError : public std::runtime_error {
 public:
  explicit CorruptionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Too few points to classify a growth curve.
class InsufficientDataError : public std::invalid_argument {
 public:
  explicit InsufficientDataError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Boundary specification charges more parameters than a worthwhile
/// simulation may spend.
class BoundaryCostError : public std::runtime_error {
 public:
  explicit BoundaryCostError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Boundary specification failed the linearity check.
class BoundaryLinearityError : public std::runtime_error {
 public:
  explicit BoundaryLinearityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qci
