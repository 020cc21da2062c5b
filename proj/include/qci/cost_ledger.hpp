// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qci {

/// The classical-step counters attached to one scenario run.
///
/// A "classical step" is one association-list row read or write, one label
/// comparison, or one arithmetic operation on referent-level values.
/// Counters are incremented explicitly by the code doing the work, never
/// inferred from wall-clock time. Quantum-side counters (oracle queries,
/// gate applications) are tracked separately so the classical interface
/// cost can be compared against them.
enum class Counter {
  kDefinitionSteps,
  kParameterSteps,
  kInterpretationSteps,
  kBaselineSteps,
  kQuantumOracleQueries,
  kQuantumGateCount,
};

struct CostLedger {
  std::uint64_t definition_steps = 0;
  std::uint64_t parameter_steps = 0;
  std::uint64_t interpretation_steps = 0;
  std::uint64_t baseline_steps = 0;
  std::uint64_t quantum_oracle_queries = 0;
  std::uint64_t quantum_gate_count = 0;

  /// Increase one counter. Counters only ever grow.
  void charge(Counter counter, std::uint64_t amount);

  /// Name-based variant; throws ArgumentError on an unknown counter name.
  /// Accepted names are the field names above ("definition_steps", ...).
  void charge(std::string_view counter_name, std::uint64_t amount);

  /// Component-wise addition; associative, so parallel scenario fan-out can
  /// merge in any grouping.
  void merge(const CostLedger& other);

  /// definition + parameter + interpretation: the classical cost of the
  /// data interface itself, excluding the baseline algorithm.
  std::uint64_t interface_steps() const {
    return definition_steps + parameter_steps + interpretation_steps;
  }
};

/// Growth models fitted by fit_growth. Only the three orders that the cost
/// analysis distinguishes are classified; anything else is reported raw.
enum class GrowthLabel { kConstant, kLogN, kLinearN };

std::string to_string(GrowthLabel label);

struct GrowthClass {
  GrowthLabel label = GrowthLabel::kConstant;
  /// Sum of squared relative errors of the winning model's best scale fit.
  double residual = 0.0;
};

/// One sample of a cost sweep: register dimension N and the steps charged.
struct GrowthPoint {
  std::uint64_t n_states = 0;  // N, a power of two
  double steps = 0.0;
};

/// Classifies a cost sweep as constant, logarithmic, or linear in N.
///
/// Fits steps = a * f(N) for f in {1, log2 N, N} by least squares on
/// relative error (intercept-free), and returns the minimum-residual label.
/// Relative error makes the fit scale-invariant: multiplying every step
/// count by c > 0 cannot change the label.
///
/// Requires at least four points with strictly increasing power-of-two N
/// and positive step counts; throws InsufficientDataError / ArgumentError
/// otherwise.
GrowthClass fit_growth(const std::vector<GrowthPoint>& points);

}  // namespace qci
