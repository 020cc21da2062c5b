// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qci/cost_ledger.hpp"

namespace qci {

/// Stipulation of every global state of an m-qubit program register. All
/// M = 2^m values must be written out explicitly, so specifying a program
/// this way always costs M classical steps.
struct ProgramSpec {
  int m = 0;
  std::vector<std::string> values;  // one stipulated value per global state
};

/// Charges 2^m parameter steps and returns that count.
std::uint64_t specify_qtm_program(const ProgramSpec& spec, CostLedger& ledger);

/// Invocation of a named algorithm from a fixed registry: one step for the
/// name plus one per run-time parameter.
struct ApiCall {
  std::string algorithm;
  std::vector<std::string> params;
};

/// Fixed set of callable algorithms and their registered parameter counts.
/// The registrations mirror the scenario suite; the Grover entry exists in
/// two framings (one conceptual query parameter, or the two analog control
/// parameters of a small hardware implementation).
class ApiRegistry {
 public:
  void register_algorithm(std::string name, std::size_t arity);
  std::size_t arity(const std::string& name) const;  // NotFoundError if absent
  bool contains(const std::string& name) const;
  const std::vector<std::pair<std::string, std::size_t>>& algorithms() const {
    return algorithms_;
  }

  static const ApiRegistry& builtin();

 private:
  std::vector<std::pair<std::string, std::size_t>> algorithms_;
};

/// Charges arity + 1 parameter steps and returns that count.
std::uint64_t specify_api_call(const ApiCall& call, const ApiRegistry& registry,
                               CostLedger& ledger);

/// Run-time boundary specification for a simulation scenario: one complex
/// value per basis vector, plus the rule extending the specification to
/// superpositions. parameter_count is the number of run-time parameters a
/// user must supply to pin the spec down (the per-basis values by default;
/// more for rules with global-state parameters).
struct BoundarySpec {
  Eigen::VectorXcd basis_values;
  std::function<std::complex<double>(const Eigen::VectorXcd&)> extension;
  std::size_t parameter_count = 0;
};

/// Extension is the literal linear combination of the per-basis values.
BoundarySpec literal_linear_boundary(Eigen::VectorXcd basis_values);

/// Extension squares the superposition coefficients; fails additivity.
BoundarySpec coefficient_squaring_boundary(Eigen::VectorXcd basis_values);

enum class LinearityVerdict { kLinear, kNonlinear };

/// Randomized additivity/homogeneity check of the extension rule: samples
/// `trials` triples of superpositions and complex scalars and compares
/// rule(a*u + b*v) against a*rule(u) + b*rule(v) at 1e-9. Deterministic for
/// a given (spec, trials, seed).
LinearityVerdict check_boundary_linearity(const BoundarySpec& spec, int trials,
                                          std::uint64_t seed);

/// A simulation stays worthwhile only while its run-time parameter count is
/// O(n); boundary specs charging more than this multiple of n are refused.
inline constexpr std::size_t kBoundaryParameterFactor = 2;

/// Charges the spec's parameter_count parameter steps and returns it.
std::uint64_t specify_boundary(const BoundarySpec& spec, CostLedger& ledger);

}  // namespace qci
