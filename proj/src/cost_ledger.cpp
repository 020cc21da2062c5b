// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#include "qci/cost_ledger.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "qci/errors.hpp"

namespace qci {

void CostLedger::charge(Counter counter, std::uint64_t amount) {
  switch (counter) {
    case Counter::kDefinitionSteps:
      definition_steps += amount;
      return;
    case Counter::kParameterSteps:
      parameter_steps += amount;
      return;
    case Counter::kInterpretationSteps:
      interpretation_steps += amount;
      return;
    case Counter::kBaselineSteps:
      baseline_steps += amount;
      return;
    case Counter::kQuantumOracleQueries:
      quantum_oracle_queries += amount;
      return;
    case Counter::kQuantumGateCount:
      quantum_gate_count += amount;
      return;
  }
  throw ArgumentError("unknown counter");
}

void CostLedger::charge(std::string_view counter_name, std::uint64_t amount) {
  static constexpr std::array<std::pair<std::string_view, Counter>, 6> kNames{{
      {"definition_steps", Counter::kDefinitionSteps},
      {"parameter_steps", Counter::kParameterSteps},
      {"interpretation_steps", Counter::kInterpretationSteps},
      {"baseline_steps", Counter::kBaselineSteps},
      {"quantum_oracle_queries", Counter::kQuantumOracleQueries},
      {"quantum_gate_count", Counter::kQuantumGateCount},
  }};
  for (const auto& [name, counter] : kNames) {
    if (name == counter_name) {
      charge(counter, amount);
      return;
    }
  }
  throw ArgumentError("unknown counter name: " + std::string(counter_name));
}

void CostLedger::merge(const CostLedger& other) {
  definition_steps += other.definition_steps;
  parameter_steps += other.parameter_steps;
  interpretation_steps += other.interpretation_steps;
  baseline_steps += other.baseline_steps;
  quantum_oracle_queries += other.quantum_oracle_queries;
  quantum_gate_count += other.quantum_gate_count;
}

std::string to_string(GrowthLabel label) {
  switch (label) {
    case GrowthLabel::kConstant:
      return "constant";
    case GrowthLabel::kLogN:
      return "log_N";
    case GrowthLabel::kLinearN:
      return "linear_N";
  }
  return "?";
}

namespace {

// Best intercept-free scale fit of steps ~ a * f(N), scored by the sum of
// squared relative errors. With g_i = f(N_i) / steps_i the score is
// min_a sum (a g_i - 1)^2, minimized at a = sum g_i / sum g_i^2.
double relative_residual(const std::vector<GrowthPoint>& points,
                         double (*model)(double)) {
  double sum_g = 0.0;
  double sum_g2 = 0.0;
  for (const auto& p : points) {
    const double g = model(static_cast<double>(p.n_states)) / p.steps;
    sum_g += g;
    sum_g2 += g * g;
  }
  if (sum_g2 <= 0.0) return std::numeric_limits<double>::infinity();
  const double a = sum_g / sum_g2;
  double residual = 0.0;
  for (const auto& p : points) {
    const double g = model(static_cast<double>(p.n_states)) / p.steps;
    const double e = a * g - 1.0;
    residual += e * e;
  }
  return residual;
}

}  // namespace

GrowthClass fit_growth(const std::vector<GrowthPoint>& points) {
  if (points.size() < 4) {
    throw InsufficientDataError(
        "fit_growth needs at least 4 points, got " +
        std::to_string(points.size()));
  }
  std::uint64_t previous = 0;
  for (const auto& p : points) {
    if (p.n_states == 0 || (p.n_states & (p.n_states - 1)) != 0) {
      throw ArgumentError("fit_growth: N values must be powers of two");
    }
    if (p.n_states <= previous) {
      throw ArgumentError("fit_growth: N values must be strictly increasing");
    }
    if (!(p.steps > 0.0)) {
      throw ArgumentError("fit_growth: step counts must be positive");
    }
    previous = p.n_states;
  }

  const double r_const = relative_residual(points, +[](double) { return 1.0; });
  const double r_log = relative_residual(points, +[](double n) { return std::log2(n); });
  const double r_lin = relative_residual(points, +[](double n) { return n; });

  // Ties break toward the simpler model.
  GrowthClass result{GrowthLabel::kConstant, r_const};
  if (r_log < result.residual) result = {GrowthLabel::kLogN, r_log};
  if (r_lin < result.residual) result = {GrowthLabel::kLinearN, r_lin};
  return result;
}

}  // namespace qci
