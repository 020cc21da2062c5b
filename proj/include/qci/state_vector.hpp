// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qci/errors.hpp"
#include "qci/rng.hpp"

namespace qci {

/// Digital readout strategy. Argmax is the default: the algorithms run here
/// drive the answer amplitude to dominance, so taking the largest
/// |amplitude|^2 is faithful and reproducible. Sampling draws one basis
/// index from the |amplitude|^2 distribution with an explicit 64-bit seed.
enum class DigitalMode { kArgmax, kSample };

enum class OutcomeKind { kDigital, kAnalog };

/// Result of reading out a register: either one basis index (digital) or
/// the per-qubit excitation probabilities (analog).
struct MeasurementOutcome {
  OutcomeKind kind = OutcomeKind::kDigital;
  Eigen::Index basis_index = 0;           // digital only
  Eigen::VectorXd qubit_marginals;        // analog only, one entry per qubit

  bool is_digital() const { return kind == OutcomeKind::kDigital; }
  bool is_analog() const { return kind == OutcomeKind::kAnalog; }
};

/// Dense amplitude vector of an n-qubit register in the computational
/// basis. Qubit i is bit i of the basis index (qubit 0 is the least
/// significant bit). The squared norm stays within 1e-10 of one at all
/// times after construction.
///
/// A StateVector also tracks how many oracle queries and gate applications
/// it has absorbed, so scenario code can merge quantum-side work into its
/// cost ledger without threading a ledger through every engine call.
template <typename Scalar = double>
class StateVector {
 public:
  using Complex = std::complex<Scalar>;
  using AmplitudeVector = Eigen::Vector<Complex, Eigen::Dynamic>;

  static constexpr int kMaxQubits = 14;
  static constexpr Scalar kNormTolerance = Scalar(1e-10);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const AmplitudeVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index j) const { return amplitudes_(j); }

  Scalar squared_norm() const { return amplitudes_.squaredNorm(); }

  std::uint64_t oracle_queries() const { return oracle_queries_; }
  std::uint64_t gate_count() const { return gate_count_; }

  template <typename S>
  friend StateVector<S> init_basis(int n, Eigen::Index j);
  template <typename S>
  friend StateVector<S> init_uniform(int n);
  template <typename S>
  friend StateVector<S> from_amplitudes(
      int n, const typename StateVector<S>::AmplitudeVector& amplitudes);
  template <typename S>
  friend void apply_unitary(StateVector<S>& state,
                            const Eigen::Ref<const Eigen::MatrixX<std::complex<S>>>& u,
                            const std::vector<int>& targets);
  template <typename S>
  friend void apply_phase_oracle(StateVector<S>& state, Eigen::Index marked);
  template <typename S>
  friend void grover_iteration(StateVector<S>& state, Eigen::Index marked);
  template <typename S>
  friend void apply_controlled_modular_multiply(StateVector<S>& state,
                                                int control, int work_first,
                                                int work_count,
                                                std::uint64_t multiplier,
                                                std::uint64_t modulus);

 private:
  StateVector(int n, AmplitudeVector amplitudes)
      : num_qubits_(n), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_ = 0;
  AmplitudeVector amplitudes_;
  std::uint64_t oracle_queries_ = 0;
  std::uint64_t gate_count_ = 0;
};

using StateVectord = StateVector<double>;

namespace detail {

inline void check_qubit_count(int n) {
  if (n < 1 || n > StateVector<double>::kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n) + " outside 1.." +
                    std::to_string(StateVector<double>::kMaxQubits));
  }
}

}  // namespace detail

/// |j> on n qubits.
template <typename Scalar = double>
StateVector<Scalar> init_basis(int n, Eigen::Index j) {
  detail::check_qubit_count(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (j < 0 || j >= dim) {
    throw SizeError("basis index " + std::to_string(j) +
                    " out of range for " + std::to_string(n) + " qubits");
  }
  typename StateVector<Scalar>::AmplitudeVector amps =
      StateVector<Scalar>::AmplitudeVector::Zero(dim);
  amps(j) = std::complex<Scalar>(1, 0);
  return StateVector<Scalar>(n, std::move(amps));
}

/// Equal amplitudes 1/sqrt(N) on every basis state.
template <typename Scalar = double>
StateVector<Scalar> init_uniform(int n) {
  detail::check_qubit_count(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Scalar value = Scalar(1) / std::sqrt(Scalar(dim));
  typename StateVector<Scalar>::AmplitudeVector amps =
      StateVector<Scalar>::AmplitudeVector::Constant(dim,
                                                     std::complex<Scalar>(value, 0));
  return StateVector<Scalar>(n, std::move(amps));
}

/// Adopts a caller-built amplitude vector; rejects wrong lengths and
/// unnormalized input.
template <typename Scalar = double>
StateVector<Scalar> from_amplitudes(
    int n, const typename StateVector<Scalar>::AmplitudeVector& amplitudes) {
  detail::check_qubit_count(n);
  if (amplitudes.size() != (Eigen::Index(1) << n)) {
    throw SizeError("amplitude vector length does not match 2^n");
  }
  const Scalar norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - Scalar(1)) > StateVector<Scalar>::kNormTolerance) {
    throw ValidationError("amplitudes are not normalized");
  }
  return StateVector<Scalar>(n, amplitudes);
}

/// Applies a k-qubit unitary (k <= 3) to the given targets, identity on all
/// other qubits. Local bit m of the matrix index corresponds to targets[m].
/// The matrix is checked unitary within 1e-10.
template <typename Scalar>
void apply_unitary(StateVector<Scalar>& state,
                   const Eigen::Ref<const Eigen::MatrixX<std::complex<Scalar>>>& u,
                   const std::vector<int>& targets) {
  using Complex = std::complex<Scalar>;
  const int k = static_cast<int>(targets.size());
  if (k < 1 || k > 3) {
    throw ArgumentError("apply_unitary supports 1 to 3 targets");
  }
  const Eigen::Index block = Eigen::Index(1) << k;
  if (u.rows() != block || u.cols() != block) {
    throw ArgumentError("gate matrix must be 2^k x 2^k for k targets");
  }
  Eigen::Index target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= state.num_qubits()) {
      throw ArgumentError("target qubit out of range");
    }
    if (target_mask & (Eigen::Index(1) << t)) {
      throw ArgumentError("duplicate target qubit");
    }
    target_mask |= Eigen::Index(1) << t;
  }
  const Scalar unitarity =
      (u.adjoint() * u - Eigen::MatrixX<Complex>::Identity(block, block))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity > Scalar(1e-10)) {
    throw ValidationError("matrix is not unitary within 1e-10");
  }

  // Spread local index v across the global target bits.
  std::array<Eigen::Index, 8> offset{};
  for (Eigen::Index v = 0; v < block; ++v) {
    Eigen::Index bits = 0;
    for (int m = 0; m < k; ++m) {
      if (v & (Eigen::Index(1) << m)) bits |= Eigen::Index(1) << targets[m];
    }
    offset[static_cast<std::size_t>(v)] = bits;
  }

  Eigen::Vector<Complex, Eigen::Dynamic> sub(block);
  const Eigen::Index dim = state.dim();
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index v = 0; v < block; ++v) {
      sub(v) = state.amplitudes_(base + offset[static_cast<std::size_t>(v)]);
    }
    sub = (u * sub).eval();
    for (Eigen::Index v = 0; v < block; ++v) {
      state.amplitudes_(base + offset[static_cast<std::size_t>(v)]) = sub(v);
    }
  }
  state.gate_count_ += 1;
}

/// Flips the sign of the marked amplitude and counts one oracle query.
template <typename Scalar>
void apply_phase_oracle(StateVector<Scalar>& state, Eigen::Index marked) {
  if (marked < 0 || marked >= state.dim()) {
    throw ArgumentError("marked index out of range");
  }
  state.amplitudes_(marked) = -state.amplitudes_(marked);
  state.oracle_queries_ += 1;
}

/// One search iteration: phase oracle, then inversion about the mean
/// (2|s><s| - I with |s> uniform).
template <typename Scalar>
void grover_iteration(StateVector<Scalar>& state, Eigen::Index marked) {
  apply_phase_oracle(state, marked);
  const std::complex<Scalar> twice_mean = Scalar(2) * state.amplitudes_.mean();
  state.amplitudes_ =
      StateVector<Scalar>::AmplitudeVector::Constant(state.dim(), twice_mean) -
      state.amplitudes_;
  state.gate_count_ += 1;
}

/// Controlled multiplication on a work sub-register: when the control qubit
/// is set, work value y < modulus maps to (y * multiplier) mod modulus and
/// y >= modulus is left alone. A permutation, hence unitary, whenever
/// gcd(multiplier, modulus) = 1.
template <typename Scalar>
void apply_controlled_modular_multiply(StateVector<Scalar>& state, int control,
                                       int work_first, int work_count,
                                       std::uint64_t multiplier,
                                       std::uint64_t modulus) {
  const int n = state.num_qubits();
  if (control < 0 || control >= n || work_first < 0 || work_count < 1 ||
      work_first + work_count > n) {
    throw ArgumentError("register slice out of range");
  }
  if (control >= work_first && control < work_first + work_count) {
    throw ArgumentError("control qubit overlaps the work register");
  }
  if (modulus < 2 || modulus > (std::uint64_t(1) << work_count)) {
    throw ArgumentError("modulus does not fit the work register");
  }
  if (std::gcd(multiplier % modulus, modulus) != 1) {
    throw ValidationError("multiplier shares a factor with the modulus");
  }

  const std::uint64_t a = multiplier % modulus;
  const std::uint64_t control_bit = std::uint64_t(1) << control;
  const std::uint64_t work_mask = ((std::uint64_t(1) << work_count) - 1)
                                  << work_first;
  typename StateVector<Scalar>::AmplitudeVector next =
      StateVector<Scalar>::AmplitudeVector::Zero(state.dim());
  for (Eigen::Index j = 0; j < state.dim(); ++j) {
    const auto bits = static_cast<std::uint64_t>(j);
    std::uint64_t image = bits;
    if (bits & control_bit) {
      const std::uint64_t y = (bits & work_mask) >> work_first;
      if (y < modulus) {
        const std::uint64_t yy = (y * a) % modulus;
        image = (bits & ~work_mask) | (yy << work_first);
      }
    }
    next(static_cast<Eigen::Index>(image)) = state.amplitudes_(j);
  }
  state.amplitudes_ = std::move(next);
  state.gate_count_ += 1;
}

/// Digital readout. Argmax ties break toward the lowest basis index; sample
/// mode draws from |amplitude|^2 with a deterministic seeded generator.
template <typename Scalar>
MeasurementOutcome measure_digital(const StateVector<Scalar>& state,
                                   DigitalMode mode, std::uint64_t seed = 0) {
  MeasurementOutcome outcome;
  outcome.kind = OutcomeKind::kDigital;
  const auto& amps = state.amplitudes();
  if (mode == DigitalMode::kArgmax) {
    Eigen::Index best = 0;
    Scalar best_p = std::norm(amps(0));
    for (Eigen::Index j = 1; j < amps.size(); ++j) {
      const Scalar p = std::norm(amps(j));
      if (p > best_p) {
        best = j;
        best_p = p;
      }
    }
    outcome.basis_index = best;
    return outcome;
  }
  std::mt19937_64 rng(seed);
  const double r = uniform_unit(rng) * static_cast<double>(state.squared_norm());
  double cumulative = 0.0;
  outcome.basis_index = amps.size() - 1;
  for (Eigen::Index j = 0; j < amps.size(); ++j) {
    cumulative += static_cast<double>(std::norm(amps(j)));
    if (r < cumulative) {
      outcome.basis_index = j;
      break;
    }
  }
  return outcome;
}

/// Analog readout: marginal_i is the total probability of basis states with
/// bit i set.
template <typename Scalar>
MeasurementOutcome measure_qubit_marginals(const StateVector<Scalar>& state) {
  MeasurementOutcome outcome;
  outcome.kind = OutcomeKind::kAnalog;
  outcome.qubit_marginals = Eigen::VectorXd::Zero(state.num_qubits());
  const auto& amps = state.amplitudes();
  for (Eigen::Index j = 0; j < amps.size(); ++j) {
    const double p = static_cast<double>(std::norm(amps(j)));
    for (int i = 0; i < state.num_qubits(); ++i) {
      if (j & (Eigen::Index(1) << i)) outcome.qubit_marginals(i) += p;
    }
  }
  return outcome;
}

}  // namespace qci
