// Copyright 2026 The qci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace qci {

template <typename Scalar>
using GateMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
GateMatrix<Scalar> hadamard_gate() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  GateMatrix<Scalar> h(2, 2);
  h << s, s, s, -s;
  return h;
}

template <typename Scalar = double>
GateMatrix<Scalar> x_gate() {
  GateMatrix<Scalar> x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

template <typename Scalar = double>
GateMatrix<Scalar> z_gate() {
  GateMatrix<Scalar> z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

/// diag(1, e^{i theta}) on one qubit.
template <typename Scalar = double>
GateMatrix<Scalar> phase_gate(Scalar theta) {
  GateMatrix<Scalar> p = GateMatrix<Scalar>::Identity(2, 2);
  p(1, 1) = std::polar(Scalar(1), theta);
  return p;
}

/// diag(1, 1, 1, e^{i theta}) on two qubits; symmetric in its targets.
template <typename Scalar = double>
GateMatrix<Scalar> controlled_phase_gate(Scalar theta) {
  GateMatrix<Scalar> p = GateMatrix<Scalar>::Identity(4, 4);
  p(3, 3) = std::polar(Scalar(1), theta);
  return p;
}

template <typename Scalar = double>
GateMatrix<Scalar> swap_gate() {
  GateMatrix<Scalar> s = GateMatrix<Scalar>::Zero(4, 4);
  s(0, 0) = 1;
  s(1, 2) = 1;
  s(2, 1) = 1;
  s(3, 3) = 1;
  return s;
}

}  // namespace qci
