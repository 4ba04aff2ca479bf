// Copyright 2026 The vibriq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Independent reference implementations used by the unit and acceptance
// tests. None of these call into the library code they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vibriq/circuit.hpp"
#include "vibriq/pauli.hpp"
#include "vibriq/pes.hpp"
#include "vibriq/second_quantization.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix pauli_matrix(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Embeds single-qubit operators (qubit -> 2x2) into n qubits. Qubit 0 is the
/// least significant bit, so it is the rightmost Kronecker factor.
inline Matrix embed(std::size_t n, const std::map<std::size_t, Matrix>& ops) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    auto it = ops.find(q);
    out = kron(out, it == ops.end() ? pauli_matrix('I') : it->second);
  }
  return out;
}

inline Matrix dense(const vibriq::PauliSum& s) {
  const std::size_t n = s.num_qubits();
  Matrix out = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& t : s.terms()) {
    const std::string label = t.string.label(n);
    std::map<std::size_t, Matrix> ops;
    for (std::size_t q = 0; q < n; ++q) ops[q] = pauli_matrix(label[q]);
    out += t.coeff * embed(n, ops);
  }
  return out;
}

inline vibriq::PauliSum random_sum(std::size_t n, std::size_t terms, std::mt19937_64& rng,
                                   bool hermitian) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<vibriq::PauliTerm> out;
  for (std::size_t k = 0; k < terms; ++k) {
    std::string label;
    for (std::size_t q = 0; q < n; ++q) label += "IXYZ"[letter(rng)];
    const double re = coeff(rng);
    const double im = hermitian ? 0.0 : coeff(rng);
    out.push_back({vibriq::PauliString::from_label(label), Complex(re, im)});
  }
  return vibriq::PauliSum(n, std::move(out));
}

inline Matrix single_gate(vibriq::GateKind kind, double t) {
  const Complex i(0, 1);
  const double c = std::cos(t / 2);
  const double s = std::sin(t / 2);
  Matrix m(2, 2);
  switch (kind) {
    case vibriq::GateKind::X: m << 0, 1, 1, 0; break;
    case vibriq::GateKind::H: m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
    case vibriq::GateKind::RX: m << c, -i * s, -i * s, c; break;
    case vibriq::GateKind::RY: m << c, -s, s, c; break;
    case vibriq::GateKind::RZ: m << std::exp(-i * t / 2.0), 0, 0, std::exp(i * t / 2.0); break;
    case vibriq::GateKind::PHASE: m << 1, 0, 0, std::exp(i * t); break;
    default: break;
  }
  return m;
}

inline Matrix gate_unitary(const vibriq::Gate& g, std::span<const double> params, std::size_t n) {
  const double t = g.resolved_angle(params);
  if (g.kind != vibriq::GateKind::CNOT) return embed(n, {{g.qubits[0], single_gate(g.kind, t)}});
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const bool control = (j >> g.qubits[0]) & 1;
    u(control ? j ^ (Eigen::Index{1} << g.qubits[1]) : j, j) = 1.0;
  }
  return u;
}

inline Matrix circuit_unitary(const vibriq::Circuit& c, std::span<const double> params) {
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits();
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : c.gates()) u = gate_unitary(g, params, c.num_qubits()) * u;
  return u;
}

inline Eigen::VectorXcd basis_vector(std::size_t n, std::uint64_t index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

/// Density matrix evolution with rho -> (1 - p) rho + p/d^2 sum_P P rho P
/// after each gate, the sum over all d^2 Paulis on the gate's support.
inline Matrix noisy_density(const vibriq::Circuit& c, std::span<const double> params,
                            double p_u2, double p_u3, double p_cx) {
  const std::size_t n = c.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const auto& g : c.gates()) {
    const Matrix u = gate_unitary(g, params, n);
    rho = u * rho * u.adjoint();
    double p = p_u3;
    if (g.kind == vibriq::GateKind::CNOT) {
      p = p_cx;
    } else if (g.kind == vibriq::GateKind::H || g.kind == vibriq::GateKind::PHASE ||
               (g.kind == vibriq::GateKind::RX && !g.parameter &&
                std::abs(std::abs(g.angle) - std::numbers::pi / 2) < 1e-12)) {
      p = p_u2;
    }
    if (p == 0.0) continue;
    const std::size_t arity = g.kind == vibriq::GateKind::CNOT ? 2 : 1;
    const int count = arity == 1 ? 4 : 16;
    Matrix mixed = Matrix::Zero(dim, dim);
    for (int k = 0; k < count; ++k) {
      std::map<std::size_t, Matrix> ops{{g.qubits[0], pauli_matrix("IXYZ"[k & 3])}};
      if (arity == 2) ops[g.qubits[1]] = pauli_matrix("IXYZ"[k >> 2]);
      const Matrix pm = embed(n, ops);
      mixed += pm * rho * pm.adjoint();
    }
    rho = (1.0 - p) * rho + (p / count) * mixed;
  }
  return rho;
}

/// Physical basis (one occupied modal per mode) as bit indices, ascending.
inline std::vector<std::uint64_t> physical_indices(const vibriq::QubitLayout& layout) {
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << layout.num_qubits();
  for (std::uint64_t j = 0; j < dim; ++j) {
    bool ok = true;
    for (std::size_t l = 0; l < layout.num_modes() && ok; ++l) {
      int ones = 0;
      for (std::size_t k = 0; k < layout.modal_count(l); ++k) ones += (j >> layout.qubit(l, k)) & 1;
      ok = ones == 1;
    }
    if (ok) out.push_back(j);
  }
  return out;
}

/// Matrix of the second-quantized terms in the physical basis, built from the
/// action a^+_k a_h |..h..> = |..k..> mode by mode.
inline Eigen::MatrixXd onv_matrix(const std::vector<vibriq::SqTerm>& terms,
                                  const vibriq::QubitLayout& layout) {
  const auto basis = physical_indices(layout);
  std::map<std::uint64_t, Eigen::Index> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (const auto& t : terms) {
      std::uint64_t state = basis[static_cast<std::size_t>(col)];
      bool alive = true;
      for (const auto& f : t.factors) {
        const std::uint64_t h = std::uint64_t{1} << layout.qubit(f.mode, f.annihilate);
        const std::uint64_t k = std::uint64_t{1} << layout.qubit(f.mode, f.create);
        if (!(state & h)) {
          alive = false;
          break;
        }
        state &= ~h;
        state |= k;
      }
      if (alive) out(where.at(state), col) += t.coeff;
    }
  }
  return out;
}

/// Lowest eigenvalues of -(w/2) d^2/dQ^2 + (w/2) Q^2 + sum_p c_p Q^p on a
/// uniform grid with a five-point Laplacian.
inline Eigen::VectorXd grid_levels(double omega, const std::map<int, double>& poly, double half_width,
                                   int points) {
  const double h = 2.0 * half_width / (points + 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(points, points);
  const double k = omega / 2.0 / (12.0 * h * h);
  const double stencil[5] = {1.0, -16.0, 30.0, -16.0, 1.0};
  for (int i = 0; i < points; ++i) {
    const double q = -half_width + (i + 1) * h;
    double v = 0.5 * omega * q * q;
    for (const auto& [p, c] : poly) v += c * std::pow(q, p);
    m(i, i) += v;
    for (int d = -2; d <= 2; ++d) {
      const int j = i + d;
      if (j >= 0 && j < points) m(i, j) += k * stencil[d + 2];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvalues();
}

/// Two-mode quartic force field with seeded random anharmonic and coupling
/// coefficients of magnitude at most `fraction` of the smaller frequency.
inline vibriq::PesExpansion synthetic_pes(std::uint64_t seed, std::vector<double> omega,
                                          double fraction = 0.1) {
  std::mt19937_64 rng(seed);
  vibriq::PesExpansion pes;
  pes.frequencies = std::move(omega);
  const double scale = fraction * *std::min_element(pes.frequencies.begin(), pes.frequencies.end());
  std::uniform_real_distribution<double> u(-scale, scale);
  for (std::size_t l = 0; l < pes.num_modes(); ++l) {
    pes.terms.push_back({0.2 * u(rng), {{l, 3}}});
    pes.terms.push_back({0.05 * std::abs(u(rng)), {{l, 4}}});
  }
  for (std::size_t l = 0; l < pes.num_modes(); ++l) {
    for (std::size_t m = l + 1; m < pes.num_modes(); ++m) {
      pes.terms.push_back({u(rng), {{l, 1}, {m, 1}}});
      pes.terms.push_back({0.3 * u(rng), {{l, 2}, {m, 1}}});
      pes.terms.push_back({0.3 * u(rng), {{l, 1}, {m, 2}}});
      pes.terms.push_back({0.1 * u(rng), {{l, 2}, {m, 2}}});
    }
  }
  return pes;
}

}  // namespace oracle
