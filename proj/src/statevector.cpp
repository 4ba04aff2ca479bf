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

#include "vibriq/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vibriq/random.hpp"

namespace vibriq {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxStateQubits) {
    throw std::invalid_argument("StateVector: qubit count must be in [1, " +
                                std::to_string(kMaxStateQubits) + "]");
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex(0.0));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : StateVector(num_qubits) {
  if (amplitudes.size() != amps_.size()) {
    throw std::invalid_argument("StateVector: amplitude count does not match 2^num_qubits");
  }
  amps_ = std::move(amplitudes);
}

StateVector StateVector::basis_state(std::size_t num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dimension()) throw std::out_of_range("StateVector: basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

void StateVector::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::runtime_error("StateVector: cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

void StateVector::apply_single(std::size_t q, const Complex m[4]) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply(const Gate& gate, std::span<const double> params) {
  const std::size_t q = gate.qubits[0];
  if (q >= num_qubits_ || (gate.arity() == 2 && gate.qubits[1] >= num_qubits_)) {
    throw std::out_of_range("StateVector: gate acts outside the register");
  }
  const double t = gate.resolved_angle(params);
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  switch (gate.kind) {
    case GateKind::X: {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      }
      return;
    }
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      const Complex m[4] = {r, r, r, -r};
      apply_single(q, m);
      return;
    }
    case GateKind::RX: {
      const Complex m[4] = {c, Complex(0, -s), Complex(0, -s), c};
      apply_single(q, m);
      return;
    }
    case GateKind::RY: {
      const Complex m[4] = {c, -s, s, c};
      apply_single(q, m);
      return;
    }
    case GateKind::RZ: {
      const Complex m[4] = {Complex(c, -s), 0.0, 0.0, Complex(c, s)};
      apply_single(q, m);
      return;
    }
    case GateKind::PHASE: {
      const Complex m[4] = {1.0, 0.0, 0.0, std::polar(1.0, t)};
      apply_single(q, m);
      return;
    }
    case GateKind::CNOT: {
      const std::size_t cbit = std::size_t{1} << gate.qubits[0];
      const std::size_t tbit = std::size_t{1} << gate.qubits[1];
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
      }
      return;
    }
  }
}

void StateVector::apply(const PauliString& pauli) {
  const std::uint64_t x = pauli.x_bits();
  const std::uint64_t z = pauli.z_bits();
  if ((x | z) >> num_qubits_) throw std::out_of_range("StateVector: Pauli acts outside the register");
  const Complex phase = kIPowers[std::popcount(x & z) % 4];
  // P|i> = phase * (-1)^{|z & i|} |i ^ x>.
  std::vector<Complex> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double sign = (std::popcount(z & i) & 1) ? -1.0 : 1.0;
    out[i ^ x] = phase * sign * amps_[i];
  }
  amps_.swap(out);
}

StateVector apply_circuit(const Circuit& circuit, std::span<const double> params,
                          StateVector state) {
  if (params.size() != circuit.num_parameters()) {
    throw std::invalid_argument("apply_circuit: expected " +
                                std::to_string(circuit.num_parameters()) + " parameters, got " +
                                std::to_string(params.size()));
  }
  if (circuit.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("apply_circuit: circuit and state qubit counts differ");
  }
  for (const auto& g : circuit.gates()) state.apply(g, params);
  return state;
}

StateVector run_circuit(const Circuit& circuit, std::span<const double> params) {
  return apply_circuit(circuit, params, StateVector(circuit.num_qubits()));
}

Complex expectation_value(const StateVector& state, const PauliSum& op) {
  if (op.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("expectation: operator and state qubit counts differ");
  }
  const auto amps = state.amplitudes();
  Complex total = 0.0;
  for (const auto& term : op.terms()) {
    const std::uint64_t x = term.string.x_bits();
    const std::uint64_t z = term.string.z_bits();
    Complex acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const Complex v = std::conj(amps[i ^ x]) * amps[i];
      acc += (std::popcount(z & i) & 1) ? -v : v;
    }
    total += term.coeff * kIPowers[std::popcount(x & z) % 4] * acc;
  }
  return total;
}

double expectation(const StateVector& state, const PauliSum& op) {
  const Complex v = expectation_value(state, op);
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, op.one_norm())) {
    throw std::runtime_error("expectation: imaginary part " + std::to_string(v.imag()) +
                             " indicates a non-Hermitian operator");
  }
  return v.real();
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) s[q] = '1';
  }
  return s;
}

void ShotCounts::add(std::uint64_t index, std::uint64_t n) {
  counts[bitstring(index, num_qubits)] += n;
  shots += n;
}

ShotCounts sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> hits(amps.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // upper_bound never lands on a zero-probability plateau.
    if (it == cdf.end()) --it;
    ++hits[static_cast<std::size_t>(it - cdf.begin())];
  }
  ShotCounts out;
  out.num_qubits = state.num_qubits();
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 0) out.add(i, hits[i]);
  }
  return out;
}

double distribution_fidelity(const ShotCounts& a, const ShotCounts& ref) {
  if (a.num_qubits != ref.num_qubits) {
    throw std::invalid_argument("distribution_fidelity: qubit-count mismatch");
  }
  double diff = 0.0;
  double total = 0.0;
  auto ia = a.counts.begin();
  auto ib = ref.counts.begin();
  while (ia != a.counts.end() || ib != ref.counts.end()) {
    double ca = 0.0;
    double cb = 0.0;
    if (ib == ref.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      ca = static_cast<double>((ia++)->second);
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      cb = static_cast<double>((ib++)->second);
    } else {
      ca = static_cast<double>((ia++)->second);
      cb = static_cast<double>((ib++)->second);
    }
    diff += std::abs(ca - cb);
    total += ca + cb;
  }
  if (total == 0.0) throw std::invalid_argument("distribution_fidelity: both distributions are empty");
  return 1.0 - diff / total;
}

}  // namespace vibriq
