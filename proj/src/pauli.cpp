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

#include "vibriq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace vibriq {

namespace {

struct StringHash {
  std::size_t operator()(const PauliString& s) const noexcept {
    std::uint64_t h = s.x_bits() * 0x9E3779B97F4A7C15ULL;
    h ^= s.z_bits() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using Accumulator = std::unordered_map<PauliString, Complex, StringHash>;

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(std::size_t n) {
  if (n == 0 || n > kMaxPauliQubits) {
    throw std::invalid_argument("PauliSum: qubit count must be in [1, 64], got " +
                                std::to_string(n));
  }
}

void check_same_qubits(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliSum: qubit-count mismatch (" +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()) + ")");
  }
}

std::vector<PauliTerm> finish(const Accumulator& acc, double tol) {
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  for (const auto& [s, c] : acc) {
    if (std::abs(c) > tol) out.push_back({s, c});
  }
  std::sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return label_less(a.string, b.string);
  });
  return out;
}

int letter_code(std::uint64_t x, std::uint64_t z, unsigned q) {
  const bool xb = (x >> q) & 1U;
  const bool zb = (z >> q) & 1U;
  if (xb && zb) return 2;
  if (xb) return 1;
  if (zb) return 3;
  return 0;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::from_label(std::string_view label) {
  check_qubits(label.size());
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("PauliString: invalid letter '" +
                                    std::string(1, label[q]) + "' in label");
    }
  }
  return {x, z};
}

PauliString PauliString::single(std::size_t qubit, Pauli p) {
  if (qubit >= kMaxPauliQubits) {
    throw std::out_of_range("PauliString: qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (p) {
    case Pauli::I: return {};
    case Pauli::X: return {bit, 0};
    case Pauli::Y: return {bit, bit};
    case Pauli::Z: return {0, bit};
  }
  return {};
}

Pauli PauliString::at(std::size_t qubit) const {
  if (qubit >= kMaxPauliQubits) return Pauli::I;
  return static_cast<Pauli>(letter_code(x_, z_, static_cast<unsigned>(qubit)));
}

std::string PauliString::label(std::size_t num_qubits) const {
  std::string out(num_qubits, 'I');
  for (std::size_t q = 0; q < num_qubits; ++q) out[q] = to_char(at(q));
  return out;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

bool PauliString::commutes_with(const PauliString& other) const {
  return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) % 2 == 0;
}

bool label_less(const PauliString& a, const PauliString& b) {
  const std::uint64_t diff = (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
  if (diff == 0) return false;
  const auto q = static_cast<unsigned>(std::countr_zero(diff));
  return letter_code(a.x_bits(), a.z_bits(), q) < letter_code(b.x_bits(), b.z_bits(), q);
}

// With S(x, z) = i^{|x&z|} X^x Z^z, moving Z^z1 past X^x2 costs (-1)^{|z1&x2|}.
PauliProduct compose(const PauliString& a, const PauliString& b) {
  const std::uint64_t x = a.x_bits() ^ b.x_bits();
  const std::uint64_t z = a.z_bits() ^ b.z_bits();
  int k = std::popcount(a.x_bits() & a.z_bits()) + std::popcount(b.x_bits() & b.z_bits()) +
          2 * std::popcount(a.z_bits() & b.x_bits()) - std::popcount(x & z);
  k = ((k % 4) + 4) % 4;
  return {k, PauliString(x, z)};
}

PauliSum::PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
}

PauliSum::PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms, double tol)
    : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  const std::uint64_t mask =
      num_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_qubits) - 1;
  Accumulator acc;
  acc.reserve(terms.size());
  for (const auto& t : terms) {
    if ((t.string.support() & ~mask) != 0) {
      throw std::out_of_range("PauliSum: term acts outside the declared qubit range");
    }
    acc[t.string] += t.coeff;
  }
  terms_ = finish(acc, tol);
}

PauliSum PauliSum::identity(std::size_t num_qubits, Complex coeff) {
  return PauliSum(num_qubits, {{PauliString{}, coeff}});
}

PauliSum PauliSum::from_label(std::string_view label, Complex coeff) {
  return PauliSum(label.size(), {{PauliString::from_label(label), coeff}});
}

PauliSum PauliSum::single(std::size_t num_qubits, std::size_t qubit, Pauli p,
                          Complex coeff) {
  if (qubit >= num_qubits) throw std::out_of_range("PauliSum: qubit index out of range");
  return PauliSum(num_qubits, {{PauliString::single(qubit, p), coeff}});
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const PauliTerm& t, const PauliString& key) {
                               return label_less(t.string, key);
                             });
  if (it != terms_.end() && it->string == s) return it->coeff;
  return 0.0;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

PauliSum PauliSum::simplified(double tol) const {
  return PauliSum(num_qubits_, terms_, tol);
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coeff.imag()) <= tol; });
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  *this = add_simplify(*this, other);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  *this = add_simplify(*this, other * Complex(-1.0));
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  if (scalar == Complex(0.0)) terms_.clear();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply(a, b); }

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits_ != b.num_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].string == b.terms_[i].string) ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  if (num_qubits_ != other.num_qubits_) return false;
  const PauliSum diff = add_simplify(*this, other * Complex(-1.0), 0.0);
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coeff) <= tol; });
}

PauliSum multiply(const PauliSum& a, const PauliSum& b, double tol) {
  check_same_qubits(a, b);
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const auto p = compose(ta.string, tb.string);
      acc[p.string] += kIPowers[p.phase] * ta.coeff * tb.coeff;
    }
  }
  return PauliSum(a.num_qubits(), finish(acc, tol), tol);
}

PauliSum add_simplify(const PauliSum& a, const PauliSum& b, double tol) {
  check_same_qubits(a, b);
  if (tol < 0.0) throw std::invalid_argument("add_simplify: tolerance must be >= 0");
  std::vector<PauliTerm> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.terms().begin(), a.terms().end());
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return PauliSum(a.num_qubits(), std::move(all), tol);
}

PauliSum commutator(const PauliSum& a, const PauliSum& b, double tol) {
  check_same_qubits(a, b);
  Accumulator acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (ta.string.commutes_with(tb.string)) continue;
      const auto p = compose(ta.string, tb.string);
      acc[p.string] += 2.0 * kIPowers[p.phase] * ta.coeff * tb.coeff;
    }
  }
  return PauliSum(a.num_qubits(), finish(acc, tol), tol);
}

}  // namespace vibriq
