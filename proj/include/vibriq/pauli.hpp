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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vibriq {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr double kDropTolerance = 1e-12;
inline constexpr std::size_t kMaxPauliQubits = 64;

char to_char(Pauli p);

/// A tensor product of single-qubit Paulis on up to 64 qubits, held in
/// symplectic form. Bit q of `x_bits()` / `z_bits()` is set when the letter
/// on qubit q has an X / Z component (Y sets both). The string carries no
/// phase; phases live in the coefficient of the enclosing term.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::uint64_t x, std::uint64_t z) : x_(x), z_(z) {}

  /// Parses "XIYZ"-style labels; qubit 0 is the leftmost letter.
  static PauliString from_label(std::string_view label);
  static PauliString single(std::size_t qubit, Pauli p);

  Pauli at(std::size_t qubit) const;
  std::string label(std::size_t num_qubits) const;

  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }
  std::size_t weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Lexicographic order on labels with I < X < Y < Z, qubit 0 most significant.
bool label_less(const PauliString& a, const PauliString& b);

/// a * b = i^phase * string.
struct PauliProduct {
  int phase = 0;
  PauliString string;
};
PauliProduct compose(const PauliString& a, const PauliString& b);

struct PauliTerm {
  PauliString string;
  Complex coeff;
};

/// Complex-weighted sum of Pauli strings. Every public constructor and
/// operation leaves the sum simplified: terms sorted by `label_less`, letter
/// patterns unique and no coefficient with magnitude at or below the drop
/// tolerance.
class PauliSum {
 public:
  explicit PauliSum(std::size_t num_qubits = 1);
  PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms,
           double tol = kDropTolerance);

  static PauliSum identity(std::size_t num_qubits, Complex coeff = 1.0);
  static PauliSum from_label(std::string_view label, Complex coeff = 1.0);
  static PauliSum single(std::size_t num_qubits, std::size_t qubit, Pauli p,
                         Complex coeff = 1.0);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Coefficient of `s`, zero if absent.
  Complex coefficient(const PauliString& s) const;

  PauliSum adjoint() const;
  PauliSum simplified(double tol) const;
  bool is_hermitian(double tol = 1e-10) const;
  /// Sum of |coefficient|; an upper bound on the operator norm.
  double one_norm() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Structural equality; exact on coefficients.
  friend bool operator==(const PauliSum& a, const PauliSum& b);
  /// Equality up to `tol` per coefficient.
  bool approx_equal(const PauliSum& other, double tol) const;

 private:
  std::size_t num_qubits_;
  std::vector<PauliTerm> terms_;
};

PauliSum multiply(const PauliSum& a, const PauliSum& b,
                  double tol = kDropTolerance);
PauliSum add_simplify(const PauliSum& a, const PauliSum& b,
                      double tol = kDropTolerance);
/// ab - ba. Only anticommuting string pairs contribute.
PauliSum commutator(const PauliSum& a, const PauliSum& b,
                    double tol = kDropTolerance);

}  // namespace vibriq
