// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcqeve/integrals.hpp"

namespace tcqeve {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 64;
inline constexpr int kDefaultJwQubitCap = 63;
/// Combined coefficients with |c| at or below this are dropped (Hartree).
inline constexpr double kCoefficientDropTol = 1e-12;

/// A tensor product of single-qubit Pauli operators, bit-packed as two masks:
/// bit q of x/z set means an X/Z factor on qubit q; both set means Y.
/// Qubit 0 is the leftmost character of the word string.
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(int n_qubits) : n_(n_qubits) {}
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z);

  /// Parses a word like "XIZY" (throws ValidationError on bad letters).
  static PauliString parse(std::string_view word);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;
  int y_count() const;
  char letter(int qubit) const;
  std::string str() const;

  bool operator==(const PauliString&) const = default;

private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a * b as (phase, string); the phase is one of {1, i, -1, -i}.
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
  Complex coefficient;  // Hartree
  PauliString string;
};

/// H = b0 + sum_j coefficient_j * string_j with all strings distinct,
/// non-identity, and |coefficient| > 0. alpha = sum_j |coefficient_j|.
struct PauliLCU {
  int n_qubits = 0;
  Complex b0{0.0, 0.0};
  std::vector<PauliTerm> terms;
  double alpha = 0.0;
};

/// Hash-keyed accumulator used during term assembly; combines like strings
/// on the fly and canonicalizes (sort, drop tiny coefficients) on build.
class PauliAccumulator {
public:
  explicit PauliAccumulator(int n_qubits) : n_(n_qubits) {}

  /// Adds c * X^x Z^z (phase convention without the Y factors of i).
  void add_xz(std::uint64_t x, std::uint64_t z, Complex c);
  /// Adds c * word where word is an I/X/Y/Z string.
  void add_word(const PauliString& word, Complex c);
  void add_identity(Complex c) { b0_ += c; }

  PauliLCU build(double drop_tol = kCoefficientDropTol) const;

private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const;
  };
  int n_;
  Complex b0_{0.0, 0.0};
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Complex, KeyHash> slots_;
};

/// One ladder operator in a normal-ordered product: orbital index + dagger flag.
struct LadderOp {
  int index;
  bool dagger;
};

/// Maps coeff * (product of ladder operators) to Pauli terms via
/// a_p = (prod_{q<p} Z_q)(X_p + iY_p)/2 and accumulates them.
void accumulate_ladder_product(PauliAccumulator& acc, std::span<const LadderOp> ops,
                               double coeff);

/// Jordan-Wigner map of the full second-quantized operator, spin-orbital
/// ordering 2*spatial + sigma. Throws CapacityError above the qubit cap.
PauliLCU jordan_wigner(const SpinOrbitalHamiltonian& ham, int qubit_cap = kDefaultJwQubitCap);

enum class TermReality { Real, Imaginary, Violation };

struct RealityReport {
  bool consistent = true;
  std::vector<TermReality> tags;  // parallel to lcu.terms
};

/// Tags each term against the rule "even Y count <=> purely real coefficient,
/// odd Y count <=> purely imaginary", tolerance 1e-10 relative to alpha.
RealityReport classify_reality(const PauliLCU& lcu);

struct TruncationResult {
  PauliLCU lcu;
  double dropped_weight = 0.0;  // sum of |coefficient| over dropped terms
  std::int64_t dropped_count = 0;
};

/// Keeps exactly the terms with |b_i| >= alpha * 2^-mu (alpha of the input
/// LCU); b0 is unchanged and alpha is recomputed for the survivors.
TruncationResult truncate(const PauliLCU& lcu, int mu);

/// sum_j |coefficient_j|, excluding b0.
double one_norm(const PauliLCU& lcu);

/// Text dump, one term per line: "<re> <im> <word>" after a
/// "n_qubits b0_re b0_im" header. Used by golden tests.
void write_lcu(const PauliLCU& lcu, const std::filesystem::path& path);
PauliLCU read_lcu(const std::filesystem::path& path);

}  // namespace tcqeve
