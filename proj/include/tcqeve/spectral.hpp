// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "tcqeve/pauli.hpp"

namespace tcqeve {

struct DenseOptions {
  int max_qubits_full = 14;
  int max_qubits_sector = 20;
  /// Hard cap on the matrix dimension either way.
  int max_dimension = 1 << 14;
};

/// Dense desk-scale realization b0*I + sum_j c_j U_j, optionally restricted to
/// a fixed particle-number sector. Sector mode verifies (on sampled columns)
/// that the operator does not leak amplitude out of the sector.
Eigen::MatrixXcd dense_matrix(const PauliLCU& lcu, std::optional<int> particle_sector = {},
                              const DenseOptions& options = {});

struct SpectralReport {
  std::vector<Complex> eigenvalues;  // sorted by (Re, Im)
  double ground_energy = 0.0;        // min Re over near-real eigenvalues
  double kappa_s = 1.0;              // ||S|| * ||S^-1||, unit-normalized columns
  double max_imag = 0.0;             // max |Im lambda|
  double spectral_norm = 0.0;        // ||H|| including b0
  double shifted_norm = 0.0;         // ||H - b0*I||
  bool diagonalizable = true;        // false when kappa_s exceeds 1e12
  bool has_real_eigenvalue = true;   // ground_energy is NaN when false
  int dimension = 0;
};

/// Eigenvalue threshold below which an eigenvalue counts as real:
/// |Im| <= 1e-8 * max(1, ||H||).
inline constexpr double kRealityTolFactor = 1e-8;
inline constexpr double kDefectiveKappaThreshold = 1e12;

/// Full dense eigenanalysis of an explicit matrix (no LCU invariants checked).
/// Does not require a real spectrum; has_real_eigenvalue records whether one
/// exists within tolerance.
SpectralReport analyze_dense(const Eigen::MatrixXcd& m, double b0_real = 0.0);

/// Dense eigenanalysis of the LCU. Asserts ||H - b0|| <= alpha on every call
/// and throws NumericalError when no eigenvalue is real within tolerance.
SpectralReport analyze(const PauliLCU& lcu, std::optional<int> particle_sector = {},
                       const DenseOptions& options = {});

struct PerturbationRow {
  int mu;
  double max_shift;       // max-min eigenvalue displacement after truncation
  double bound;           // K * alpha * 2^-mu, times kappa_s when non-Hermitian
  double dropped_weight;  // sum |b_i| actually discarded
  std::int64_t kept_terms;
};

/// Diagonalizes truncate(lcu, mu) for each mu and checks the Weyl /
/// diagonalizable-perturbation bound; throws NumericalError if violated.
std::vector<PerturbationRow> perturbation_experiment(const PauliLCU& lcu,
                                                     const std::vector<int>& mu_values,
                                                     std::optional<int> particle_sector = {},
                                                     const DenseOptions& options = {});

/// Block-encoding normalization max(alpha, 2*||H - b0*I||); guarantees
/// ||H_shifted / alpha_eff|| <= 1/2.
double effective_alpha(const PauliLCU& lcu, const SpectralReport& report);

/// Fallback without a dense report: the norm estimate defaults to alpha
/// itself, yielding 2*alpha.
double effective_alpha(const PauliLCU& lcu, std::optional<double> shifted_norm_estimate);

/// True when every coefficient (and b0) is real within 1e-12 * max(alpha, 1).
bool is_hermitian(const PauliLCU& lcu);

}  // namespace tcqeve
