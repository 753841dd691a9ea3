// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tcqeve/spectral.hpp"

namespace tcqeve {

/// Chebyshev polynomial of the first kind T_ell(x) by three-term recursion.
/// Requires |x| <= 1; matches cos(ell*arccos x) to better than 1e-12 for
/// ell <= 10^4.
double chebyshev_t(std::int64_t ell, double x);

/// Chebyshev polynomial of the second kind U_ell(x), same recursion with
/// U_0 = 1, U_1 = 2x.
double chebyshev_u(std::int64_t ell, double x);

struct QeveOptions {
  /// Cap on the joint dimension N*d of the denominator matrix.
  int max_joint_dim = 4096;
};

/// The linear system behind the Chebyshev generating function:
/// C = 1 - 2 L (x) H/alpha + L^2 (x) 1 over the joint (degree, system) space,
/// with L the N x N lower shift. Blocks are laid out degree-major: component
/// ell*d + s is coordinate s of the degree-ell block.
struct ChebyshevSystem {
  int n_degrees = 0;            // N, a power of two
  Eigen::MatrixXcd h_scaled;    // d x d, ||h_scaled|| <= 1/2
  Eigen::MatrixXcd denominator; // (N*d) x (N*d)

  int system_dim() const { return static_cast<int>(h_scaled.rows()); }
  int joint_dim() const { return n_degrees * system_dim(); }
  /// The N x N lower-shift matrix L (ones on the first subdiagonal).
  Eigen::MatrixXd shift_matrix() const;
};

/// Assembles C and asserts its norm envelope: ||h|| <= 1/2 (precondition,
/// "rescale required" otherwise), ||C|| <= 3, and ||C|| >= sqrt(2) for N >= 3.
ChebyshevSystem build_system(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                             const QeveOptions& options = {});

/// y = C x without forming C (three block diagonals).
Eigen::VectorXcd apply_denominator(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                                   const Eigen::VectorXcd& x);
/// y = C^dagger x.
Eigen::VectorXcd apply_denominator_adjoint(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                                           const Eigen::VectorXcd& x);

/// Joint ancilla (x) system state whose degree-ell block is T_ell(H/alpha)|psi0>,
/// plus its measurement statistics.
struct HistoryState {
  int n_degrees = 0;
  int system_dim = 0;
  Eigen::VectorXcd amplitudes;             // unnormalized, length N*d
  Eigen::VectorXd fourier_distribution;    // N bins, sums to 1
  double estimated_angle = 0.25;           // phi in [1/6, 1/3]
  double estimated_energy = 0.0;           // alpha_eff * cos(2*pi*phi)
};

/// Builds the history state by the matrix three-term recursion
/// T_{l+1} = 2(H/alpha)T_l - T_{l-1}. psi0 must be unit norm.
HistoryState history_state_direct(const Eigen::MatrixXcd& h_scaled,
                                  const Eigen::VectorXcd& psi0, int n_degrees,
                                  double alpha_eff = 1.0);

/// Builds the same state through the generating function: solves
/// C x = (1 - L (x) H/alpha)(e0 (x) psi0) with a dense LU factorization.
/// Agreement with history_state_direct to 1e-8 relative is the module's
/// central equivalence.
HistoryState history_state_via_inverse(const ChebyshevSystem& system,
                                       const Eigen::VectorXcd& psi0,
                                       double alpha_eff = 1.0);

/// Probabilities over the angle bins phi_y = y/N for y = 0..N/2, after
/// merging the +-theta aliases (bins y and N-y).
struct AngleDistribution {
  int n_degrees = 0;
  std::vector<double> probability;  // N/2 + 1 entries
  double angle_fraction(int bin) const {
    return static_cast<double>(bin) / n_degrees;
  }
};

AngleDistribution measure_distribution(const HistoryState& state);

struct EnergyEstimate {
  double angle_fraction;  // phi
  double energy;          // alpha_eff * cos(2*pi*phi), Hartree
};

/// Modal bin restricted to phi in [1/6, 1/3]; for well-overlapped inputs the
/// energy error is bounded by 2*pi*5*alpha_eff/N.
EnergyEstimate estimate_energy(const AngleDistribution& distribution, double alpha_eff);

struct BoundCheck {
  std::string label;
  double measured;
  double bound;
  bool bound_is_upper;  // true: require measured <= bound; false: measured >= bound
  bool ok;
};

struct BoundCheckTable {
  std::vector<BoundCheck> checks;
  bool all_ok() const;
};

/// Numerical verification of the norm envelope of the mechanism:
/// the T/U polynomial identity on a grid, ||U_j(H/alpha)|| <= sqrt(8/3)*kappa_S
/// for j < N, ||C|| within [sqrt(2), 3], and ||C^-1|| <= N*sqrt(8/3)*kappa_S.
BoundCheckTable verify_bounds(const ChebyshevSystem& system, const SpectralReport& report);

/// Largest / smallest singular value of C via power iteration (block matvecs)
/// and LU-based inverse iteration. Deterministic.
double denominator_norm_estimate(const ChebyshevSystem& system);
double denominator_inverse_norm_estimate(const ChebyshevSystem& system);

}  // namespace tcqeve
