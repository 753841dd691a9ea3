// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "tcqeve/errors.hpp"

namespace tcqeve {
namespace {

constexpr std::array<Complex, 4> kPhaseTable = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                Complex{0, -1}};

std::vector<std::int64_t> sector_states(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits)
    throw ValidationError("particle sector outside [0, n_qubits]");
  std::vector<std::int64_t> states;
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  for (std::int64_t k = 0; k < dim; ++k)
    if (std::popcount(static_cast<std::uint64_t>(k)) == n_electrons) states.push_back(k);
  return states;
}

// W(x,z)|k> = i^{|x&z|} (-1)^{|z&k|} |k^x>
Complex term_phase(const PauliString& s, std::uint64_t k) {
  const int yc = s.y_count();
  const int zpar = std::popcount(s.z_mask() & k) & 1;
  Complex phase = kPhaseTable[yc % 4];
  return zpar ? -phase : phase;
}

double spectral_norm_svd(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliLCU& lcu, std::optional<int> particle_sector,
                              const DenseOptions& options) {
  const int n = lcu.n_qubits;
  const int cap = particle_sector ? options.max_qubits_sector : options.max_qubits_full;
  if (n > cap)
    throw CapacityError("dense realization of " + std::to_string(n) +
                        " qubits exceeds the cap of " + std::to_string(cap));

  if (!particle_sector) {
    const std::int64_t dim = std::int64_t{1} << n;
    if (dim > options.max_dimension)
      throw CapacityError("dense dimension " + std::to_string(dim) + " exceeds the cap");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t k = 0; k < dim; ++k) m(k, k) = lcu.b0;
    for (const auto& term : lcu.terms) {
      const std::uint64_t x = term.string.x_mask();
      for (std::int64_t k = 0; k < dim; ++k)
        m(static_cast<std::int64_t>(k ^ static_cast<std::int64_t>(x)), k) +=
            term.coefficient * term_phase(term.string, static_cast<std::uint64_t>(k));
    }
    return m;
  }

  const auto states = sector_states(n, *particle_sector);
  const std::int64_t dim = static_cast<std::int64_t>(states.size());
  if (dim > options.max_dimension)
    throw CapacityError("sector dimension " + std::to_string(dim) + " exceeds the cap");
  std::vector<std::int32_t> position(std::size_t{1} << n, -1);
  for (std::int64_t i = 0; i < dim; ++i) position[states[i]] = static_cast<std::int32_t>(i);

  // The projection is only meaningful for particle-conserving operators;
  // check that sampled columns do not leak out of the sector.
  const std::int64_t stride = std::max<std::int64_t>(1, dim / 200);
  const double leak_tol = 1e-10 * std::max(1.0, lcu.alpha);
  for (std::int64_t i = 0; i < dim; i += stride) {
    const std::uint64_t k = static_cast<std::uint64_t>(states[i]);
    std::unordered_map<std::uint64_t, Complex> leaked;
    for (const auto& term : lcu.terms) {
      const std::uint64_t dst = k ^ term.string.x_mask();
      if (position[dst] < 0) leaked[dst] += term.coefficient * term_phase(term.string, k);
    }
    for (const auto& [dst, amp] : leaked)
      if (std::abs(amp) > leak_tol)
        throw ValidationError(
            "operator does not conserve particle number; sector projection is invalid");
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) m(i, i) = lcu.b0;
  for (const auto& term : lcu.terms) {
    const std::uint64_t x = term.string.x_mask();
    for (std::int64_t i = 0; i < dim; ++i) {
      const std::uint64_t k = static_cast<std::uint64_t>(states[i]);
      const std::int32_t j = position[k ^ x];
      if (j >= 0) m(j, i) += term.coefficient * term_phase(term.string, k);
    }
  }
  return m;
}

SpectralReport analyze_dense(const Eigen::MatrixXcd& m, double b0_real) {
  const auto dim = m.rows();
  if (dim == 0) throw ValidationError("cannot analyze an empty matrix");
  SpectralReport report;
  report.dimension = static_cast<int>(dim);
  report.spectral_norm = spectral_norm_svd(m);
  report.shifted_norm = spectral_norm_svd(
      m - b0_real * Eigen::MatrixXcd::Identity(dim, dim));

  const bool hermitian = m.isApprox(m.adjoint(), 1e-12);
  Eigen::MatrixXcd vectors;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    report.eigenvalues.reserve(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      report.eigenvalues.push_back(Complex{es.eigenvalues()(i), 0.0});
    vectors = es.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    report.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    vectors = es.eigenvectors();
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });

  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const double nrm = vectors.col(c).norm();
    if (nrm > 0) vectors.col(c) /= nrm;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(vectors);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(dim - 1);
  report.kappa_s = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
  report.diagonalizable = report.kappa_s <= kDefectiveKappaThreshold;

  report.max_imag = 0.0;
  for (const auto& ev : report.eigenvalues)
    report.max_imag = std::max(report.max_imag, std::abs(ev.imag()));

  const double reality_tol = kRealityTolFactor * std::max(1.0, report.spectral_norm);
  double ground = std::numeric_limits<double>::infinity();
  for (const auto& ev : report.eigenvalues)
    if (std::abs(ev.imag()) <= reality_tol) ground = std::min(ground, ev.real());
  report.has_real_eigenvalue = std::isfinite(ground);
  report.ground_energy =
      report.has_real_eigenvalue ? ground : std::numeric_limits<double>::quiet_NaN();
  return report;
}

SpectralReport analyze(const PauliLCU& lcu, std::optional<int> particle_sector,
                       const DenseOptions& options) {
  const Eigen::MatrixXcd m = dense_matrix(lcu, particle_sector, options);
  SpectralReport report = analyze_dense(m, lcu.b0.real());
  // Triangle inequality over unit-norm Pauli terms; a violation means the
  // dense realization and the LCU disagree.
  if (report.shifted_norm > lcu.alpha * (1.0 + 1e-9) + 1e-12)
    throw NumericalError("||H - b0|| exceeds alpha; dense realization is inconsistent");
  if (!report.has_real_eigenvalue)
    throw NumericalError(
        "no real spectrum: every eigenvalue has |Im| above tolerance; "
        "this realization is unusable for ground-state estimation");
  return report;
}

std::vector<PerturbationRow> perturbation_experiment(const PauliLCU& lcu,
                                                     const std::vector<int>& mu_values,
                                                     std::optional<int> particle_sector,
                                                     const DenseOptions& options) {
  const SpectralReport original = analyze(lcu, particle_sector, options);
  const bool hermitian = is_hermitian(lcu);
  const double kappa = hermitian ? 1.0 : original.kappa_s;
  const std::int64_t n_terms = static_cast<std::int64_t>(lcu.terms.size());

  std::vector<PerturbationRow> rows;
  rows.reserve(mu_values.size());
  for (int mu : mu_values) {
    const TruncationResult trunc = truncate(lcu, mu);
    // The displacement comparison does not need a real spectrum in the
    // truncated operator, so it goes through the matrix-level analysis.
    const SpectralReport perturbed = analyze_dense(
        dense_matrix(trunc.lcu, particle_sector, options), trunc.lcu.b0.real());
    double shift = 0.0;
    if (hermitian) {
      // Weyl pairing of sorted (real) eigenvalues.
      for (std::size_t i = 0; i < original.eigenvalues.size(); ++i)
        shift = std::max(shift, std::abs(perturbed.eigenvalues[i].real() -
                                         original.eigenvalues[i].real()));
    } else {
      for (const auto& moved : perturbed.eigenvalues) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& ref : original.eigenvalues)
          nearest = std::min(nearest, std::abs(moved - ref));
        shift = std::max(shift, nearest);
      }
    }
    const double bound = kappa * static_cast<double>(n_terms) * std::ldexp(lcu.alpha, -mu);
    if (shift > bound * (1.0 + 1e-9) + 1e-12)
      throw NumericalError("truncation eigenvalue shift " + std::to_string(shift) +
                           " exceeds the perturbation bound " + std::to_string(bound));
    rows.push_back({mu, shift, bound, trunc.dropped_weight,
                    static_cast<std::int64_t>(trunc.lcu.terms.size())});
  }
  return rows;
}

double effective_alpha(const PauliLCU& lcu, const SpectralReport& report) {
  return std::max(lcu.alpha, 2.0 * report.shifted_norm);
}

double effective_alpha(const PauliLCU& lcu, std::optional<double> shifted_norm_estimate) {
  return std::max(lcu.alpha, 2.0 * shifted_norm_estimate.value_or(lcu.alpha));
}

bool is_hermitian(const PauliLCU& lcu) {
  const double tol = 1e-12 * std::max(1.0, lcu.alpha);
  if (std::abs(lcu.b0.imag()) > tol) return false;
  for (const auto& term : lcu.terms)
    if (std::abs(term.coefficient.imag()) > tol) return false;
  return true;
}

}  // namespace tcqeve
