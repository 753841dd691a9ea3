// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/qeve.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "tcqeve/errors.hpp"

namespace tcqeve {
namespace {

constexpr double kSqrt83 = 1.632993161855452;  // sqrt(8/3)

bool is_pow2(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

double matrix_norm(const Eigen::MatrixXcd& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

/// In-place radix-2 FFT with the e^{+2*pi*i*k*y/N} sign convention,
/// no normalization.
void fft_pow2(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

/// Fills fourier_distribution / estimated_angle / estimated_energy from the
/// (possibly unnormalized) amplitudes.
void finalize_statistics(HistoryState& state, double alpha_eff) {
  const int n = state.n_degrees;
  const int d = state.system_dim;
  const double nrm = state.amplitudes.norm();
  if (nrm <= 0.0) throw NumericalError("history state has zero norm");

  Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
  std::vector<Complex> column(n);
  for (int s = 0; s < d; ++s) {
    for (int ell = 0; ell < n; ++ell) column[ell] = state.amplitudes(ell * d + s) / nrm;
    fft_pow2(column);
    for (int y = 0; y < n; ++y) p(y) += std::norm(column[y]) / n;
  }
  state.fourier_distribution = p;

  const auto merged = measure_distribution(state);
  const auto estimate = estimate_energy(merged, alpha_eff);
  state.estimated_angle = estimate.angle_fraction;
  state.estimated_energy = estimate.energy;
}

void check_history_inputs(const Eigen::MatrixXcd& h_scaled, const Eigen::VectorXcd& psi0,
                          int n_degrees) {
  if (h_scaled.rows() != h_scaled.cols()) throw ValidationError("H/alpha must be square");
  if (psi0.size() != h_scaled.rows())
    throw ValidationError("psi0 dimension disagrees with H/alpha");
  if (!is_pow2(n_degrees)) throw ValidationError("N must be a power of two");
  if (std::abs(psi0.norm() - 1.0) > 1e-8)
    throw ValidationError("psi0 must be normalized to unit 2-norm");
}

double power_iteration_norm(const Eigen::MatrixXcd& h_scaled, int n_degrees) {
  const int dim = n_degrees * static_cast<int>(h_scaled.rows());
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = Complex{std::cos(0.7 * (i + 1)), std::sin(1.3 * (i + 1))};
  v.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < 300; ++iter) {
    const Eigen::VectorXcd cv = apply_denominator(h_scaled, n_degrees, v);
    const double current = cv.norm();
    v = apply_denominator_adjoint(h_scaled, n_degrees, cv);
    const double vn = v.norm();
    const bool converged =
        iter > 8 && std::abs(current - estimate) <= 1e-12 * std::max(1.0, current);
    estimate = current;
    if (vn == 0.0 || converged) break;
    v /= vn;
  }
  return estimate;
}

}  // namespace

double chebyshev_t(std::int64_t ell, double x) {
  if (ell < 0) throw ValidationError("Chebyshev degree must be nonnegative");
  if (std::abs(x) > 1.0 + 1e-12) throw ValidationError("chebyshev_t requires |x| <= 1");
  if (ell == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (std::int64_t i = 2; i <= ell; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_u(std::int64_t ell, double x) {
  if (ell < 0) throw ValidationError("Chebyshev degree must be nonnegative");
  if (std::abs(x) > 1.0 + 1e-12) throw ValidationError("chebyshev_u requires |x| <= 1");
  if (ell == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * x;
  for (std::int64_t i = 2; i <= ell; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXd ChebyshevSystem::shift_matrix() const {
  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(n_degrees, n_degrees);
  for (int ell = 0; ell + 1 < n_degrees; ++ell) shift(ell + 1, ell) = 1.0;
  return shift;
}

Eigen::VectorXcd apply_denominator(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                                   const Eigen::VectorXcd& x) {
  const int d = static_cast<int>(h_scaled.rows());
  Eigen::VectorXcd y = x;
  for (int ell = 1; ell < n_degrees; ++ell)
    y.segment(ell * d, d) -= 2.0 * (h_scaled * x.segment((ell - 1) * d, d));
  for (int ell = 2; ell < n_degrees; ++ell)
    y.segment(ell * d, d) += x.segment((ell - 2) * d, d);
  return y;
}

Eigen::VectorXcd apply_denominator_adjoint(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                                           const Eigen::VectorXcd& x) {
  const int d = static_cast<int>(h_scaled.rows());
  Eigen::VectorXcd y = x;
  const Eigen::MatrixXcd h_adj = h_scaled.adjoint();
  for (int ell = 0; ell + 1 < n_degrees; ++ell)
    y.segment(ell * d, d) -= 2.0 * (h_adj * x.segment((ell + 1) * d, d));
  for (int ell = 0; ell + 2 < n_degrees; ++ell)
    y.segment(ell * d, d) += x.segment((ell + 2) * d, d);
  return y;
}

ChebyshevSystem build_system(const Eigen::MatrixXcd& h_scaled, int n_degrees,
                             const QeveOptions& options) {
  if (h_scaled.rows() != h_scaled.cols()) throw ValidationError("H/alpha must be square");
  if (!is_pow2(n_degrees)) throw ValidationError("N must be a power of two");
  const int d = static_cast<int>(h_scaled.rows());
  const std::int64_t joint = static_cast<std::int64_t>(n_degrees) * d;
  if (joint > options.max_joint_dim)
    throw CapacityError("joint dimension " + std::to_string(joint) + " exceeds the cap of " +
                        std::to_string(options.max_joint_dim));

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(h_scaled, Eigen::ComputeThinV);
  const double h_norm = d > 0 ? svd.singularValues()(0) : 0.0;
  if (h_norm > 0.5 + 1e-12)
    throw ValidationError("rescale required: ||H/alpha|| = " + std::to_string(h_norm) +
                          " > 1/2; divide by effective_alpha first");

  ChebyshevSystem system;
  system.n_degrees = n_degrees;
  system.h_scaled = h_scaled;
  system.denominator = Eigen::MatrixXcd::Identity(joint, joint);
  for (int ell = 1; ell < n_degrees; ++ell)
    system.denominator.block(ell * d, (ell - 1) * d, d, d) = -2.0 * h_scaled;
  for (int ell = 2; ell < n_degrees; ++ell)
    system.denominator.block(ell * d, (ell - 2) * d, d, d) +=
        Eigen::MatrixXcd::Identity(d, d);

  // Norm envelope: the witness C(e0 (x) v) has norm sqrt(2 + 4||h v||^2) for
  // N >= 3, and the triangle inequality gives ||C|| <= 2 + 2||h|| <= 3.
  const double power_estimate = power_iteration_norm(h_scaled, n_degrees);
  double witness = 0.0;
  if (n_degrees >= 3 && d > 0) {
    Eigen::VectorXcd probe = Eigen::VectorXcd::Zero(joint);
    probe.segment(0, d) = svd.matrixV().col(0);
    witness = apply_denominator(h_scaled, n_degrees, probe).norm();
    if (std::max(witness, power_estimate) < std::numbers::sqrt2 * (1.0 - 1e-9))
      throw NumericalError("denominator norm fell below sqrt(2)");
  }
  if (power_estimate > 3.0 * (1.0 + 1e-9))
    throw NumericalError("denominator norm exceeds 3 (||C/4|| > 3/4)");
  return system;
}

HistoryState history_state_direct(const Eigen::MatrixXcd& h_scaled,
                                  const Eigen::VectorXcd& psi0, int n_degrees,
                                  double alpha_eff) {
  check_history_inputs(h_scaled, psi0, n_degrees);
  const int d = static_cast<int>(h_scaled.rows());
  HistoryState state;
  state.n_degrees = n_degrees;
  state.system_dim = d;
  state.amplitudes.resize(static_cast<Eigen::Index>(n_degrees) * d);
  state.amplitudes.segment(0, d) = psi0;
  if (n_degrees > 1) state.amplitudes.segment(d, d) = h_scaled * psi0;
  for (int ell = 2; ell < n_degrees; ++ell)
    state.amplitudes.segment(ell * d, d) =
        2.0 * (h_scaled * state.amplitudes.segment((ell - 1) * d, d)) -
        state.amplitudes.segment((ell - 2) * d, d);
  finalize_statistics(state, alpha_eff);
  return state;
}

HistoryState history_state_via_inverse(const ChebyshevSystem& system,
                                       const Eigen::VectorXcd& psi0, double alpha_eff) {
  check_history_inputs(system.h_scaled, psi0, system.n_degrees);
  const int d = system.system_dim();
  const int joint = system.joint_dim();

  // (1 - L (x) H/alpha)(e0 (x) psi0) has psi0 in block 0 and -H/alpha psi0
  // in block 1.
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(joint);
  rhs.segment(0, d) = psi0;
  if (system.n_degrees > 1) rhs.segment(d, d) = -(system.h_scaled * psi0);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.denominator);
  Eigen::VectorXcd solution = lu.solve(rhs);
  const double residual =
      (apply_denominator(system.h_scaled, system.n_degrees, solution) - rhs).norm();
  if (!(residual <= 1e-6 * rhs.norm()))
    throw NumericalError("linear solve failed (residual " + std::to_string(residual) +
                         ", rcond " + std::to_string(lu.rcond()) + ")");

  HistoryState state;
  state.n_degrees = system.n_degrees;
  state.system_dim = d;
  state.amplitudes = std::move(solution);
  finalize_statistics(state, alpha_eff);
  return state;
}

AngleDistribution measure_distribution(const HistoryState& state) {
  const int n = state.n_degrees;
  if (state.fourier_distribution.size() != n)
    throw ValidationError("history state is missing its Fourier distribution");
  AngleDistribution dist;
  dist.n_degrees = n;
  dist.probability.assign(n / 2 + 1, 0.0);
  dist.probability[0] = state.fourier_distribution(0);
  if (n >= 2) dist.probability[n / 2] = state.fourier_distribution(n / 2);
  for (int y = 1; y < n / 2; ++y)
    dist.probability[y] = state.fourier_distribution(y) + state.fourier_distribution(n - y);
  return dist;
}

EnergyEstimate estimate_energy(const AngleDistribution& distribution, double alpha_eff) {
  const int n = distribution.n_degrees;
  if (n <= 0 || distribution.probability.empty())
    throw ValidationError("empty angle distribution");
  int lo = (n + 5) / 6;       // ceil(N/6)
  int hi = n / 3;             // floor(N/3)
  if (lo > hi) {              // window empty only for tiny N
    lo = 0;
    hi = n / 2;
  }
  int best = lo;
  for (int y = lo + 1; y <= hi; ++y)
    if (distribution.probability[y] > distribution.probability[best]) best = y;
  double phi = static_cast<double>(best) / n;
  phi = std::clamp(phi, 1.0 / 6.0, 1.0 / 3.0);
  return {phi, alpha_eff * std::cos(2.0 * std::numbers::pi * phi)};
}

bool BoundCheckTable::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.ok; });
}

double denominator_norm_estimate(const ChebyshevSystem& system) {
  return power_iteration_norm(system.h_scaled, system.n_degrees);
}

double denominator_inverse_norm_estimate(const ChebyshevSystem& system) {
  // Inverse power iteration on C^dagger C via the LU factors of C.
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.denominator);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_adj(system.denominator.adjoint());
  const int dim = system.joint_dim();
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = Complex{std::sin(0.9 * (i + 1)), std::cos(0.4 * (i + 1))};
  v.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < 300; ++iter) {
    const Eigen::VectorXcd w = lu_adj.solve(v);   // C^-dagger v
    const double current = w.norm();              // -> ||C^-1|| for unit v
    v = lu.solve(w);                              // C^-1 w
    const double vn = v.norm();
    const bool converged =
        iter > 8 && std::abs(current - estimate) <= 1e-12 * std::max(1.0, current);
    estimate = current;
    if (vn == 0.0 || converged) break;
    v /= vn;
  }
  return estimate;
}

BoundCheckTable verify_bounds(const ChebyshevSystem& system, const SpectralReport& report) {
  BoundCheckTable table;
  const double kappa = report.kappa_s;
  const int n_degrees = system.n_degrees;
  const int d = system.system_dim();

  {  // T_n^2 - (x^2 - 1) U_{n-1}^2 = 1 on a grid
    double worst = 0.0;
    for (std::int64_t n : {1, 2, 3, 5, 7, 13, 21}) {
      for (int i = 0; i <= 1000; ++i) {
        const double x = -1.0 + 2.0 * i / 1000.0;
        const double t = chebyshev_t(n, x);
        const double u = chebyshev_u(n - 1, x);
        worst = std::max(worst, std::abs(t * t - (x * x - 1.0) * u * u - 1.0));
      }
    }
    table.checks.push_back(
        {"T/U polynomial identity residual", worst, 1e-12, true, worst <= 1e-12});
  }

  {  // max_j ||U_j(H/alpha)|| over j < N
    double worst = 0.0;
    Eigen::MatrixXcd prev = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd cur = 2.0 * system.h_scaled;
    worst = std::max(matrix_norm(prev), n_degrees > 1 ? matrix_norm(cur) : 0.0);
    for (int j = 2; j < n_degrees; ++j) {
      Eigen::MatrixXcd next = 2.0 * (system.h_scaled * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
      worst = std::max(worst, matrix_norm(cur));
    }
    const double bound = kSqrt83 * kappa * (1.0 + 1e-9);
    table.checks.push_back({"max ||U_j(H/alpha)||, j < N", worst, bound, true, worst <= bound});
  }

  const double c_norm = denominator_norm_estimate(system);
  table.checks.push_back(
      {"||C/4||", c_norm / 4.0, 0.75 * (1.0 + 1e-9), true, c_norm / 4.0 <= 0.75 * (1 + 1e-9)});
  if (n_degrees >= 3) {
    const double floor = std::numbers::sqrt2 * (1.0 - 1e-9);
    table.checks.push_back({"||C||", c_norm, floor, false, c_norm >= floor});
  }

  {
    const double inv_norm = denominator_inverse_norm_estimate(system);
    const double bound = n_degrees * kSqrt83 * kappa * (1.0 + 1e-9);
    table.checks.push_back({"||C^-1||", inv_norm, bound, true, inv_norm <= bound});
  }
  return table;
}

}  // namespace tcqeve
