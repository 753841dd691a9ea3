// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles and random-input generators. Everything here is kept
// independent of the implementation paths it checks: the Fock-space oracle
// works directly on occupation bitstrings, the Kronecker oracle builds
// explicit tensor products, and the DFT oracle is the two-line definition.

#pragma once

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "tcqeve/integrals.hpp"
#include "tcqeve/pauli.hpp"

namespace tcqeve::testing {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Fock-space oracle: applies Eq.-style ladder products on occupation bits.

/// a_p / a+_p acting on |bits>; returns false when annihilated.
/// The fermionic sign is (-1)^(number of occupied orbitals below p).
inline bool apply_ladder(bool dagger, int orbital, std::uint64_t& bits, int& sign) {
  const std::uint64_t bit = std::uint64_t{1} << orbital;
  if (dagger ? (bits & bit) : !(bits & bit)) return false;
  if (std::popcount(bits & (bit - 1)) & 1) sign = -sign;
  bits ^= bit;
  return true;
}

/// Adds coeff * op_0 op_1 ... op_m (leftmost acts last) to the dense matrix.
inline void add_ladder_product(Eigen::MatrixXcd& m, const std::vector<LadderOp>& ops,
                               double coeff) {
  const auto dim = m.rows();
  for (std::int64_t ket = 0; ket < dim; ++ket) {
    std::uint64_t bits = static_cast<std::uint64_t>(ket);
    int sign = 1;
    bool alive = true;
    for (auto it = ops.rbegin(); it != ops.rend() && alive; ++it)
      alive = apply_ladder(it->dagger, it->index, bits, sign);
    if (alive) m(static_cast<std::int64_t>(bits), ket) += coeff * sign;
  }
}

/// The full second-quantized operator on the 2^(2n)-dimensional Fock space,
/// built without any Pauli algebra.
inline Eigen::MatrixXcd fock_space_matrix(const SpinOrbitalHamiltonian& ham) {
  const int n = ham.n_spatial;
  const std::int64_t dim = std::int64_t{1} << (2 * n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m.diagonal().array() += ham.core_energy;
  const auto so = [](int p, int s) { return 2 * p + s; };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double c = ham.h_at(p, q);
      if (c == 0.0) continue;
      for (int s = 0; s < 2; ++s)
        add_ladder_product(m, {{so(p, s), true}, {so(q, s), false}}, c);
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double c = ham.v_at(p, q, r, s);
          if (ham.has_k()) c -= ham.k_at(p, q, r, s);
          if (c == 0.0) continue;
          for (int sg = 0; sg < 2; ++sg)
            for (int tu = 0; tu < 2; ++tu)
              add_ladder_product(m,
                                 {{so(p, sg), true},
                                  {so(q, tu), true},
                                  {so(s, tu), false},
                                  {so(r, sg), false}},
                                 c);
        }
  if (ham.has_g())
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u)
              for (int w = 0; w < n; ++w) {
                const double c = ham.g_at(p, q, r, s, u, w);
                if (c == 0.0) continue;
                for (int sg = 0; sg < 2; ++sg)
                  for (int tu = 0; tu < 2; ++tu)
                    for (int ka = 0; ka < 2; ++ka)
                      add_ladder_product(m,
                                         {{so(p, sg), true},
                                          {so(q, tu), true},
                                          {so(r, ka), true},
                                          {so(w, ka), false},
                                          {so(u, tu), false},
                                          {so(s, sg), false}},
                                         c);
              }
  return m;
}

// ---------------------------------------------------------------------------
// Kronecker oracle

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::Matrix2cd pauli_matrix(char letter) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    default:  m << 1, 0, 0, -1; break;  // Z
  }
  return m;
}

/// Dense matrix of a Pauli word by explicit tensor products; qubit 0 is the
/// innermost (fastest-varying) factor, matching bit q of the basis index.
inline Eigen::MatrixXcd kron_word(const PauliString& word) {
  Eigen::MatrixXcd out = pauli_matrix(word.letter(word.n_qubits() - 1));
  for (int q = word.n_qubits() - 2; q >= 0; --q)
    out = kron(out, pauli_matrix(word.letter(q)));
  return out;
}

inline Eigen::MatrixXcd kron_lcu(const PauliLCU& lcu) {
  const std::int64_t dim = std::int64_t{1} << lcu.n_qubits;
  Eigen::MatrixXcd m = lcu.b0 * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& term : lcu.terms) m += term.coefficient * kron_word(term.string);
  return m;
}

// ---------------------------------------------------------------------------
// DFT oracle

/// Squared-magnitude marginal over the ancilla index of the normalized joint
/// state, straight from the definition F(y) = sum_l e^{2pi i l y / N} f(l).
inline Eigen::VectorXd naive_dft_distribution(const Eigen::VectorXcd& amplitudes,
                                              int n_degrees) {
  const int d = static_cast<int>(amplitudes.size()) / n_degrees;
  const Eigen::VectorXcd normalized = amplitudes / amplitudes.norm();
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n_degrees);
  for (int s = 0; s < d; ++s)
    for (int y = 0; y < n_degrees; ++y) {
      std::complex<double> f{0.0, 0.0};
      for (int ell = 0; ell < n_degrees; ++ell) {
        const double angle = 2.0 * M_PI * ell * y / n_degrees;
        f += normalized(ell * d + s) * std::complex<double>{std::cos(angle), std::sin(angle)};
      }
      p(y) += std::norm(f) / n_degrees;
    }
  return p;
}

// ---------------------------------------------------------------------------
// Random inputs

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline SpinOrbitalHamiltonian random_hamiltonian(int n_spatial, bool transcorrelated,
                                                 Rng& rng, bool three_body = true) {
  SpinOrbitalHamiltonian ham;
  ham.n_spatial = n_spatial;
  ham.core_energy = uniform(rng, -1.0, 1.0);
  ham.source_label = "random";
  const std::size_t n = n_spatial;
  ham.h.resize(n * n);
  ham.v.resize(n * n * n * n);
  if (transcorrelated) {
    for (auto& x : ham.h) x = uniform(rng, -1.0, 1.0);
    for (auto& x : ham.v) x = uniform(rng, -1.0, 1.0);
    ham.k.resize(n * n * n * n);
    for (auto& x : ham.k) x = uniform(rng, -0.5, 0.5);
    if (three_body) {
      ham.g.resize(n * n * n * n * n * n);
      for (auto& x : ham.g) x = uniform(rng, -0.2, 0.2);
    }
  } else {
    for (int p = 0; p < n_spatial; ++p)
      for (int q = 0; q <= p; ++q) {
        const double x = uniform(rng, -1.0, 1.0);
        ham.h[ham.idx2(p, q)] = x;
        ham.h[ham.idx2(q, p)] = x;
      }
    // Fill v respecting the real 8-fold symmetry.
    for (int p = 0; p < n_spatial; ++p)
      for (int q = 0; q < n_spatial; ++q)
        for (int r = 0; r < n_spatial; ++r)
          for (int s = 0; s < n_spatial; ++s) {
            const double x = uniform(rng, -1.0, 1.0);
            const int idx[8][4] = {{p, q, r, s}, {r, q, p, s}, {p, s, r, q}, {r, s, p, q},
                                   {q, p, s, r}, {q, r, s, p}, {s, p, q, r}, {s, r, q, p}};
            bool fresh = true;
            for (const auto& perm : idx)
              if (ham.v[ham.idx4(perm[0], perm[1], perm[2], perm[3])] != 0.0) fresh = false;
            if (!fresh) continue;
            for (const auto& perm : idx)
              ham.v[ham.idx4(perm[0], perm[1], perm[2], perm[3])] = x;
          }
  }
  return ham;
}

inline Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd raw(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) raw(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

struct DiagonalizableMatrix {
  Eigen::MatrixXcd h;           // real entries, real spectrum
  Eigen::VectorXd eigenvalues;  // ascending
  double kappa_generator;       // condition number of the similarity used
};

/// h = S diag(lambda) S^-1 with real eigenvalues in [lambda_lo, lambda_hi]
/// and kappa(S) <= kappa_max (kappa_max = 1 gives a symmetric matrix).
inline DiagonalizableMatrix random_diagonalizable(int d, double lambda_lo, double lambda_hi,
                                                  double kappa_max, Rng& rng) {
  DiagonalizableMatrix out;
  Eigen::VectorXd lambdas(d);
  for (int i = 0; i < d; ++i) lambdas(i) = uniform(rng, lambda_lo, lambda_hi);
  std::sort(lambdas.data(), lambdas.data() + d);
  out.eigenvalues = lambdas;
  if (kappa_max <= 1.0) {
    const Eigen::MatrixXd q = random_orthogonal(d, rng);
    out.h = (q * lambdas.asDiagonal() * q.transpose()).cast<std::complex<double>>();
    out.kappa_generator = 1.0;
  } else {
    const Eigen::MatrixXd u = random_orthogonal(d, rng);
    const Eigen::MatrixXd v = random_orthogonal(d, rng);
    Eigen::VectorXd sv(d);
    for (int i = 0; i < d; ++i) sv(i) = std::exp(uniform(rng, 0.0, std::log(kappa_max)));
    sv(0) = 1.0;
    const Eigen::MatrixXd s = u * sv.asDiagonal() * v.transpose();
    out.h = (s * lambdas.asDiagonal() * s.inverse()).cast<std::complex<double>>();
    out.kappa_generator = sv.maxCoeff() / sv.minCoeff();
  }
  return out;
}

/// Exact Pauli decomposition of a dense matrix: c_W = tr(W M) / 2^n.
/// Gives an LCU whose dense realization reproduces M to machine precision;
/// handy for non-Hermitian instances with a constructed (real) spectrum.
inline PauliLCU lcu_from_dense(const Eigen::MatrixXcd& m, int n_qubits) {
  PauliAccumulator acc(n_qubits);
  const double dim = static_cast<double>(m.rows());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_qubits); ++x)
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n_qubits); ++z) {
      const PauliString word(n_qubits, x, z);
      const Complex coeff = (kron_word(word) * m).trace() / dim;
      acc.add_word(word, coeff);
    }
  return acc.build();
}

/// Random LCU with distinct non-identity strings; real coefficients when
/// hermitian, complex otherwise.
inline PauliLCU random_lcu(int n_qubits, int n_terms, bool hermitian, Rng& rng) {
  PauliAccumulator acc(n_qubits);
  acc.add_identity(Complex{uniform(rng, -0.5, 0.5), 0.0});
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n_qubits) - 1);
  int added = 0;
  while (added < n_terms) {
    const std::uint64_t x = mask(rng), z = mask(rng);
    if (x == 0 && z == 0) continue;
    const double re = uniform(rng, 0.1, 1.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const Complex c = hermitian ? Complex{re, 0.0} : Complex{re, uniform(rng, -1.0, 1.0)};
    acc.add_word(PauliString(n_qubits, x, z), c);
    ++added;
  }
  return acc.build();
}

}  // namespace tcqeve::testing
