// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace tcqeve {

/// Second-quantized integral data over spatial orbitals, in Hartree.
///
/// The operator it represents is
///   H = core + sum_{pq,s} h[pq] a+_{ps} a_{qs}
///            + sum_{pqrs,st} (v[pqrs] - k[pqrs]) a+_{ps} a+_{qt} a_{st} a_{rs}
///            + sum_{pqrsuv,stk} g[pqrsuv] a+_{ps} a+_{qt} a+_{rk} a_{vk} a_{ut} a_{ss}
/// with spin attached downstream as spin-orbital index 2p + sigma.
/// `k` and `g` are the transcorrelated corrections; an empty vector means the
/// tensor is absent (Hermitian problem / no three-body term).
struct SpinOrbitalHamiltonian {
  int n_spatial = 0;
  double core_energy = 0.0;
  std::vector<double> h;  // n^2, [p*n + q]
  std::vector<double> v;  // n^4, [((p*n + q)*n + r)*n + s]
  std::vector<double> k;  // n^4 or empty
  std::vector<double> g;  // n^6 or empty
  std::string source_label;

  bool has_k() const { return !k.empty(); }
  bool has_g() const { return !g.empty(); }
  bool is_hermitian() const { return !has_k() && !has_g(); }

  double h_at(int p, int q) const { return h[idx2(p, q)]; }
  double v_at(int p, int q, int r, int s) const { return v[idx4(p, q, r, s)]; }
  double k_at(int p, int q, int r, int s) const { return k[idx4(p, q, r, s)]; }
  double g_at(int p, int q, int r, int s, int u, int w) const {
    return g[idx6(p, q, r, s, u, w)];
  }

  std::size_t idx2(int p, int q) const {
    return static_cast<std::size_t>(p) * n_spatial + q;
  }
  std::size_t idx4(int p, int q, int r, int s) const {
    std::size_t n = n_spatial;
    return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
  }
  std::size_t idx6(int p, int q, int r, int s, int u, int w) const {
    std::size_t n = n_spatial;
    return ((((static_cast<std::size_t>(p) * n + q) * n + r) * n + s) * n + u) * n + w;
  }
};

enum class HamiltonianFormat { Fcidump, FcidumpTc };

/// Tolerance for the Hermitian-mode symmetry validation (Hartree).
inline constexpr double kHermitianSymmetryTol = 1e-10;

/// Checks dimensions, finiteness and (for Hermitian data) the h/v symmetries.
/// Throws ValidationError on failure.
void validate(const SpinOrbitalHamiltonian& ham);

/// Parses an fcidump / fcidump-tc file. Hermitian mode rejects K records and
/// the &TC section and enforces the standard real-integral symmetries.
SpinOrbitalHamiltonian load_hamiltonian(const std::filesystem::path& path,
                                        HamiltonianFormat format);

/// Writes the fcidump-tc format. Only nonzero records are emitted, so
/// load(save(H)) reproduces H up to absent-vs-all-zero optional tensors.
void save_hamiltonian(const SpinOrbitalHamiltonian& ham, const std::filesystem::path& path);

/// Value equality on the data model; an absent k/g tensor equals an all-zero one.
bool equivalent(const SpinOrbitalHamiltonian& a, const SpinOrbitalHamiltonian& b);

}  // namespace tcqeve
