// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace tcqeve::reference {

/// Literature reference values for second-row atoms (Li..Ne) used by the
/// reproduce-tables command: Jordan-Wigner one-norms and term counts per
/// basis, Jordan condition numbers of the transcorrelated Hamiltonians, and
/// the resource estimates they imply. The TC rows are costed with the
/// non-Hermitian eigenvalue-estimation method, the cc-pVXZ rows with plain
/// qubitization, both at a total budget of 0.0016 Ha split evenly.
inline constexpr int kNumAtoms = 8;
inline constexpr std::array<const char*, kNumAtoms> kAtoms = {
    "Li", "Be", "B", "C", "N", "O", "F", "Ne"};

struct BasisRow {
  const char* basis;
  int n_system;  // spin orbitals
  std::array<double, kNumAtoms> alpha;          // Hartree
  std::array<std::int64_t, kNumAtoms> n_terms;  // K
  std::array<double, kNumAtoms> t_qrom;         // reference T counts
  std::array<double, kNumAtoms> t_qroam;
  std::array<std::int64_t, kNumAtoms> qubits_qrom;
  std::array<std::int64_t, kNumAtoms> qubits_qroam;
};

/// Jordan condition numbers kappa_S for the TC STO-6G Hamiltonians. These are
/// realization-dependent (Li was observed anywhere from 3.1 to 25.7 across
/// variational Monte Carlo runs); the values here are the ones the reference
/// estimates were computed with.
inline constexpr std::array<double, kNumAtoms> kKappaS = {3.1,   10.0, 7.7,  7.1,
                                                          13.89, 4.43, 37.8, 5.06};

inline constexpr BasisRow kCcPvdz = {
    "cc-pVDZ",
    28,
    {67.4, 112.5, 121.7, 154.5, 202.8, 203.6, 242.0, 293.7},
    {12700, 22500, 11000, 11000, 23000, 11000, 11000, 23000},
    {6.4e11, 1.1e12, 5.5e11, 1.1e12, 2.3e12, 1.1e12, 1.1e12, 4.6e12},
    {2.6e11, 4.5e11, 2.3e11, 4.7e11, 9.2e11, 4.7e11, 4.6e11, 1.8e12},
    {136, 142, 137, 138, 144, 139, 139, 145},
    {1032, 1098, 1063, 1064, 1130, 1095, 1095, 1131},
};

inline constexpr BasisRow kCcPvtz = {
    "cc-pVTZ",
    60,
    {5.83e2, 8.39e2, 8.91e2, 1.10e3, 1.63e3, 1.53e3, 1.76e3, 2.39e3},
    {502000, 537000, 239000, 239000, 547000, 239000, 239000, 548000},
    {2.0e14, 2.2e14, 9.6e13, 1.9e14, 4.4e14, 1.9e14, 1.9e14, 8.8e14},
    {7.0e13, 7.5e13, 3.4e13, 6.8e13, 1.5e14, 6.8e13, 6.8e13, 3.1e14},
    {200, 205, 195, 197, 207, 197, 197, 208},
    {10099, 10358, 4977, 5105, 10614, 5105, 5105, 10615},
};

inline constexpr BasisRow kCcPvqz = {
    "cc-pVQZ",
    110,
    {2.80e3, 4.32e3, 4.00e3, 5.20e3, 8.17e3, 7.00e3, 8.06e3, 1.20e4},
    {6100000, 6230000, 2620000, 2620000, 6390000, 2610000, 2620000, 6390000},
    {9.8e15, 2.0e16, 4.2e15, 8.4e15, 2.1e16, 8.4e15, 8.4e15, 4.1e16},
    {3.3e15, 6.8e15, 1.4e15, 2.9e15, 7.0e15, 2.9e15, 2.9e15, 1.4e16},
    {274, 275, 269, 270, 276, 271, 271, 278},
    {23216, 23217, 22701, 22702, 23728, 23213, 23213, 24240},
};

inline constexpr BasisRow kTcSto6g = {
    "TC-STO-6G",
    10,
    {6.0, 12.0, 18.1, 27.0, 49.1, 76.3, 94.6, 106.5},
    {934, 958, 958, 910, 958, 958, 910, 910},
    {7.2e14, 2.4e15, 3.7e15, 3.3e15, 1.4e16, 8.8e15, 7.2e16, 9.6e15},
    {4.7e14, 1.5e15, 2.4e15, 2.2e15, 9.1e15, 5.9e15, 5.0e16, 6.6e15},
    {94, 97, 98, 98, 101, 101, 104, 102},
    {242, 263, 264, 264, 279, 273, 294, 280},
};

/// One-norms of the plain (non-TC) STO-6G Hamiltonians, kept for the
/// one-norm comparison table; no resource estimates are published for them.
inline constexpr std::array<double, kNumAtoms> kSto6gAlpha = {8.2,  12.0, 17.4, 26.0,
                                                              36.2, 48.4, 62.3, 78.2};
inline constexpr std::array<std::int64_t, kNumAtoms> kSto6gTerms = {154, 154, 154, 154,
                                                                    154, 154, 154, 154};

inline constexpr std::array<const BasisRow*, 4> kAllBases = {&kCcPvdz, &kCcPvtz, &kCcPvqz,
                                                             &kTcSto6g};

/// Looks up the reference row for "Atom/basis" labels like "Li/cc-pVDZ".
struct ReferenceEntry {
  const BasisRow* row;
  int atom_index;
};
std::optional<ReferenceEntry> find_reference(const std::string& label);

}  // namespace tcqeve::reference
