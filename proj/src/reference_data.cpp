// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/reference_data.hpp"

namespace tcqeve::reference {

std::optional<ReferenceEntry> find_reference(const std::string& label) {
  const auto slash = label.find('/');
  if (slash == std::string::npos) return std::nullopt;
  const std::string atom = label.substr(0, slash);
  const std::string basis = label.substr(slash + 1);
  int atom_index = -1;
  for (int i = 0; i < kNumAtoms; ++i)
    if (atom == kAtoms[i]) atom_index = i;
  if (atom_index < 0) return std::nullopt;
  for (const BasisRow* row : kAllBases)
    if (basis == row->basis) return ReferenceEntry{row, atom_index};
  return std::nullopt;
}

}  // namespace tcqeve::reference
