// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/test_support.hpp"
#include "tcqeve/errors.hpp"
#include "tcqeve/integrals.hpp"

using namespace tcqeve;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("tcqeve_test_" + name);
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = temp_file(name);
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("minimal one-orbital file parses") {
  const auto path = write_file("minimal.fcidump", "&FCI NORB=1 CORE=0.0\n-1.0 1 1 0 0\n");
  const auto ham = load_hamiltonian(path, HamiltonianFormat::Fcidump);
  CHECK(ham.n_spatial == 1);
  CHECK(ham.h_at(0, 0) == -1.0);
  CHECK(ham.core_energy == 0.0);
  CHECK(ham.is_hermitian());
}

TEST_CASE("out-of-range index is a validation error") {
  const auto path = write_file("badindex.fcidump", "&FCI NORB=4 CORE=0\n1.0 5 1 0 0\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::Fcidump), ValidationError);
}

TEST_CASE("malformed record reports its line number") {
  const auto path = write_file("malformed.fcidump", "&FCI NORB=2 CORE=0\n1.0 1 1 0\n");
  try {
    load_hamiltonian(path, HamiltonianFormat::Fcidump);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("non-finite value is rejected") {
  const auto path = write_file("nan.fcidump", "&FCI NORB=1 CORE=0\nnan 1 1 0 0\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::Fcidump), ValidationError);
}

TEST_CASE("duplicate records are an error, not a sum") {
  const auto path =
      write_file("dup.fcidump", "&FCI NORB=1 CORE=0\n0.5 1 1 0 0\n0.25 1 1 0 0\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::Fcidump), ValidationError);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto path = write_file("comments.fcidump",
                               "&FCI NORB=1 CORE=0.5\n\n# one-body\n-1.0 1 1 0 0  # diag\n");
  const auto ham = load_hamiltonian(path, HamiltonianFormat::Fcidump);
  CHECK(ham.h_at(0, 0) == -1.0);
  CHECK(ham.core_energy == 0.5);
}

TEST_CASE("hermitian mode rejects K records and the &TC section") {
  const auto with_k = write_file("hermk.fcidump", "&FCI NORB=1 CORE=0\n0.1 1 1 1 1 K\n");
  CHECK_THROWS_AS(load_hamiltonian(with_k, HamiltonianFormat::Fcidump), ParseError);
  const auto with_tc = write_file("hermtc.fcidump", "&FCI NORB=1 CORE=0\n&TC\n0.1 1 1 1 1 1 1\n");
  CHECK_THROWS_AS(load_hamiltonian(with_tc, HamiltonianFormat::Fcidump), ParseError);
}

TEST_CASE("hermitian mode enforces the h symmetry at 1e-10") {
  const auto asym = write_file(
      "asym.fcidump", "&FCI NORB=2 CORE=0\n1.0 1 2 0 0\n1.00000001 2 1 0 0\n");
  CHECK_THROWS_AS(load_hamiltonian(asym, HamiltonianFormat::Fcidump), ValidationError);
  const auto nearly = write_file(
      "nearly.fcidump", "&FCI NORB=2 CORE=0\n1.0 1 2 0 0\n1.000000000000001 2 1 0 0\n");
  CHECK_NOTHROW(load_hamiltonian(nearly, HamiltonianFormat::Fcidump));
}

TEST_CASE("hermitian mode enforces the v 8-fold symmetry") {
  // v_1211 set without its p<->r partner v_1112.
  const auto path = write_file("vasym.fcidump", "&FCI NORB=2 CORE=0\n0.3 1 2 1 1\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::Fcidump), ValidationError);
}

TEST_CASE("tc mode accepts K and G records without symmetry checks") {
  const auto path = write_file("tc.fcidump-tc",
                               "&FCI NORB=2 CORE=-1.5\n"
                               "0.7 1 2 0 0\n"
                               "0.3 1 2 1 1\n"
                               "0.05 1 1 2 2 K\n"
                               "&TC\n"
                               "0.01 1 2 1 2 1 2\n");
  const auto ham = load_hamiltonian(path, HamiltonianFormat::FcidumpTc);
  CHECK(ham.h_at(0, 1) == 0.7);
  CHECK(ham.v_at(0, 1, 0, 0) == 0.3);
  CHECK(ham.k_at(0, 0, 1, 1) == 0.05);
  CHECK(ham.g_at(0, 1, 0, 1, 0, 1) == 0.01);
  CHECK_FALSE(ham.is_hermitian());
}

TEST_CASE("K record after &TC is rejected") {
  const auto path = write_file("kaftertc.fcidump-tc",
                               "&FCI NORB=1 CORE=0\n&TC\n0.1 1 1 1 1 K\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::FcidumpTc), ParseError);
}

TEST_CASE("core energy in the body is rejected") {
  const auto path = write_file("core.fcidump", "&FCI NORB=1 CORE=0\n-7.5 0 0 0 0\n");
  CHECK_THROWS_AS(load_hamiltonian(path, HamiltonianFormat::Fcidump), ParseError);
}

TEST_CASE("all-zero hamiltonian saves as a header-only file") {
  SpinOrbitalHamiltonian ham;
  ham.n_spatial = 2;
  ham.core_energy = 0.25;
  ham.h.assign(4, 0.0);
  ham.v.assign(16, 0.0);
  ham.k.assign(16, 0.0);
  ham.g.assign(64, 0.0);
  const auto path = temp_file("zeros.fcidump-tc");
  save_hamiltonian(ham, path);
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 1);
  const auto back = load_hamiltonian(path, HamiltonianFormat::FcidumpTc);
  CHECK(equivalent(ham, back));
}

TEST_CASE("hermitian hamiltonian emits no K lines and no 6-index section") {
  testing::Rng rng(7);
  auto ham = testing::random_hamiltonian(2, false, rng);
  const auto path = temp_file("herm_out.fcidump-tc");
  save_hamiltonian(ham, path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("&TC") == std::string::npos);
  CHECK(text.find(" K\n") == std::string::npos);
}

TEST_CASE("save/load round-trips random tensors bit-exactly") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    testing::Rng rng(seed);
    const bool tc = seed % 2 == 0;
    const auto ham = testing::random_hamiltonian(2 + seed % 2, tc, rng);
    const auto path = temp_file("roundtrip_" + std::to_string(seed));
    save_hamiltonian(ham, path);
    const auto back = load_hamiltonian(path, HamiltonianFormat::FcidumpTc);
    CHECK(back.n_spatial == ham.n_spatial);
    CHECK(back.core_energy == ham.core_energy);
    CHECK(back.h == ham.h);
    CHECK(back.v == ham.v);
    CHECK(equivalent(ham, back));
  }
}

TEST_CASE("validate rejects inconsistent tensor shapes") {
  SpinOrbitalHamiltonian ham;
  ham.n_spatial = 2;
  ham.h.assign(3, 0.0);  // wrong
  ham.v.assign(16, 0.0);
  CHECK_THROWS_AS(validate(ham), ValidationError);
}
