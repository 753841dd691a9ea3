// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "support/test_support.hpp"
#include "tcqeve/errors.hpp"
#include "tcqeve/pauli.hpp"

using namespace tcqeve;
using tcqeve::testing::Rng;

namespace {

const PauliTerm* find_term(const PauliLCU& lcu, const std::string& word) {
  for (const auto& term : lcu.terms)
    if (term.string.str() == word) return &term;
  return nullptr;
}

}  // namespace

TEST_CASE("pauli string parse/str round trip") {
  const auto s = PauliString::parse("XIZY");
  CHECK(s.n_qubits() == 4);
  CHECK(s.letter(0) == 'X');
  CHECK(s.letter(1) == 'I');
  CHECK(s.letter(2) == 'Z');
  CHECK(s.letter(3) == 'Y');
  CHECK(s.str() == "XIZY");
  CHECK(s.y_count() == 1);
  CHECK(s.weight() == 3);
  CHECK_THROWS_AS(PauliString::parse("XQ"), ValidationError);
}

TEST_CASE("single-qubit products carry the right phases") {
  const auto X = PauliString::parse("X"), Y = PauliString::parse("Y"),
             Z = PauliString::parse("Z");
  auto [pxy, sxy] = multiply(X, Y);
  CHECK(sxy.str() == "Z");
  CHECK(pxy == Complex{0, 1});  // XY = iZ
  auto [pyx, syx] = multiply(Y, X);
  CHECK(pyx == Complex{0, -1});
  auto [pzz, szz] = multiply(Z, Z);
  CHECK(szz.is_identity());
  CHECK(pzz == Complex{1, 0});
  auto [pzx, szx] = multiply(Z, X);
  CHECK(szx.str() == "Y");
  CHECK(pzx == Complex{0, 1});  // ZX = iY
}

TEST_CASE("product closure matches dense matrix multiplication") {
  Rng rng(42);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<std::uint64_t> mask(0, (1ull << n) - 1);
      const PauliString a(n, mask(rng), mask(rng));
      const PauliString b(n, mask(rng), mask(rng));
      const auto [phase, product] = multiply(a, b);
      const Eigen::MatrixXcd expected = testing::kron_word(a) * testing::kron_word(b);
      const Eigen::MatrixXcd got = phase * testing::kron_word(product);
      CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((std::abs(phase) - 1.0) < 1e-15);
    }
  }
}

TEST_CASE("number operator maps to (I - Z)/2 per spin orbital") {
  SpinOrbitalHamiltonian ham;
  ham.n_spatial = 1;
  ham.core_energy = 0.0;
  ham.h = {1.0};
  ham.v.assign(1, 0.0);
  const PauliLCU lcu = jordan_wigner(ham);
  CHECK(lcu.n_qubits == 2);
  CHECK(lcu.b0.real() == doctest::Approx(1.0).epsilon(1e-14));  // 0.5 per spin orbital
  REQUIRE(lcu.terms.size() == 2);
  const auto* z0 = find_term(lcu, "ZI");
  const auto* z1 = find_term(lcu, "IZ");
  REQUIRE(z0 != nullptr);
  REQUIRE(z1 != nullptr);
  CHECK(z0->coefficient.real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(z1->coefficient.real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(lcu.alpha == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hopping term gives (t/2)(XX + YY) on adjacent orbitals") {
  const double t = 0.37;
  PauliAccumulator acc(2);
  const LadderOp forward[] = {{0, true}, {1, false}};
  const LadderOp backward[] = {{1, true}, {0, false}};
  accumulate_ladder_product(acc, forward, t);
  accumulate_ladder_product(acc, backward, t);
  const PauliLCU lcu = acc.build();
  REQUIRE(lcu.terms.size() == 2);
  const auto* xx = find_term(lcu, "XX");
  const auto* yy = find_term(lcu, "YY");
  REQUIRE(xx != nullptr);
  REQUIRE(yy != nullptr);
  CHECK(xx->coefficient.real() == doctest::Approx(t / 2).epsilon(1e-14));
  CHECK(yy->coefficient.real() == doctest::Approx(t / 2).epsilon(1e-14));
  // Brute-force 4x4 fermionic comparison.
  SpinOrbitalHamiltonian hop;
  hop.n_spatial = 1;  // two spin orbitals = the two modes above
  hop.h = {0.0};
  hop.v.assign(1, 0.0);
  Eigen::MatrixXcd fermionic = Eigen::MatrixXcd::Zero(4, 4);
  testing::add_ladder_product(fermionic, {{0, true}, {1, false}}, t);
  testing::add_ladder_product(fermionic, {{1, true}, {0, false}}, t);
  CHECK((testing::kron_lcu(lcu) - fermionic).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("jordan_wigner matches the Fock-space oracle on random TC data") {
  for (std::uint64_t seed : {11, 12, 13}) {
    Rng rng(seed);
    const auto ham = testing::random_hamiltonian(2, true, rng);
    const PauliLCU lcu = jordan_wigner(ham);
    const Eigen::MatrixXcd dense = testing::kron_lcu(lcu);
    const Eigen::MatrixXcd oracle = testing::fock_space_matrix(ham);
    CHECK((dense - oracle).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hermitian input yields real coefficients and a consistent verdict") {
  Rng rng(21);
  const auto ham = testing::random_hamiltonian(3, false, rng);
  const PauliLCU lcu = jordan_wigner(ham);
  for (const auto& term : lcu.terms)
    CHECK(std::abs(term.coefficient.imag()) <= 1e-10 * lcu.alpha);
  const auto reality = classify_reality(lcu);
  CHECK(reality.consistent);
}

TEST_CASE("reality classification follows the Y-parity rule") {
  PauliAccumulator acc(2);
  acc.add_word(PauliString::parse("XX"), Complex{0.3, 0.0});   // even Y, real: ok
  acc.add_word(PauliString::parse("YI"), Complex{0.0, 0.1});   // odd Y, imaginary: ok
  const PauliLCU lcu = acc.build();
  const auto ok = classify_reality(lcu);
  CHECK(ok.consistent);
  for (std::size_t i = 0; i < lcu.terms.size(); ++i) {
    const auto expected =
        lcu.terms[i].string.str() == "XX" ? TermReality::Real : TermReality::Imaginary;
    CHECK(ok.tags[i] == expected);
  }

  PauliAccumulator bad(2);
  bad.add_word(PauliString::parse("XI"), Complex{0.0, 0.1});   // even Y, imaginary: no
  const auto verdict = classify_reality(bad.build());
  CHECK_FALSE(verdict.consistent);
  CHECK(verdict.tags[0] == TermReality::Violation);
}

TEST_CASE("truncate keeps exactly the terms above alpha * 2^-mu") {
  PauliAccumulator acc(2);
  acc.add_word(PauliString::parse("ZI"), 0.5);
  acc.add_word(PauliString::parse("IZ"), 0.25);
  acc.add_word(PauliString::parse("XX"), 0.125);
  const PauliLCU lcu = acc.build();
  CHECK(lcu.alpha == doctest::Approx(0.875));

  const auto result = truncate(lcu, 2);  // threshold 0.21875
  CHECK(result.lcu.terms.size() == 2);
  CHECK(result.dropped_count == 1);
  CHECK(result.dropped_weight == doctest::Approx(0.125));
  CHECK(result.lcu.alpha == doctest::Approx(0.75));
  CHECK(result.lcu.b0 == lcu.b0);

  SUBCASE("large mu is the identity operation") {
    const auto all = truncate(lcu, 10);
    CHECK(all.lcu.terms.size() == 3);
    CHECK(all.dropped_weight == 0.0);
  }
}

TEST_CASE("truncate at mu = 0 keeps single-term LCUs and empties multi-term ones") {
  PauliAccumulator single(1);
  single.add_word(PauliString::parse("Z"), 0.7);
  const auto kept = truncate(single.build(), 0);
  CHECK(kept.lcu.terms.size() == 1);

  PauliAccumulator multi(2);
  multi.add_word(PauliString::parse("ZI"), 0.5);
  multi.add_word(PauliString::parse("IZ"), 0.5);
  const auto dropped = truncate(multi.build(), 0);
  CHECK(dropped.lcu.terms.empty());
  CHECK(dropped.dropped_weight == doctest::Approx(1.0));
}

TEST_CASE("truncation weight and monotonicity properties") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliLCU lcu = testing::random_lcu(3, 12, trial % 2 == 0, rng);
    const auto n_terms = static_cast<double>(lcu.terms.size());
    double previous = -1.0;
    for (int mu = 0; mu <= 8; ++mu) {
      const auto result = truncate(lcu, mu);
      CHECK(result.lcu.alpha <= lcu.alpha * (1 + 1e-12));
      CHECK(result.lcu.alpha >= previous - 1e-12);  // monotone nondecreasing in mu
      CHECK(result.dropped_weight <= n_terms * std::ldexp(lcu.alpha, -mu) * (1 + 1e-12));
      previous = result.lcu.alpha;
    }
  }
}

TEST_CASE("one_norm excludes b0") {
  PauliAccumulator acc(2);
  acc.add_identity(Complex{0.9, 0.0});
  acc.add_word(PauliString::parse("ZI"), 0.5);
  acc.add_word(PauliString::parse("XX"), 0.2);
  const PauliLCU lcu = acc.build();
  CHECK(one_norm(lcu) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(lcu.alpha == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("accumulator combines like strings and drops cancelled terms") {
  PauliAccumulator acc(1);
  acc.add_word(PauliString::parse("Z"), 0.5);
  acc.add_word(PauliString::parse("Z"), -0.5);
  acc.add_word(PauliString::parse("X"), 0.5);
  acc.add_word(PauliString::parse("X"), 0.25);
  const PauliLCU lcu = acc.build();
  REQUIRE(lcu.terms.size() == 1);
  CHECK(lcu.terms[0].string.str() == "X");
  CHECK(lcu.terms[0].coefficient.real() == doctest::Approx(0.75));
}

TEST_CASE("qubit cap is enforced") {
  Rng rng(5);
  const auto ham = testing::random_hamiltonian(3, false, rng);
  CHECK_THROWS_AS(jordan_wigner(ham, 5), CapacityError);
}

TEST_CASE("lcu dump round-trips") {
  Rng rng(77);
  const PauliLCU lcu = testing::random_lcu(3, 9, false, rng);
  const auto path = std::filesystem::temp_directory_path() / "tcqeve_lcu_dump.txt";
  write_lcu(lcu, path);
  const PauliLCU back = read_lcu(path);
  REQUIRE(back.terms.size() == lcu.terms.size());
  CHECK(back.b0 == lcu.b0);
  for (std::size_t i = 0; i < lcu.terms.size(); ++i) {
    CHECK(back.terms[i].string == lcu.terms[i].string);
    CHECK(back.terms[i].coefficient == lcu.terms[i].coefficient);
  }
}
