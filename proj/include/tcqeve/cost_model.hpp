// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tcqeve/pauli.hpp"
#include "tcqeve/spectral.hpp"

namespace tcqeve {

enum class Method { Qubitization, Qeve };

enum class QroamMode { Qrom, OptimizeGates, OptimizeQubits, FixedQ };

/// Error-budget and lookup-strategy knobs. Defaults follow the published
/// reference estimates: total budget 0.0016 Ha split evenly, QPE failure
/// probability below 1/2, and a x2 repetition allowance on QEVE walk calls
/// for the better-than-half measurement success probability.
struct BudgetConfig {
  double epsilon_total = 0.0016;  // Hartree
  double split = 0.5;             // fraction of the budget given to phase/degree error
  double p_fail = 0.25;           // QPE failure bound, < 1/2
  double repetition_factor = 2.0; // multiplier on QEVE walk calls, >= 1
  QroamMode qroam_mode = QroamMode::Qrom;
  std::int64_t fixed_q = 1;                // for QroamMode::FixedQ
  std::optional<double> t_budget;          // ceiling for QroamMode::OptimizeQubits

  void validate() const;  // throws ConfigError
};

/// Smallest m with 2^m >= k (k >= 1).
int ceil_log2(std::int64_t k);
/// Smallest m with 2^m >= x (x > 0), exact on double inputs.
int ceil_log2(double x);
/// Smallest power of two >= x as an integer.
std::int64_t next_pow2_at_least(double x);

/// Keep-register width ceil(log2(2*alpha*K/epsilon)), clamped below at 1.
int mu_qubitization(double alpha, std::int64_t n_terms, double epsilon);

/// QEVE keep-register width ceil(log2(2*alpha*K*kappa_S/epsilon)), clamped at 1.
int mu_qeve(double alpha, std::int64_t n_terms, double kappa_s, double epsilon);

/// Extra QPE qubits ceil(log2(2 + 1/(2 p_fail))); equals 2 for p_fail in [1/4, 1/2).
int qpe_extra_qubits(double p_fail);

/// Number of controlled walk applications 2^{n_a} - 1
/// = 4 * 2^ceil(log2(2*pi*alpha/eps_qpe)) - 1 at the default p_fail.
std::int64_t walk_calls_qpe(double alpha, double eps_qpe, double p_fail = 0.25);

/// Coherent-alias-sampling PREP: 4*ceil(K/q) + 4*(mu + ceil(log K))*(q-1)
/// + 4*mu + 12*ceil(log K) T gates. q is a power of two in [1, K).
std::int64_t prep_cost(std::int64_t n_terms, int mu, std::int64_t q);

/// Unary-iteration SELECT over Pauli-string unitaries: 4K - 4 T gates.
std::int64_t sel_cost(std::int64_t n_terms);

/// Reflection about the prepared state: 4*(ceil(log K) - 1) T gates.
std::int64_t reflection_cost(std::int64_t n_terms);

/// One controlled quantum walk = SEL + 2*PREP + reflection.
std::int64_t walk_cost_qubitization(std::int64_t n_terms, int mu, std::int64_t q);

/// Block encoding of H/alpha (SEL plus twice PREP, no reflection).
std::int64_t block_encoding_cost(std::int64_t n_terms, int mu, std::int64_t q);

struct ChebyshevDegree {
  std::int64_t n_degrees;  // N, power of two
  int n_ancilla;           // n = log2 N
};

/// N = next power of two >= 10*pi*alpha_eff/eps_qeve.
ChebyshevDegree qeve_degree(double alpha_eff, double eps_qeve);

/// Solver queries 18440*sqrt(3)*N*kappa_S times the repetition factor.
double qeve_walk_calls(double n_degrees, double kappa_s, double repetition_factor = 1.0);

/// Walk step of the linear-system solve: block encoding of C plus its
/// reflection = BE(H) + 6n(n-1) + 4*(ceil(log K) + 1).
std::int64_t walk_cost_qeve(std::int64_t n_terms, int mu, std::int64_t q, int n_ancilla);

/// QROAM ancilla overhead (mu + ceil(log K))*(q-1) + ceil(log2(K/q)); zero at q = 1.
std::int64_t qroam_ancillas(std::int64_t n_terms, int mu, std::int64_t q);

/// Gate-optimal q: exhaustive search over powers of two in [1, K),
/// ties broken toward smaller q.
std::int64_t optimize_qroam(std::int64_t n_terms, int mu);
/// Same search for the QEVE walk cost (the n-dependent part is q-independent).
std::int64_t optimize_qroam_qeve(std::int64_t n_terms, int mu, int n_ancilla);

/// Logical qubits, qubitization: n_system + 2*ceil(log K) + 2*mu + n_a
/// + QROAM ancillas.
std::int64_t qubit_count_qubitization(std::int64_t n_terms, int mu, std::int64_t q,
                                      int n_a, int n_system);

/// Logical qubits, QEVE: n_system + 2*ceil(log K) + 2*mu_register + n
/// + QROAM ancillas. mu_register is the kappa-free width ceil(log2(2*alpha*K/eps)).
std::int64_t qubit_count_qeve(std::int64_t n_terms, int mu_register, std::int64_t q,
                              int n_ancilla, int n_system);

struct CostReport {
  Method method = Method::Qubitization;
  std::string label;
  double alpha = 0.0;          // one-norm used for the estimate (original LCU)
  double alpha_eff = 0.0;      // QEVE block-encoding normalization
  double kappa_s = 1.0;        // QEVE only
  std::int64_t n_terms = 0;    // K after truncation
  std::int64_t n_terms_raw = 0;
  int mu = 0;                  // keep width entering the T costs
  int mu_register = 0;         // keep width entering the qubit count
  std::int64_t q = 1;
  int n_ancilla = 0;           // n_a (qubitization) or n = log2 N (QEVE)
  std::int64_t n_degrees = 0;  // N (QEVE only)
  int n_system = 0;
  double walk_calls = 0.0;     // exact integer for qubitization
  std::int64_t t_per_call = 0;
  double t_total = 0.0;
  std::int64_t logical_qubits = 0;
  double repetition_factor = 1.0;
  double epsilon_total = 0.0;
};

/// Published-inputs entry point: alpha, K, kappa_S and the system register
/// width are taken as given (no Hamiltonian file required).
struct HamiltonianParameters {
  std::string label;
  double alpha = 0.0;
  std::int64_t n_terms = 0;
  std::optional<double> kappa_s;
  int n_system = 0;
};

CostReport estimate_from_parameters(const HamiltonianParameters& params,
                                    const BudgetConfig& config, Method method,
                                    std::optional<double> alpha_eff_override = {});

/// Full pipeline from an LCU: compute mu, truncate at alpha*2^-mu, recount K,
/// resolve alpha_eff and kappa_S (dense report or overrides), pick q, and
/// assemble the report. QEVE requires kappa_S from the report or the override.
CostReport estimate(const PauliLCU& lcu, const std::optional<SpectralReport>& report,
                    const BudgetConfig& config, Method method,
                    std::optional<double> alpha_eff_override = {},
                    std::optional<double> kappa_s_override = {});

}  // namespace tcqeve
