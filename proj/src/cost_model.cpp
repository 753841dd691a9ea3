// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/cost_model.hpp"

#include <cmath>
#include <numbers>

#include "tcqeve/errors.hpp"

namespace tcqeve {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void check_q(std::int64_t n_terms, std::int64_t q) {
  if (q < 1 || (q & (q - 1)) != 0)
    throw ValidationError("q must be a power of two, got " + std::to_string(q));
  if (q != 1 && q >= n_terms)
    throw ValidationError("q must satisfy 1 <= q < K");
}

}  // namespace

void BudgetConfig::validate() const {
  if (!(epsilon_total > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(split > 0.0 && split < 1.0)) throw ConfigError("split must lie in (0, 1)");
  if (!(p_fail > 0.0 && p_fail < 0.5)) throw ConfigError("p_fail must lie in (0, 1/2)");
  if (!(repetition_factor >= 1.0)) throw ConfigError("repetition_factor must be >= 1");
  if (qroam_mode == QroamMode::FixedQ && (fixed_q < 1 || (fixed_q & (fixed_q - 1)) != 0))
    throw ConfigError("fixed q must be a power of two");
  if (qroam_mode == QroamMode::OptimizeQubits && !t_budget)
    throw ConfigError("optimize-qubits mode needs a T-count ceiling (--t-budget)");
}

int ceil_log2(std::int64_t k) {
  if (k < 1) throw ValidationError("ceil_log2 requires a positive argument");
  int m = 0;
  while ((std::int64_t{1} << m) < k) ++m;
  return m;
}

int ceil_log2(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("ceil_log2 requires x > 0");
  int m = static_cast<int>(std::ceil(std::log2(x)));
  while (std::ldexp(1.0, m - 1) >= x) --m;
  while (std::ldexp(1.0, m) < x) ++m;
  return m;
}

std::int64_t next_pow2_at_least(double x) {
  const int m = std::max(0, ceil_log2(x));
  if (m > 62) throw CapacityError("power-of-two target exceeds 2^62");
  return std::int64_t{1} << m;
}

int mu_qubitization(double alpha, std::int64_t n_terms, double epsilon) {
  if (!(alpha > 0.0) || n_terms < 1 || !(epsilon > 0.0))
    throw ValidationError("mu_qubitization requires positive alpha, K, epsilon");
  return std::max(1, ceil_log2(2.0 * alpha * static_cast<double>(n_terms) / epsilon));
}

int mu_qeve(double alpha, std::int64_t n_terms, double kappa_s, double epsilon) {
  if (!(kappa_s >= 1.0)) throw ValidationError("kappa_S must be >= 1");
  return std::max(
      1, ceil_log2(2.0 * alpha * static_cast<double>(n_terms) * kappa_s / epsilon));
}

int qpe_extra_qubits(double p_fail) {
  if (!(p_fail > 0.0 && p_fail < 0.5)) throw ValidationError("p_fail must lie in (0, 1/2)");
  return ceil_log2(2.0 + 1.0 / (2.0 * p_fail));
}

std::int64_t walk_calls_qpe(double alpha, double eps_qpe, double p_fail) {
  if (!(alpha > 0.0) || !(eps_qpe > 0.0))
    throw ValidationError("walk_calls_qpe requires positive alpha and epsilon");
  const int n_a = ceil_log2(2.0 * std::numbers::pi * alpha / eps_qpe) + qpe_extra_qubits(p_fail);
  if (n_a >= 63) throw CapacityError("QPE register too wide");
  return (std::int64_t{1} << n_a) - 1;
}

std::int64_t prep_cost(std::int64_t n_terms, int mu, std::int64_t q) {
  check_q(n_terms, q);
  const std::int64_t lk = ceil_log2(n_terms);
  return 4 * ceil_div(n_terms, q) + 4 * (mu + lk) * (q - 1) + 4 * mu + 12 * lk;
}

std::int64_t sel_cost(std::int64_t n_terms) { return 4 * n_terms - 4; }

std::int64_t reflection_cost(std::int64_t n_terms) {
  return 4 * (ceil_log2(n_terms) - 1);
}

std::int64_t walk_cost_qubitization(std::int64_t n_terms, int mu, std::int64_t q) {
  check_q(n_terms, q);
  const std::int64_t lk = ceil_log2(n_terms);
  return 4 * n_terms + 8 * mu + 8 * (q - 1) * (mu + lk) + 8 * ceil_div(n_terms, q) +
         28 * lk - 8;
}

std::int64_t block_encoding_cost(std::int64_t n_terms, int mu, std::int64_t q) {
  check_q(n_terms, q);
  const std::int64_t lk = ceil_log2(n_terms);
  return 4 * n_terms + 8 * mu + 8 * (q - 1) * (mu + lk) + 8 * ceil_div(n_terms, q) +
         24 * lk - 4;
}

ChebyshevDegree qeve_degree(double alpha_eff, double eps_qeve) {
  if (!(alpha_eff > 0.0) || !(eps_qeve > 0.0))
    throw ValidationError("qeve_degree requires positive alpha and epsilon");
  const std::int64_t n = next_pow2_at_least(10.0 * std::numbers::pi * alpha_eff / eps_qeve);
  return {n, ceil_log2(n)};
}

double qeve_walk_calls(double n_degrees, double kappa_s, double repetition_factor) {
  if (!(repetition_factor >= 1.0)) throw ValidationError("repetition_factor must be >= 1");
  return 18440.0 * kSqrt3 * n_degrees * kappa_s * repetition_factor;
}

std::int64_t walk_cost_qeve(std::int64_t n_terms, int mu, std::int64_t q, int n_ancilla) {
  return block_encoding_cost(n_terms, mu, q) +
         6 * static_cast<std::int64_t>(n_ancilla) * (n_ancilla - 1) +
         4 * (ceil_log2(n_terms) + 1);
}

std::int64_t qroam_ancillas(std::int64_t n_terms, int mu, std::int64_t q) {
  check_q(n_terms, q);
  if (q == 1) return 0;
  return (mu + ceil_log2(n_terms)) * (q - 1) + ceil_log2(ceil_div(n_terms, q));
}

namespace {

template <typename CostFn>
std::int64_t argmin_q(std::int64_t n_terms, CostFn cost) {
  std::int64_t best_q = 1;
  std::int64_t best_cost = cost(1);
  for (std::int64_t q = 2; q < n_terms; q *= 2) {
    const std::int64_t c = cost(q);
    if (c < best_cost) {
      best_cost = c;
      best_q = q;
    }
  }
  return best_q;
}

}  // namespace

std::int64_t optimize_qroam(std::int64_t n_terms, int mu) {
  return argmin_q(n_terms,
                  [&](std::int64_t q) { return walk_cost_qubitization(n_terms, mu, q); });
}

std::int64_t optimize_qroam_qeve(std::int64_t n_terms, int mu, int n_ancilla) {
  return argmin_q(n_terms,
                  [&](std::int64_t q) { return walk_cost_qeve(n_terms, mu, q, n_ancilla); });
}

std::int64_t qubit_count_qubitization(std::int64_t n_terms, int mu, std::int64_t q, int n_a,
                                      int n_system) {
  const std::int64_t lk = ceil_log2(n_terms);
  return n_system + 2 * lk + 2 * static_cast<std::int64_t>(mu) + n_a +
         qroam_ancillas(n_terms, mu, q);
}

std::int64_t qubit_count_qeve(std::int64_t n_terms, int mu_register, std::int64_t q,
                              int n_ancilla, int n_system) {
  const std::int64_t lk = ceil_log2(n_terms);
  return n_system + 2 * lk + 2 * static_cast<std::int64_t>(mu_register) + n_ancilla +
         qroam_ancillas(n_terms, mu_register, q);
}

namespace {

/// Shared tail of both entry points once alpha, K, kappa and n_system are known.
CostReport assemble(const std::string& label, double alpha, std::int64_t n_terms_raw,
                    std::int64_t n_terms, std::optional<double> kappa_s, int n_system,
                    const BudgetConfig& config, Method method, double alpha_eff) {
  config.validate();
  if (n_terms < 1)
    throw ValidationError("cannot cost an empty LCU (no terms survive truncation)");
  const double eps = config.epsilon_total;
  const double eps_phase = config.split * eps;
  // The keep-register budget is the rest of the total; at split = 1/2 this is
  // the textbook ceil(log2(2 alpha K / eps)).
  const double eps_equiv = 2.0 * (1.0 - config.split) * eps;

  CostReport report;
  report.method = method;
  report.label = label;
  report.alpha = alpha;
  report.n_terms_raw = n_terms_raw;
  report.n_terms = n_terms;
  report.n_system = n_system;
  report.epsilon_total = eps;
  report.repetition_factor = method == Method::Qeve ? config.repetition_factor : 1.0;

  if (method == Method::Qeve) {
    if (!kappa_s) throw ConfigError("QEVE costing needs kappa_S (report or --kappa-s)");
    report.kappa_s = *kappa_s;
    report.alpha_eff = alpha_eff;
    report.mu = mu_qeve(alpha, n_terms_raw, *kappa_s, eps_equiv);
    report.mu_register = mu_qubitization(alpha, n_terms_raw, eps_equiv);
    const ChebyshevDegree degree = qeve_degree(alpha_eff, eps_phase);
    report.n_degrees = degree.n_degrees;
    report.n_ancilla = degree.n_ancilla;
  } else {
    report.alpha_eff = alpha;
    report.mu = mu_qubitization(alpha, n_terms_raw, eps_equiv);
    report.mu_register = report.mu;
    report.n_ancilla =
        ceil_log2(2.0 * std::numbers::pi * alpha / eps_phase) + qpe_extra_qubits(config.p_fail);
  }

  const auto walk_cost = [&](std::int64_t q) {
    return method == Method::Qeve ? walk_cost_qeve(n_terms, report.mu, q, report.n_ancilla)
                                  : walk_cost_qubitization(n_terms, report.mu, q);
  };

  switch (config.qroam_mode) {
    case QroamMode::Qrom:
      report.q = 1;
      break;
    case QroamMode::FixedQ:
      if (config.fixed_q != 1 && config.fixed_q >= n_terms)
        throw ConfigError("fixed q must satisfy 1 <= q < K");
      report.q = config.fixed_q;
      break;
    case QroamMode::OptimizeGates:
      report.q = method == Method::Qeve
                     ? optimize_qroam_qeve(n_terms, report.mu, report.n_ancilla)
                     : optimize_qroam(n_terms, report.mu);
      break;
    case QroamMode::OptimizeQubits: {
      // Qubit count grows with q, so pick the smallest q meeting the ceiling.
      std::int64_t q = 1;
      if (method == Method::Qeve) {
        const double calls =
            qeve_walk_calls(static_cast<double>(report.n_degrees), *kappa_s,
                            config.repetition_factor);
        while (q < n_terms &&
               static_cast<double>(walk_cost(q)) * calls > *config.t_budget)
          q *= 2;
      } else {
        const std::int64_t calls = walk_calls_qpe(alpha, eps_phase, config.p_fail);
        while (q < n_terms &&
               static_cast<double>(walk_cost(q)) * static_cast<double>(calls) >
                   *config.t_budget)
          q *= 2;
      }
      if (q >= n_terms && n_terms > 1)
        throw ConfigError("no QROAM setting meets the requested T-count ceiling");
      report.q = q;
      break;
    }
  }

  report.t_per_call = walk_cost(report.q);
  if (method == Method::Qeve) {
    report.walk_calls = qeve_walk_calls(static_cast<double>(report.n_degrees),
                                        *kappa_s, config.repetition_factor);
    report.t_total = report.walk_calls * static_cast<double>(report.t_per_call);
    report.logical_qubits =
        qubit_count_qeve(n_terms, report.mu_register, report.q, report.n_ancilla, n_system);
  } else {
    const std::int64_t calls = walk_calls_qpe(alpha, eps_phase, config.p_fail);
    report.walk_calls = static_cast<double>(calls);
    report.t_total = static_cast<double>(calls) * static_cast<double>(report.t_per_call);
    report.logical_qubits =
        qubit_count_qubitization(n_terms, report.mu, report.q, report.n_ancilla, n_system);
  }
  return report;
}

}  // namespace

CostReport estimate_from_parameters(const HamiltonianParameters& params,
                                    const BudgetConfig& config, Method method,
                                    std::optional<double> alpha_eff_override) {
  if (!(params.alpha > 0.0) || params.n_terms < 1)
    throw ValidationError("parameters need positive alpha and K");
  double alpha_eff = params.alpha;
  if (method == Method::Qeve) alpha_eff = alpha_eff_override.value_or(params.alpha);
  if (alpha_eff < params.alpha)
    throw ValidationError("alpha_eff cannot be smaller than alpha");
  return assemble(params.label, params.alpha, params.n_terms, params.n_terms, params.kappa_s,
                  params.n_system, config, method, alpha_eff);
}

CostReport estimate(const PauliLCU& lcu, const std::optional<SpectralReport>& report,
                    const BudgetConfig& config, Method method,
                    std::optional<double> alpha_eff_override,
                    std::optional<double> kappa_s_override) {
  config.validate();
  const double alpha = lcu.alpha;
  const std::int64_t n_terms_raw = static_cast<std::int64_t>(lcu.terms.size());
  if (n_terms_raw < 1 || !(alpha > 0.0))
    throw ValidationError("cannot cost an empty LCU");

  std::optional<double> kappa;
  if (method == Method::Qeve) {
    if (kappa_s_override)
      kappa = *kappa_s_override;
    else if (report)
      kappa = report->kappa_s;
    else
      throw ConfigError(
          "QEVE costing needs kappa_S: run a dense analysis or pass --kappa-s");
  }

  double alpha_eff = alpha;
  if (method == Method::Qeve) {
    if (alpha_eff_override)
      alpha_eff = *alpha_eff_override;
    else if (report)
      alpha_eff = effective_alpha(lcu, *report);
    else
      alpha_eff = effective_alpha(lcu, std::optional<double>{});
    if (alpha_eff < alpha) throw ValidationError("alpha_eff cannot be smaller than alpha");
  }

  const double eps_equiv = 2.0 * (1.0 - config.split) * config.epsilon_total;
  const int mu = method == Method::Qeve ? mu_qeve(alpha, n_terms_raw, *kappa, eps_equiv)
                                        : mu_qubitization(alpha, n_terms_raw, eps_equiv);
  const TruncationResult trunc = truncate(lcu, mu);
  const std::int64_t n_terms = static_cast<std::int64_t>(trunc.lcu.terms.size());

  return assemble(lcu.n_qubits ? "lcu" : "", alpha, n_terms_raw, n_terms, kappa,
                  lcu.n_qubits, config, method, alpha_eff);
}

}  // namespace tcqeve
