// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: Hamiltonian inspection, Jordan-Wigner mapping,
// dense diagonalization, resource estimation, desk-scale QEVE simulation,
// and reproduction of the literature resource tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "tcqeve/cost_model.hpp"
#include "tcqeve/errors.hpp"
#include "tcqeve/integrals.hpp"
#include "tcqeve/pauli.hpp"
#include "tcqeve/qeve.hpp"
#include "tcqeve/reference_data.hpp"
#include "tcqeve/spectral.hpp"

using json = nlohmann::json;
using namespace tcqeve;

namespace {

struct CommonOptions {
  std::string input;
  std::string input_format = "fcidump-tc";
  std::string output_format = "text";
  std::string out_path;
  std::optional<int> sector;
  std::optional<int> max_qubits;
};

HamiltonianFormat parse_format(const std::string& name) {
  if (name == "fcidump") return HamiltonianFormat::Fcidump;
  if (name == "fcidump-tc") return HamiltonianFormat::FcidumpTc;
  throw ConfigError("unknown input format '" + name + "'");
}

DenseOptions dense_options(const CommonOptions& common) {
  DenseOptions options;
  if (const char* env = std::getenv("TCQEVE_MAX_QUBITS")) {
    const int cap = std::atoi(env);
    if (cap > 0) {
      options.max_qubits_full = cap;
      options.max_qubits_sector = cap;
    }
  }
  if (common.max_qubits) {
    options.max_qubits_full = *common.max_qubits;
    options.max_qubits_sector = *common.max_qubits;
  }
  return options;
}

void emit(const CommonOptions& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.out_path);
  if (!out) throw std::runtime_error("cannot open '" + common.out_path + "' for writing");
  out << text;
}

json cost_report_json(const CostReport& r) {
  json j;
  j["method"] = r.method == Method::Qeve ? "qeve" : "qubitization";
  if (!r.label.empty()) j["label"] = r.label;
  j["alpha"] = r.alpha;
  j["alpha_eff"] = r.alpha_eff;
  j["kappa_s"] = r.kappa_s;
  j["n_terms"] = r.n_terms;
  j["n_terms_raw"] = r.n_terms_raw;
  j["mu"] = r.mu;
  j["mu_register"] = r.mu_register;
  j["q"] = r.q;
  j["n_ancilla"] = r.n_ancilla;
  if (r.method == Method::Qeve) j["n_degrees"] = r.n_degrees;
  j["n_system"] = r.n_system;
  j["walk_calls"] = r.walk_calls;
  j["t_per_call"] = r.t_per_call;
  j["t_total"] = r.t_total;
  j["logical_qubits"] = r.logical_qubits;
  j["repetition_factor"] = r.repetition_factor;
  j["epsilon_total"] = r.epsilon_total;
  return j;
}

json spectral_report_json(const SpectralReport& r) {
  json eigenvalues = json::array();
  for (const auto& ev : r.eigenvalues) eigenvalues.push_back({ev.real(), ev.imag()});
  return json{{"eigenvalues", eigenvalues},
              {"ground_energy", r.ground_energy},
              {"kappa_s", r.kappa_s},
              {"max_imag", r.max_imag},
              {"spectral_norm", r.spectral_norm},
              {"shifted_norm", r.shifted_norm},
              {"diagonalizable", r.diagonalizable},
              {"dimension", r.dimension}};
}

SpinOrbitalHamiltonian load_input(const CommonOptions& common) {
  if (common.input.empty()) throw ConfigError("an input file is required");
  return load_hamiltonian(common.input, parse_format(common.input_format));
}

// ---------------------------------------------------------------------------
// inspect

int cmd_inspect(const CommonOptions& common) {
  const auto ham = load_input(common);
  auto count_nonzero = [](const std::vector<double>& t) {
    std::size_t n = 0;
    for (double x : t)
      if (x != 0.0) ++n;
    return n;
  };
  if (common.output_format == "json") {
    json j{{"n_spatial", ham.n_spatial},
           {"n_spin_orbitals", 2 * ham.n_spatial},
           {"core_energy", ham.core_energy},
           {"hermitian", ham.is_hermitian()},
           {"nnz_h", count_nonzero(ham.h)},
           {"nnz_v", count_nonzero(ham.v)},
           {"nnz_k", count_nonzero(ham.k)},
           {"nnz_g", count_nonzero(ham.g)},
           {"source", ham.source_label}};
    emit(common, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "source:          " << ham.source_label << "\n"
        << "spatial orbitals " << ham.n_spatial << " (spin orbitals " << 2 * ham.n_spatial
        << ")\n"
        << "core energy      " << ham.core_energy << " Ha\n"
        << "kind             " << (ham.is_hermitian() ? "hermitian" : "transcorrelated")
        << "\n"
        << "nonzeros         h=" << count_nonzero(ham.h) << " v=" << count_nonzero(ham.v)
        << " k=" << count_nonzero(ham.k) << " g=" << count_nonzero(ham.g) << "\n";
    emit(common, out.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// map

int cmd_map(const CommonOptions& common, const std::string& dump_path, int qubit_cap) {
  const auto ham = load_input(common);
  const PauliLCU lcu = jordan_wigner(ham, qubit_cap);
  const RealityReport reality = classify_reality(lcu);
  std::size_t n_real = 0, n_imag = 0, n_bad = 0;
  for (auto tag : reality.tags) {
    if (tag == TermReality::Real) ++n_real;
    else if (tag == TermReality::Imaginary) ++n_imag;
    else ++n_bad;
  }
  std::string verdict = reality.consistent
                            ? (n_imag == 0 ? "consistent, all-real" : "consistent")
                            : "inconsistent";
  if (common.output_format == "json") {
    json j{{"n_qubits", lcu.n_qubits},
           {"n_terms", lcu.terms.size()},
           {"alpha", lcu.alpha},
           {"b0", {lcu.b0.real(), lcu.b0.imag()}},
           {"reality", verdict},
           {"real_terms", n_real},
           {"imaginary_terms", n_imag},
           {"violations", n_bad}};
    emit(common, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "n_qubits " << lcu.n_qubits << "\n"
        << "K        " << lcu.terms.size() << "\n"
        << "alpha    " << lcu.alpha << " Ha\n"
        << "b0       " << lcu.b0.real() << (lcu.b0.imag() < 0 ? " - " : " + ")
        << std::abs(lcu.b0.imag()) << "i Ha\n"
        << "reality  " << verdict << " (" << n_real << " real, " << n_imag
        << " imaginary)\n";
    emit(common, out.str());
  }
  if (!dump_path.empty()) write_lcu(lcu, dump_path);
  return 0;
}

// ---------------------------------------------------------------------------
// diagonalize

int cmd_diagonalize(const CommonOptions& common, int qubit_cap) {
  const auto ham = load_input(common);
  const PauliLCU lcu = jordan_wigner(ham, qubit_cap);
  const SpectralReport report = analyze(lcu, common.sector, dense_options(common));
  if (!report.diagonalizable)
    std::cerr << "warning: eigenvector matrix condition " << report.kappa_s
              << " exceeds 1e12; treating as numerically non-diagonalizable\n";
  json j = spectral_report_json(report);
  if (common.sector) j["sector"] = *common.sector;
  emit(common, j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateOptions {
  std::string method = "qubitization";
  BudgetConfig budget;
  std::string qroam = "qrom";
  std::optional<double> kappa_s;
  std::optional<double> alpha_eff;
  std::optional<double> t_budget;
  // direct-parameter mode
  std::optional<double> alpha;
  std::optional<std::int64_t> n_terms;
  int n_system = 0;
  std::string label;
  bool dense = false;
};

QroamMode parse_qroam(const std::string& text, std::int64_t& fixed_q) {
  if (text == "qrom") return QroamMode::Qrom;
  if (text == "optimize-gates") return QroamMode::OptimizeGates;
  if (text == "optimize-qubits") return QroamMode::OptimizeQubits;
  if (text.rfind("q=", 0) == 0) {
    fixed_q = std::stoll(text.substr(2));
    return QroamMode::FixedQ;
  }
  throw ConfigError("unknown --qroam value '" + text + "'");
}

int cmd_estimate(const CommonOptions& common, EstimateOptions& options, int qubit_cap) {
  options.budget.qroam_mode = parse_qroam(options.qroam, options.budget.fixed_q);
  options.budget.t_budget = options.t_budget;
  options.budget.validate();
  const Method method = options.method == "qeve" ? Method::Qeve : Method::Qubitization;
  if (options.method != "qeve" && options.method != "qubitization")
    throw ConfigError("unknown --method '" + options.method + "'");

  CostReport report;
  if (!common.input.empty()) {
    const auto ham = load_input(common);
    const PauliLCU lcu = jordan_wigner(ham, qubit_cap);
    std::optional<SpectralReport> spectral;
    if (options.dense || (method == Method::Qeve && !options.kappa_s)) {
      try {
        spectral = analyze(lcu, common.sector, dense_options(common));
      } catch (const CapacityError& e) {
        if (method == Method::Qeve && !options.kappa_s)
          throw ConfigError(std::string("dense analysis is out of reach (") + e.what() +
                            "); pass --kappa-s (and usually --alpha-eff) explicitly");
      }
    }
    report = estimate(lcu, spectral, options.budget, method, options.alpha_eff,
                      options.kappa_s);
    report.label = options.label.empty() ? ham.source_label : options.label;
  } else {
    if (!options.alpha || !options.n_terms)
      throw ConfigError("estimate needs an input file or --alpha and --terms");
    HamiltonianParameters params{options.label, *options.alpha, *options.n_terms,
                                 options.kappa_s, options.n_system};
    report = estimate_from_parameters(params, options.budget, method, options.alpha_eff);
  }

  if (common.output_format == "json") {
    emit(common, cost_report_json(report).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out.precision(4);
    out << (method == Method::Qeve ? "QEVE" : "qubitization") << " estimate";
    if (!report.label.empty()) out << " for " << report.label;
    out << "\n"
        << "  alpha        " << report.alpha << " Ha (alpha_eff " << report.alpha_eff
        << ")\n"
        << "  K            " << report.n_terms << " (raw " << report.n_terms_raw << ")\n"
        << "  mu           " << report.mu << "  q " << report.q << "\n";
    if (method == Method::Qeve)
      out << "  N            " << report.n_degrees << " (n = " << report.n_ancilla
          << ", kappa_S " << report.kappa_s << ")\n";
    else
      out << "  n_a          " << report.n_ancilla << "\n";
    out << "  walk calls   " << report.walk_calls << "\n"
        << "  T per call   " << report.t_per_call << "\n"
        << "  T total      " << report.t_total << "\n"
        << "  qubits       " << report.logical_qubits << "\n";
    emit(common, out.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate-qeve

struct SimulateOptions {
  int dim = 4;
  std::uint64_t seed = 0;
  double epsilon = 0.0;  // 0 -> default 0.05 * alpha_eff
  int max_degree = 4096;
  double overlap = 0.93;
  int max_joint_dim = 4096;
};

json run_qeve_simulation(const Eigen::MatrixXcd& h_scaled, const Eigen::VectorXcd& psi0,
                         double alpha_eff, double kappa_s, double true_energy_scaled,
                         double epsilon, const SimulateOptions& options) {
  const ChebyshevDegree degree = qeve_degree(alpha_eff, epsilon);
  if (degree.n_degrees > options.max_degree)
    throw CapacityError("required Chebyshev degree N = " + std::to_string(degree.n_degrees) +
                        " exceeds the cap " + std::to_string(options.max_degree) +
                        "; raise --epsilon or --max-degree");
  const int n_degrees = static_cast<int>(degree.n_degrees);
  const int d = static_cast<int>(h_scaled.rows());

  HistoryState state;
  bool inverse_verified = false;
  if (static_cast<std::int64_t>(n_degrees) * d <= options.max_joint_dim) {
    QeveOptions qeve_options;
    qeve_options.max_joint_dim = options.max_joint_dim;
    const ChebyshevSystem system = build_system(h_scaled, n_degrees, qeve_options);
    state = history_state_via_inverse(system, psi0, alpha_eff);
    const HistoryState direct = history_state_direct(h_scaled, psi0, n_degrees, alpha_eff);
    const double rel = (state.amplitudes - direct.amplitudes).norm() /
                       std::max(direct.amplitudes.norm(), 1e-300);
    if (rel > 1e-8)
      throw NumericalError("generating-function route disagrees with the recursion (" +
                           std::to_string(rel) + ")");
    inverse_verified = true;
  } else {
    state = history_state_direct(h_scaled, psi0, n_degrees, alpha_eff);
  }

  const AngleDistribution distribution = measure_distribution(state);
  const double true_angle = std::acos(true_energy_scaled / alpha_eff) /
                            (2.0 * std::numbers::pi);
  double mass = 0.0;
  for (int y = 0; y < static_cast<int>(distribution.probability.size()); ++y)
    if (std::abs(distribution.angle_fraction(y) - true_angle) <= 5.0 / n_degrees + 1e-15)
      mass += distribution.probability[y];

  return json{{"N", n_degrees},
              {"alpha_eff", alpha_eff},
              {"kappa_S", kappa_s},
              {"estimated_energy", state.estimated_energy},
              {"true_energy", true_energy_scaled},
              {"angle_error", std::abs(state.estimated_angle - true_angle)},
              {"energy_error", std::abs(state.estimated_energy - true_energy_scaled)},
              {"mass_within_5_over_N", mass},
              {"inverse_verified", inverse_verified}};
}

int cmd_simulate(const CommonOptions& common, const SimulateOptions& options, int qubit_cap) {
  json result;
  if (!common.input.empty()) {
    const auto ham = load_input(common);
    const PauliLCU lcu = jordan_wigner(ham, qubit_cap);
    const Eigen::MatrixXcd m = dense_matrix(lcu, common.sector, dense_options(common));
    const SpectralReport report = analyze_dense(m, lcu.b0.real());
    if (!report.has_real_eigenvalue)
      throw NumericalError("no real spectrum: this realization has no usable ground state");
    const double alpha_eff = effective_alpha(lcu, report);
    const Eigen::MatrixXcd h_scaled =
        (m - lcu.b0 * Eigen::MatrixXcd::Identity(m.rows(), m.cols())) / alpha_eff;

    // Hartree-Fock-like start: the computational basis state with the largest
    // ground-eigenvector component.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
    Eigen::Index ground_index = 0;
    for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i).real() < es.eigenvalues()(ground_index).real())
        ground_index = i;
    Eigen::Index best_basis = 0;
    es.eigenvectors().col(ground_index).cwiseAbs().maxCoeff(&best_basis);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(m.rows());
    psi0(best_basis) = 1.0;

    const double epsilon = options.epsilon > 0 ? options.epsilon : 0.05 * alpha_eff;
    const double ground_shifted = report.ground_energy - lcu.b0.real();
    result = run_qeve_simulation(h_scaled, psi0, alpha_eff, report.kappa_s, ground_shifted,
                                 epsilon, options);
    result["b0"] = lcu.b0.real();
    result["estimated_total_energy"] =
        result["estimated_energy"].get<double>() + lcu.b0.real();
    result["true_total_energy"] = report.ground_energy;
  } else {
    // Synthetic diagonalizable test matrix with a real, separated spectrum.
    std::mt19937_64 rng(options.seed);
    const int d = options.dim;
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Eigen::MatrixXd raw(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) raw(i, j) = gauss(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
    Eigen::MatrixXd q_factor = qr.householderQ();
    Eigen::VectorXd lambdas(d);
    lambdas(0) = -0.45 + 0.05 * uni(rng);
    for (int i = 1; i < d; ++i) lambdas(i) = -0.30 + 0.75 * uni(rng);
    Eigen::MatrixXd h = q_factor * lambdas.asDiagonal() * q_factor.transpose();
    Eigen::VectorXcd psi0(d);
    {
      Eigen::VectorXcd noise(d);
      for (int i = 0; i < d; ++i) noise(i) = Complex{gauss(rng), gauss(rng)};
      Eigen::VectorXcd ground = q_factor.col(0).cast<Complex>();
      noise -= ground.dot(noise) * ground;
      if (noise.norm() > 0) noise.normalize();
      const double w = std::sqrt(options.overlap);
      psi0 = w * ground + std::sqrt(1.0 - w * w) * noise;
      psi0.normalize();
    }
    const double epsilon = options.epsilon > 0 ? options.epsilon : 0.05;
    result = run_qeve_simulation(h.cast<Complex>(), psi0, 1.0, 1.0, lambdas(0), epsilon,
                                 options);
    result["seed"] = options.seed;
    result["dim"] = d;
  }
  emit(common, result.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce-tables

struct ManifestRow {
  std::string label;
  double alpha = 0.0;
  std::int64_t n_terms = 0;
  std::optional<double> kappa_s;
  int n_system = 0;
  std::string path;
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
      field.erase(field.begin());
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                              field.back() == '\r'))
      field.pop_back();
    fields.push_back(field);
  }
  return fields;
}

struct TableOutcome {
  std::string label;
  std::string mode;
  double computed_t = 0.0;
  std::optional<double> published_t;
  std::int64_t computed_qubits = 0;
  std::optional<std::int64_t> published_qubits;
};

int cmd_reproduce(const CommonOptions& common, const std::string& manifest_path,
                  const std::string& out_dir, BudgetConfig budget, double repetition,
                  std::optional<double> alpha_eff_scale) {
  budget.repetition_factor = repetition;
  budget.validate();
  std::ifstream in(manifest_path);
  if (!in) throw ConfigError("cannot open manifest '" + manifest_path + "'");
  std::filesystem::create_directories(out_dir);

  std::vector<ManifestRow> rows;
  std::vector<std::string> flagged;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (!fields.empty() && fields[0] == "label") continue;  // header
    try {
      if (fields.size() < 5) throw ParseError("expected at least 5 columns", line_no);
      ManifestRow row;
      row.label = fields[0];
      if (row.label.empty()) throw ParseError("empty label", line_no);
      row.alpha = std::stod(fields[1]);
      row.n_terms = std::stoll(fields[2]);
      if (!fields[3].empty()) row.kappa_s = std::stod(fields[3]);
      row.n_system = std::stoi(fields[4]);
      if (fields.size() > 5) row.path = fields[5];
      if (!(row.alpha > 0.0) || row.n_terms < 1)
        throw ValidationError("row needs positive alpha and K (line " +
                              std::to_string(line_no) + ")");
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      flagged.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  std::vector<TableOutcome> outcomes;
  for (const auto& row : rows) {
    try {
      HamiltonianParameters params{row.label, row.alpha, row.n_terms, row.kappa_s,
                                   row.n_system};
      if (!row.path.empty()) {
        const auto ham = load_hamiltonian(row.path, parse_format(common.input_format));
        const PauliLCU lcu = jordan_wigner(ham);
        params.alpha = lcu.alpha;
        params.n_terms = static_cast<std::int64_t>(lcu.terms.size());
        params.n_system = lcu.n_qubits;
      }
      const bool is_tc = row.label.find("TC") != std::string::npos && row.kappa_s;
      const Method method = is_tc ? Method::Qeve : Method::Qubitization;
      std::optional<double> alpha_eff;
      if (is_tc && alpha_eff_scale) alpha_eff = *alpha_eff_scale * params.alpha;
      const auto reference = reference::find_reference(row.label);

      for (const std::string mode : {"QROM", "QROAM"}) {
        BudgetConfig cfg = budget;
        cfg.qroam_mode = mode == "QROM" ? QroamMode::Qrom : QroamMode::OptimizeGates;
        const CostReport report = estimate_from_parameters(params, cfg, method, alpha_eff);
        TableOutcome outcome;
        outcome.label = row.label;
        outcome.mode = mode;
        outcome.computed_t = report.t_total;
        outcome.computed_qubits = report.logical_qubits;
        if (reference) {
          const auto& basis = *reference->row;
          const int i = reference->atom_index;
          outcome.published_t = mode == "QROM" ? basis.t_qrom[i] : basis.t_qroam[i];
          outcome.published_qubits =
              mode == "QROM" ? basis.qubits_qrom[i] : basis.qubits_qroam[i];
        }
        outcomes.push_back(std::move(outcome));
      }
    } catch (const std::exception& e) {
      flagged.push_back(row.label + ": " + e.what());
    }
  }

  {
    std::ofstream t_csv(std::filesystem::path(out_dir) / "t_counts.csv");
    t_csv << "label,mode,computed_t,published_t,rel_dev\n";
    for (const auto& o : outcomes) {
      t_csv << o.label << ',' << o.mode << ',';
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6e", o.computed_t);
      t_csv << buf;
      if (o.published_t) {
        std::snprintf(buf, sizeof(buf), "%.2e", *o.published_t);
        t_csv << ',' << buf;
        std::snprintf(buf, sizeof(buf), "%.4f", o.computed_t / *o.published_t - 1.0);
        t_csv << ',' << buf << '\n';
      } else {
        t_csv << ",,\n";
      }
    }
    std::ofstream q_csv(std::filesystem::path(out_dir) / "qubit_counts.csv");
    q_csv << "label,mode,computed_qubits,published_qubits,rel_dev\n";
    for (const auto& o : outcomes) {
      q_csv << o.label << ',' << o.mode << ',' << o.computed_qubits;
      if (o.published_qubits) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f",
                      static_cast<double>(o.computed_qubits) / *o.published_qubits - 1.0);
        q_csv << ',' << *o.published_qubits << ',' << buf << '\n';
      } else {
        q_csv << ",,\n";
      }
    }
  }

  std::ostringstream summary;
  summary << "processed " << outcomes.size() << " table entries from " << rows.size()
          << " manifest rows -> " << out_dir << "\n";
  int compared = 0, within_2sf = 0;
  for (const auto& o : outcomes)
    if (o.published_t) {
      ++compared;
      const double unit = std::pow(10.0, std::floor(std::log10(*o.published_t)) - 1.0);
      if (std::abs(o.computed_t - *o.published_t) <= unit * (1.0 + 1e-9)) ++within_2sf;
    }
  if (compared > 0)
    summary << within_2sf << "/" << compared
            << " T counts within one unit of the second significant figure\n";
  for (const auto& f : flagged) summary << "SKIPPED " << f << "\n";
  emit(common, summary.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transcorrelated-Hamiltonian resource estimation and QEVE desk simulation"};
  app.require_subcommand(1);

  CommonOptions common;
  int qubit_cap = kDefaultJwQubitCap;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("input", common.input, "Hamiltonian file")->required(false);
    cmd->add_option("--input-format", common.input_format,
                    "fcidump | fcidump-tc (default fcidump-tc)");
    cmd->add_option("--format", common.output_format, "text | json");
    cmd->add_option("--out", common.out_path, "write output to a file instead of stdout");
    cmd->add_option("--sector", common.sector, "restrict to an electron-count sector");
    cmd->add_option("--max-qubits", common.max_qubits,
                    "dense-realization qubit cap (env TCQEVE_MAX_QUBITS)");
  };

  auto* inspect = app.add_subcommand("inspect", "summarize an integral file");
  add_common(inspect, true);

  std::string dump_path;
  auto* map = app.add_subcommand("map", "Jordan-Wigner map to a Pauli LCU");
  add_common(map, true);
  map->add_option("--dump-lcu", dump_path, "write the LCU term list to a file");
  map->add_option("--qubit-cap", qubit_cap, "Jordan-Wigner qubit cap (default 63)");

  auto* diagonalize = app.add_subcommand("diagonalize", "dense spectral analysis");
  add_common(diagonalize, true);

  EstimateOptions est;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "fault-tolerant T-gate and qubit estimate");
  add_common(estimate_cmd, true);
  estimate_cmd->add_option("--method", est.method, "qubitization | qeve");
  estimate_cmd->add_option("--epsilon", est.budget.epsilon_total,
                           "total error budget in Hartree (default 0.0016)");
  estimate_cmd->add_option("--split", est.budget.split, "phase share of the budget");
  estimate_cmd->add_option("--p-fail", est.budget.p_fail, "QPE failure bound (< 1/2)");
  estimate_cmd->add_option("--repetition-factor", est.budget.repetition_factor,
                           "multiplier on QEVE walk calls (default 2)");
  estimate_cmd->add_option("--qroam", est.qroam,
                           "qrom | optimize-gates | optimize-qubits | q=<2^k>");
  estimate_cmd->add_option("--t-budget", est.t_budget,
                           "T-count ceiling for --qroam optimize-qubits");
  estimate_cmd->add_option("--kappa-s", est.kappa_s, "Jordan condition number for QEVE");
  estimate_cmd->add_option("--alpha-eff", est.alpha_eff,
                           "block-encoding normalization override");
  estimate_cmd->add_option("--alpha", est.alpha, "one-norm (parameter mode, no file)");
  estimate_cmd->add_option("--terms", est.n_terms, "term count K (parameter mode)");
  estimate_cmd->add_option("--n-system", est.n_system, "system qubits (parameter mode)");
  estimate_cmd->add_option("--label", est.label, "row label for the report");
  estimate_cmd->add_flag("--dense", est.dense, "force a dense analysis for kappa_S");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate-qeve", "desk-scale QEVE simulation");
  add_common(simulate, true);
  simulate->add_option("--dim", sim.dim, "synthetic matrix dimension (no input file)");
  simulate->add_option("--seed", sim.seed, "random seed for the synthetic mode");
  simulate->add_option("--epsilon", sim.epsilon,
                       "target accuracy in Hartree (default 0.05 * alpha_eff)");
  simulate->add_option("--max-degree", sim.max_degree, "cap on N (default 4096)");
  simulate->add_option("--overlap", sim.overlap, "ground overlap of the synthetic input");

  std::string manifest_path, out_dir = "tables";
  double repetition = 1.0;
  std::optional<double> alpha_eff_scale;
  BudgetConfig reproduce_budget;
  auto* reproduce =
      app.add_subcommand("reproduce-tables", "computed-vs-reference resource tables");
  add_common(reproduce, false);
  reproduce->add_option("--manifest", manifest_path, "CSV of (label, alpha, K, kappa_S, n_system, path)")
      ->required();
  reproduce->add_option("--out-dir", out_dir, "output directory (default ./tables)");
  reproduce->add_option("--epsilon", reproduce_budget.epsilon_total, "error budget");
  reproduce->add_option("--repetition-factor", repetition,
                        "QEVE repetition factor (default 1 to match the reference)");
  reproduce->add_option("--alpha-eff-scale", alpha_eff_scale,
                        "alpha_eff = scale * alpha for the TC rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inspect->parsed()) return cmd_inspect(common);
    if (map->parsed()) return cmd_map(common, dump_path, qubit_cap);
    if (diagonalize->parsed()) return cmd_diagonalize(common, qubit_cap);
    if (estimate_cmd->parsed()) return cmd_estimate(common, est, qubit_cap);
    if (simulate->parsed()) return cmd_simulate(common, sim, qubit_cap);
    if (reproduce->parsed())
      return cmd_reproduce(common, manifest_path, out_dir, reproduce_budget, repetition,
                           alpha_eff_scale);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
