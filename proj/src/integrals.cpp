// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/integrals.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "tcqeve/errors.hpp"

namespace tcqeve {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

double parse_double(const std::string& tok, long line) {
  char* end = nullptr;
  double value = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw ParseError("expected a number, got '" + tok + "'", line);
  return value;
}

long parse_index(const std::string& tok, long line) {
  char* end = nullptr;
  long value = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0')
    throw ParseError("expected an orbital index, got '" + tok + "'", line);
  return value;
}

int check_index_1based(long raw, int n, long line) {
  if (raw < 1 || raw > n)
    throw ValidationError("orbital index " + std::to_string(raw) + " out of range [1, " +
                          std::to_string(n) + "] (line " + std::to_string(line) + ")");
  return static_cast<int>(raw - 1);
}

void check_finite(double value, long line) {
  if (!std::isfinite(value))
    throw ValidationError("non-finite value (line " + std::to_string(line) + ")");
}

std::string format_value(double v) {
  std::array<char, 40> buf;
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

// The 8 index permutations a real two-electron tensor <pq|rs> is invariant
// under: p<->r, q<->s, and the simultaneous pair swap.
bool v_symmetry_ok(const SpinOrbitalHamiltonian& ham, double tol) {
  const int n = ham.n_spatial;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double ref = ham.v_at(p, q, r, s);
          const std::array<double, 3> others = {
              ham.v_at(r, q, p, s), ham.v_at(p, s, r, q), ham.v_at(q, p, s, r)};
          for (double o : others)
            if (std::abs(ref - o) > tol) return false;
        }
  return true;
}

}  // namespace

void validate(const SpinOrbitalHamiltonian& ham) {
  const std::size_t n = ham.n_spatial;
  if (ham.n_spatial <= 0) throw ValidationError("n_spatial must be positive");
  if (ham.h.size() != n * n) throw ValidationError("one-body tensor has wrong size");
  if (ham.v.size() != n * n * n * n) throw ValidationError("two-body tensor has wrong size");
  if (ham.has_k() && ham.k.size() != n * n * n * n)
    throw ValidationError("K tensor has wrong size");
  if (ham.has_g() && ham.g.size() != n * n * n * n * n * n)
    throw ValidationError("G tensor has wrong size");
  if (!std::isfinite(ham.core_energy)) throw ValidationError("non-finite core energy");
  for (const auto* t : {&ham.h, &ham.v, &ham.k, &ham.g})
    for (double x : *t)
      if (!std::isfinite(x)) throw ValidationError("non-finite tensor entry");

  if (ham.is_hermitian()) {
    for (int p = 0; p < ham.n_spatial; ++p)
      for (int q = 0; q < p; ++q)
        if (std::abs(ham.h_at(p, q) - ham.h_at(q, p)) > kHermitianSymmetryTol)
          throw ValidationError("one-body tensor is not symmetric within 1e-10");
    if (!v_symmetry_ok(ham, kHermitianSymmetryTol))
      throw ValidationError("two-body tensor lacks the real 8-fold symmetry within 1e-10");
  }
}

SpinOrbitalHamiltonian load_hamiltonian(const std::filesystem::path& path,
                                        HamiltonianFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  const bool tc_mode = format == HamiltonianFormat::FcidumpTc;

  SpinOrbitalHamiltonian ham;
  ham.source_label = path.filename().string();

  std::string line;
  long line_no = 0;
  bool header_seen = false;
  bool in_tc_section = false;
  std::unordered_set<std::size_t> seen_h, seen_v, seen_k, seen_g;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!header_seen) {
      if (tokens[0] != "&FCI") throw ParseError("expected '&FCI' header", line_no);
      std::optional<int> norb;
      std::optional<double> core;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string tok = tokens[i];
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw ParseError("malformed header token '" + tok + "'", line_no);
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "NORB")
          norb = static_cast<int>(parse_index(val, line_no));
        else if (key == "CORE")
          core = parse_double(val, line_no);
        else
          throw ParseError("unknown header key '" + key + "'", line_no);
      }
      if (!norb || *norb < 1) throw ParseError("header must declare NORB >= 1", line_no);
      ham.n_spatial = *norb;
      ham.core_energy = core.value_or(0.0);
      check_finite(ham.core_energy, line_no);
      const std::size_t n = ham.n_spatial;
      ham.h.assign(n * n, 0.0);
      ham.v.assign(n * n * n * n, 0.0);
      header_seen = true;
      continue;
    }

    if (tokens.size() == 1 && tokens[0] == "&TC") {
      if (!tc_mode) throw ParseError("&TC section is not allowed in fcidump format", line_no);
      if (in_tc_section) throw ParseError("duplicate &TC sentinel", line_no);
      in_tc_section = true;
      continue;
    }

    if (tokens.size() == 6 && tokens[5] == "K") {
      if (!tc_mode) throw ParseError("K record is not allowed in fcidump format", line_no);
      if (in_tc_section) throw ParseError("K record after the &TC sentinel", line_no);
      const double value = parse_double(tokens[0], line_no);
      check_finite(value, line_no);
      const int p = check_index_1based(parse_index(tokens[1], line_no), ham.n_spatial, line_no);
      const int q = check_index_1based(parse_index(tokens[2], line_no), ham.n_spatial, line_no);
      const int r = check_index_1based(parse_index(tokens[3], line_no), ham.n_spatial, line_no);
      const int s = check_index_1based(parse_index(tokens[4], line_no), ham.n_spatial, line_no);
      if (ham.k.empty()) ham.k.assign(ham.v.size(), 0.0);
      const std::size_t idx = ham.idx4(p, q, r, s);
      if (!seen_k.insert(idx).second)
        throw ValidationError("duplicate K record (line " + std::to_string(line_no) + ")");
      ham.k[idx] = value;
      continue;
    }

    if (in_tc_section) {
      if (tokens.size() != 7)
        throw ParseError("expected a 6-index record after &TC", line_no);
      const double value = parse_double(tokens[0], line_no);
      check_finite(value, line_no);
      int idx6[6];
      for (int i = 0; i < 6; ++i)
        idx6[i] =
            check_index_1based(parse_index(tokens[1 + i], line_no), ham.n_spatial, line_no);
      if (ham.g.empty()) {
        const std::size_t n = ham.n_spatial;
        ham.g.assign(n * n * n * n * n * n, 0.0);
      }
      const std::size_t idx = ham.idx6(idx6[0], idx6[1], idx6[2], idx6[3], idx6[4], idx6[5]);
      if (!seen_g.insert(idx).second)
        throw ValidationError("duplicate G record (line " + std::to_string(line_no) + ")");
      ham.g[idx] = value;
      continue;
    }

    if (tokens.size() != 5) throw ParseError("expected '<value> p q r s'", line_no);
    const double value = parse_double(tokens[0], line_no);
    check_finite(value, line_no);
    const long pr = parse_index(tokens[1], line_no), qr = parse_index(tokens[2], line_no);
    const long rr = parse_index(tokens[3], line_no), sr = parse_index(tokens[4], line_no);
    if (rr == 0 && sr == 0) {
      if (pr == 0 && qr == 0)
        throw ParseError("core energy belongs in the header (CORE=...)", line_no);
      const int p = check_index_1based(pr, ham.n_spatial, line_no);
      const int q = check_index_1based(qr, ham.n_spatial, line_no);
      const std::size_t idx = ham.idx2(p, q);
      if (!seen_h.insert(idx).second)
        throw ValidationError("duplicate one-body record (line " + std::to_string(line_no) +
                              ")");
      ham.h[idx] = value;
    } else {
      const int p = check_index_1based(pr, ham.n_spatial, line_no);
      const int q = check_index_1based(qr, ham.n_spatial, line_no);
      const int r = check_index_1based(rr, ham.n_spatial, line_no);
      const int s = check_index_1based(sr, ham.n_spatial, line_no);
      const std::size_t idx = ham.idx4(p, q, r, s);
      if (!seen_v.insert(idx).second)
        throw ValidationError("duplicate two-body record (line " + std::to_string(line_no) +
                              ")");
      ham.v[idx] = value;
    }
  }

  if (!header_seen) throw ParseError("missing '&FCI' header");
  validate(ham);
  return ham;
}

void save_hamiltonian(const SpinOrbitalHamiltonian& ham, const std::filesystem::path& path) {
  validate(ham);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing: " +
                                     std::strerror(errno));
  const int n = ham.n_spatial;
  out << "&FCI NORB=" << n << " CORE=" << format_value(ham.core_energy) << "\n";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (double x = ham.h_at(p, q); x != 0.0)
        out << format_value(x) << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (double x = ham.v_at(p, q, r, s); x != 0.0)
            out << format_value(x) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' '
                << s + 1 << "\n";
  if (ham.has_k())
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            if (double x = ham.k_at(p, q, r, s); x != 0.0)
              out << format_value(x) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' '
                  << s + 1 << " K\n";
  if (ham.has_g()) {
    bool any = false;
    for (double x : ham.g)
      if (x != 0.0) {
        any = true;
        break;
      }
    if (any) {
      out << "&TC\n";
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
              for (int u = 0; u < n; ++u)
                for (int w = 0; w < n; ++w)
                  if (double x = ham.g_at(p, q, r, s, u, w); x != 0.0)
                    out << format_value(x) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1
                        << ' ' << s + 1 << ' ' << u + 1 << ' ' << w + 1 << "\n";
    }
  }
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

bool equivalent(const SpinOrbitalHamiltonian& a, const SpinOrbitalHamiltonian& b) {
  if (a.n_spatial != b.n_spatial || a.core_energy != b.core_energy) return false;
  if (a.h != b.h || a.v != b.v) return false;
  auto tensors_equal = [](const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() == y.size()) return x == y;
    const auto& present = x.empty() ? y : x;
    for (double t : present)
      if (t != 0.0) return false;
    return true;
  };
  return tensors_equal(a.k, b.k) && tensors_equal(a.g, b.g);
}

}  // namespace tcqeve
