// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#include "tcqeve/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tcqeve/errors.hpp"

namespace tcqeve {
namespace {

constexpr std::array<Complex, 4> kPhaseTable = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                Complex{0, -1}};

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z)
    : n_(n_qubits), x_(x), z_(z) {
  if (n_qubits < 0 || n_qubits > kMaxQubits)
    throw ValidationError("qubit count out of range [0, 64]");
  if (n_qubits < kMaxQubits) {
    const std::uint64_t mask = (std::uint64_t{1} << n_qubits) - 1;
    if ((x & ~mask) || (z & ~mask))
      throw ValidationError("Pauli mask addresses a qubit beyond n_qubits");
  }
}

PauliString PauliString::parse(std::string_view word) {
  if (word.size() > kMaxQubits) throw ValidationError("Pauli word longer than 64 qubits");
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < word.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (word[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ValidationError(std::string("invalid Pauli letter '") + word[q] + "'");
    }
  }
  return PauliString(static_cast<int>(word.size()), x, z);
}

int PauliString::weight() const { return popcount(x_ | z_); }

int PauliString::y_count() const { return popcount(x_ & z_); }

char PauliString::letter(int qubit) const {
  const bool x = (x_ >> qubit) & 1, z = (z_ >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  std::string out(n_, 'I');
  for (int q = 0; q < n_; ++q) out[q] = letter(q);
  return out;
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw ValidationError("Pauli product requires equal qubit counts");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // W(x,z) = i^{|x&z|} X^x Z^z; commuting Z^z1 past X^x2 costs (-1)^{|z1&x2|}.
  int exponent = popcount(a.x_mask() & a.z_mask()) + popcount(b.x_mask() & b.z_mask()) +
                 2 * popcount(a.z_mask() & b.x_mask()) - popcount(x & z);
  exponent = ((exponent % 4) + 4) % 4;
  return {kPhaseTable[exponent], PauliString(a.n_qubits(), x, z)};
}

std::size_t PauliAccumulator::KeyHash::operator()(
    const std::pair<std::uint64_t, std::uint64_t>& k) const {
  std::uint64_t h = k.first * 0x9e3779b97f4a7c15ULL;
  h ^= k.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

void PauliAccumulator::add_xz(std::uint64_t x, std::uint64_t z, Complex c) {
  if (x == 0 && z == 0) {
    b0_ += c;
    return;
  }
  // Fold the X^x Z^z -> word conversion factor (-i)^{|x&z|} into the stored
  // word-basis coefficient.
  const int yc = popcount(x & z);
  slots_[{x, z}] += c * kPhaseTable[(4 - yc % 4) % 4];
}

void PauliAccumulator::add_word(const PauliString& word, Complex c) {
  if (word.is_identity()) {
    b0_ += c;
    return;
  }
  slots_[{word.x_mask(), word.z_mask()}] += c;
}

PauliLCU PauliAccumulator::build(double drop_tol) const {
  PauliLCU lcu;
  lcu.n_qubits = n_;
  lcu.b0 = b0_;
  lcu.terms.reserve(slots_.size());
  for (const auto& [key, coeff] : slots_) {
    if (std::abs(coeff) <= drop_tol) continue;
    lcu.terms.push_back({coeff, PauliString(n_, key.first, key.second)});
  }
  std::sort(lcu.terms.begin(), lcu.terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    if (a.string.x_mask() != b.string.x_mask()) return a.string.x_mask() < b.string.x_mask();
    return a.string.z_mask() < b.string.z_mask();
  });
  lcu.alpha = 0.0;
  for (const auto& term : lcu.terms) lcu.alpha += std::abs(term.coefficient);
  return lcu;
}

void accumulate_ladder_product(PauliAccumulator& acc, std::span<const LadderOp> ops,
                               double coeff) {
  if (coeff == 0.0) return;
  if (ops.size() > 8) throw ValidationError("ladder product too long");
  struct Component {
    std::uint64_t x, z;
    double sign;
  };
  // Expand prod_i (P(e_i, m_i) +- P(e_i, m_i ^ e_i)) / 2 left to right;
  // the buffers hold X^x Z^z coefficients (signs stay real).
  std::array<Component, 256> cur, next;
  cur[0] = {0, 0, 1.0};
  std::size_t count = 1;
  for (const LadderOp& op : ops) {
    const std::uint64_t e = std::uint64_t{1} << op.index;
    const std::uint64_t below = e - 1;
    const Component parts[2] = {{e, below, 1.0},
                                {e, below ^ e, op.dagger ? 1.0 : -1.0}};
    std::size_t out = 0;
    for (std::size_t i = 0; i < count; ++i)
      for (const Component& part : parts) {
        const double sign =
            (popcount(cur[i].z & part.x) & 1) ? -cur[i].sign * part.sign
                                              : cur[i].sign * part.sign;
        next[out++] = {cur[i].x ^ part.x, cur[i].z ^ part.z, sign};
      }
    std::swap(cur, next);
    count = out;
  }
  const double scale = coeff * std::ldexp(1.0, -static_cast<int>(ops.size()));
  for (std::size_t i = 0; i < count; ++i)
    acc.add_xz(cur[i].x, cur[i].z, Complex{scale * cur[i].sign, 0.0});
}

PauliLCU jordan_wigner(const SpinOrbitalHamiltonian& ham, int qubit_cap) {
  validate(ham);
  const int n = ham.n_spatial;
  const int n_qubits = 2 * n;
  if (qubit_cap > kMaxQubits) qubit_cap = kMaxQubits;
  if (n_qubits > qubit_cap)
    throw CapacityError("Jordan-Wigner needs " + std::to_string(n_qubits) +
                        " qubits, cap is " + std::to_string(qubit_cap));

  PauliAccumulator acc(n_qubits);
  acc.add_identity(Complex{ham.core_energy, 0.0});
  const auto so = [](int spatial, int sigma) { return 2 * spatial + sigma; };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double c = ham.h_at(p, q);
      if (c == 0.0) continue;
      for (int sigma = 0; sigma < 2; ++sigma) {
        const LadderOp ops[] = {{so(p, sigma), true}, {so(q, sigma), false}};
        accumulate_ladder_product(acc, ops, c);
      }
    }

  const bool has_k = ham.has_k();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double c = ham.v_at(p, q, r, s);
          if (has_k) c -= ham.k_at(p, q, r, s);
          if (c == 0.0) continue;
          for (int sigma = 0; sigma < 2; ++sigma)
            for (int tau = 0; tau < 2; ++tau) {
              const LadderOp ops[] = {{so(p, sigma), true},
                                      {so(q, tau), true},
                                      {so(s, tau), false},
                                      {so(r, sigma), false}};
              accumulate_ladder_product(acc, ops, c);
            }
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
                for (int sigma = 0; sigma < 2; ++sigma)
                  for (int tau = 0; tau < 2; ++tau)
                    for (int kap = 0; kap < 2; ++kap) {
                      const LadderOp ops[] = {{so(p, sigma), true},  {so(q, tau), true},
                                              {so(r, kap), true},    {so(w, kap), false},
                                              {so(u, tau), false},   {so(s, sigma), false}};
                      accumulate_ladder_product(acc, ops, c);
                    }
              }

  return acc.build();
}

RealityReport classify_reality(const PauliLCU& lcu) {
  RealityReport report;
  report.tags.reserve(lcu.terms.size());
  const double tol = 1e-10 * lcu.alpha;
  for (const auto& term : lcu.terms) {
    const bool even_y = term.string.y_count() % 2 == 0;
    TermReality tag;
    if (even_y && std::abs(term.coefficient.imag()) <= tol)
      tag = TermReality::Real;
    else if (!even_y && std::abs(term.coefficient.real()) <= tol)
      tag = TermReality::Imaginary;
    else
      tag = TermReality::Violation;
    if (tag == TermReality::Violation) report.consistent = false;
    report.tags.push_back(tag);
  }
  return report;
}

TruncationResult truncate(const PauliLCU& lcu, int mu) {
  if (mu < 0) throw ValidationError("truncate requires mu >= 0");
  const double threshold = std::ldexp(lcu.alpha, -mu);
  TruncationResult result;
  result.lcu.n_qubits = lcu.n_qubits;
  result.lcu.b0 = lcu.b0;
  for (const auto& term : lcu.terms) {
    const double mag = std::abs(term.coefficient);
    if (mag >= threshold) {
      result.lcu.terms.push_back(term);
      result.lcu.alpha += mag;
    } else {
      result.dropped_weight += mag;
      ++result.dropped_count;
    }
  }
  return result;
}

double one_norm(const PauliLCU& lcu) {
  double total = 0.0;
  for (const auto& term : lcu.terms) total += std::abs(term.coefficient);
  return total;
}

void write_lcu(const PauliLCU& lcu, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", lcu.n_qubits, lcu.b0.real(),
                lcu.b0.imag());
  out << buf;
  for (const auto& term : lcu.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g ", term.coefficient.real(),
                  term.coefficient.imag());
    out << buf << term.string.str() << "\n";
  }
}

PauliLCU read_lcu(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty LCU dump");
  ++line_no;
  std::istringstream header(line);
  int n_qubits;
  double b0_re, b0_im;
  if (!(header >> n_qubits >> b0_re >> b0_im))
    throw ParseError("malformed LCU header", line_no);
  PauliAccumulator acc(n_qubits);
  acc.add_identity(Complex{b0_re, b0_im});
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    double re, im;
    std::string word;
    if (!(row >> re >> im >> word)) throw ParseError("malformed LCU term", line_no);
    PauliString str = PauliString::parse(word);
    if (str.n_qubits() != n_qubits)
      throw ParseError("term width disagrees with header", line_no);
    acc.add_word(str, Complex{re, im});
  }
  return acc.build(0.0);
}

}  // namespace tcqeve
