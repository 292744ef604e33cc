// Copyright 2026 The aoqmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aoqmap/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "aoqmap/error.hpp"

namespace aoqmap {

void ProblemHamiltonian::validate() const {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative qubit count");
  std::set<std::pair<int, int>> seen;
  for (const auto& t : zz) {
    if (t.i < 0 || t.j >= n || t.i >= t.j) {
      throw Error(ErrorKind::kInvalidArgument,
                  "zz term (" + std::to_string(t.i) + "," +
                      std::to_string(t.j) + ") must satisfy 0 <= i < j < n");
    }
    if (!seen.emplace(t.i, t.j).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate zz term (" + std::to_string(t.i) + "," +
                      std::to_string(t.j) + ")");
    }
  }
  std::set<int> zs;
  for (const auto& t : z) {
    if (t.i < 0 || t.i >= n) {
      throw Error(ErrorKind::kInvalidArgument, "z term index out of range");
    }
    if (!zs.insert(t.i).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate z term");
    }
  }
  if (budget && (*budget < 0 || *budget > n)) {
    throw Error(ErrorKind::kInvalidArgument, "budget outside [0, n]");
  }
}

bool ProblemHamiltonian::fully_connected() const {
  return zz.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::optional<double> ProblemHamiltonian::zz_coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& t : zz) {
    if (t.i == i && t.j == j) return t.coeff;
  }
  return std::nullopt;
}

double ProblemHamiltonian::z_coeff(int i) const {
  for (const auto& t : z) {
    if (t.i == i) return t.coeff;
  }
  return 0.0;
}

void QaoaParams::validate() const {
  if (gammas.empty() || gammas.size() != betas.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "QAOA needs p >= 1 and as many betas as gammas");
  }
}

ProblemHamiltonian build_portfolio_hamiltonian(const PortfolioSpec& spec) {
  const int n = static_cast<int>(spec.mu.size());
  if (static_cast<int>(spec.sigma.size()) != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "covariance has " + std::to_string(spec.sigma.size()) +
                    " rows for " + std::to_string(n) + " assets");
  }
  for (const auto& row : spec.sigma) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::kDimensionMismatch, "covariance is not square");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (std::abs(spec.sigma[i][j] - spec.sigma[j][i]) > 1e-12) {
        throw Error(ErrorKind::kInvalidArgument, "covariance is not symmetric");
      }
    }
  }

  const double half = spec.lambda / 2.0;
  ProblemHamiltonian h;
  h.n = n;
  h.constant = spec.constant;
  h.budget = spec.budget;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      h.zz.push_back({i, j, half * (spec.q * spec.sigma[i][j] + spec.penalty)});
    }
  }
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += spec.sigma[i][j];
    const double c = half * (spec.penalty * (2 * spec.budget - n) +
                             (1.0 - spec.q) * spec.mu[i] - spec.q * row);
    h.z.push_back({i, c});
  }
  h.validate();
  return h;
}

ProblemHamiltonian build_maxcut_hamiltonian(
    const std::vector<std::pair<int, int>>& edges, int n) {
  ProblemHamiltonian h;
  h.n = n;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorKind::kInvalidArgument,
                  "self-loop on vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate edge (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
    }
    h.zz.push_back({a, b, 0.5});
  }
  std::sort(h.zz.begin(), h.zz.end(), [](const ZZTerm& x, const ZZTerm& y) {
    return std::pair(x.i, x.j) < std::pair(y.i, y.j);
  });
  h.constant = -0.5 * static_cast<double>(edges.size());
  h.validate();
  return h;
}

double energy(const ProblemHamiltonian& h, std::uint64_t bits) {
  auto z = [bits](int k) { return (bits >> k) & 1U ? -1.0 : 1.0; };
  double e = h.constant;
  for (const auto& t : h.zz) e += t.coeff * z(t.i) * z(t.j);
  for (const auto& t : h.z) e += t.coeff * z(t.i);
  return e;
}

std::string to_bitstring(std::uint64_t bits, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((bits >> k) & 1U) s[k] = '1';
  }
  return s;
}

std::uint64_t from_bitstring(const std::string& bitstring) {
  if (bitstring.size() > 64) {
    throw Error(ErrorKind::kTooLarge, "bitstring longer than 64 bits");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < bitstring.size(); ++k) {
    if (bitstring[k] == '1') {
      bits |= std::uint64_t{1} << k;
    } else if (bitstring[k] != '0') {
      throw Error(ErrorKind::kParse, "bitstring '" + bitstring +
                                         "' has a character other than 0/1");
    }
  }
  return bits;
}

namespace {

void check_length(const ProblemHamiltonian& h, const std::string& s) {
  if (static_cast<int>(s.size()) != h.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "bitstring '" + s + "' has length " + std::to_string(s.size()) +
                    ", Hamiltonian has " + std::to_string(h.n) + " qubits");
  }
}

bool feasible_bits(const ProblemHamiltonian& h, std::uint64_t bits) {
  return !h.budget || std::popcount(bits) == *h.budget;
}

}  // namespace

double energy(const ProblemHamiltonian& h, const std::string& bitstring) {
  check_length(h, bitstring);
  return energy(h, from_bitstring(bitstring));
}

bool feasible(const ProblemHamiltonian& h, const std::string& bitstring) {
  check_length(h, bitstring);
  return feasible_bits(h, from_bitstring(bitstring));
}

double expectation(const ProblemHamiltonian& h, const Counts& counts) {
  double weighted = 0.0;
  std::uint64_t total = 0;
  for (const auto& [bits, shots] : counts) {
    check_length(h, bits);
    weighted += energy(h, from_bitstring(bits)) * static_cast<double>(shots);
    total += shots;
  }
  if (total == 0) {
    throw Error(ErrorKind::kInvalidArgument, "counts contain no shots");
  }
  return weighted / static_cast<double>(total);
}

Extrema brute_force_extrema(const ProblemHamiltonian& h) {
  if (h.n > kMaxBruteForceQubits) {
    throw Error(ErrorKind::kTooLarge,
                "brute force over " + std::to_string(h.n) +
                    " qubits exceeds the limit of " +
                    std::to_string(kMaxBruteForceQubits));
  }
  Extrema ex;
  ex.optimum = std::numeric_limits<double>::infinity();
  ex.worst = -std::numeric_limits<double>::infinity();
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  // Ties within this tolerance share the optimal set.
  constexpr double kTol = 1e-9;
  std::vector<std::uint64_t> best;
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (!feasible_bits(h, x)) continue;
    const double e = energy(h, x);
    if (e < ex.optimum - kTol) {
      ex.optimum = e;
      best.assign(1, x);
    } else if (e <= ex.optimum + kTol) {
      best.push_back(x);
      ex.optimum = std::min(ex.optimum, e);
    }
    ex.worst = std::max(ex.worst, e);
  }
  if (best.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no feasible bitstring");
  }
  for (auto x : best) ex.optimal_bitstrings.push_back(to_bitstring(x, h.n));
  std::sort(ex.optimal_bitstrings.begin(), ex.optimal_bitstrings.end());
  return ex;
}

MetricReport metrics(const ProblemHamiltonian& h, const Counts& counts,
                     const Extrema& extrema) {
  if (!(extrema.optimum < extrema.worst)) {
    throw Error(ErrorKind::kInvalidArgument,
                "approximation ratio undefined when F_opt == F_max");
  }
  const std::set<std::string> optimal(extrema.optimal_bitstrings.begin(),
                                      extrema.optimal_bitstrings.end());
  double all = 0.0;
  double scored = 0.0;
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  for (const auto& [bits, shots] : counts) {
    check_length(h, bits);
    const std::uint64_t x = from_bitstring(bits);
    const double e = energy(h, x);
    const double w = static_cast<double>(shots);
    all += e * w;
    scored += (feasible_bits(h, x) ? e : extrema.worst) * w;
    total += shots;
    if (optimal.count(bits)) hits += shots;
  }
  if (total == 0) {
    throw Error(ErrorKind::kInvalidArgument, "counts contain no shots");
  }
  MetricReport r;
  const double t = static_cast<double>(total);
  r.expectation = all / t;
  const double ratio =
      (scored / t - extrema.worst) / (extrema.optimum - extrema.worst);
  r.approximation_ratio = std::clamp(ratio, 0.0, 1.0);
  r.success_probability = static_cast<double>(hits) / t;
  return r;
}

}  // namespace aoqmap
