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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aoqmap {

struct ZZTerm {
  int i;
  int j;
  double coeff;
};

struct ZTerm {
  int i;
  double coeff;
};

// H = sum c_ij Z_i Z_j + sum c_i Z_i + c_0 over n qubits. With a budget, only
// bitstrings of Hamming weight == budget are feasible.
struct ProblemHamiltonian {
  int n = 0;
  std::vector<ZZTerm> zz;
  std::vector<ZTerm> z;
  double constant = 0.0;
  std::optional<int> budget;

  // Throws on out-of-range indices, i >= j, or repeated pairs.
  void validate() const;
  bool fully_connected() const;
  std::optional<double> zz_coeff(int i, int j) const;
  double z_coeff(int i) const;
};

struct PortfolioSpec {
  double lambda = 1.0;  // global scaling
  double q = 0.5;       // risk preference
  double penalty = 0.0; // A
  int budget = 1;       // B
  std::vector<std::vector<double>> sigma;
  std::vector<double> mu;
  double constant = 0.0;
};

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
  void validate() const;

  // Gate angles for layer k; the factor 2 maps exp(-i gamma c Z Z) onto
  // ZZ(theta) = exp(-i theta/2 Z Z), and likewise for RZ and RX.
  double zz_angle(int k, double coeff) const { return 2.0 * gammas[k] * coeff; }
  double rz_angle(int k, double coeff) const { return 2.0 * gammas[k] * coeff; }
  double rx_angle(int k) const { return 2.0 * betas[k]; }
};

// Bitstring character k is the measured value of logical qubit k.
using Counts = std::map<std::string, std::uint64_t>;

struct MetricReport {
  double expectation = 0.0;
  double approximation_ratio = 0.0;
  double success_probability = 0.0;
};

struct Extrema {
  double optimum = 0.0;  // minimum over feasible bitstrings
  double worst = 0.0;    // maximum over feasible bitstrings
  std::vector<std::string> optimal_bitstrings;
};

ProblemHamiltonian build_portfolio_hamiltonian(const PortfolioSpec& spec);
ProblemHamiltonian build_maxcut_hamiltonian(
    const std::vector<std::pair<int, int>>& edges, int n);

// Bit 0 maps to z = +1, bit 1 to z = -1.
double energy(const ProblemHamiltonian& h, std::uint64_t bits);
double energy(const ProblemHamiltonian& h, const std::string& bitstring);
bool feasible(const ProblemHamiltonian& h, const std::string& bitstring);

double expectation(const ProblemHamiltonian& h, const Counts& counts);

inline constexpr int kMaxBruteForceQubits = 24;
Extrema brute_force_extrema(const ProblemHamiltonian& h);

// Infeasible shots are scored at F_max; the ratio is clamped to [0, 1].
MetricReport metrics(const ProblemHamiltonian& h, const Counts& counts,
                     const Extrema& extrema);

std::string to_bitstring(std::uint64_t bits, int n);
std::uint64_t from_bitstring(const std::string& bitstring);

}  // namespace aoqmap
