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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/router.hpp"

namespace aoqmap {

using Amplitude = std::complex<double>;

inline constexpr int kMaxSimulatedQubits = 16;

// Little-endian: bit k of a basis index is position k.
class Statevector {
 public:
  explicit Statevector(int n);  // |0...0>

  int num_qubits() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm() const;

  void apply(const Gate& gate);
  void apply_pauli(int q, int which);  // 0 = X, 1 = Y, 2 = Z

 private:
  void apply_1q(int q, const Amplitude m[2][2]);
  void apply_cx(int c, int t);
  void apply_swap(int a, int b);
  void apply_zz(int a, int b, double theta);
  void apply_cz(int a, int b);

  int n_;
  std::vector<Amplitude> amps_;
};

// Probabilities indexed by logical bitstring: bit k is logical qubit k.
using Distribution = std::vector<double>;

Statevector simulate(const Circuit& circuit);

// Amplitudes re-indexed from positions to logical qubits via final_order.
std::vector<Amplitude> logical_amplitudes(const Circuit& circuit,
                                          const Statevector& state);

Distribution distribution(const Circuit& circuit);

struct NoiseModel {
  double eps_2q = 0.0;
  std::optional<double> eps_1q;  // defaults to eps_2q / 10

  double single_qubit() const { return eps_1q ? *eps_1q : eps_2q / 10.0; }
  void validate() const;
};

// Shot i draws its noise from stream (seed, i, 0) and its measurement from
// (seed, i, 1), so an error-free trajectory measures exactly like the
// noiseless path.
Counts sample(const Circuit& circuit, std::uint64_t shots,
              const std::optional<NoiseModel>& noise, std::uint64_t seed);

// Single Pauli trajectory (noise stream only), position basis.
Statevector trajectory(const Circuit& circuit, const NoiseModel& noise,
                       std::uint64_t seed, std::uint64_t index);

double hellinger(const Distribution& p, const Distribution& q);

enum class ReferenceKind { Qaoa, MaxCut, Vqe };

// Unrouted all-to-all circuit with identity orders. VQE ignores params and
// reads n from h and the depth from thetas.size() / n - 1.
Circuit reference_circuit(const ProblemHamiltonian& h, const QaoaParams& params,
                          ReferenceKind kind,
                          const std::vector<double>& thetas = {});

inline constexpr double kHellingerTolerance = 1e-6;
inline constexpr double kFidelityTolerance = 1e-9;

struct VerifyReport {
  double hellinger = 1.0;
  double fidelity = 0.0;
  bool pass = false;
};

VerifyReport verify(const Circuit& routed, const Circuit& reference);
VerifyReport verify(const RoutedCircuit& routed, const Circuit& reference);

}  // namespace aoqmap
