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

#include "aoqmap/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "aoqmap/error.hpp"

namespace aoqmap {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_size(int n) {
  if (n > kMaxSimulatedQubits) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(n) + " qubits exceeds the simulator cap of " +
                    std::to_string(kMaxSimulatedQubits));
  }
}

}  // namespace

Statevector::Statevector(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative qubit count");
  check_size(n);
  amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::apply_1q(int q, const Amplitude m[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | bit];
    amps_[i] = m[0][0] * a0 + m[0][1] * a1;
    amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void Statevector::apply_cx(int c, int t) {
  const std::size_t cb = std::size_t{1} << c;
  const std::size_t tb = std::size_t{1} << t;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }
}

void Statevector::apply_swap(int a, int b) {
  const std::size_t ab = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ab) && !(i & bb)) std::swap(amps_[i], amps_[(i & ~ab) | bb]);
  }
}

void Statevector::apply_zz(int a, int b, double theta) {
  const Amplitude even = std::polar(1.0, -theta / 2.0);
  const Amplitude odd = std::polar(1.0, theta / 2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const bool parity = ((i >> a) ^ (i >> b)) & 1U;
    amps_[i] *= parity ? odd : even;
  }
}

void Statevector::apply_cz(int a, int b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void Statevector::apply_pauli(int q, int which) {
  static const Amplitude x[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
  static const Amplitude y[2][2] = {{0.0, -kI}, {kI, 0.0}};
  static const Amplitude z[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
  apply_1q(q, which == 0 ? x : which == 1 ? y : z);
}

void Statevector::apply(const Gate& g) {
  for (int q : g.targets()) {
    if (q < 0 || q >= n_) {
      throw Error(ErrorKind::kInvalidArgument, "gate qubit out of range");
    }
  }
  const int a = g.qubits[0];
  const int b = g.qubits[1];
  const double c = std::cos(g.angle / 2.0);
  const double s = std::sin(g.angle / 2.0);
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      const Amplitude m[2][2] = {{r, r}, {r, -r}};
      apply_1q(a, m);
      break;
    }
    case GateKind::X:
      apply_pauli(a, 0);
      break;
    case GateKind::RX: {
      const Amplitude m[2][2] = {{c, -kI * s}, {-kI * s, c}};
      apply_1q(a, m);
      break;
    }
    case GateKind::RY: {
      const Amplitude m[2][2] = {{c, -s}, {s, c}};
      apply_1q(a, m);
      break;
    }
    case GateKind::RZ: {
      const Amplitude m[2][2] = {{std::polar(1.0, -g.angle / 2.0), 0.0},
                                 {0.0, std::polar(1.0, g.angle / 2.0)}};
      apply_1q(a, m);
      break;
    }
    case GateKind::CX:
      apply_cx(a, b);
      break;
    case GateKind::CZ:
      apply_cz(a, b);
      break;
    case GateKind::SWAP:
      apply_swap(a, b);
      break;
    case GateKind::ZZ:
      apply_zz(a, b, g.angle);
      break;
    case GateKind::ZZSWAP:
      apply_zz(a, b, g.angle);
      apply_swap(a, b);
      break;
    case GateKind::CZSWAP:
      apply_cz(a, b);
      apply_swap(a, b);
      break;
  }
}

Statevector simulate(const Circuit& circuit) {
  Statevector state(circuit.num_qubits());
  for (const auto& g : circuit.gates()) state.apply(g);
  return state;
}

namespace {

std::vector<std::size_t> logical_index_map(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  const Permutation& order = circuit.final_order();
  std::vector<std::size_t> map(std::size_t{1} << n);
  for (std::size_t x = 0; x < map.size(); ++x) {
    std::size_t y = 0;
    for (int k = 0; k < n; ++k) {
      if ((x >> k) & 1U) y |= std::size_t{1} << order[k];
    }
    map[x] = y;
  }
  return map;
}

Distribution distribution_of(const std::vector<std::size_t>& map,
                             const Statevector& state) {
  Distribution d(map.size(), 0.0);
  const auto& amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) d[map[x]] = std::norm(amps[x]);
  return d;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index,
                       std::uint32_t which) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), which};
  return std::mt19937_64(seq);
}

std::size_t draw(const Distribution& d, std::mt19937_64& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d[i];
    if (u < acc) return i;
  }
  // Rounding left the total just under u; take the last outcome with weight.
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] > 0.0) return i;
  }
  return 0;
}

// Runs one trajectory; returns whether any Pauli fired.
bool run_trajectory(const Circuit& circuit, const NoiseModel& noise,
                    std::mt19937_64& rng, Statevector& state) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double e1 = noise.single_qubit();
  bool hit = false;
  for (const auto& g : circuit.gates()) {
    state.apply(g);
    const double eps = g.arity() == 2 ? noise.eps_2q : e1;
    for (int q : g.targets()) {
      const double u = unit(rng);
      if (u < 0.75 * eps) {
        state.apply_pauli(q, std::min(2, static_cast<int>(u / (0.25 * eps))));
        hit = true;
      }
    }
  }
  return hit;
}

}  // namespace

std::vector<Amplitude> logical_amplitudes(const Circuit& circuit,
                                          const Statevector& state) {
  const auto map = logical_index_map(circuit);
  std::vector<Amplitude> out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) out[map[x]] = state.amplitudes()[x];
  return out;
}

Distribution distribution(const Circuit& circuit) {
  return distribution_of(logical_index_map(circuit), simulate(circuit));
}

void NoiseModel::validate() const {
  if (!(eps_2q >= 0.0 && eps_2q <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "two-qubit noise strength outside [0,1]");
  }
  const double e1 = single_qubit();
  if (!(e1 >= 0.0 && e1 <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "single-qubit noise strength outside [0,1]");
  }
}

Statevector trajectory(const Circuit& circuit, const NoiseModel& noise,
                       std::uint64_t seed, std::uint64_t index) {
  noise.validate();
  Statevector state(circuit.num_qubits());
  auto rng = stream(seed, index, 0);
  run_trajectory(circuit, noise, rng, state);
  return state;
}

Counts sample(const Circuit& circuit, std::uint64_t shots,
              const std::optional<NoiseModel>& noise, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorKind::kInvalidArgument, "shots must be >= 1");
  if (noise) noise->validate();
  const int n = circuit.num_qubits();
  const auto map = logical_index_map(circuit);
  const Distribution clean = distribution_of(map, simulate(circuit));
  std::vector<std::uint64_t> tally(clean.size(), 0);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const Distribution* d = &clean;
    Distribution noisy;
    if (noise) {
      Statevector state(n);
      auto rng = stream(seed, i, 0);
      if (run_trajectory(circuit, *noise, rng, state)) {
        noisy = distribution_of(map, state);
        d = &noisy;
      }
    }
    auto rng = stream(seed, i, 1);
    ++tally[draw(*d, rng)];
  }
  Counts counts;
  for (std::size_t y = 0; y < tally.size(); ++y) {
    if (tally[y]) counts[to_bitstring(y, n)] = tally[y];
  }
  return counts;
}

double hellinger(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "distributions have " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()) + " outcomes");
  }
  // Same as sqrt(1 - sum sqrt(p q)) for normalized inputs, but exactly zero
  // and exactly symmetric when it should be.
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(std::max(0.0, p[i])) - std::sqrt(std::max(0.0, q[i]));
    sum += d * d;
  }
  return std::sqrt(0.5 * sum);
}

Circuit reference_circuit(const ProblemHamiltonian& h, const QaoaParams& params,
                          ReferenceKind kind, const std::vector<double>& thetas) {
  const int n = h.n;
  if (kind == ReferenceKind::Vqe) {
    if (n < 1 || thetas.size() % static_cast<std::size_t>(n) != 0 ||
        thetas.size() < 2 * static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "VQE reference needs (p+1)*n angles with p >= 1");
    }
    const int p = static_cast<int>(thetas.size()) / n - 1;
    Circuit c(n, "vqe-reference");
    for (int q = 0; q < n; ++q) c.append(Gate::single(GateKind::RY, q, thetas[q]));
    for (int d = 0; d < p; ++d) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c.append(Gate::pair(GateKind::CZ, i, j));
      for (int q = 0; q < n; ++q) {
        c.append(Gate::single(GateKind::RY, q, thetas[(d + 1) * n + q]));
      }
    }
    return c;
  }
  h.validate();
  params.validate();
  if (kind == ReferenceKind::MaxCut && !h.z.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "MaxCut Hamiltonian has Z terms");
  }
  std::vector<ZZTerm> terms = h.zz;
  std::sort(terms.begin(), terms.end(), [](const ZZTerm& x, const ZZTerm& y) {
    return std::pair(x.i, x.j) < std::pair(y.i, y.j);
  });
  Circuit c(n, kind == ReferenceKind::MaxCut ? "maxcut-reference" : "qaoa-reference");
  for (int q = 0; q < n; ++q) c.append(Gate::single(GateKind::H, q));
  for (int k = 0; k < params.depth(); ++k) {
    for (const auto& t : terms) {
      c.append(Gate::pair(GateKind::ZZ, t.i, t.j, params.zz_angle(k, t.coeff)));
    }
    for (int q = 0; q < n; ++q) {
      const double ci = h.z_coeff(q);
      if (ci != 0.0) c.append(Gate::single(GateKind::RZ, q, params.rz_angle(k, ci)));
    }
    for (int q = 0; q < n; ++q) {
      c.append(Gate::single(GateKind::RX, q, params.rx_angle(k)));
    }
  }
  return c;
}

VerifyReport verify(const Circuit& routed, const Circuit& reference) {
  if (routed.num_qubits() != reference.num_qubits()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "routed circuit has " + std::to_string(routed.num_qubits()) +
                    " qubits, reference has " +
                    std::to_string(reference.num_qubits()));
  }
  check_size(routed.num_qubits());
  const auto a = logical_amplitudes(routed, simulate(routed));
  const auto b = logical_amplitudes(reference, simulate(reference));
  Distribution pa(a.size());
  Distribution pb(b.size());
  Amplitude overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[i] = std::norm(a[i]);
    pb[i] = std::norm(b[i]);
    overlap += std::conj(b[i]) * a[i];
  }
  VerifyReport r;
  r.hellinger = hellinger(pa, pb);
  r.fidelity = std::norm(overlap);
  r.pass = r.hellinger < kHellingerTolerance && r.fidelity > 1.0 - kFidelityTolerance;
  return r;
}

VerifyReport verify(const RoutedCircuit& routed, const Circuit& reference) {
  return verify(routed.circuit, reference);
}

}  // namespace aoqmap
