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

#include "aoqmap/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "aoqmap/error.hpp"

namespace aoqmap {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  bool two_qubit;
  bool angle;
};

constexpr std::array<KindInfo, 11> kKinds{{
    {GateKind::H, "h", false, false},
    {GateKind::X, "x", false, false},
    {GateKind::RX, "rx", false, true},
    {GateKind::RY, "ry", false, true},
    {GateKind::RZ, "rz", false, true},
    {GateKind::CX, "cx", true, false},
    {GateKind::CZ, "cz", true, false},
    {GateKind::SWAP, "swap", true, false},
    {GateKind::ZZ, "zz", true, true},
    {GateKind::ZZSWAP, "zzswap", true, true},
    {GateKind::CZSWAP, "czswap", true, false},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

std::string format_angle(double angle) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind parse_gate_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto& k : kKinds) {
    if (k.name == lower) return k.kind;
  }
  throw Error(ErrorKind::kUnknownGate,
              "unknown gate kind '" + std::string(name) + "'");
}

bool is_two_qubit(GateKind kind) { return info(kind).two_qubit; }
bool has_angle(GateKind kind) { return info(kind).angle; }

bool exchanges_qubits(GateKind kind) {
  return kind == GateKind::SWAP || kind == GateKind::ZZSWAP ||
         kind == GateKind::CZSWAP;
}

bool is_basis(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CX:
      return true;
    default:
      return false;
  }
}

Gate Gate::single(GateKind kind, int q, double angle) {
  if (is_two_qubit(kind)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(gate_name(kind)) + " needs two qubits");
  }
  return Gate{kind, {q, -1}, has_angle(kind) ? angle : 0.0};
}

Gate Gate::pair(GateKind kind, int a, int b, double angle) {
  if (!is_two_qubit(kind)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(gate_name(kind)) + " acts on one qubit");
  }
  if (a == b) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(gate_name(kind)) + " on a repeated qubit");
  }
  return Gate{kind, {a, b}, has_angle(kind) ? angle : 0.0};
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw Error(ErrorKind::kInvalidArgument, "order is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

int Permutation::position_of(int logical) const {
  auto it = std::find(map_.begin(), map_.end(), logical);
  if (it == map_.end()) {
    throw Error(ErrorKind::kInvalidArgument, "logical qubit out of range");
  }
  return static_cast<int>(it - map_.begin());
}

void Permutation::exchange(int a, int b) { std::swap(map_.at(a), map_.at(b)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int k = 0; k < size(); ++k) inv[map_[k]] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k) {
    if (map_[k] != k) return false;
  }
  return true;
}

Circuit::Circuit(int n, std::string label)
    : Circuit(n, Permutation::identity(n), std::move(label)) {}

Circuit::Circuit(int n, Permutation initial_order, std::string label)
    : n_(n),
      initial_order_(std::move(initial_order)),
      final_order_(initial_order_),
      label_(std::move(label)) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative qubit count");
  if (initial_order_.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "initial order size differs from qubit count");
  }
}

void Circuit::append(const Gate& gate) {
  for (int q : gate.targets()) {
    if (q < 0 || q >= n_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "gate " + std::string(gate_name(gate.kind)) +
                      " acts on qubit " + std::to_string(q) + " of " +
                      std::to_string(n_));
    }
  }
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw Error(ErrorKind::kInvalidArgument, "two-qubit gate on one qubit");
  }
  gates_.push_back(gate);
  if (exchanges_qubits(gate.kind)) {
    final_order_.exchange(gate.qubits[0], gate.qubits[1]);
  }
}

void Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
}

void Circuit::set_final_order(Permutation order) {
  if (order.size() != n_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "final order size differs from qubit count");
  }
  final_order_ = std::move(order);
}

Circuit decompose_to_basis(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.initial_order(), circuit.label());
  auto one = [&](GateKind k, int q, double angle = 0.0) {
    out.append(Gate::single(k, q, angle));
  };
  auto cx = [&](int c, int t) { out.append(Gate::pair(GateKind::CX, c, t)); };

  for (const auto& g : circuit.gates()) {
    const int a = g.qubits[0];
    const int b = g.qubits[1];
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
      case GateKind::CX:
        out.append(g);
        break;
      case GateKind::CZ:
        one(GateKind::H, b);
        cx(a, b);
        one(GateKind::H, b);
        break;
      case GateKind::SWAP:
        cx(a, b);
        cx(b, a);
        cx(a, b);
        break;
      case GateKind::ZZ:
        cx(a, b);
        one(GateKind::RZ, b, g.angle);
        cx(a, b);
        break;
      case GateKind::ZZSWAP:
        // The trailing CX of ZZ cancels the leading CX of the SWAP.
        cx(a, b);
        one(GateKind::RZ, b, g.angle);
        cx(b, a);
        cx(a, b);
        break;
      case GateKind::CZSWAP:
        // H_b CX(a,b) SWAP H_a with CX(a,b) absorbed into the SWAP.
        one(GateKind::H, b);
        cx(b, a);
        cx(a, b);
        one(GateKind::H, a);
        break;
    }
  }
  // Lowered exchanges are plain CX triples, so carry the order across.
  out.set_final_order(circuit.final_order());
  return out;
}

namespace {

std::size_t layered_depth(const Circuit& c) {
  std::vector<std::size_t> level(static_cast<std::size_t>(c.num_qubits()), 0);
  std::size_t deepest = 0;
  for (const auto& g : c.gates()) {
    std::size_t l = 0;
    for (int q : g.targets()) l = std::max(l, level[q]);
    ++l;
    for (int q : g.targets()) level[q] = l;
    deepest = std::max(deepest, l);
  }
  return deepest;
}

}  // namespace

std::size_t depth(const Circuit& circuit) {
  return layered_depth(decompose_to_basis(circuit));
}

GateCounts gate_counts(const Circuit& circuit) {
  const Circuit basis = decompose_to_basis(circuit);
  GateCounts counts;
  counts.total = basis.gates().size();
  counts.cx = static_cast<std::size_t>(
      std::count_if(basis.gates().begin(), basis.gates().end(),
                    [](const Gate& g) { return g.kind == GateKind::CX; }));
  counts.depth = layered_depth(basis);
  return counts;
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream os;
  const int n = circuit.num_qubits();
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << n << "];\n"
     << "creg c[" << n << "];\n";
  for (const auto& g : circuit.gates()) {
    if (!is_basis(g.kind)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "emit_qasm needs a basis circuit; found " +
                      std::string(gate_name(g.kind)));
    }
    os << gate_name(g.kind);
    if (has_angle(g.kind)) os << '(' << format_angle(g.angle) << ')';
    os << " q[" << g.qubits[0] << ']';
    if (g.arity() == 2) os << ",q[" << g.qubits[1] << ']';
    os << ";\n";
  }
  const auto& order = circuit.final_order();
  for (int k = 0; k < n; ++k) {
    os << "measure q[" << k << "] -> c[" << order[k] << "];\n";
  }
  return os.str();
}

}  // namespace aoqmap
