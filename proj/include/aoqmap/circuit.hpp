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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aoqmap {

enum class GateKind { H, X, RX, RY, RZ, CX, CZ, SWAP, ZZ, ZZSWAP, CZSWAP };

std::string_view gate_name(GateKind kind);
// Accepts the lower-case names produced by gate_name(); throws kUnknownGate.
GateKind parse_gate_kind(std::string_view name);

bool is_two_qubit(GateKind kind);
bool has_angle(GateKind kind);
// SWAP and the fused macro-gates exchange the contents of their two positions.
bool exchanges_qubits(GateKind kind);
bool is_basis(GateKind kind);

struct Gate {
  GateKind kind;
  std::array<int, 2> qubits{-1, -1};
  double angle = 0.0;

  int arity() const { return is_two_qubit(kind) ? 2 : 1; }
  std::span<const int> targets() const {
    return {qubits.data(), static_cast<std::size_t>(arity())};
  }

  static Gate single(GateKind kind, int q, double angle = 0.0);
  static Gate pair(GateKind kind, int a, int b, double angle = 0.0);

  bool operator==(const Gate&) const = default;
};

// Entry k is the logical qubit currently held by position k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator[](int position) const { return map_[position]; }
  int position_of(int logical) const;
  const std::vector<int>& map() const { return map_; }

  void exchange(int a, int b);
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n, std::string label = {});
  Circuit(int n, Permutation initial_order, std::string label = {});

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Permutation& initial_order() const { return initial_order_; }
  const Permutation& final_order() const { return final_order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Validates the gate and keeps final_order in sync with every exchange.
  void append(const Gate& gate);
  void append(std::span<const Gate> gates);

  bool empty() const { return gates_.empty(); }

  // For circuits whose exchanges were lowered to CX gates, where the order can
  // no longer be read off the gate list.
  void set_final_order(Permutation order);

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
  Permutation initial_order_;
  Permutation final_order_;
  std::string label_;
};

struct GateCounts {
  std::size_t cx = 0;
  std::size_t total = 0;
  std::size_t depth = 0;

  bool operator==(const GateCounts&) const = default;
};

// Rewrites every gate into {H, X, RX, RY, RZ, CX}. The fused macro-gates keep
// their CX cancellation: ZZSWAP costs 3 CX, CZSWAP costs 2.
Circuit decompose_to_basis(const Circuit& circuit);

// Longest chain of gates sharing a qubit; every gate counts 1.
std::size_t depth(const Circuit& circuit);

// Counts are taken on the basis decomposition.
GateCounts gate_counts(const Circuit& circuit);

// OpenQASM 2.0. Position k is measured into classical bit final_order[k].
std::string emit_qasm(const Circuit& circuit);

}  // namespace aoqmap
