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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/swap_schedule.hpp"
#include "aoqmap/topology.hpp"

namespace aoqmap {

enum class DepthMode { Repeat, MirrorAlternate };

std::string_view depth_mode_name(DepthMode mode);

struct RoutingReport {
  std::size_t swap_count = 0;  // fused and bare
  std::size_t cx_count = 0;
  std::size_t depth = 0;
  Permutation initial_order;
  Permutation final_order;
  std::size_t zz_gates_placed = 0;
  // Highest schedule layer (1-based) that still carries a swap, per depth.
  std::vector<int> layers_consumed;
  // Only filled in by the partial router.
  std::string strategy;
  std::optional<std::size_t> cx_target;
  std::optional<std::uint64_t> seed;
  std::size_t orders_evaluated = 0;
};

struct RoutedCircuit {
  Circuit circuit;
  SubtopologyTemplate tmpl;
  DepthMode schedule_kind = DepthMode::Repeat;
  RoutingReport report;
};

// Full connectivity on a chain. mirror=true reverses every other depth.
RoutedCircuit route_qaoa_linear(const ProblemHamiltonian& h,
                                const QaoaParams& params, bool mirror = false);

// Full connectivity on a T or H template with greedy placement.
RoutedCircuit route_qaoa_subtop(const ProblemHamiltonian& h,
                                const QaoaParams& params, TemplateKind kind,
                                DepthMode mode = DepthMode::Repeat);

struct OrderStrategy {
  enum class Kind { Auto, Exhaustive, Sampled };
  Kind kind = Kind::Auto;
  std::size_t samples = 5000;
  std::uint64_t seed = 42;
};

inline constexpr int kExhaustiveOrderLimit = 8;

// Any interaction graph. Picks the initial order with the fewest CX, then
// repeats the block with mirror alternation.
RoutedCircuit route_qaoa_partial(const ProblemHamiltonian& h,
                                 const QaoaParams& params, TemplateKind kind,
                                 const OrderStrategy& strategy = {});

// Same block construction with a caller-chosen initial order (before the
// leading swaps are folded into it).
RoutedCircuit route_qaoa_partial_with_order(const ProblemHamiltonian& h,
                                            const QaoaParams& params,
                                            TemplateKind kind,
                                            const Permutation& initial);

// thetas holds (p+1)*n angles; layer d uses thetas[d*n .. d*n+n).
RoutedCircuit route_vqe_linear(int n, int p, const std::vector<double>& thetas);

// Full brickwork network: n layers of fused ZZ-SWAP per depth.
RoutedCircuit swapnk_baseline(const ProblemHamiltonian& h,
                              const QaoaParams& params);

// CX count of packing |edges| interactions into the first slots of the
// complete-graph block, with leading and trailing swaps folded away.
std::size_t optimal_cx_target(const std::vector<Edge>& edges, int n,
                              TemplateKind kind);

}  // namespace aoqmap
