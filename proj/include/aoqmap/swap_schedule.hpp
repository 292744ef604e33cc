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

#include <set>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/topology.hpp"

namespace aoqmap {

using SwapLayer = std::vector<Edge>;

// Layers of disjoint position pairs on a template. Construction checks that
// every pair is a template edge and that no layer reuses a position.
class SwapSchedule {
 public:
  SwapSchedule(TemplateKind kind, int n, std::vector<SwapLayer> layers);

  TemplateKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<SwapLayer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }
  std::size_t swap_count() const;

  // First `count` layers (or all of them if there are fewer).
  SwapSchedule truncated(std::size_t count) const;

 private:
  TemplateKind kind_;
  int n_;
  std::vector<SwapLayer> layers_;
};

// n-2 brickwork layers; layer s (1-based) starts at position 1 when s is odd.
SwapSchedule linear_layers(int n);
// n layers of the four-phase cycle around centre 2.
SwapSchedule t_layers(int n);
// n layers of the four-phase cycles around centres 2 and n-3.
SwapSchedule h_layers(int n);
SwapSchedule make_schedule(TemplateKind kind, int n);

// Number of layers the routers are allowed to consume per depth.
int layer_bound(TemplateKind kind, int n);

SwapSchedule mirror(const SwapSchedule& schedule);

Permutation order_after(const SwapSchedule& schedule, const Permutation& initial);

// Logical pairs that sit on a template edge at some step, starting from the
// identity order.
std::set<Edge> connectivity_closure(const SwapSchedule& schedule,
                                    const SubtopologyTemplate& tmpl);

}  // namespace aoqmap
