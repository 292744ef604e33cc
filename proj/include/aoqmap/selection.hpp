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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/topology.hpp"

namespace aoqmap {

struct QubitCalibration {
  double readout_error = 0.0;
  double sq_error = 0.0;
  // Kept for reference only; the cost does not use them.
  std::optional<double> t1;
  std::optional<double> t2;
};

struct Calibration {
  std::vector<QubitCalibration> qubits;
  std::map<Edge, double> edge_errors;  // keys stored with u < v

  // Error rates in [0,1] and one entry per device qubit and edge.
  void validate(const CouplingGraph& graph) const;

  double readout_error(int q) const;
  double sq_error(int q) const;
  double edge_error(int u, int v) const;

  static Calibration uniform(const CouplingGraph& graph, double readout,
                             double sq, double two_q);
};

struct CostReport {
  Layout layout;
  double cost = 0.0;
  double gate_error_product = 1.0;         // product of (1 - p_g)
  double measurement_error_product = 1.0;  // product of (1 - p_m)
  std::size_t gate_count = 0;
  std::size_t measurement_count = 0;
};

// C = 1 - prod(1 - p_g) * prod(1 - p_m) over the basis decomposition.
// Without an explicit list every position is measured once.
CostReport circuit_cost(const Circuit& circuit, const Layout& layout,
                        const Calibration& cal);
CostReport circuit_cost(const Circuit& circuit, const Layout& layout,
                        const Calibration& cal,
                        std::span<const int> measured_positions);

// One report per embedding, in enumerate_layouts order.
std::vector<CostReport> score_layouts(const Circuit& circuit,
                                      const SubtopologyTemplate& tmpl,
                                      const CouplingGraph& graph,
                                      const Calibration& cal);

// Lowest cost; ties go to the lexicographically first layout.
CostReport select_layout(const Circuit& circuit, const SubtopologyTemplate& tmpl,
                         const CouplingGraph& graph, const Calibration& cal);

struct PostselectResult {
  std::size_t index = 0;
  std::string label;
  double expectation = 0.0;
};

// Variant with the lowest energy expectation; ties keep input order.
PostselectResult postselect(
    const std::vector<std::pair<std::string, Counts>>& variants,
    const ProblemHamiltonian& h);

}  // namespace aoqmap
