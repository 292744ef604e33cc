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

#include "aoqmap/selection.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aoqmap/error.hpp"

namespace aoqmap {

namespace {

void check_rate(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                what + " error rate " + std::to_string(p) + " outside [0,1]");
  }
}

Edge key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

void Calibration::validate(const CouplingGraph& graph) const {
  if (static_cast<int>(qubits.size()) != graph.num_qubits()) {
    throw Error(ErrorKind::kMissingCalibration,
                "calibration lists " + std::to_string(qubits.size()) +
                    " qubits, device has " + std::to_string(graph.num_qubits()));
  }
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    check_rate(qubits[q].readout_error, "qubit " + std::to_string(q) + " readout");
    check_rate(qubits[q].sq_error, "qubit " + std::to_string(q) + " single-qubit");
  }
  for (const auto& [u, v] : graph.edges()) {
    auto it = edge_errors.find(key(u, v));
    if (it == edge_errors.end()) {
      throw Error(ErrorKind::kMissingCalibration,
                  "no two-qubit error for edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    check_rate(it->second, "edge");
  }
}

double Calibration::readout_error(int q) const {
  if (q < 0 || q >= static_cast<int>(qubits.size())) {
    throw Error(ErrorKind::kMissingCalibration,
                "no calibration for qubit " + std::to_string(q));
  }
  return qubits[q].readout_error;
}

double Calibration::sq_error(int q) const {
  if (q < 0 || q >= static_cast<int>(qubits.size())) {
    throw Error(ErrorKind::kMissingCalibration,
                "no calibration for qubit " + std::to_string(q));
  }
  return qubits[q].sq_error;
}

double Calibration::edge_error(int u, int v) const {
  auto it = edge_errors.find(key(u, v));
  if (it == edge_errors.end()) {
    throw Error(ErrorKind::kMissingCalibration,
                "no two-qubit error for edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
  }
  return it->second;
}

Calibration Calibration::uniform(const CouplingGraph& graph, double readout,
                                 double sq, double two_q) {
  Calibration cal;
  cal.qubits.assign(static_cast<std::size_t>(graph.num_qubits()),
                    QubitCalibration{readout, sq, std::nullopt, std::nullopt});
  for (const auto& e : graph.edges()) cal.edge_errors[e] = two_q;
  return cal;
}

namespace {

CostReport cost_of_basis(const Circuit& basis, const Layout& layout,
                         const Calibration& cal,
                         std::span<const int> measured) {
  if (static_cast<int>(layout.assignment.size()) < basis.num_qubits()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "layout covers " + std::to_string(layout.assignment.size()) +
                    " positions, circuit has " +
                    std::to_string(basis.num_qubits()));
  }
  const auto& phys = layout.assignment;
  CostReport r;
  r.layout = layout;
  // Tally per resource first so the product does not depend on gate order.
  std::map<Edge, std::size_t> uses;  // second == -1 for single-qubit gates
  for (const auto& g : basis.gates()) {
    const int a = phys[g.qubits[0]];
    const int b = g.arity() == 2 ? phys[g.qubits[1]] : -1;
    ++uses[b < 0 ? Edge{a, -1} : Edge{std::min(a, b), std::max(a, b)}];
    ++r.gate_count;
  }
  for (const auto& [res, count] : uses) {
    const double p = res.second < 0 ? cal.sq_error(res.first)
                                    : cal.edge_error(res.first, res.second);
    for (std::size_t i = 0; i < count; ++i) r.gate_error_product *= 1.0 - p;
  }
  for (int q : measured) {
    if (q < 0 || q >= basis.num_qubits()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "measured position " + std::to_string(q) + " out of range");
    }
    r.measurement_error_product *= 1.0 - cal.readout_error(phys[q]);
    ++r.measurement_count;
  }
  r.cost = 1.0 - r.gate_error_product * r.measurement_error_product;
  return r;
}

std::vector<int> all_positions(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

CostReport circuit_cost(const Circuit& circuit, const Layout& layout,
                        const Calibration& cal) {
  const auto measured = all_positions(circuit.num_qubits());
  return circuit_cost(circuit, layout, cal, measured);
}

CostReport circuit_cost(const Circuit& circuit, const Layout& layout,
                        const Calibration& cal,
                        std::span<const int> measured_positions) {
  return cost_of_basis(decompose_to_basis(circuit), layout, cal,
                       measured_positions);
}

std::vector<CostReport> score_layouts(const Circuit& circuit,
                                      const SubtopologyTemplate& tmpl,
                                      const CouplingGraph& graph,
                                      const Calibration& cal) {
  if (circuit.num_qubits() != tmpl.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "circuit has " + std::to_string(circuit.num_qubits()) +
                    " qubits, template has " + std::to_string(tmpl.n));
  }
  const Circuit basis = decompose_to_basis(circuit);
  const auto measured = all_positions(circuit.num_qubits());
  std::vector<CostReport> out;
  for (const auto& layout : enumerate_layouts(tmpl, graph)) {
    out.push_back(cost_of_basis(basis, layout, cal, measured));
  }
  return out;
}

CostReport select_layout(const Circuit& circuit, const SubtopologyTemplate& tmpl,
                         const CouplingGraph& graph, const Calibration& cal) {
  const auto table = score_layouts(circuit, tmpl, graph, cal);
  if (table.empty()) {
    throw Error(ErrorKind::kNotEmbeddable,
                std::string(template_name(tmpl.kind)) + "-" +
                    std::to_string(tmpl.n) + " template not embeddable in a " +
                    std::to_string(graph.num_qubits()) + "-qubit device");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i].cost < table[best].cost) best = i;
  }
  return table[best];
}

PostselectResult postselect(
    const std::vector<std::pair<std::string, Counts>>& variants,
    const ProblemHamiltonian& h) {
  if (variants.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "postselect needs at least one variant");
  }
  PostselectResult best;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    const double e = expectation(h, variants[i].second);
    if (i == 0 || e < best.expectation) {
      best = {i, variants[i].first, e};
    }
  }
  return best;
}

}  // namespace aoqmap
