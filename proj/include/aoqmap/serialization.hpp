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

#include <optional>
#include <string>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/router.hpp"
#include "aoqmap/selection.hpp"
#include "aoqmap/topology.hpp"
#include "json.hpp"

namespace aoqmap {

using Json = nlohmann::ordered_json;

// {n, label, gates:[{kind, qubits, angle?}], initial_order, final_order}.
// A stored final_order is trusted only when no gate exchanges positions
// (lowered circuits); otherwise it must match the replayed order.
Json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j);

// {n, zz:[{i,j,coeff}], z:[{i,coeff}], constant, budget?}
Json hamiltonian_to_json(const ProblemHamiltonian& h);
ProblemHamiltonian hamiltonian_from_json(const Json& j);

// {lambda, q, penalty, budget, sigma, mu, constant?}
PortfolioSpec portfolio_from_json(const Json& j);
Json portfolio_to_json(const PortfolioSpec& spec);

Json qaoa_params_to_json(const QaoaParams& params);
QaoaParams qaoa_params_from_json(const Json& j);

// {bitstring: count}, or an object holding that under "counts".
Json counts_to_json(const Counts& counts);
Counts counts_from_json(const Json& j);

struct Device {
  std::string name;
  CouplingGraph graph;
  std::optional<Calibration> calibration;
};

// {num_qubits, edges:[[u,v],...], calibration?: {qubits:[{readout_error,
// sq_error, t1?, t2?}], edges:[{pair:[u,v], error}]}}
Device device_from_json(const Json& j);
Json device_to_json(const Device& device);

Json layout_to_json(const Layout& layout);
Json cost_report_to_json(const CostReport& report);
Json routing_report_to_json(const RoutingReport& report);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace aoqmap
