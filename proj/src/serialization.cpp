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

#include "aoqmap/serialization.hpp"

#include <fstream>
#include <sstream>

#include "aoqmap/error.hpp"

namespace aoqmap {

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::kParse, std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse,
                std::string("field '") + name + "': " + e.what());
  }
}

template <typename T>
T field_or(const Json& j, const char* name, T fallback) {
  if (!j.contains(name) || j.at(name).is_null()) return fallback;
  return field<T>(j, name);
}

}  // namespace

Json circuit_to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const auto& g : circuit.gates()) {
    Json entry;
    entry["kind"] = std::string(gate_name(g.kind));
    entry["qubits"] = std::vector<int>(g.targets().begin(), g.targets().end());
    if (has_angle(g.kind)) entry["angle"] = g.angle;
    gates.push_back(std::move(entry));
  }
  Json j;
  j["n"] = circuit.num_qubits();
  j["label"] = circuit.label();
  j["gates"] = std::move(gates);
  j["initial_order"] = circuit.initial_order().map();
  j["final_order"] = circuit.final_order().map();
  return j;
}

Circuit circuit_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  Permutation initial = Permutation::identity(n);
  if (j.contains("initial_order")) {
    initial = Permutation(field<std::vector<int>>(j, "initial_order"));
  }
  Circuit c(n, std::move(initial), field_or<std::string>(j, "label", ""));
  bool exchanged = false;
  for (const auto& g : field<Json>(j, "gates")) {
    const GateKind kind = parse_gate_kind(field<std::string>(g, "kind"));
    const auto qubits = field<std::vector<int>>(g, "qubits");
    const double angle = field_or<double>(g, "angle", 0.0);
    const std::size_t want = is_two_qubit(kind) ? 2 : 1;
    if (qubits.size() != want) {
      throw Error(ErrorKind::kParse, "gate " + std::string(gate_name(kind)) +
                                         " needs " + std::to_string(want) +
                                         " qubits");
    }
    c.append(want == 2 ? Gate::pair(kind, qubits[0], qubits[1], angle)
                       : Gate::single(kind, qubits[0], angle));
    exchanged = exchanged || exchanges_qubits(kind);
  }
  if (j.contains("final_order")) {
    Permutation stored(field<std::vector<int>>(j, "final_order"));
    if (!exchanged) {
      c.set_final_order(std::move(stored));
    } else if (!(stored == c.final_order())) {
      throw Error(ErrorKind::kParse,
                  "final_order does not match the exchanges in the gate list");
    }
  }
  return c;
}

Json hamiltonian_to_json(const ProblemHamiltonian& h) {
  Json j;
  j["n"] = h.n;
  Json zz = Json::array();
  for (const auto& t : h.zz) zz.push_back({{"i", t.i}, {"j", t.j}, {"coeff", t.coeff}});
  Json z = Json::array();
  for (const auto& t : h.z) z.push_back({{"i", t.i}, {"coeff", t.coeff}});
  j["zz"] = std::move(zz);
  j["z"] = std::move(z);
  j["constant"] = h.constant;
  if (h.budget) j["budget"] = *h.budget;
  return j;
}

ProblemHamiltonian hamiltonian_from_json(const Json& j) {
  ProblemHamiltonian h;
  h.n = field<int>(j, "n");
  for (const auto& t : field_or<Json>(j, "zz", Json::array())) {
    h.zz.push_back({field<int>(t, "i"), field<int>(t, "j"), field<double>(t, "coeff")});
  }
  for (const auto& t : field_or<Json>(j, "z", Json::array())) {
    h.z.push_back({field<int>(t, "i"), field<double>(t, "coeff")});
  }
  h.constant = field_or<double>(j, "constant", 0.0);
  if (j.contains("budget") && !j["budget"].is_null()) h.budget = field<int>(j, "budget");
  h.validate();
  return h;
}

PortfolioSpec portfolio_from_json(const Json& j) {
  PortfolioSpec s;
  s.lambda = field<double>(j, "lambda");
  s.q = field<double>(j, "q");
  s.penalty = field_or<double>(j, "penalty", 0.0);
  s.budget = field<int>(j, "budget");
  s.sigma = field<std::vector<std::vector<double>>>(j, "sigma");
  s.mu = field<std::vector<double>>(j, "mu");
  s.constant = field_or<double>(j, "constant", 0.0);
  return s;
}

Json portfolio_to_json(const PortfolioSpec& s) {
  return {{"lambda", s.lambda}, {"q", s.q},         {"penalty", s.penalty},
          {"budget", s.budget}, {"sigma", s.sigma}, {"mu", s.mu},
          {"constant", s.constant}};
}

Json qaoa_params_to_json(const QaoaParams& params) {
  return {{"gammas", params.gammas}, {"betas", params.betas}};
}

QaoaParams qaoa_params_from_json(const Json& j) {
  QaoaParams p{field<std::vector<double>>(j, "gammas"),
               field<std::vector<double>>(j, "betas")};
  p.validate();
  return p;
}

Json counts_to_json(const Counts& counts) {
  Json j = Json::object();
  for (const auto& [bits, shots] : counts) j[bits] = shots;
  return j;
}

Counts counts_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "counts must be an object");
  // Also accept the envelope printed by `sample --json`.
  if (j.contains("counts") && j.at("counts").is_object()) return counts_from_json(j.at("counts"));
  Counts counts;
  std::size_t width = 0;
  for (const auto& [bits, shots] : j.items()) {
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorKind::kParse, "bad bitstring '" + bits + "'");
    }
    if (width && bits.size() != width) {
      throw Error(ErrorKind::kParse, "bitstrings of different lengths");
    }
    width = bits.size();
    if (!shots.is_number_integer() || shots.get<long long>() < 0) {
      throw Error(ErrorKind::kParse, "count for '" + bits + "' is not a non-negative integer");
    }
    counts[bits] = shots.get<std::uint64_t>();
  }
  return counts;
}

Device device_from_json(const Json& j) {
  Device d;
  d.name = field_or<std::string>(j, "name", "");
  const int n = field<int>(j, "num_qubits");
  std::vector<Edge> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    const auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) throw Error(ErrorKind::kParse, "edge must have two endpoints");
    edges.emplace_back(pair[0], pair[1]);
  }
  d.graph = CouplingGraph(n, std::move(edges));
  if (j.contains("calibration") && !j["calibration"].is_null()) {
    const Json& c = j["calibration"];
    Calibration cal;
    for (const auto& q : field<Json>(c, "qubits")) {
      QubitCalibration qc;
      qc.readout_error = field<double>(q, "readout_error");
      qc.sq_error = field<double>(q, "sq_error");
      if (q.contains("t1")) qc.t1 = field<double>(q, "t1");
      if (q.contains("t2")) qc.t2 = field<double>(q, "t2");
      cal.qubits.push_back(qc);
    }
    for (const auto& e : field<Json>(c, "edges")) {
      auto pair = field<std::vector<int>>(e, "pair");
      if (pair.size() != 2) throw Error(ErrorKind::kParse, "calibration pair must have two endpoints");
      if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
      cal.edge_errors[{pair[0], pair[1]}] = field<double>(e, "error");
    }
    cal.validate(d.graph);
    d.calibration = std::move(cal);
  }
  return d;
}

Json device_to_json(const Device& device) {
  Json j;
  if (!device.name.empty()) j["name"] = device.name;
  j["num_qubits"] = device.graph.num_qubits();
  Json edges = Json::array();
  for (const auto& [u, v] : device.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (device.calibration) {
    Json qubits = Json::array();
    for (const auto& q : device.calibration->qubits) {
      Json e{{"readout_error", q.readout_error}, {"sq_error", q.sq_error}};
      if (q.t1) e["t1"] = *q.t1;
      if (q.t2) e["t2"] = *q.t2;
      qubits.push_back(std::move(e));
    }
    Json cal_edges = Json::array();
    for (const auto& [pair, err] : device.calibration->edge_errors) {
      cal_edges.push_back({{"pair", {pair.first, pair.second}}, {"error", err}});
    }
    j["calibration"] = {{"qubits", std::move(qubits)}, {"edges", std::move(cal_edges)}};
  }
  return j;
}

Json layout_to_json(const Layout& layout) { return layout.assignment; }

Json cost_report_to_json(const CostReport& r) {
  return {{"layout", layout_to_json(r.layout)},
          {"cost", r.cost},
          {"gate_error_product", r.gate_error_product},
          {"measurement_error_product", r.measurement_error_product},
          {"gate_count", r.gate_count},
          {"measurement_count", r.measurement_count}};
}

Json routing_report_to_json(const RoutingReport& r) {
  Json j{{"swap_count", r.swap_count},
         {"cx_count", r.cx_count},
         {"depth", r.depth},
         {"initial_order", r.initial_order.map()},
         {"final_order", r.final_order.map()},
         {"zz_gates_placed", r.zz_gates_placed},
         {"layers_consumed", r.layers_consumed}};
  if (!r.strategy.empty()) {
    j["strategy"] = r.strategy;
    j["orders_evaluated"] = r.orders_evaluated;
  }
  if (r.cx_target) j["cx_target"] = *r.cx_target;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace aoqmap
