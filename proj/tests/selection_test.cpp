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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "aoqmap/error.hpp"
#include "aoqmap/router.hpp"
#include "aoqmap/selection.hpp"

namespace aoqmap {
namespace {

Calibration two_qubit_cal(double edge, double readout) {
  Calibration cal;
  cal.qubits = {{readout, 0.0, {}, {}}, {readout, 0.0, {}, {}}};
  cal.edge_errors[{0, 1}] = edge;
  return cal;
}

const std::vector<int> kNone{};

TEST(Cost, EmptyCircuit) {
  const auto r = circuit_cost(Circuit(2), Layout{{0, 1}}, two_qubit_cal(0.01, 0.02), kNone);
  EXPECT_DOUBLE_EQ(r.cost, 0.0);
  EXPECT_EQ(r.gate_count, 0u);
}

TEST(Cost, SingleGate) {
  Circuit c(2);
  c.append(Gate::pair(GateKind::CX, 0, 1));
  EXPECT_NEAR(circuit_cost(c, Layout{{0, 1}}, two_qubit_cal(0.01, 0.02), kNone).cost, 0.01, 1e-15);
}

TEST(Cost, GatesAndMeasurement) {
  Circuit c(2);
  c.append(Gate::pair(GateKind::CX, 0, 1));
  c.append(Gate::pair(GateKind::CX, 1, 0));
  const std::vector<int> measured{0};
  const auto r = circuit_cost(c, Layout{{0, 1}}, two_qubit_cal(0.01, 0.02), measured);
  EXPECT_NEAR(r.cost, 0.039502, 1e-12);
  EXPECT_EQ(r.measurement_count, 1u);
  // Default measures every position.
  EXPECT_NEAR(circuit_cost(c, Layout{{0, 1}}, two_qubit_cal(0.01, 0.02)).cost,
              1 - 0.99 * 0.99 * 0.98 * 0.98, 1e-12);
}

TEST(Cost, AppliedAfterDecomposition) {
  Circuit c(2);
  c.append(Gate::pair(GateKind::ZZSWAP, 0, 1, 0.4));
  auto cal = two_qubit_cal(0.01, 0.0);
  cal.qubits[1].sq_error = 0.001;
  const auto r = circuit_cost(c, Layout{{0, 1}}, cal, kNone);
  EXPECT_EQ(r.gate_count, 4u);
  EXPECT_NEAR(r.cost, 1 - std::pow(0.99, 3) * 0.999, 1e-12);
}

TEST(Cost, MissingCalibration) {
  const CouplingGraph g(3, {{0, 1}, {1, 2}});
  Calibration cal = Calibration::uniform(g, 0.01, 0.001, 0.01);
  cal.edge_errors.erase({1, 2});
  Circuit c(2);
  c.append(Gate::pair(GateKind::CX, 0, 1));
  try {
    circuit_cost(c, Layout{{1, 2}}, cal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingCalibration);
  }
  EXPECT_THROW(cal.validate(g), Error);
}

TEST(Cost, RejectsOutOfRangeRates) {
  const CouplingGraph g(2, {{0, 1}});
  auto cal = Calibration::uniform(g, 0.01, 0.001, 0.01);
  EXPECT_NO_THROW(cal.validate(g));
  cal.edge_errors[{0, 1}] = 1.5;
  EXPECT_THROW(cal.validate(g), Error);
}

TEST(Cost, MonotoneInGates) {
  const auto g = builtin_device("7q-h");
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.001, 0.05);
  Calibration cal = Calibration::uniform(g, 0.02, 0.001, 0.01);
  for (auto& [e, p] : cal.edge_errors) p = u(rng);
  Circuit c(3);
  double last = circuit_cost(c, Layout{{0, 1, 2}}, cal).cost;
  for (int i = 0; i < 12; ++i) {
    if (i % 3 == 0) c.append(Gate::single(GateKind::H, i % 3));
    else c.append(Gate::pair(GateKind::CX, i % 2, i % 2 + 1));
    const double now = circuit_cost(c, Layout{{0, 1, 2}}, cal).cost;
    EXPECT_GT(now, last);
    last = now;
  }
}

TEST(Cost, ReorderInvariant) {
  const auto g = builtin_device("7q-h");
  const auto cal = Calibration::uniform(g, 0.03, 0.002, 0.015);
  Circuit a(3), b(3);
  const std::vector<Gate> gates{Gate::pair(GateKind::CX, 0, 1), Gate::single(GateKind::RX, 2, 0.3),
                                Gate::pair(GateKind::CZ, 1, 2), Gate::single(GateKind::H, 0)};
  for (const auto& x : gates) a.append(x);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) b.append(*it);
  EXPECT_EQ(circuit_cost(a, Layout{{0, 1, 3}}, cal).cost, circuit_cost(b, Layout{{0, 1, 3}}, cal).cost);
}

Circuit three_qubit_qaoa() {
  ProblemHamiltonian h;
  h.n = 3;
  h.zz = {{0, 1, 0.5}, {0, 2, -0.3}, {1, 2, 0.8}};
  return route_qaoa_linear(h, {{0.4}, {0.7}}).circuit;
}

TEST(Select, UniformPicksFirst) {
  const auto g = builtin_device("27q-heavy-hex");
  const auto tmpl = make_template(TemplateKind::Linear, 3);
  const auto best = select_layout(three_qubit_qaoa(), tmpl, g, Calibration::uniform(g, 0.02, 0.001, 0.01));
  EXPECT_EQ(best.layout, enumerate_layouts(tmpl, g).front());
}

TEST(Select, AvoidsBadEdge) {
  const auto g = builtin_device("27q-heavy-hex");
  const auto tmpl = make_template(TemplateKind::Linear, 3);
  auto cal = Calibration::uniform(g, 0.02, 0.001, 0.01);
  const auto first = enumerate_layouts(tmpl, g).front();
  const Edge bad{std::min(first.assignment[0], first.assignment[1]),
                 std::max(first.assignment[0], first.assignment[1])};
  cal.edge_errors[bad] = 0.5;
  const auto best = select_layout(three_qubit_qaoa(), tmpl, g, cal);
  for (auto [a, b] : tmpl.edges) {
    const Edge used{std::min(best.layout.assignment[a], best.layout.assignment[b]),
                    std::max(best.layout.assignment[a], best.layout.assignment[b])};
    EXPECT_NE(used, bad);
  }
}

TEST(Select, MatchesExhaustiveArgmin) {
  const auto g = builtin_device("27q-heavy-hex");
  const auto tmpl = make_template(TemplateKind::Linear, 3);
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.001, 0.05);
  for (int trial = 0; trial < 5; ++trial) {
    auto cal = Calibration::uniform(g, 0.0, 0.0, 0.0);
    for (auto& q : cal.qubits) {
      q.readout_error = u(rng);
      q.sq_error = u(rng) / 10;
    }
    for (auto& [e, p] : cal.edge_errors) p = u(rng);
    const auto c = three_qubit_qaoa();
    const auto layouts = enumerate_layouts(tmpl, g);
    ASSERT_EQ(layouts.size(), 74u);
    double best = 2.0;
    Layout arg;
    for (const auto& l : layouts) {
      const double v = circuit_cost(c, l, cal).cost;
      if (v < best) {
        best = v;
        arg = l;
      }
    }
    const auto got = select_layout(c, tmpl, g, cal);
    EXPECT_EQ(got.layout, arg);
    EXPECT_DOUBLE_EQ(got.cost, best);
  }
}

TEST(Select, NotEmbeddable) {
  const CouplingGraph g(3, {{0, 1}, {1, 2}});
  try {
    select_layout(Circuit(4), make_template(TemplateKind::T, 4), g, Calibration::uniform(g, 0, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotEmbeddable);
  }
}

ProblemHamiltonian edge_h() {
  ProblemHamiltonian h;
  h.n = 2;
  h.zz = {{0, 1, 1.0}};
  return h;
}

TEST(Postselect, SingleVariant) {
  const auto r = postselect({{"L", {{"00", 3}}}}, edge_h());
  EXPECT_EQ(r.index, 0u);
  EXPECT_EQ(r.label, "L");
  EXPECT_DOUBLE_EQ(r.expectation, 1.0);
}

TEST(Postselect, LowerEnergyWins) {
  const auto r = postselect({{"L", {{"00", 5}, {"01", 5}}}, {"T", {{"01", 9}, {"11", 1}}}}, edge_h());
  EXPECT_EQ(r.label, "T");
  EXPECT_NEAR(r.expectation, -0.8, 1e-12);
}

TEST(Postselect, TiesKeepInputOrder) {
  const auto r = postselect({{"a", {{"01", 1}}}, {"b", {{"10", 4}}}}, edge_h());
  EXPECT_EQ(r.index, 0u);
  EXPECT_THROW(postselect({}, edge_h()), Error);
}

TEST(Postselect, AgreesWithRatioOrdering) {
  const auto h = build_maxcut_hamiltonian({{0, 1}, {1, 2}, {0, 2}}, 3);
  const auto ex = brute_force_extrema(h);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<std::string, Counts>> v;
    for (const char* name : {"L", "LS", "T"}) {
      Counts c;
      for (int k = 0; k < 8; ++k) c[to_bitstring(k, 3)] = 1 + rng() % 20;
      v.emplace_back(name, c);
    }
    std::size_t best_ar = 0;
    double ar = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double r = metrics(h, v[i].second, ex).approximation_ratio;
      if (r > ar) {
        ar = r;
        best_ar = i;
      }
    }
    // No budget, so the ratio is an affine decreasing map of the energy.
    EXPECT_EQ(postselect(v, h).index, best_ar);
  }
}

}  // namespace
}  // namespace aoqmap
