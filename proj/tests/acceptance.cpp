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

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exits 0 only if every failure is on the known-deviation list.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aoqmap/circuit.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/router.hpp"
#include "aoqmap/selection.hpp"
#include "aoqmap/simulator.hpp"
#include "aoqmap/swap_schedule.hpp"
#include "aoqmap/topology.hpp"
#include "oracles.hpp"

using namespace aoqmap;

namespace {

struct Outcome {
  bool pass = true;
  bool known = false;  // failure matches a documented deviation
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void fail(const std::string& line) {
    pass = false;
    details.push_back("mismatch: " + line);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ProblemHamiltonian random_full(int n, std::mt19937_64& rng, bool with_z = true) {
  std::uniform_real_distribution<double> u(-1, 1);
  ProblemHamiltonian h;
  h.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.zz.push_back({i, j, u(rng)});
  if (with_z)
    for (int i = 0; i < n; ++i) h.z.push_back({i, u(rng)});
  return h;
}

ProblemHamiltonian random_partial(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  ProblemHamiltonian h;
  h.n = n;
  while (h.zz.empty() && n >= 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) h.zz.push_back({i, j, u(rng)});
  }
  for (int i = 0; i < n; ++i) h.z.push_back({i, u(rng)});
  return h;
}

QaoaParams random_params(int p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 3.14159);
  QaoaParams q;
  for (int k = 0; k < p; ++k) {
    q.gammas.push_back(u(rng));
    q.betas.push_back(u(rng));
  }
  return q;
}

ProblemHamiltonian from_edges(int n, const std::vector<Edge>& edges) {
  ProblemHamiltonian h;
  h.n = n;
  for (auto [a, b] : edges) h.zz.push_back({a, b, 1.0});
  return h;
}

// --------------------------------------------------------------------------

Outcome layouts_table() {
  Outcome o;
  const auto g = builtin_device("27q-heavy-hex");
  struct Row {
    TemplateKind kind;
    int n;
    std::size_t want;
  };
  const std::vector<Row> rows{{TemplateKind::Linear, 3, 74},  {TemplateKind::Linear, 4, 80},
                              {TemplateKind::Linear, 5, 100}, {TemplateKind::Linear, 6, 104},
                              {TemplateKind::Linear, 7, 132}, {TemplateKind::T, 4, 48},
                              {TemplateKind::T, 5, 36},       {TemplateKind::T, 6, 64},
                              {TemplateKind::T, 7, 48},       {TemplateKind::H, 7, 56}};
  std::ostringstream line;
  for (const auto& r : rows) {
    const auto got = enumerate_layouts(make_template(r.kind, r.n), g).size();
    line << template_name(r.kind) << r.n << "=" << got << " ";
    if (got != r.want)
      o.fail(std::string(template_name(r.kind)) + "-" + std::to_string(r.n) + " got " +
             std::to_string(got) + " want " + std::to_string(r.want));
  }
  o.note(line.str());
  return o;
}

Outcome swap_reductions() {
  Outcome o;
  std::mt19937_64 rng(2);
  struct Row {
    TemplateKind kind;
    int n;
    double want;
    bool documented;  // known deviation when it misses
  };
  const std::vector<Row> rows{{TemplateKind::Linear, 3, 67, false}, {TemplateKind::Linear, 10, 20, false},
                              {TemplateKind::T, 4, 67, false},      {TemplateKind::T, 10, 29, false},
                              {TemplateKind::H, 6, 53, true},       {TemplateKind::H, 10, 36, true}};
  bool unexpected = false;
  for (const auto& r : rows) {
    const auto h = random_full(r.n, rng);
    const QaoaParams q{{0.4}, {0.3}};
    const auto routed = route_qaoa_subtop(h, q, r.kind);
    const auto base = swapnk_baseline(h, q);
    const double pct = 100.0 * (1.0 - static_cast<double>(routed.report.swap_count) /
                                          static_cast<double>(base.report.swap_count));
    const bool ok = std::abs(pct - r.want) <= 1.0;
    std::ostringstream s;
    s << template_name(r.kind) << " n=" << r.n << ": " << routed.report.swap_count << " vs "
      << base.report.swap_count << " swaps, " << fmt("%.1f", pct) << "% (want " << r.want << "% +-1)";
    if (ok) {
      o.note(s.str());
    } else {
      o.fail(s.str() + (r.documented ? " [documented]" : ""));
      unexpected = unexpected || !r.documented;
    }
  }
  o.known = !o.pass && !unexpected;
  return o;
}

Outcome vqe_law() {
  Outcome o;
  int checked = 0;
  for (int n = 3; n <= 10; ++n)
    for (int p = 1; p <= 4; ++p) {
      const auto r = route_vqe_linear(n, p, std::vector<double>((p + 1) * n, 0.25));
      const auto want = static_cast<std::size_t>(p * (n - 1) * (n - 1));
      ++checked;
      if (r.report.cx_count != want)
        o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + " cx=" + std::to_string(r.report.cx_count));
    }
  o.note(std::to_string(checked) + " (n,p) pairs checked");
  return o;
}

struct EquivalenceStats {
  double worst_hellinger = 0.0;
  double worst_fidelity = 1.0;
  int checks = 0;
};

Outcome equivalence() {
  Outcome o;
  EquivalenceStats st;
  std::mt19937_64 rng(4);
  auto check = [&](const RoutedCircuit& r, const Circuit& ref, const std::string& tag) {
    const auto v = verify(r, ref);
    ++st.checks;
    st.worst_hellinger = std::max(st.worst_hellinger, v.hellinger);
    st.worst_fidelity = std::min(st.worst_fidelity, v.fidelity);
    if (!(v.hellinger < 1e-6 && v.fidelity > 1 - 1e-9)) o.fail(tag + " hellinger " + fmt("%.3g", v.hellinger));
  };
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; p <= 3; ++p)
      for (int draw = 0; draw < 5; ++draw) {
        const std::string tag = " n=" + std::to_string(n) + " p=" + std::to_string(p);
        const auto h = random_full(n, rng);
        const auto q = random_params(p, rng);
        const auto ref = reference_circuit(h, q, ReferenceKind::Qaoa);
        check(route_qaoa_linear(h, q), ref, "linear" + tag);
        check(route_qaoa_linear(h, q, true), ref, "linear-mirror" + tag);
        check(swapnk_baseline(h, q), ref, "swapnk" + tag);
        for (auto kind : {TemplateKind::T, TemplateKind::H}) {
          if (n < minimum_qubits(kind)) continue;
          for (auto mode : {DepthMode::Repeat, DepthMode::MirrorAlternate})
            check(route_qaoa_subtop(h, q, kind, mode), ref,
                  std::string(template_name(kind)) + "-" + std::string(depth_mode_name(mode)) + tag);
        }
        const auto hp = random_partial(n, rng);
        const auto refp = reference_circuit(hp, q, ReferenceKind::Qaoa);
        for (auto kind : {TemplateKind::Linear, TemplateKind::T, TemplateKind::H}) {
          if (n < minimum_qubits(kind)) continue;
          check(route_qaoa_partial(hp, q, kind), refp, "partial-" + std::string(template_name(kind)) + tag);
        }
        std::uniform_real_distribution<double> u(-3, 3);
        std::vector<double> thetas((p + 1) * n);
        for (auto& t : thetas) t = u(rng);
        ProblemHamiltonian vh;
        vh.n = n;
        check(route_vqe_linear(n, p, thetas), reference_circuit(vh, {}, ReferenceKind::Vqe, thetas), "vqe" + tag);
      }
  o.note(std::to_string(st.checks) + " circuits, worst hellinger " + fmt("%.2e", st.worst_hellinger) +
         ", worst fidelity deficit " + fmt("%.2e", 1 - st.worst_fidelity));
  return o;
}

Outcome schedules() {
  Outcome o;
  int checks = 0;
  for (auto kind : {TemplateKind::Linear, TemplateKind::T, TemplateKind::H})
    for (int n = std::max(3, minimum_qubits(kind)); n <= 16; ++n) {
      const auto s = make_schedule(kind, n).truncated(layer_bound(kind, n));
      const auto closure = connectivity_closure(s, make_template(kind, n));
      ++checks;
      if (static_cast<int>(closure.size()) != n * (n - 1) / 2)
        o.fail(std::string(template_name(kind)) + " n=" + std::to_string(n) + " closure " +
               std::to_string(closure.size()));
    }
  for (int n = 3; n <= 16; ++n) {
    const auto s = linear_layers(n);
    const auto once = order_after(s, Permutation::identity(n));
    if (n % 2 == 1 && !order_after(s, once).is_identity()) o.fail("involution n=" + std::to_string(n));
    const int k = std::lcm(2 * n, n - 2) / (n - 2);
    Permutation p = Permutation::identity(n);
    for (int i = 0; i < k; ++i) p = order_after(s, p);
    if (!p.is_identity()) o.fail("period n=" + std::to_string(n));
    checks += 2;
  }
  o.note(std::to_string(checks) + " schedule properties checked");
  return o;
}

int partial_oracle(int n, TemplateKind kind, const std::set<Edge>& want) {
  if (kind == TemplateKind::Linear)
    return oracle::min_over_orders(n, [&](const std::vector<int>& o) { return oracle::chain_cx(n, want, o); });
  const auto tmpl = make_template(kind, n);
  const auto layers = make_schedule(kind, n).truncated(layer_bound(kind, n)).layers();
  return oracle::min_over_orders(
      n, [&](const std::vector<int>& o) { return oracle::branched_cx(n, tmpl.edges, layers, want, o); });
}

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

Outcome partial_optimality() {
  Outcome o;
  OrderStrategy exhaustive;
  exhaustive.kind = OrderStrategy::Kind::Exhaustive;
  const QaoaParams q{{0.5}, {0.2}};
  int graphs = 0, runs = 0;
  auto check = [&](int n, const std::vector<Edge>& edges) {
    ++graphs;
    const auto h = from_edges(n, edges);
    const std::set<Edge> want(edges.begin(), edges.end());
    for (auto kind : {TemplateKind::Linear, TemplateKind::T, TemplateKind::H}) {
      if (n < minimum_qubits(kind)) continue;
      ++runs;
      const int got = static_cast<int>(route_qaoa_partial(h, q, kind, exhaustive).report.cx_count);
      const int best = partial_oracle(n, kind, want);
      if (got != best) {
        std::ostringstream s;
        s << template_name(kind) << " n=" << n << " edges";
        for (auto [a, b] : edges) s << " " << a << "-" << b;
        s << ": router " << got << ", oracle " << best;
        o.fail(s.str());
      }
    }
  };
  for (int n = 2; n <= 5; ++n) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    for (unsigned mask = 1; mask < (1U << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1U) edges.push_back(all[k]);
      if (connected(n, edges)) check(n, edges);
    }
  }
  std::mt19937_64 rng(6);
  for (int found = 0; found < 50;) {
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (rng() % 2) edges.emplace_back(i, j);
    if (!connected(6, edges)) continue;
    check(6, edges);
    ++found;
  }
  o.note(std::to_string(graphs) + " graphs, " + std::to_string(runs) + " template runs");
  return o;
}

Circuit random_circuit(int n, std::mt19937_64& rng) {
  const std::vector<GateKind> kinds{GateKind::H,  GateKind::RX,   GateKind::RZ,     GateKind::RY,
                                    GateKind::CX, GateKind::ZZ,   GateKind::ZZSWAP, GateKind::CZ,
                                    GateKind::SWAP, GateKind::CZSWAP};
  Circuit c(n);
  const int len = 5 + static_cast<int>(rng() % 40);
  for (int k = 0; k < len; ++k) {
    const auto kind = kinds[rng() % kinds.size()];
    if (is_two_qubit(kind)) {
      const int a = static_cast<int>(rng() % (n - 1));
      c.append(rng() % 2 ? Gate::pair(kind, a, a + 1, 0.3) : Gate::pair(kind, a + 1, a, 0.3));
    } else {
      c.append(Gate::single(kind, static_cast<int>(rng() % n), 0.7));
    }
  }
  return c;
}

Calibration random_calibration(const CouplingGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 0.06);
  Calibration cal = Calibration::uniform(g, 0, 0, 0);
  for (auto& qc : cal.qubits) {
    qc.readout_error = u(rng);
    qc.sq_error = u(rng) / 20;
  }
  for (auto& [e, p] : cal.edge_errors) p = u(rng);
  return cal;
}

Outcome cost_function() {
  Outcome o;
  std::mt19937_64 rng(7);
  const auto g = builtin_device("27q-heavy-hex");
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto c = random_circuit(n, rng);
    const auto cal = random_calibration(g, rng);
    const auto layouts = enumerate_layouts(make_template(TemplateKind::Linear, n), g);
    const auto& layout = layouts[rng() % layouts.size()];
    // Direct product over the lowered gates in circuit order.
    double prod = 1.0;
    const auto basis = decompose_to_basis(c);
    for (const auto& gate : basis.gates()) {
      const int a = layout.assignment[gate.qubits[0]];
      if (gate.arity() == 2) {
        const int b = layout.assignment[gate.qubits[1]];
        prod *= 1.0 - cal.edge_errors.at({std::min(a, b), std::max(a, b)});
      } else {
        prod *= 1.0 - cal.qubits[a].sq_error;
      }
    }
    for (int k = 0; k < n; ++k) prod *= 1.0 - cal.qubits[layout.assignment[k]].readout_error;
    const double got = circuit_cost(c, layout, cal).cost;
    worst = std::max(worst, std::abs(got - (1.0 - prod)));
  }
  if (worst > 1e-12) o.fail("worst cost difference " + fmt("%.3g", worst));
  o.note("100 random pairs, worst difference " + fmt("%.2e", worst));

  const auto tmpl = make_template(TemplateKind::Linear, 3);
  int agree = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto cal = random_calibration(g, rng);
    const auto c = route_qaoa_linear(random_full(3, rng), {{0.4}, {0.3}}).circuit;
    const auto layouts = enumerate_layouts(tmpl, g);
    if (layouts.size() != 74) o.fail("expected 74 layouts");
    std::size_t arg = 0;
    double best = 2.0;
    for (std::size_t i = 0; i < layouts.size(); ++i) {
      const double v = circuit_cost(c, layouts[i], cal).cost;
      if (v < best) {
        best = v;
        arg = i;
      }
    }
    if (select_layout(c, tmpl, g, cal).layout == layouts[arg]) ++agree;
    else o.fail("select_layout disagrees with exhaustive argmin");
  }
  o.note("select_layout matched the 74-layout argmin " + std::to_string(agree) + "/10");
  return o;
}

// Three-asset portfolio with synthetic covariances and returns.
PortfolioSpec three_assets() {
  PortfolioSpec s;
  s.q = 0.33;
  s.budget = 2;
  s.penalty = 0.0;
  s.lambda = 20.97;
  s.sigma = {{0.040, 0.006, -0.004}, {0.006, 0.090, 0.012}, {-0.004, 0.012, 0.160}};
  s.mu = {0.08, 0.12, 0.10};
  return s;
}

double success_probability(const Distribution& d, const Extrema& ex) {
  double sp = 0.0;
  for (const auto& b : ex.optimal_bitstrings) sp += d[from_bitstring(b)];
  return sp;
}

Outcome noise_sanity() {
  Outcome o;
  std::mt19937_64 rng(8);

  // (a) zero noise changes nothing.
  bool a_ok = true;
  for (int n = 2; n <= 5; ++n) {
    const auto c = decompose_to_basis(route_qaoa_linear(random_full(n, rng), random_params(2, rng)).circuit);
    const auto traj = trajectory(c, NoiseModel{0.0, 0.0}, 1, 0);
    const auto clean = simulate(c);
    if (traj.amplitudes() != clean.amplitudes()) a_ok = false;
    if (sample(c, 4000, NoiseModel{0.0, 0.0}, 3) != sample(c, 4000, std::nullopt, 3)) a_ok = false;
  }
  if (!a_ok) o.fail("(a) zero-noise trajectories differ from the noiseless path");
  else o.note("(a) zero-noise trajectories and counts are bit-identical to the noiseless path");

  // (b) trajectory average against the density-matrix channel.
  Circuit c(2);
  c.append(Gate::single(GateKind::H, 0));
  c.append(Gate::pair(GateKind::CX, 0, 1));
  c.append(Gate::single(GateKind::RX, 1, 0.7));
  c.append(Gate::pair(GateKind::ZZ, 0, 1, 0.4));
  c.append(Gate::single(GateKind::RY, 0, 1.1));
  c.append(Gate::pair(GateKind::CX, 1, 0));
  const std::vector<oracle::G> gs{{"h", {0}},          {"cx", {0, 1}},     {"rx", {1}, 0.7},
                                  {"zz", {0, 1}, 0.4}, {"ry", {0}, 1.1},   {"cx", {1, 0}}};
  const double eps = 0.05;
  const auto rho = oracle::noisy_density(gs, 2, eps, eps / 10);
  auto obs = [](std::size_t x) {
    const double z0 = (x & 1) ? -1 : 1, z1 = (x & 2) ? -1 : 1;
    return z0 + z0 * z1;
  };
  double exact = 0.0;
  for (std::size_t x = 0; x < 4; ++x) exact += rho[x][x].real() * obs(x);
  const int trials = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto s = trajectory(c, NoiseModel{eps, {}}, 11, t);
    double v = 0.0;
    for (std::size_t x = 0; x < 4; ++x) v += std::norm(s.amplitudes()[x]) * obs(x);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / trials;
  const double sigma = std::sqrt(std::max(0.0, sum2 / trials - mean * mean) / trials);
  const std::string b = "(b) trajectories " + fmt("%.5f", mean) + " vs density matrix " + fmt("%.5f", exact) +
                        " (sigma " + fmt("%.5f", sigma) + ")";
  if (std::abs(mean - exact) > 3 * sigma) o.fail(b);
  else o.note(b);

  // (c) success probability against depth at eps = 0.005.
  const auto h = build_portfolio_hamiltonian(three_assets());
  const auto ex = brute_force_extrema(h);
  double g1 = 0.0, b1 = 0.0, best = -1.0;
  for (int i = 1; i <= 60; ++i)
    for (int j = 1; j <= 60; ++j) {
      const double g = 8.0 * i / 60.0, bb = 3.14159 * j / 60.0;
      const double sp = success_probability(distribution(reference_circuit(h, {{g}, {bb}}, ReferenceKind::Qaoa)), ex);
      if (sp > best) {
        best = sp;
        g1 = g;
        b1 = bb;
      }
    }
  const std::uint64_t shots = 10000;
  std::vector<double> sps;
  std::ostringstream trend;
  for (int p = 1; p <= 7; ++p) {
    QaoaParams params{{g1}, {b1}};
    params.gammas.resize(p, 0.0);
    params.betas.resize(p, 0.0);
    const auto routed = decompose_to_basis(route_qaoa_linear(h, params).circuit);
    const auto counts = sample(routed, shots, NoiseModel{0.005, {}}, 100 + p);
    sps.push_back(metrics(h, counts, ex).success_probability);
    trend << fmt("%.4f", sps.back()) << " ";
  }
  bool c_ok = true;
  for (std::size_t k = 0; k + 1 < sps.size(); ++k) {
    const double s1 = std::sqrt(sps[k] * (1 - sps[k]) / shots);
    const double s2 = std::sqrt(sps[k + 1] * (1 - sps[k + 1]) / shots);
    if (sps[k + 1] > sps[k] + 2 * std::sqrt(s1 * s1 + s2 * s2)) c_ok = false;
  }
  const std::string cline = "(c) SP for p=1..7: " + trend.str() + "(gamma " + fmt("%.4f", g1) + ", beta " +
                            fmt("%.4f", b1) + ", noiseless p=1 SP " + fmt("%.4f", best) + ")";
  if (c_ok) o.note(cline);
  else o.fail(cline);

  // (d) routed CX never exceeds the swap network.
  int instances = 0;
  bool d_ok = true;
  for (int n = 3; n <= 10; ++n)
    for (int p = 1; p <= 3; ++p) {
      const auto hh = random_full(n, rng);
      const auto q = random_params(p, rng);
      const auto base = swapnk_baseline(hh, q).report.cx_count;
      std::vector<std::size_t> cx{route_qaoa_linear(hh, q).report.cx_count,
                                  route_qaoa_linear(hh, q, true).report.cx_count};
      if (n >= 4) cx.push_back(route_qaoa_subtop(hh, q, TemplateKind::T).report.cx_count);
      if (n >= 6) cx.push_back(route_qaoa_subtop(hh, q, TemplateKind::H).report.cx_count);
      for (auto v : cx) {
        ++instances;
        if (v > base) d_ok = false;
      }
    }
  if (d_ok) o.note("(d) " + std::to_string(instances) + " routed instances at or below the swap-network CX");
  else o.fail("(d) a routed circuit used more CX than the swap network");
  return o;
}

Outcome hellinger_values() {
  Outcome o;
  const Distribution p{0.5, 0.5}, q{1.0, 0.0};
  const double same = hellinger(p, p);
  const double disjoint = hellinger({1.0, 0.0}, {0.0, 1.0});
  const double mixed = hellinger(p, q);
  if (same != 0.0) o.fail("H(P,P) = " + fmt("%.3g", same));
  if (std::abs(disjoint - 1.0) > 1e-12) o.fail("disjoint = " + fmt("%.15f", disjoint));
  if (std::abs(mixed - std::sqrt(1 - std::sqrt(0.5))) > 1e-12) o.fail("mixed = " + fmt("%.15f", mixed));
  o.note("H(P,P)=" + fmt("%g", same) + " disjoint=" + fmt("%.12f", disjoint) + " mixed=" + fmt("%.12f", mixed));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    Outcome (*fn)();
  };
  const std::vector<Criterion> criteria{
      {1, "layout counts on the 27-qubit heavy-hex device", 5, layouts_table},
      {2, "swap reduction against the swap network", 1, swap_reductions},
      {3, "VQE CX count p(n-1)^2", 1, vqe_law},
      {4, "routed circuits equal their all-to-all reference", 120, equivalence},
      {5, "swap schedule closure, involution and period", 5, schedules},
      {6, "partial-connectivity order search is optimal", 120, partial_optimality},
      {7, "layout cost function and selection", 60, cost_function},
      {8, "noise model sanity", 300, noise_sanity},
      {9, "Hellinger distance unit values", 1, hellinger_values},
  };
  bool unexpected = false;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.fail("took " + fmt("%.2f", secs) + " s, limit " + fmt("%.0f", c.limit_s) + " s");
      o.known = false;
    }
    const char* status = o.pass ? "PASS" : o.known ? "FAIL (known deviation, see README)" : "FAIL";
    std::cout << status << " criterion " << c.id << ": " << c.title << " (" << fmt("%.2f", secs) << " s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!o.pass && !o.known) unexpected = true;
  }
  return unexpected ? 1 : 0;
}
