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

#include "aoqmap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "aoqmap/circuit.hpp"
#include "aoqmap/error.hpp"
#include "aoqmap/hamiltonian.hpp"
#include "aoqmap/router.hpp"
#include "aoqmap/selection.hpp"
#include "aoqmap/serialization.hpp"
#include "aoqmap/simulator.hpp"
#include "aoqmap/swap_schedule.hpp"
#include "aoqmap/topology.hpp"

namespace aoqmap::cli {

namespace fs = std::filesystem;

namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void input_error(const std::string& message) {
  throw Failure{kExitInputError, message};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      input_error(std::string("cannot parse ") + what + " value '" + item + "'");
    }
  }
  return out;
}

std::vector<Edge> parse_edges(const std::string& text) {
  if (fs::exists(text)) {
    std::vector<Edge> edges;
    for (const auto& e : read_json_file(text)) {
      const auto pair = e.get<std::vector<int>>();
      if (pair.size() != 2) input_error("edge must have two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
    return edges;
  }
  std::vector<Edge> edges;
  for (const auto& item : split(text, ',')) {
    const auto ends = split(item, '-');
    if (ends.size() != 2) input_error("edge '" + item + "' is not of the form u-v");
    try {
      edges.emplace_back(std::stoi(ends[0]), std::stoi(ends[1]));
    } catch (const std::exception&) {
      input_error("edge '" + item + "' is not of the form u-v");
    }
  }
  return edges;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("AOQMAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      input_error(std::string("AOQMAP_SEED is not an integer: ") + env);
    }
  }
  return 42;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Problems

struct ProblemOptions {
  std::string hamiltonian_file;
  std::string portfolio_file;
  std::string maxcut_edges;
  std::string qaoa;
  bool vqe = false;
  int n = 0;
  int p = 1;
  std::string gammas;
  std::string betas;
  std::string thetas;
  std::string params_file;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& o) {
  cmd->add_option("--hamiltonian", o.hamiltonian_file, "Hamiltonian JSON file");
  cmd->add_option("--portfolio-spec", o.portfolio_file, "portfolio spec JSON file");
  cmd->add_option("--maxcut-edges", o.maxcut_edges,
                  "MaxCut edges as u-v,u-v,... or a JSON file of pairs");
  cmd->add_option("--qaoa", o.qaoa, "random fully connected QAOA problem (value: full)");
  cmd->add_flag("--vqe", o.vqe, "hardware-efficient VQE ansatz");
  cmd->add_option("--n", o.n, "qubit count for generated problems");
  cmd->add_option("--p", o.p, "ansatz depth")->check(CLI::PositiveNumber);
  cmd->add_option("--gammas", o.gammas, "comma-separated QAOA gammas");
  cmd->add_option("--betas", o.betas, "comma-separated QAOA betas");
  cmd->add_option("--thetas", o.thetas, "comma-separated VQE angles, (p+1)*n values");
  cmd->add_option("--params", o.params_file, "JSON file with gammas/betas or thetas");
}

struct Problem {
  std::string kind;  // qaoa, maxcut or vqe
  ProblemHamiltonian h;
  QaoaParams params;
  std::vector<double> thetas;
  int p = 1;
  std::vector<std::string> inputs;

  Json to_json() const {
    Json j{{"kind", kind}, {"p", p}};
    if (kind == "vqe") {
      j["n"] = h.n;
      j["thetas"] = thetas;
    } else {
      j["hamiltonian"] = hamiltonian_to_json(h);
      j["gammas"] = params.gammas;
      j["betas"] = params.betas;
    }
    return j;
  }

  static Problem from_json(const Json& j) {
    Problem pr;
    pr.kind = j.at("kind").get<std::string>();
    pr.p = j.at("p").get<int>();
    if (pr.kind == "vqe") {
      pr.h.n = j.at("n").get<int>();
      pr.thetas = j.at("thetas").get<std::vector<double>>();
    } else if (pr.kind == "qaoa" || pr.kind == "maxcut") {
      pr.h = hamiltonian_from_json(j.at("hamiltonian"));
      pr.params = QaoaParams{j.at("gammas").get<std::vector<double>>(),
                             j.at("betas").get<std::vector<double>>()};
    } else {
      input_error("unknown problem kind '" + pr.kind + "'");
    }
    return pr;
  }
};

Problem build_problem(const ProblemOptions& o, std::uint64_t seed) {
  const int sources = !o.hamiltonian_file.empty() + !o.portfolio_file.empty() +
                      !o.maxcut_edges.empty() + !o.qaoa.empty() + o.vqe;
  if (sources != 1) {
    input_error("give exactly one of --hamiltonian, --portfolio-spec, "
                "--maxcut-edges, --qaoa full, --vqe");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);

  Problem pr;
  pr.p = o.p;
  if (o.vqe) {
    if (o.n < 2) input_error("--vqe needs --n >= 2");
    pr.kind = "vqe";
    pr.h.n = o.n;
  } else if (!o.qaoa.empty()) {
    if (o.qaoa != "full") input_error("--qaoa accepts only 'full'");
    if (o.n < 2) input_error("--qaoa full needs --n >= 2");
    pr.kind = "qaoa";
    pr.h.n = o.n;
    for (int i = 0; i < o.n; ++i) {
      for (int j = i + 1; j < o.n; ++j) pr.h.zz.push_back({i, j, coeff(rng)});
    }
    for (int i = 0; i < o.n; ++i) pr.h.z.push_back({i, coeff(rng)});
  } else if (!o.maxcut_edges.empty()) {
    pr.kind = "maxcut";
    const auto edges = parse_edges(o.maxcut_edges);
    int n = o.n;
    for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
    pr.h = build_maxcut_hamiltonian(edges, n);
    if (fs::exists(o.maxcut_edges)) pr.inputs.push_back(o.maxcut_edges);
  } else if (!o.hamiltonian_file.empty()) {
    pr.kind = "qaoa";
    pr.h = hamiltonian_from_json(read_json_file(o.hamiltonian_file));
    pr.inputs.push_back(o.hamiltonian_file);
  } else {
    pr.kind = "qaoa";
    pr.h = build_portfolio_hamiltonian(portfolio_from_json(read_json_file(o.portfolio_file)));
    pr.inputs.push_back(o.portfolio_file);
  }

  Json file_params;
  if (!o.params_file.empty()) {
    file_params = read_json_file(o.params_file);
    pr.inputs.push_back(o.params_file);
  }
  if (pr.kind == "vqe") {
    if (!o.thetas.empty()) {
      pr.thetas = parse_reals(o.thetas, "theta");
    } else if (file_params.contains("thetas")) {
      pr.thetas = file_params["thetas"].get<std::vector<double>>();
    } else {
      std::uniform_real_distribution<double> full_turn(0.0, 2.0 * std::numbers::pi);
      for (int i = 0; i < (pr.p + 1) * pr.h.n; ++i) pr.thetas.push_back(full_turn(rng));
    }
    if (pr.thetas.size() != static_cast<std::size_t>((pr.p + 1) * pr.h.n)) {
      input_error("VQE needs (p+1)*n = " + std::to_string((pr.p + 1) * pr.h.n) +
                  " angles, got " + std::to_string(pr.thetas.size()));
    }
  } else {
    if (!o.gammas.empty() || !o.betas.empty()) {
      pr.params = QaoaParams{parse_reals(o.gammas, "gamma"), parse_reals(o.betas, "beta")};
    } else if (file_params.contains("gammas")) {
      pr.params = qaoa_params_from_json(file_params);
    } else {
      for (int k = 0; k < pr.p; ++k) {
        pr.params.gammas.push_back(angle(rng));
        pr.params.betas.push_back(angle(rng));
      }
    }
    pr.params.validate();
    pr.p = pr.params.depth();
  }
  return pr;
}

Circuit reference_for(const Problem& pr) {
  if (pr.kind == "vqe") return reference_circuit(pr.h, {}, ReferenceKind::Vqe, pr.thetas);
  return reference_circuit(pr.h, pr.params,
                           pr.kind == "maxcut" ? ReferenceKind::MaxCut : ReferenceKind::Qaoa);
}

// ---------------------------------------------------------------------------
// Routing

struct RouteOptions {
  std::string subtopology = "linear";
  bool mirror = false;
  std::string order_strategy = "auto";
  std::size_t samples = 5000;
};

std::vector<std::string> expand_subtopologies(const std::string& request, const Problem& pr) {
  if (request != "all") return {request};
  std::vector<std::string> out;
  for (auto kind : {TemplateKind::Linear, TemplateKind::T, TemplateKind::H}) {
    if (pr.kind == "vqe" && kind != TemplateKind::Linear) continue;
    if (pr.h.n >= minimum_qubits(kind)) out.emplace_back(template_name(kind));
  }
  return out;
}

RoutedCircuit route_problem(const Problem& pr, const std::string& sub,
                            const RouteOptions& ro, std::uint64_t seed) {
  if (pr.kind == "vqe") {
    if (sub != "linear") {
      input_error("VQE routing is available on the linear subtopology only");
    }
    return route_vqe_linear(pr.h.n, pr.p, pr.thetas);
  }
  if (sub == "swapnk") return swapnk_baseline(pr.h, pr.params);
  const TemplateKind kind = parse_template_kind(sub);
  if (pr.h.n < minimum_qubits(kind)) {
    throw Error(ErrorKind::kTemplateTooSmall,
                sub + " subtopology needs at least " +
                    std::to_string(minimum_qubits(kind)) + " qubits, problem has " +
                    std::to_string(pr.h.n));
  }
  if (pr.h.fully_connected()) {
    return route_qaoa_subtop(pr.h, pr.params, kind,
                             ro.mirror ? DepthMode::MirrorAlternate : DepthMode::Repeat);
  }
  OrderStrategy strategy;
  strategy.samples = ro.samples;
  strategy.seed = seed;
  if (ro.order_strategy == "exhaustive") {
    strategy.kind = OrderStrategy::Kind::Exhaustive;
  } else if (ro.order_strategy == "sampled") {
    strategy.kind = OrderStrategy::Kind::Sampled;
  } else if (ro.order_strategy != "auto") {
    input_error("--order-strategy must be auto, exhaustive or sampled");
  }
  return route_qaoa_partial(pr.h, pr.params, kind, strategy);
}

Json routed_to_json(const RoutedCircuit& rc, const Problem& pr, const std::string& sub) {
  Json j = circuit_to_json(rc.circuit);
  j["template"] = {{"kind", sub == "swapnk" ? "linear" : sub}, {"n", rc.tmpl.n}};
  j["subtopology"] = sub;
  j["depth_mode"] = std::string(depth_mode_name(rc.schedule_kind));
  j["problem"] = pr.to_json();
  j["report"] = routing_report_to_json(rc.report);
  return j;
}

// ---------------------------------------------------------------------------
// Output plumbing

struct Output {
  explicit Output(std::ostream& stream) : out(stream) {}

  std::ostream& out;
  bool json = false;
  std::string dir;
  Json manifest;
  std::vector<std::string> artifacts;

  void begin(const std::string& command, std::uint64_t seed) {
    manifest = Json{{"command", command}, {"tool_version", kToolVersion}, {"seed", seed}};
    manifest["inputs"] = Json::array();
    if (!dir.empty()) fs::create_directories(dir);
  }
  void input(const std::string& path) { manifest["inputs"].push_back(path); }
  void write(const std::string& name, const std::string& text) {
    if (dir.empty()) return;
    write_text_file((fs::path(dir) / name).string(), text);
    artifacts.push_back(name);
  }
  void finish() {
    if (dir.empty()) return;
    manifest["artifacts"] = artifacts;
    write_text_file((fs::path(dir) / "manifest.json").string(), manifest.dump(2));
  }
};

void add_common(CLI::App* cmd, Output& o, std::optional<std::uint64_t>& seed) {
  cmd->add_flag("--json", o.json, "machine-readable output on stdout");
  cmd->add_option("--out", o.dir, "directory for artifacts and manifest.json");
  cmd->add_option("--seed", seed, "RNG seed (else $AOQMAP_SEED, else 42)");
}

std::string pct(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << x << '%';
  return os.str();
}

double reduction(double variant, double baseline) {
  return baseline == 0.0 ? 0.0 : 100.0 * (1.0 - variant / baseline);
}

CouplingGraph load_graph(const std::string& spec, Device* device_out = nullptr) {
  Device d;
  if (spec.rfind("builtin:", 0) == 0) {
    d.name = spec.substr(8);
    d.graph = builtin_device(d.name);
  } else {
    d = device_from_json(read_json_file(spec));
  }
  if (device_out) *device_out = d;
  return d.graph;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_route(const ProblemOptions& po, const RouteOptions& ro, Output& o,
              std::uint64_t seed) {
  const Problem pr = build_problem(po, seed);
  o.begin("route", seed);
  for (const auto& in : pr.inputs) o.input(in);
  Json results = Json::array();
  for (const auto& sub : expand_subtopologies(ro.subtopology, pr)) {
    const RoutedCircuit rc = route_problem(pr, sub, ro, seed);
    const Json cj = routed_to_json(rc, pr, sub);
    o.write(sub + ".circuit.json", cj.dump(2));
    o.write(sub + ".qasm", emit_qasm(decompose_to_basis(rc.circuit)));
    o.write(sub + ".report.json", cj["report"].dump(2));
    results.push_back({{"subtopology", sub}, {"report", cj["report"]}});
    if (!o.json) {
      const auto& r = rc.report;
      o.out << sub << ": swaps=" << r.swap_count << " cx=" << r.cx_count
            << " depth=" << r.depth << " final_order=" << join_ints(r.final_order.map())
            << '\n';
    }
  }
  o.finish();
  if (o.json) {
    o.out << Json{{"command", "route"}, {"seed", seed}, {"problem", pr.to_json()},
                  {"results", results}}
                 .dump(2)
          << '\n';
  }
  return kExitOk;
}

int cmd_layouts(const std::string& device, const std::string& tmpl_name, int n,
                bool list, Output& o, std::uint64_t seed) {
  const CouplingGraph graph = load_graph(device);
  o.begin("layouts", seed);
  o.input(device);
  const SubtopologyTemplate tmpl = make_template(parse_template_kind(tmpl_name), n);
  const auto layouts = enumerate_layouts(tmpl, graph);
  Json j{{"command", "layouts"}, {"device", device}, {"template", tmpl_name},
         {"n", n}, {"count", layouts.size()}};
  if (list) {
    Json arr = Json::array();
    for (const auto& l : layouts) arr.push_back(layout_to_json(l));
    j["layouts"] = std::move(arr);
  }
  o.write("layouts.json", j.dump(2));
  o.finish();
  if (o.json) {
    o.out << j.dump(2) << '\n';
  } else {
    o.out << "layouts: " << layouts.size() << '\n';
    if (list) {
      for (const auto& l : layouts) o.out << join_ints(l.assignment) << '\n';
    }
  }
  return kExitOk;
}

int cmd_select(const std::string& circuit_file, const std::string& device,
               bool table, Output& o, std::uint64_t seed) {
  const Json cj = read_json_file(circuit_file);
  const Circuit circuit = circuit_from_json(cj);
  Device dev;
  const CouplingGraph graph = load_graph(device, &dev);
  if (!dev.calibration) {
    throw Error(ErrorKind::kMissingCalibration,
                "device '" + device + "' carries no calibration data");
  }
  o.begin("select", seed);
  o.input(circuit_file);
  o.input(device);
  TemplateKind kind = TemplateKind::Linear;
  if (cj.contains("template")) kind = parse_template_kind(cj["template"]["kind"].get<std::string>());
  const SubtopologyTemplate tmpl = make_template(kind, circuit.num_qubits());
  const auto costs = score_layouts(circuit, tmpl, graph, *dev.calibration);
  const CostReport best = select_layout(circuit, tmpl, graph, *dev.calibration);
  Json j{{"command", "select"}, {"template", std::string(template_name(kind))},
         {"candidates", costs.size()}, {"selected", cost_report_to_json(best)}};
  if (table) {
    Json arr = Json::array();
    for (const auto& c : costs) arr.push_back(cost_report_to_json(c));
    j["table"] = std::move(arr);
  }
  o.write("selection.json", j.dump(2));
  o.finish();
  if (o.json) {
    o.out << j.dump(2) << '\n';
  } else {
    o.out << "selected layout " << join_ints(best.layout.assignment) << " cost="
          << std::setprecision(12) << best.cost << " (of " << costs.size() << ")\n";
    if (table) {
      for (const auto& c : costs) {
        o.out << "  " << join_ints(c.layout.assignment) << ' ' << c.cost << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& circuit_file, Output& o, std::ostream& err,
               std::uint64_t seed) {
  const Json cj = read_json_file(circuit_file);
  if (!cj.contains("problem")) {
    input_error("circuit file has no 'problem' record to rebuild the reference from");
  }
  const Circuit circuit = circuit_from_json(cj);
  o.begin("verify", seed);
  o.input(circuit_file);
  Json j{{"command", "verify"}, {"circuit", circuit_file}, {"n", circuit.num_qubits()}};
  int code = kExitOk;
  if (circuit.num_qubits() > kMaxSimulatedQubits) {
    j["status"] = "skipped";
    j["reason"] = "n exceeds the simulator cap of " + std::to_string(kMaxSimulatedQubits);
    err << "warning: verification skipped, " << circuit.num_qubits()
        << " qubits exceeds the simulator cap\n";
  } else {
    const Problem pr = Problem::from_json(cj["problem"]);
    const VerifyReport r = verify(circuit, reference_for(pr));
    j["status"] = r.pass ? "pass" : "fail";
    j["hellinger"] = r.hellinger;
    j["fidelity"] = r.fidelity;
    if (!r.pass) code = kExitVerifyFailed;
  }
  o.write("verify.json", j.dump(2));
  o.finish();
  if (o.json) {
    o.out << j.dump(2) << '\n';
  } else if (j["status"] == "skipped") {
    o.out << "verify: skipped\n";
  } else {
    o.out << "verify: " << j["status"].get<std::string>() << " hellinger="
          << std::setprecision(6) << j["hellinger"].get<double>()
          << " fidelity=" << std::setprecision(15) << j["fidelity"].get<double>() << '\n';
  }
  return code;
}

struct Tally {
  std::string label;
  std::size_t swaps;
  std::size_t cx;
  std::size_t depth;
};

Tally tally_of(const std::string& label, const Circuit& c) {
  std::size_t swaps = 0;
  for (const auto& g : c.gates()) swaps += exchanges_qubits(g.kind);
  const GateCounts counts = gate_counts(c);
  return {label, swaps, counts.cx, counts.depth};
}

int cmd_compare(const ProblemOptions& po, const RouteOptions& ro,
                const std::string& baseline_file,
                const std::vector<std::string>& variant_files, Output& o,
                std::uint64_t seed) {
  o.begin("compare", seed);
  Tally base;
  std::vector<Tally> variants;
  if (!baseline_file.empty()) {
    if (variant_files.empty()) input_error("--baseline needs at least one --variant");
    const Json bj = read_json_file(baseline_file);
    o.input(baseline_file);
    base = tally_of("baseline", circuit_from_json(bj));
    for (const auto& f : variant_files) {
      const Json vj = read_json_file(f);
      o.input(f);
      if (bj.contains("problem") && vj.contains("problem") && bj["problem"] != vj["problem"]) {
        input_error("'" + f + "' routes a different problem than the baseline");
      }
      variants.push_back(tally_of(vj.value("subtopology", fs::path(f).stem().string()),
                                  circuit_from_json(vj)));
    }
  } else {
    const Problem pr = build_problem(po, seed);
    for (const auto& in : pr.inputs) o.input(in);
    if (pr.kind == "vqe") input_error("compare works on QAOA problems");
    base = tally_of("swapnk", swapnk_baseline(pr.h, pr.params).circuit);
    for (const auto& sub : expand_subtopologies(ro.subtopology, pr)) {
      variants.push_back(tally_of(sub, route_problem(pr, sub, ro, seed).circuit));
    }
  }
  Json rows = Json::array();
  for (const auto& v : variants) {
    rows.push_back({{"variant", v.label},
                    {"swaps", v.swaps},
                    {"cx", v.cx},
                    {"depth", v.depth},
                    {"swap_reduction_pct", reduction(v.swaps, base.swaps)},
                    {"cx_reduction_pct", reduction(v.cx, base.cx)},
                    {"depth_reduction_pct", reduction(v.depth, base.depth)}});
  }
  Json j{{"command", "compare"},
         {"baseline", {{"label", base.label}, {"swaps", base.swaps}, {"cx", base.cx}, {"depth", base.depth}}},
         {"variants", rows}};
  o.write("compare.json", j.dump(2));
  o.finish();
  if (o.json) {
    o.out << j.dump(2) << '\n';
  } else {
    o.out << std::left << std::setw(10) << "variant" << std::setw(8) << "swaps"
          << std::setw(8) << "cx" << std::setw(8) << "depth" << std::setw(10) << "swap-red"
          << std::setw(10) << "cx-red" << "depth-red\n";
    o.out << std::setw(10) << base.label << std::setw(8) << base.swaps << std::setw(8)
          << base.cx << std::setw(8) << base.depth << '\n';
    for (const auto& v : variants) {
      o.out << std::setw(10) << v.label << std::setw(8) << v.swaps << std::setw(8) << v.cx
            << std::setw(8) << v.depth << std::setw(10) << pct(reduction(v.swaps, base.swaps))
            << std::setw(10) << pct(reduction(v.cx, base.cx))
            << pct(reduction(v.depth, base.depth)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_postselect(const ProblemOptions& po, const std::vector<std::string>& count_args,
                   bool brute, std::optional<double> f_opt, std::optional<double> f_max,
                   Output& o, std::uint64_t seed) {
  if (count_args.empty()) input_error("postselect needs at least one --counts file");
  const Problem pr = build_problem(po, seed);
  if (pr.kind == "vqe") input_error("postselect needs a problem Hamiltonian");
  o.begin("postselect", seed);
  for (const auto& in : pr.inputs) o.input(in);
  std::vector<std::pair<std::string, Counts>> variants;
  for (const auto& arg : count_args) {
    std::string label = arg;
    std::string path = arg;
    if (const auto eq = arg.find('='); eq != std::string::npos && !fs::exists(arg)) {
      label = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else {
      label = fs::path(arg).stem().string();
    }
    Counts counts = counts_from_json(read_json_file(path));
    o.input(path);
    for (const auto& [bits, shots] : counts) {
      if (static_cast<int>(bits.size()) != pr.h.n) {
        input_error("counts in '" + path + "' have " + std::to_string(bits.size()) +
                    " bits, Hamiltonian has " + std::to_string(pr.h.n) + " qubits");
      }
    }
    variants.emplace_back(label, std::move(counts));
  }
  const PostselectResult best = postselect(variants, pr.h);
  Json j{{"command", "postselect"}, {"selected", best.label}, {"expectation", best.expectation}};
  Json all = Json::array();
  for (const auto& [label, counts] : variants) {
    all.push_back({{"label", label}, {"expectation", expectation(pr.h, counts)}});
  }
  j["variants"] = std::move(all);
  if (brute || (f_opt && f_max)) {
    Extrema ex;
    if (brute) {
      ex = brute_force_extrema(pr.h);
    } else {
      ex.optimum = *f_opt;
      ex.worst = *f_max;
    }
    const MetricReport m = metrics(pr.h, variants[best.index].second, ex);
    j["approximation_ratio"] = m.approximation_ratio;
    if (brute) j["success_probability"] = m.success_probability;
    j["f_opt"] = ex.optimum;
    j["f_max"] = ex.worst;
  } else if (f_opt || f_max) {
    input_error("--opt and --max must be given together");
  }
  o.write("postselect.json", j.dump(2));
  o.finish();
  if (o.json) {
    o.out << j.dump(2) << '\n';
  } else {
    o.out << "selected " << best.label << " expectation=" << std::setprecision(10)
          << best.expectation;
    if (j.contains("approximation_ratio")) o.out << " ar=" << j["approximation_ratio"].get<double>();
    if (j.contains("success_probability")) o.out << " sp=" << j["success_probability"].get<double>();
    o.out << '\n';
  }
  return kExitOk;
}

int cmd_sample(const std::string& circuit_file, std::uint64_t shots, double eps,
               std::optional<double> eps_1q, Output& o, std::uint64_t seed) {
  const Circuit circuit = circuit_from_json(read_json_file(circuit_file));
  o.begin("sample", seed);
  o.input(circuit_file);
  std::optional<NoiseModel> noise;
  if (eps > 0.0 || eps_1q) noise = NoiseModel{eps, eps_1q};
  // Noise acts per native gate, so sample the lowered circuit.
  const Counts counts = sample(decompose_to_basis(circuit), shots, noise, seed);
  const Json cj = counts_to_json(counts);
  o.write("counts.json", cj.dump(2));
  o.finish();
  o.out << (o.json ? Json{{"command", "sample"}, {"shots", shots}, {"counts", cj}}.dump(2)
                   : cj.dump())
        << '\n';
  return kExitOk;
}

int cmd_schedule(const std::string& tmpl_name, int n, bool full, Output& o,
                 std::uint64_t seed) {
  const TemplateKind kind = parse_template_kind(tmpl_name);
  SwapSchedule s = make_schedule(kind, n);
  if (!full) s = s.truncated(static_cast<std::size_t>(layer_bound(kind, n)));
  o.begin("schedule", seed);
  Json layers = Json::array();
  for (const auto& layer : s.layers()) {
    Json l = Json::array();
    for (const auto& [a, b] : layer) l.push_back({a, b});
    layers.push_back(std::move(l));
  }
  Json j{{"command", "schedule"}, {"template", tmpl_name}, {"n", n}, {"layers", layers}};
  o.write("schedule.json", j.dump(2));
  o.finish();
  o.out << (o.json ? j.dump(2) : layers.dump()) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit routing for QAOA and VQE on linear, T and H subtopologies", "aoqmap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Output o{out};
  std::optional<std::uint64_t> seed_flag;
  ProblemOptions po;
  RouteOptions ro;

  auto* route = app.add_subcommand("route", "route a problem onto subtopologies");
  add_problem_options(route, po);
  add_common(route, o, seed_flag);
  route->add_option("--subtopology", ro.subtopology, "linear, t, h, all or swapnk")
      ->check(CLI::IsMember({"linear", "t", "h", "all", "swapnk"}));
  route->add_flag("--mirror", ro.mirror, "alternate each depth with its mirror");
  route->add_option("--order-strategy", ro.order_strategy,
                    "initial-order search for partial problems: auto, exhaustive, sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  route->add_option("--samples", ro.samples, "orders drawn by the sampled strategy");

  std::string device = "builtin:27q-heavy-hex";
  std::string tmpl_name = "linear";
  int tmpl_n = 3;
  bool list = false;
  auto* layouts = app.add_subcommand("layouts", "count embeddings of a template in a device");
  add_common(layouts, o, seed_flag);
  layouts->add_option("--device", device, "builtin:NAME or device JSON file");
  layouts->add_option("--template", tmpl_name, "linear, t or h")
      ->check(CLI::IsMember({"linear", "t", "h"}));
  layouts->add_option("--n", tmpl_n, "template size")->required();
  layouts->add_flag("--list", list, "print every layout");

  std::string circuit_file;
  bool table = false;
  auto* select = app.add_subcommand("select", "pick the lowest-cost layout for a routed circuit");
  add_common(select, o, seed_flag);
  select->add_option("--circuit", circuit_file, "routed circuit JSON")->required();
  select->add_option("--device", device, "device JSON with calibration")->required();
  select->add_flag("--table", table, "include the cost of every layout");

  auto* verify_cmd = app.add_subcommand("verify", "check a routed circuit against its reference");
  add_common(verify_cmd, o, seed_flag);
  verify_cmd->add_option("--circuit", circuit_file, "routed circuit JSON")->required();

  std::string baseline_file;
  std::vector<std::string> variant_files;
  auto* compare = app.add_subcommand("compare", "swap/CX/depth reductions against the swap network");
  add_problem_options(compare, po);
  add_common(compare, o, seed_flag);
  compare->add_option("--subtopology", ro.subtopology, "linear, t, h or all")
      ->check(CLI::IsMember({"linear", "t", "h", "all"}));
  compare->add_flag("--mirror", ro.mirror, "alternate each depth with its mirror");
  compare->add_option("--baseline", baseline_file, "baseline circuit JSON");
  compare->add_option("--variant", variant_files, "variant circuit JSON (repeatable)");

  std::vector<std::string> count_args;
  bool brute = false;
  std::optional<double> f_opt;
  std::optional<double> f_max;
  auto* post = app.add_subcommand("postselect", "choose the variant with the lowest energy");
  add_problem_options(post, po);
  add_common(post, o, seed_flag);
  post->add_option("--counts", count_args, "counts JSON, optionally label=path (repeatable)");
  post->add_flag("--brute-force", brute, "compute F_opt/F_max by enumeration");
  post->add_option("--opt", f_opt, "known optimum F_opt");
  post->add_option("--max", f_max, "known maximum F_max");

  std::uint64_t shots = 1024;
  double eps = 0.0;
  std::optional<double> eps_1q;
  auto* sample_cmd = app.add_subcommand("sample", "sample a circuit, optionally with noise");
  add_common(sample_cmd, o, seed_flag);
  sample_cmd->add_option("--circuit", circuit_file, "circuit JSON")->required();
  sample_cmd->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--noise", eps, "two-qubit depolarizing strength")
      ->check(CLI::Range(0.0, 1.0));
  sample_cmd->add_option("--noise-1q", eps_1q, "single-qubit strength (default noise/10)")
      ->check(CLI::Range(0.0, 1.0));

  bool full_schedule = false;
  auto* schedule = app.add_subcommand("schedule", "print the swap layers of a template");
  add_common(schedule, o, seed_flag);
  schedule->add_option("--template", tmpl_name, "linear, t or h")
      ->check(CLI::IsMember({"linear", "t", "h"}));
  schedule->add_option("--n", tmpl_n, "template size")->required();
  schedule->add_flag("--all-layers", full_schedule, "all generated layers, not just the bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    if (route->parsed()) return cmd_route(po, ro, o, seed);
    if (layouts->parsed()) return cmd_layouts(device, tmpl_name, tmpl_n, list, o, seed);
    if (select->parsed()) return cmd_select(circuit_file, device, table, o, seed);
    if (verify_cmd->parsed()) return cmd_verify(circuit_file, o, err, seed);
    if (compare->parsed()) {
      if (ro.subtopology == "linear" && !compare->count("--subtopology")) ro.subtopology = "all";
      return cmd_compare(po, ro, baseline_file, variant_files, o, seed);
    }
    if (post->parsed()) return cmd_postselect(po, count_args, brute, f_opt, f_max, o, seed);
    if (sample_cmd->parsed()) return cmd_sample(circuit_file, shots, eps, eps_1q, o, seed);
    if (schedule->parsed()) return cmd_schedule(tmpl_name, tmpl_n, full_schedule, o, seed);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kInternal ? kExitVerifyFailed : kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace aoqmap::cli
