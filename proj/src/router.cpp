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

#include "aoqmap/router.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "aoqmap/error.hpp"

namespace aoqmap {

std::string_view depth_mode_name(DepthMode mode) {
  return mode == DepthMode::Repeat ? "repeat" : "mirror";
}

namespace {

// A two-qubit step of one depth, on positions. Angles are attached only when
// the block is emitted, from whatever logical pair sits on (a, b) then.
struct Op {
  GateKind kind;
  int a;
  int b;
  int layer = 0;  // 1-based schedule layer that supplied the swap
};

using Block = std::vector<Op>;

struct BlockResult {
  Block ops;
  Permutation initial;
  Permutation final;
};

int op_cx(GateKind kind) {
  switch (kind) {
    case GateKind::ZZ:
      return 2;
    case GateKind::ZZSWAP:
    case GateKind::SWAP:
      return 3;
    case GateKind::CZ:
      return 1;
    case GateKind::CZSWAP:
      return 2;
    default:
      return 0;
  }
}

std::size_t block_cx(const Block& ops) {
  std::size_t total = 0;
  for (const auto& op : ops) total += static_cast<std::size_t>(op_cx(op.kind));
  return total;
}

// Logical pairs still waiting for their interaction.
class PairSet {
 public:
  explicit PairSet(int n) : n_(n), bits_(static_cast<std::size_t>(n * n), 0) {}

  bool has(int i, int j) const { return bits_[index(i, j)] != 0; }
  void insert(int i, int j) {
    if (!bits_[index(i, j)]) ++count_;
    bits_[index(i, j)] = 1;
  }
  void erase(int i, int j) {
    if (bits_[index(i, j)]) --count_;
    bits_[index(i, j)] = 0;
  }
  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }

 private:
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n_ + j);
  }
  int n_;
  std::vector<char> bits_;
  std::size_t count_ = 0;
};

PairSet pairs_of(const ProblemHamiltonian& h) {
  PairSet set(h.n);
  for (const auto& t : h.zz) set.insert(t.i, t.j);
  return set;
}

PairSet all_pairs(int n) {
  PairSet set(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) set.insert(i, j);
  return set;
}

GateKind without_swap(GateKind kind) {
  return kind == GateKind::CZSWAP ? GateKind::CZ : GateKind::ZZ;
}

bool touches(const Op& op, int a, int b) {
  return op.a == a || op.a == b || op.b == a || op.b == b;
}

bool bare_on(const Op& op, int a, int b) {
  return (op.kind == GateKind::ZZ || op.kind == GateKind::CZ) &&
         std::minmax(op.a, op.b) == std::minmax(a, b);
}

// Drops the exchange from a swap-bearing op and fixes the order it leaked
// into. Returns false when nothing qualified.
bool fold_one(Block& ops, Permutation& order, bool trailing) {
  const auto count = static_cast<std::ptrdiff_t>(ops.size());
  for (std::ptrdiff_t step = 0; step < count; ++step) {
    const std::ptrdiff_t i = trailing ? count - 1 - step : step;
    const Op op = ops[i];
    if (!exchanges_qubits(op.kind)) continue;
    bool clear = true;
    if (trailing) {
      for (std::ptrdiff_t j = i + 1; j < count && clear; ++j) {
        if (touches(ops[j], op.a, op.b) && !bare_on(ops[j], op.a, op.b))
          clear = false;
      }
    } else {
      for (std::ptrdiff_t j = 0; j < i && clear; ++j) {
        if (touches(ops[j], op.a, op.b) && !bare_on(ops[j], op.a, op.b))
          clear = false;
      }
    }
    if (!clear) continue;
    if (op.kind == GateKind::SWAP) {
      ops.erase(ops.begin() + i);
    } else {
      ops[i].kind = without_swap(op.kind);
      ops[i].layer = 0;
    }
    order.exchange(op.a, op.b);
    return true;
  }
  return false;
}

void fold_trailing(BlockResult& r) {
  while (fold_one(r.ops, r.final, true)) {
  }
}

void fold_both(BlockResult& r) {
  for (;;) {
    if (fold_one(r.ops, r.final, true)) continue;
    if (fold_one(r.ops, r.initial, false)) continue;
    break;
  }
}

enum class SwapPolicy { Fused, Always };

// Greedy placement over a schedule: first every pending interaction already on
// a template edge outside the coming layer, then the layer itself.
BlockResult greedy_block(const SubtopologyTemplate& tmpl,
                         const SwapSchedule& schedule, PairSet pending,
                         const Permutation& start, SwapPolicy policy) {
  const int n = tmpl.n;
  BlockResult r{{}, start, start};
  Permutation& order = r.final;

  auto place_adjacent = [&](const SwapLayer* reserved) {
    for (int i = 0; i < n && !pending.empty(); ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!pending.has(i, j)) continue;
        int a = order.position_of(i);
        int b = order.position_of(j);
        if (a > b) std::swap(a, b);
        if (!tmpl.has_edge(a, b)) continue;
        if (reserved && std::find(reserved->begin(), reserved->end(),
                                  Edge{a, b}) != reserved->end())
          continue;
        r.ops.push_back({GateKind::ZZ, a, b});
        pending.erase(i, j);
      }
    }
  };

  for (std::size_t k = 0; k < schedule.size() && !pending.empty(); ++k) {
    const SwapLayer& layer = schedule.layers()[k];
    place_adjacent(&layer);
    if (pending.empty()) break;
    const int tag = static_cast<int>(k) + 1;
    for (const auto& [a, b] : layer) {
      const int i = order[a];
      const int j = order[b];
      if (pending.has(i, j)) {
        pending.erase(i, j);
        if (pending.empty()) {
          r.ops.push_back({GateKind::ZZ, a, b});
          break;
        }
        r.ops.push_back({GateKind::ZZSWAP, a, b, tag});
        order.exchange(a, b);
      } else if (policy == SwapPolicy::Always) {
        r.ops.push_back({GateKind::SWAP, a, b, tag});
        order.exchange(a, b);
      }
    }
  }
  if (!pending.empty()) place_adjacent(nullptr);
  if (!pending.empty()) {
    throw Error(ErrorKind::kInternal,
                std::to_string(pending.size()) +
                    " interactions left unplaced after " +
                    std::to_string(schedule.size()) + " swap layers");
  }
  return r;
}

// Brickwork slots on a chain: bare interactions on the outer layers, fused
// ones in between. Missing interactions in a fused slot become plain SWAPs.
BlockResult brick_block(int n, PairSet pending, const Permutation& start,
                        GateKind bare, GateKind fused, bool stop_when_done) {
  BlockResult r{{}, start, start};
  Permutation& order = r.final;
  for (int s = 0; s < n; ++s) {
    if (stop_when_done && pending.empty()) break;
    const bool swaps = s >= 1 && s <= n - 2;
    for (int q = s % 2; q + 1 < n; q += 2) {
      const bool has = pending.has(order[q], order[q + 1]);
      if (has) pending.erase(order[q], order[q + 1]);
      if (swaps) {
        r.ops.push_back({has ? fused : GateKind::SWAP, q, q + 1, s});
        order.exchange(q, q + 1);
      } else if (has) {
        r.ops.push_back({bare, q, q + 1});
      }
    }
  }
  if (!pending.empty()) {
    throw Error(ErrorKind::kInternal, "brickwork left interactions unplaced");
  }
  return r;
}

Block reversed(const Block& ops) { return Block(ops.rbegin(), ops.rend()); }

int max_layer(const Block& ops) {
  int m = 0;
  for (const auto& op : ops) {
    if (exchanges_qubits(op.kind)) m = std::max(m, op.layer);
  }
  return m;
}

void require_full(const ProblemHamiltonian& h) {
  h.validate();
  if (!h.fully_connected()) {
    throw Error(ErrorKind::kInvalidArgument,
                "router expects every pair to interact; " +
                    std::to_string(h.zz.size()) + " of " +
                    std::to_string(h.n * (h.n - 1) / 2) +
                    " present (use the partial router)");
  }
}

class QaoaEmitter {
 public:
  QaoaEmitter(const ProblemHamiltonian& h, const QaoaParams& params)
      : h_(h),
        params_(params),
        coeff_(static_cast<std::size_t>(h.n * h.n),
               std::numeric_limits<double>::quiet_NaN()) {
    for (const auto& t : h.zz) {
      coeff_[t.i * h.n + t.j] = coeff_[t.j * h.n + t.i] = t.coeff;
    }
  }

  void hadamards(Circuit& c) const {
    for (int q = 0; q < h_.n; ++q) c.append(Gate::single(GateKind::H, q));
  }

  void block(Circuit& c, const Block& ops, int k) const {
    for (const auto& op : ops) {
      if (op.kind == GateKind::SWAP) {
        c.append(Gate::pair(GateKind::SWAP, op.a, op.b));
        continue;
      }
      const int i = c.final_order()[op.a];
      const int j = c.final_order()[op.b];
      const double cij = coeff_[i * h_.n + j];
      if (std::isnan(cij)) {
        throw Error(ErrorKind::kInternal,
                    "no interaction between " + std::to_string(i) + " and " +
                        std::to_string(j));
      }
      c.append(Gate::pair(op.kind, op.a, op.b, params_.zz_angle(k, cij)));
    }
  }

  void mixer(Circuit& c, int k) const {
    for (int q = 0; q < h_.n; ++q) {
      const double ci = h_.z_coeff(c.final_order()[q]);
      if (ci != 0.0) {
        c.append(Gate::single(GateKind::RZ, q, params_.rz_angle(k, ci)));
      }
    }
    for (int q = 0; q < h_.n; ++q) {
      c.append(Gate::single(GateKind::RX, q, params_.rx_angle(k)));
    }
  }

 private:
  const ProblemHamiltonian& h_;
  const QaoaParams& params_;
  std::vector<double> coeff_;
};

void fill_report(RoutedCircuit& out) {
  const Circuit& c = out.circuit;
  RoutingReport& rep = out.report;
  rep.swap_count = 0;
  rep.zz_gates_placed = 0;
  for (const auto& g : c.gates()) {
    if (exchanges_qubits(g.kind)) ++rep.swap_count;
    if (g.kind == GateKind::ZZ || g.kind == GateKind::ZZSWAP) ++rep.zz_gates_placed;
  }
  const GateCounts counts = gate_counts(c);
  rep.cx_count = counts.cx;
  rep.depth = counts.depth;
  rep.initial_order = c.initial_order();
  rep.final_order = c.final_order();
}

using BlockBuilder = std::function<BlockResult(const Permutation&)>;

// Hadamards, then per depth a block and the mixer. Repeat rebuilds the block
// from the carried order; MirrorAlternate replays the previous one backwards.
RoutedCircuit assemble_qaoa(const ProblemHamiltonian& h,
                            const QaoaParams& params,
                            const SubtopologyTemplate& tmpl, DepthMode mode,
                            const BlockResult& first,
                            const BlockBuilder& rebuild,
                            const std::string& label) {
  RoutedCircuit out{Circuit(h.n, first.initial, label), tmpl, mode, {}};
  const QaoaEmitter emit(h, params);
  emit.hadamards(out.circuit);
  Block prev;
  for (int k = 0; k < params.depth(); ++k) {
    Block ops;
    if (k == 0) {
      ops = first.ops;
    } else if (mode == DepthMode::Repeat) {
      ops = rebuild(out.circuit.final_order()).ops;
    } else {
      ops = reversed(prev);
    }
    emit.block(out.circuit, ops, k);
    emit.mixer(out.circuit, k);
    out.report.layers_consumed.push_back(max_layer(ops));
    prev = std::move(ops);
  }
  fill_report(out);
  return out;
}

BlockResult linear_full_block(int n, const Permutation& start) {
  return brick_block(n, all_pairs(n), start, GateKind::ZZ, GateKind::ZZSWAP,
                     false);
}

BlockResult subtop_full_block(const SubtopologyTemplate& tmpl,
                              const SwapSchedule& schedule,
                              const Permutation& start) {
  BlockResult r = greedy_block(tmpl, schedule, all_pairs(tmpl.n), start,
                               SwapPolicy::Fused);
  fold_trailing(r);
  return r;
}

BlockResult partial_block(const SubtopologyTemplate& tmpl,
                          const SwapSchedule& schedule, const PairSet& pending,
                          const Permutation& start) {
  BlockResult r =
      tmpl.kind == TemplateKind::Linear
          ? brick_block(tmpl.n, pending, start, GateKind::ZZ, GateKind::ZZSWAP,
                        true)
          : greedy_block(tmpl, schedule, pending, start, SwapPolicy::Always);
  fold_both(r);
  return r;
}

SwapSchedule bounded_schedule(TemplateKind kind, int n) {
  return make_schedule(kind, n).truncated(
      static_cast<std::size_t>(layer_bound(kind, n)));
}

}  // namespace

RoutedCircuit route_qaoa_linear(const ProblemHamiltonian& h,
                                const QaoaParams& params, bool mirror) {
  require_full(h);
  params.validate();
  const int n = h.n;
  const SubtopologyTemplate tmpl = make_template(TemplateKind::Linear, n);
  const BlockBuilder build = [n](const Permutation& o) {
    return linear_full_block(n, o);
  };
  return assemble_qaoa(h, params, tmpl,
                       mirror ? DepthMode::MirrorAlternate : DepthMode::Repeat,
                       build(Permutation::identity(n)), build,
                       mirror ? "qaoa-linear-mirror" : "qaoa-linear");
}

RoutedCircuit route_qaoa_subtop(const ProblemHamiltonian& h,
                                const QaoaParams& params, TemplateKind kind,
                                DepthMode mode) {
  if (kind == TemplateKind::Linear) {
    return route_qaoa_linear(h, params, mode == DepthMode::MirrorAlternate);
  }
  require_full(h);
  params.validate();
  const SubtopologyTemplate tmpl = make_template(kind, h.n);
  const SwapSchedule schedule = bounded_schedule(kind, h.n);
  const BlockBuilder build = [&](const Permutation& o) {
    return subtop_full_block(tmpl, schedule, o);
  };
  return assemble_qaoa(h, params, tmpl, mode,
                       build(Permutation::identity(h.n)), build,
                       "qaoa-" + std::string(template_name(kind)));
}

namespace {

struct Candidate {
  std::size_t cx = std::numeric_limits<std::size_t>::max();
  std::vector<int> order;
};

void consider(Candidate& best, std::size_t cx, const std::vector<int>& order) {
  if (cx < best.cx || (cx == best.cx && order < best.order)) {
    best.cx = cx;
    best.order = order;
  }
}

}  // namespace

RoutedCircuit route_qaoa_partial_with_order(const ProblemHamiltonian& h,
                                            const QaoaParams& params,
                                            TemplateKind kind,
                                            const Permutation& initial) {
  h.validate();
  params.validate();
  if (initial.size() != h.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "initial order size differs from qubit count");
  }
  const SubtopologyTemplate tmpl = make_template(kind, h.n);
  const SwapSchedule schedule = bounded_schedule(kind, h.n);
  const BlockResult block = partial_block(tmpl, schedule, pairs_of(h), initial);
  RoutedCircuit out =
      assemble_qaoa(h, params, tmpl, DepthMode::MirrorAlternate, block, {},
                    "qaoa-partial-" + std::string(template_name(kind)));
  out.report.strategy = "fixed";
  out.report.orders_evaluated = 1;
  return out;
}

RoutedCircuit route_qaoa_partial(const ProblemHamiltonian& h,
                                 const QaoaParams& params, TemplateKind kind,
                                 const OrderStrategy& strategy) {
  h.validate();
  params.validate();
  const int n = h.n;
  const SubtopologyTemplate tmpl = make_template(kind, n);
  const SwapSchedule schedule = bounded_schedule(kind, n);
  const PairSet pending = pairs_of(h);

  std::vector<Edge> edges;
  for (const auto& t : h.zz) edges.emplace_back(t.i, t.j);
  const std::size_t floor_cx = 2 * edges.size();

  auto cost = [&](const std::vector<int>& order) {
    return block_cx(partial_block(tmpl, schedule, pending, Permutation(order)).ops);
  };

  OrderStrategy::Kind mode = strategy.kind;
  if (mode == OrderStrategy::Kind::Auto) {
    mode = n <= kExhaustiveOrderLimit ? OrderStrategy::Kind::Exhaustive
                                      : OrderStrategy::Kind::Sampled;
  }

  Candidate best;
  std::size_t evaluated = 0;
  std::optional<std::size_t> target;
  std::optional<std::uint64_t> seed;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  if (mode == OrderStrategy::Kind::Exhaustive) {
    // Reversing an order mirrors the chain, so one of each pair suffices.
    do {
      if (n >= 2 && order.front() > order.back()) continue;
      ++evaluated;
      consider(best, cost(order), order);
      if (best.cx <= floor_cx) break;
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    target = optimal_cx_target(edges, n, kind);
    seed = strategy.seed;
    std::mt19937_64 rng(strategy.seed);
    for (std::size_t s = 0; s <= strategy.samples; ++s) {
      if (s > 0) std::shuffle(order.begin(), order.end(), rng);
      ++evaluated;
      consider(best, cost(order), order);
      if (best.cx <= std::max(*target, floor_cx)) break;
    }
  }

  RoutedCircuit out =
      route_qaoa_partial_with_order(h, params, kind, Permutation(best.order));
  out.report.strategy =
      mode == OrderStrategy::Kind::Exhaustive ? "exhaustive" : "sampled";
  out.report.orders_evaluated = evaluated;
  out.report.cx_target = target ? target : optimal_cx_target(edges, n, kind);
  out.report.seed = seed;
  return out;
}

RoutedCircuit route_vqe_linear(int n, int p, const std::vector<double>& thetas) {
  if (p < 1) throw Error(ErrorKind::kInvalidArgument, "VQE depth must be >= 1");
  const SubtopologyTemplate tmpl = make_template(TemplateKind::Linear, n);
  const std::size_t expected = static_cast<std::size_t>((p + 1) * n);
  if (thetas.size() != expected) {
    throw Error(ErrorKind::kInvalidArgument,
                "VQE needs " + std::to_string(expected) + " angles, got " +
                    std::to_string(thetas.size()));
  }
  RoutedCircuit out{Circuit(n, "vqe-linear"), tmpl, DepthMode::Repeat, {}};
  Circuit& c = out.circuit;
  auto ry_layer = [&](int d) {
    for (int q = 0; q < n; ++q) {
      c.append(Gate::single(GateKind::RY, q, thetas[d * n + c.final_order()[q]]));
    }
  };
  ry_layer(0);
  for (int d = 0; d < p; ++d) {
    const BlockResult block = brick_block(n, all_pairs(n), c.final_order(),
                                          GateKind::CZ, GateKind::CZSWAP, false);
    for (const auto& op : block.ops) c.append(Gate::pair(op.kind, op.a, op.b));
    out.report.layers_consumed.push_back(max_layer(block.ops));
    ry_layer(d + 1);
  }
  fill_report(out);
  return out;
}

RoutedCircuit swapnk_baseline(const ProblemHamiltonian& h,
                              const QaoaParams& params) {
  require_full(h);
  params.validate();
  const int n = h.n;
  const SubtopologyTemplate tmpl = make_template(TemplateKind::Linear, n);
  const BlockBuilder build = [n](const Permutation& start) {
    BlockResult r{{}, start, start};
    for (int s = 0; s < n; ++s) {
      for (int q = s % 2; q + 1 < n; q += 2) {
        r.ops.push_back({GateKind::ZZSWAP, q, q + 1, s + 1});
        r.final.exchange(q, q + 1);
      }
    }
    return r;
  };
  return assemble_qaoa(h, params, tmpl, DepthMode::Repeat,
                       build(Permutation::identity(n)), build, "swapnk");
}

std::size_t optimal_cx_target(const std::vector<Edge>& edges, int n,
                              TemplateKind kind) {
  const std::size_t m = edges.size();
  if (m == 0) return 0;
  const SubtopologyTemplate tmpl = make_template(kind, n);
  const Permutation identity = Permutation::identity(n);
  BlockResult full =
      kind == TemplateKind::Linear
          ? linear_full_block(n, identity)
          : greedy_block(tmpl, bounded_schedule(kind, n), all_pairs(n),
                         identity, SwapPolicy::Fused);

  // Every op of the complete-graph block carries an interaction; keep the
  // first m of them.
  BlockResult packed{{}, identity, identity};
  for (const auto& op : full.ops) {
    if (packed.ops.size() == m) break;
    packed.ops.push_back(op);
    if (exchanges_qubits(op.kind)) packed.final.exchange(op.a, op.b);
  }
  fold_both(packed);
  return block_cx(packed.ops);
}

}  // namespace aoqmap
