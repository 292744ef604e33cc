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

#include "aoqmap/swap_schedule.hpp"

#include <algorithm>

#include "aoqmap/error.hpp"

namespace aoqmap {

SwapSchedule::SwapSchedule(TemplateKind kind, int n,
                           std::vector<SwapLayer> layers)
    : kind_(kind), n_(n), layers_(std::move(layers)) {
  const SubtopologyTemplate tmpl = make_template(kind, std::max(n, minimum_qubits(kind)));
  for (std::size_t s = 0; s < layers_.size(); ++s) {
    std::vector<bool> busy(static_cast<std::size_t>(n_), false);
    for (auto& [a, b] : layers_[s]) {
      if (a > b) std::swap(a, b);
      if (b >= n_ || !tmpl.has_edge(a, b)) {
        throw Error(ErrorKind::kInternal,
                    "layer " + std::to_string(s) + " pair (" +
                        std::to_string(a) + "," + std::to_string(b) +
                        ") is not a template edge");
      }
      if (busy[a] || busy[b]) {
        throw Error(ErrorKind::kInternal,
                    "layer " + std::to_string(s) + " reuses a position");
      }
      busy[a] = busy[b] = true;
    }
  }
}

std::size_t SwapSchedule::swap_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.size();
  return total;
}

SwapSchedule SwapSchedule::truncated(std::size_t count) const {
  std::vector<SwapLayer> head(
      layers_.begin(),
      layers_.begin() + static_cast<std::ptrdiff_t>(std::min(count, layers_.size())));
  return SwapSchedule(kind_, n_, std::move(head));
}

namespace {

// (k,k+1) for k = first, first+2, ... while k+1 <= last.
SwapLayer progression(int first, int last) {
  SwapLayer out;
  for (int k = first; k + 1 <= last; k += 2) out.emplace_back(k, k + 1);
  return out;
}

SwapLayer join(SwapLayer head, const SwapLayer& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<SwapLayer> cycle(const std::vector<SwapLayer>& phases, int count) {
  std::vector<SwapLayer> out;
  for (int j = 0; j < count; ++j) out.push_back(phases[j % phases.size()]);
  return out;
}

}  // namespace

SwapSchedule linear_layers(int n) {
  if (n < 2) {
    throw Error(ErrorKind::kTemplateTooSmall,
                "linear schedule needs at least 2 qubits");
  }
  std::vector<SwapLayer> layers;
  for (int s = 1; s <= n - 2; ++s) {
    layers.push_back(progression(s % 2 == 1 ? 1 : 0, n - 1));
  }
  return SwapSchedule(TemplateKind::Linear, n, std::move(layers));
}

SwapSchedule t_layers(int n) {
  if (n < 4) {
    throw Error(ErrorKind::kTemplateTooSmall,
                "T schedule needs at least 4 qubits");
  }
  const int n_odd = (n - 1) - 1 + (n - 1) % 2;
  const int n_even = (n - 1) - (n - 1) % 2;
  const SwapLayer a = progression(2, n_odd);
  const SwapLayer b = join({{0, 2}}, progression(3, n_even));
  const SwapLayer d = join({{1, 2}}, progression(3, n_even));
  return SwapSchedule(TemplateKind::T, n, cycle({a, b, a, d}, n));
}

SwapSchedule h_layers(int n) {
  if (n < 6) {
    throw Error(ErrorKind::kTemplateTooSmall,
                "H schedule needs at least 6 qubits");
  }
  const int n_odd = (n - 1) - 1 + (n - 1) % 2;
  const int n_even = (n - 1) - (n - 1) % 2;
  std::vector<SwapLayer> phases;
  if (n % 2 == 1) {
    phases = {
        join({{0, 2}}, progression(3, n_odd - 1)),
        progression(2, n_even - 1),
        join({{1, 2}}, progression(3, n_odd - 1)),
        join(progression(2, n_even - 3), {{n_even - 2, n_even}}),
    };
  } else {
    const SwapLayer l1 = progression(2, n_even - 1);
    phases = {
        l1,
        join({{1, 2}}, progression(3, n_odd - 1)),
        l1,
        join(join({{0, 2}}, progression(3, n_odd - 3)), {{n_odd - 2, n_odd}}),
    };
  }
  return SwapSchedule(TemplateKind::H, n, cycle(phases, n));
}

SwapSchedule make_schedule(TemplateKind kind, int n) {
  switch (kind) {
    case TemplateKind::Linear:
      return linear_layers(n);
    case TemplateKind::T:
      return t_layers(n);
    case TemplateKind::H:
      return h_layers(n);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown template kind");
}

int layer_bound(TemplateKind kind, int n) {
  const int bound = kind == TemplateKind::H ? n - 1 : n - 2;
  return std::max(bound, 0);
}

SwapSchedule mirror(const SwapSchedule& schedule) {
  std::vector<SwapLayer> layers(schedule.layers().rbegin(),
                                schedule.layers().rend());
  return SwapSchedule(schedule.kind(), schedule.n(), std::move(layers));
}

Permutation order_after(const SwapSchedule& schedule,
                        const Permutation& initial) {
  if (initial.size() != schedule.n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "order has " + std::to_string(initial.size()) +
                    " entries, schedule has " + std::to_string(schedule.n()));
  }
  Permutation order = initial;
  for (const auto& layer : schedule.layers()) {
    for (const auto& [a, b] : layer) order.exchange(a, b);
  }
  return order;
}

std::set<Edge> connectivity_closure(const SwapSchedule& schedule,
                                    const SubtopologyTemplate& tmpl) {
  std::set<Edge> seen;
  Permutation order = Permutation::identity(tmpl.n);
  auto collect = [&] {
    for (const auto& [a, b] : tmpl.edges) {
      const int u = order[a];
      const int v = order[b];
      seen.emplace(std::min(u, v), std::max(u, v));
    }
  };
  collect();
  for (const auto& layer : schedule.layers()) {
    for (const auto& [a, b] : layer) order.exchange(a, b);
    collect();
  }
  return seen;
}

}  // namespace aoqmap
