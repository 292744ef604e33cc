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

#include "aoqmap/topology.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>

#include "aoqmap/error.hpp"

namespace aoqmap {

CouplingGraph::CouplingGraph(int num_qubits, std::vector<Edge> edges)
    : n_(num_qubits),
      adj_(static_cast<std::size_t>(std::max(num_qubits, 0))),
      matrix_(adj_.size(), std::vector<bool>(adj_.size(), false)) {
  if (num_qubits < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative qubit count");
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside " + std::to_string(n_) + " qubits");
    }
    if (u == v) {
      throw Error(ErrorKind::kInvalidArgument,
                  "self-loop on qubit " + std::to_string(u));
    }
    if (matrix_[u][v]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    matrix_[u][v] = matrix_[v][u] = true;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool CouplingGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return matrix_[u][v];
}

std::string_view template_name(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::Linear:
      return "linear";
    case TemplateKind::T:
      return "t";
    case TemplateKind::H:
      return "h";
  }
  return "?";
}

TemplateKind parse_template_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "linear" || lower == "l") return TemplateKind::Linear;
  if (lower == "t") return TemplateKind::T;
  if (lower == "h") return TemplateKind::H;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown subtopology '" + std::string(name) + "'");
}

int minimum_qubits(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::Linear:
      return 2;
    case TemplateKind::T:
      return 4;
    case TemplateKind::H:
      return 6;
  }
  return 0;
}

bool SubtopologyTemplate::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end();
}

SubtopologyTemplate make_template(TemplateKind kind, int n) {
  if (n < minimum_qubits(kind)) {
    throw Error(ErrorKind::kTemplateTooSmall,
                std::string(template_name(kind)) + " subtopology needs at least " +
                    std::to_string(minimum_qubits(kind)) + " qubits, got " +
                    std::to_string(n));
  }
  SubtopologyTemplate t{kind, n, {}};
  switch (kind) {
    case TemplateKind::Linear:
      for (int k = 0; k + 1 < n; ++k) t.edges.emplace_back(k, k + 1);
      break;
    case TemplateKind::T:
      t.edges = {{0, 2}, {1, 2}};
      for (int k = 2; k + 1 < n; ++k) t.edges.emplace_back(k, k + 1);
      break;
    case TemplateKind::H:
      t.edges = {{0, 2}, {1, 2}};
      for (int k = 2; k + 1 <= n - 3; ++k) t.edges.emplace_back(k, k + 1);
      t.edges.emplace_back(n - 3, n - 2);
      t.edges.emplace_back(n - 3, n - 1);
      break;
  }
  return t;
}

bool is_valid_layout(const Layout& layout, const SubtopologyTemplate& tmpl,
                     const CouplingGraph& graph) {
  const auto& a = layout.assignment;
  if (static_cast<int>(a.size()) != tmpl.n) return false;
  std::vector<bool> used(static_cast<std::size_t>(graph.num_qubits()), false);
  for (int q : a) {
    if (q < 0 || q >= graph.num_qubits() || used[q]) return false;
    used[q] = true;
  }
  return std::all_of(tmpl.edges.begin(), tmpl.edges.end(), [&](const Edge& e) {
    return graph.has_edge(a[e.first], a[e.second]);
  });
}

std::vector<Layout> enumerate_layouts(const SubtopologyTemplate& tmpl,
                                      const CouplingGraph& graph) {
  const int n = tmpl.n;
  std::vector<Layout> out;
  if (n == 0 || n > graph.num_qubits()) return out;

  const CouplingGraph pattern = tmpl.graph();

  // Visit template positions breadth-first so that every position after the
  // first has an already placed neighbour to draw candidates from.
  std::vector<int> visit;
  std::vector<int> anchor(static_cast<std::size_t>(n), -1);
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
      const int p = bfs.front();
      bfs.pop();
      visit.push_back(p);
      for (int nb : pattern.neighbors(p)) {
        if (!seen[nb]) {
          seen[nb] = true;
          anchor[nb] = p;
          bfs.push(nb);
        }
      }
    }
    if (static_cast<int>(visit.size()) != n) {
      throw Error(ErrorKind::kInvalidArgument, "template is not connected");
    }
  }

  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(graph.num_qubits()), false);

  auto fits = [&](int p, int q) {
    if (used[q] || graph.degree(q) < pattern.degree(p)) return false;
    for (int nb : pattern.neighbors(p)) {
      if (assignment[nb] >= 0 && !graph.has_edge(q, assignment[nb])) {
        return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == visit.size()) {
      out.push_back(Layout{assignment});
      return;
    }
    const int p = visit[depth];
    auto place = [&](int q) {
      if (!fits(p, q)) return;
      assignment[p] = q;
      used[q] = true;
      extend(depth + 1);
      used[q] = false;
      assignment[p] = -1;
    };
    if (anchor[p] < 0) {
      for (int q = 0; q < graph.num_qubits(); ++q) place(q);
    } else {
      for (int q : graph.neighbors(assignment[anchor[p]])) place(q);
    }
  };
  extend(0);

  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Heavy-hex lattice of the 27-qubit Falcon processors.
const std::vector<Edge> kHeavyHex27 = {
    {0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
    {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
    {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
    {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26},
};

const std::vector<Edge> kSevenQubitH = {
    {0, 1}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6},
};

}  // namespace

std::vector<std::string> builtin_device_names() {
  return {"7q-h", "27q-heavy-hex"};
}

CouplingGraph builtin_device(std::string_view name) {
  if (name == "27q-heavy-hex") return CouplingGraph(27, kHeavyHex27);
  if (name == "7q-h") return CouplingGraph(7, kSevenQubitH);
  throw Error(ErrorKind::kInvalidArgument,
              "unknown built-in device '" + std::string(name) + "'");
}

}  // namespace aoqmap
