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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aoqmap {

using Edge = std::pair<int, int>;

// Undirected device connectivity; edges are stored with u < v, sorted.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  CouplingGraph(int num_qubits, std::vector<Edge> edges);

  int num_qubits() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int q) const { return adj_[q]; }
  int degree(int q) const { return static_cast<int>(adj_[q].size()); }
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<bool>> matrix_;
};

enum class TemplateKind { Linear, T, H };

std::string_view template_name(TemplateKind kind);
TemplateKind parse_template_kind(std::string_view name);
int minimum_qubits(TemplateKind kind);

struct SubtopologyTemplate {
  TemplateKind kind;
  int n;
  std::vector<Edge> edges;

  bool has_edge(int a, int b) const;
  CouplingGraph graph() const { return CouplingGraph(n, edges); }
};

// Linear: (k,k+1). T: leaves 0 and 1 hang off centre 2, then a chain to n-1.
// H: like T, with a second centre n-3 carrying leaves n-2 and n-1.
SubtopologyTemplate make_template(TemplateKind kind, int n);

// Position k of the template sits on physical qubit assignment[k].
struct Layout {
  std::vector<int> assignment;

  bool operator==(const Layout&) const = default;
  auto operator<=>(const Layout&) const = default;
};

bool is_valid_layout(const Layout& layout, const SubtopologyTemplate& tmpl,
                     const CouplingGraph& graph);

// Every edge-preserving injective assignment (mirror images are distinct),
// in lexicographic order.
std::vector<Layout> enumerate_layouts(const SubtopologyTemplate& tmpl,
                                      const CouplingGraph& graph);

// "7q-h" and "27q-heavy-hex".
CouplingGraph builtin_device(std::string_view name);
std::vector<std::string> builtin_device_names();

}  // namespace aoqmap
