// Copyright 2026 The Coalgame Authors.
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

#include "graph.h"

#include <functional>
#include <queue>
#include <utility>

namespace coalgame::internal {

Graph::Graph(const EquationSystem& system) {
  std::map<std::string, int> index;
  for (const auto& [name, eq] : system.equations) {
    index.emplace(name, static_cast<int>(states_.size()));
    State s;
    s.name = name;
    states_.push_back(std::move(s));
  }
  num_variables_ = static_cast<int>(states_.size());

  auto resolve = [&](const std::string& owner, const char* side,
                     const Child& child) -> Edge {
    if (const auto* ref = std::get_if<VarRef>(&child)) {
      auto it = index.find(ref->var);
      if (it == index.end()) {
        throw Error(ErrorCode::kUnresolved, "unresolved variable " + ref->var +
                                                " (referenced from " + owner +
                                                "." + side + ")");
      }
      return Edge{it->second, ref->offset};
    }
    State leaf;
    leaf.name = owner + "." + side;
    leaf.is_leaf = true;
    leaf.is_inline = true;
    leaf.utility = std::get<AffineUtility>(child);
    states_.push_back(std::move(leaf));
    return Edge{static_cast<int>(states_.size()) - 1, 0};
  };

  int i = 0;
  for (const auto& [name, eq] : system.equations) {
    if (const auto* leaf = std::get_if<Leaf>(&eq)) {
      states_[i].is_leaf = true;
      states_[i].utility = leaf->utility;
    } else {
      const auto& node = std::get<Node>(eq);
      states_[i].agent = node.agent;
      states_[i].choice = node.choice;
      // resolve() may grow states_, so no references across the calls.
      Edge l = resolve(name, "l", node.left);
      Edge r = resolve(name, "r", node.right);
      states_[i].left = l;
      states_[i].right = r;
    }
    ++i;
  }

  auto it = index.find(system.root.var);
  if (it == index.end()) {
    throw Error(ErrorCode::kUnresolved,
                "unresolved root variable " + system.root.var);
  }
  root_ = it->second;
  root_offset_ = system.root.offset;
}

int Graph::IndexOf(const std::string& var) const {
  for (int i = 0; i < num_variables_; ++i) {
    if (states_[i].name == var) return i;
  }
  throw Error(ErrorCode::kUnresolved, "unresolved variable " + var);
}

std::optional<Edge> ChosenLeaf(const Graph& graph, int start) {
  std::vector<bool> seen(graph.size(), false);
  Edge at{start, 0};
  while (true) {
    const State& s = graph.state(at.target);
    if (s.is_leaf) return at;
    if (seen[at.target]) return std::nullopt;
    seen[at.target] = true;
    // Game systems have no choice; nothing is "chosen" there.
    if (!s.choice) return std::nullopt;
    const Edge& next = s.child(*s.choice);
    at = Edge{next.target, at.offset + next.offset};
  }
}

std::optional<AffineUtility> InducedThrough(const Graph& graph,
                                            const Edge& edge) {
  auto leaf = ChosenLeaf(graph, edge.target);
  if (!leaf) return std::nullopt;
  return graph.state(leaf->target).utility.Shifted(edge.offset + leaf->offset);
}

std::vector<std::int64_t> Floors(const Graph& graph, int start,
                                 std::int64_t start_index) {
  std::vector<std::int64_t> floor(graph.size(), -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(start_index, start);
  while (!queue.empty()) {
    auto [dist, s] = queue.top();
    queue.pop();
    if (floor[s] != -1) continue;
    floor[s] = dist;
    const State& st = graph.state(s);
    if (st.is_leaf) continue;
    for (const Edge* e : {&st.left, &st.right}) {
      if (floor[e->target] == -1) queue.emplace(dist + e->offset, e->target);
    }
  }
  return floor;
}

}  // namespace coalgame::internal
