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

// Integer-indexed view of an EquationSystem. Named variables come first
// (in name order), followed by one anonymous state per inline leaf.

#ifndef COALGAME_SRC_GRAPH_H_
#define COALGAME_SRC_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalgame/schema.h"

namespace coalgame::internal {

struct Edge {
  int target = -1;
  std::int64_t offset = 0;
};

struct State {
  std::string name;
  bool is_leaf = false;
  bool is_inline = false;
  AffineUtility utility;
  Agent agent;
  std::optional<Choice> choice;
  Edge left;
  Edge right;

  const Edge& child(Choice c) const {
    return c == Choice::kLeft ? left : right;
  }
};

class Graph {
 public:
  // Throws Error(kUnresolved) on a dangling reference.
  explicit Graph(const EquationSystem& system);

  const std::vector<State>& states() const { return states_; }
  const State& state(int i) const { return states_[i]; }
  int size() const { return static_cast<int>(states_.size()); }
  int num_variables() const { return num_variables_; }
  int root() const { return root_; }
  std::int64_t root_offset() const { return root_offset_; }

  // Throws Error(kUnresolved).
  int IndexOf(const std::string& var) const;

 private:
  std::vector<State> states_;
  int num_variables_ = 0;
  int root_ = -1;
  std::int64_t root_offset_ = 0;
};

// Follows the designated choices from `start`. Returns the leaf reached and
// the offset accumulated on the way, or nullopt when the play is infinite.
// The branching structure does not depend on the index, so revisiting a
// state proves divergence.
std::optional<Edge> ChosenLeaf(const Graph& graph, int start);

// Induced payoff of the subprofile behind `edge`, written as a form in the
// index of the state that owns the edge. nullopt if that subprofile diverges.
std::optional<AffineUtility> InducedThrough(const Graph& graph,
                                            const Edge& edge);

// Least index at which each state is reachable from `start` entered at
// `start_index`; -1 for unreachable states.
std::vector<std::int64_t> Floors(const Graph& graph, int start,
                                 std::int64_t start_index);

}  // namespace coalgame::internal

#endif  // COALGAME_SRC_GRAPH_H_
