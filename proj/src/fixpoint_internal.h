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

#ifndef COALGAME_SRC_FIXPOINT_INTERNAL_H_
#define COALGAME_SRC_FIXPOINT_INTERNAL_H_

#include <cstdint>
#include <optional>

#include "graph.h"

namespace coalgame::internal {

struct Comparison {
  bool holds = true;
  // One of the two children diverges; the comparison is undefined.
  bool divergent = false;
  Agent mover;
  Affine kept;
  Affine alternative;
  std::optional<std::int64_t> counterexample;
};

// At node `state`, compares the mover's induced payoff through child `kept`
// against the payoff through the other child, for every index >= floor.
// Leaves hold vacuously.
Comparison CompareChildren(const Graph& graph, int state, Choice kept,
                           std::int64_t floor);

}  // namespace coalgame::internal

#endif  // COALGAME_SRC_FIXPOINT_INTERNAL_H_
