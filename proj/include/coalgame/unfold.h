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

#ifndef COALGAME_UNFOLD_H_
#define COALGAME_UNFOLD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "coalgame/schema.h"

namespace coalgame {

class PartialTree;
using TreePtr = std::shared_ptr<const PartialTree>;

// Finite prefix of a (possibly infinite) tree. Unknown stands for the
// unexplored remainder: any tree at all may sit there.
class PartialTree {
 public:
  struct Unknown {};
  struct Leaf {
    // Payoff as a form in the index of the unfolding's root.
    AffineUtility utility;
    // Total offset between the root and this leaf.
    std::int64_t at_offset = 0;
  };
  struct Node {
    Agent agent;
    std::optional<Choice> choice;
    TreePtr left;
    TreePtr right;

    const TreePtr& child(Choice c) const {
      return c == Choice::kLeft ? left : right;
    }
  };

  explicit PartialTree(std::variant<Unknown, Leaf, Node> v)
      : value_(std::move(v)) {}

  static TreePtr MakeUnknown();
  static TreePtr MakeLeaf(AffineUtility utility, std::int64_t at_offset);
  static TreePtr MakeNode(Agent agent, std::optional<Choice> choice,
                          TreePtr left, TreePtr right);

  bool is_unknown() const { return std::holds_alternative<Unknown>(value_); }
  const Leaf* leaf() const { return std::get_if<Leaf>(&value_); }
  const Node* node() const { return std::get_if<Node>(&value_); }

 private:
  std::variant<Unknown, Leaf, Node> value_;
};

bool operator==(const PartialTree& a, const PartialTree& b);

// k-step unfolding of `start`. Each decision node and each reference to a
// leaf variable consumes one step; payoffs written inline in a node are part
// of that node. Positions beyond k steps become Unknown, so k = 0 always
// yields Unknown. Leaf payoffs have the path offset substituted.
// Throws Error(kUnresolved) if start does not resolve.
TreePtr Unfold(const EquationSystem& system, const VarRef& start, int k);

// Drops every choice annotation.
TreePtr ForgetChoices(const TreePtr& tree);

struct TreeCounts {
  int nodes = 0;
  int leaves = 0;
  int unknowns = 0;
};
TreeCounts Count(const PartialTree& tree);

// Graphviz rendering. Deterministic for a given tree.
std::string ToDot(const PartialTree& tree);

// Bracket notation, e.g. "<A,l,[A:0, B:1],?>".
std::string ToString(const PartialTree& tree);

}  // namespace coalgame

#endif  // COALGAME_UNFOLD_H_
