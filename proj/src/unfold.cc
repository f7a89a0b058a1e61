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

#include "coalgame/unfold.h"

#include <sstream>

#include "graph.h"

namespace coalgame {

TreePtr PartialTree::MakeUnknown() {
  static const TreePtr unknown =
      std::make_shared<const PartialTree>(Unknown{});
  return unknown;
}

TreePtr PartialTree::MakeLeaf(AffineUtility utility, std::int64_t at_offset) {
  return std::make_shared<const PartialTree>(
      Leaf{std::move(utility), at_offset});
}

TreePtr PartialTree::MakeNode(Agent agent, std::optional<Choice> choice,
                              TreePtr left, TreePtr right) {
  return std::make_shared<const PartialTree>(
      Node{std::move(agent), choice, std::move(left), std::move(right)});
}

bool operator==(const PartialTree& a, const PartialTree& b) {
  if (a.is_unknown() || b.is_unknown()) {
    return a.is_unknown() && b.is_unknown();
  }
  if (a.leaf() || b.leaf()) {
    return a.leaf() && b.leaf() && a.leaf()->utility == b.leaf()->utility &&
           a.leaf()->at_offset == b.leaf()->at_offset;
  }
  const auto* na = a.node();
  const auto* nb = b.node();
  return na->agent == nb->agent && na->choice == nb->choice &&
         *na->left == *nb->left && *na->right == *nb->right;
}

namespace {

TreePtr UnfoldFrom(const internal::Graph& g, int state, std::int64_t delta,
                   int k) {
  const internal::State& s = g.state(state);
  if (s.is_leaf && s.is_inline) {
    return PartialTree::MakeLeaf(s.utility.Shifted(delta), delta);
  }
  if (k == 0) return PartialTree::MakeUnknown();
  if (s.is_leaf) return PartialTree::MakeLeaf(s.utility.Shifted(delta), delta);
  return PartialTree::MakeNode(
      s.agent, s.choice,
      UnfoldFrom(g, s.left.target, delta + s.left.offset, k - 1),
      UnfoldFrom(g, s.right.target, delta + s.right.offset, k - 1));
}

void Tally(const PartialTree& t, TreeCounts* c) {
  if (t.is_unknown()) {
    ++c->unknowns;
  } else if (t.leaf()) {
    ++c->leaves;
  } else {
    ++c->nodes;
    Tally(*t.node()->left, c);
    Tally(*t.node()->right, c);
  }
}

int EmitDot(const PartialTree& t, int* next_id, std::ostringstream& os) {
  int id = (*next_id)++;
  if (t.is_unknown()) {
    os << "  n" << id << " [shape=circle, style=dashed, label=\"?\"];\n";
    return id;
  }
  if (const auto* leaf = t.leaf()) {
    os << "  n" << id << " [shape=box, label=\"" << ToString(leaf->utility)
       << "\"];\n";
    return id;
  }
  const auto* node = t.node();
  os << "  n" << id << " [shape=ellipse, label=\"" << node->agent.id;
  if (node->choice) os << ":" << ChoiceName(*node->choice);
  os << "\"];\n";
  int l = EmitDot(*node->left, next_id, os);
  int r = EmitDot(*node->right, next_id, os);
  os << "  n" << id << " -> n" << l << " [label=\"l\"];\n";
  os << "  n" << id << " -> n" << r << " [label=\"r\"];\n";
  return id;
}

}  // namespace

TreePtr Unfold(const EquationSystem& system, const VarRef& start, int k) {
  internal::Graph g(system);
  return UnfoldFrom(g, g.IndexOf(start.var), 0, k);
}

TreePtr ForgetChoices(const TreePtr& tree) {
  const auto* node = tree->node();
  if (node == nullptr) return tree;
  return PartialTree::MakeNode(node->agent, std::nullopt,
                               ForgetChoices(node->left),
                               ForgetChoices(node->right));
}

TreeCounts Count(const PartialTree& tree) {
  TreeCounts c;
  Tally(tree, &c);
  return c;
}

std::string ToDot(const PartialTree& tree) {
  std::ostringstream os;
  os << "digraph unfolding {\n";
  int next_id = 0;
  EmitDot(tree, &next_id, os);
  os << "}\n";
  return os.str();
}

std::string ToString(const PartialTree& tree) {
  if (tree.is_unknown()) return "?";
  if (const auto* leaf = tree.leaf()) return "[" + ToString(leaf->utility) + "]";
  const auto* node = tree.node();
  std::string out = "<" + node->agent.id + ",";
  if (node->choice) out += std::string(ChoiceName(*node->choice)) + ",";
  return out + ToString(*node->left) + "," + ToString(*node->right) + ">";
}

}  // namespace coalgame
