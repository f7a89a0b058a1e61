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

#include "coalgame/coinduct.h"

#include <algorithm>

namespace coalgame {

ThreeValued And(ThreeValued a, ThreeValued b) { return std::min(a, b); }
ThreeValued Or(ThreeValued a, ThreeValued b) { return std::max(a, b); }

ThreeValued Not(ThreeValued a) {
  return static_cast<ThreeValued>(2 - static_cast<int>(a));
}

ThreeValued Implies(ThreeValued a, ThreeValued b) { return Or(Not(a), b); }

ThreeValued FromBool(bool b) {
  return b ? ThreeValued::kTrue : ThreeValued::kFalse;
}

const char* ToString(ThreeValued v) {
  switch (v) {
    case ThreeValued::kFalse:
      return "False";
    case ThreeValued::kUnknown:
      return "Unknown";
    case ThreeValued::kTrue:
      return "True";
  }
  return "?";
}

namespace {

// Leaf at the end of the chosen path, or null if the path runs into the
// frontier.
const PartialTree::Leaf* ChosenLeaf(const PartialTree& t) {
  const PartialTree* at = &t;
  while (const auto* node = at->node()) {
    if (!node->choice) return nullptr;
    at = node->child(*node->choice).get();
  }
  return at->leaf();
}

ThreeValued Wc(const PartialTree& t) {
  return ChosenLeaf(t) ? ThreeValued::kTrue : ThreeValued::kUnknown;
}

ThreeValued PeAtRoot(const PartialTree& t, std::int64_t floor) {
  if (t.is_unknown()) return ThreeValued::kUnknown;
  const auto* node = t.node();
  if (node == nullptr) return ThreeValued::kTrue;
  if (!node->choice) return ThreeValued::kUnknown;
  const auto* kept = ChosenLeaf(*node->child(*node->choice));
  const auto* other = ChosenLeaf(*node->child(Flip(*node->choice)));
  if (kept == nullptr || other == nullptr) return ThreeValued::kUnknown;
  return FromBool(HoldsForAll(kept->utility.at(node->agent),
                              other->utility.at(node->agent), floor));
}

template <typename LocalFn>
ThreeValued Everywhere(const PartialTree& t, LocalFn local) {
  if (t.is_unknown()) return ThreeValued::kUnknown;
  const auto* node = t.node();
  if (node == nullptr) return ThreeValued::kTrue;
  ThreeValued v = local(t);
  if (v == ThreeValued::kFalse) return v;
  v = And(v, Everywhere(*node->left, local));
  if (v == ThreeValued::kFalse) return v;
  return And(v, Everywhere(*node->right, local));
}

}  // namespace

ThreeValued Eval3(const PartialTree& tree, Predicate predicate,
                  std::int64_t floor) {
  switch (predicate) {
    case Predicate::kWC:
      return Wc(tree);
    case Predicate::kPE:
      return PeAtRoot(tree, floor);
    case Predicate::kSC:
      return Everywhere(tree, [](const PartialTree& t) { return Wc(t); });
    case Predicate::kSPE:
      return Everywhere(
          tree, [floor](const PartialTree& t) { return PeAtRoot(t, floor); });
  }
  return ThreeValued::kUnknown;
}

Predicate BasePredicate(Predicate p) {
  switch (p) {
    case Predicate::kWC:
    case Predicate::kSC:
      return Predicate::kWC;
    case Predicate::kPE:
    case Predicate::kSPE:
      return Predicate::kPE;
  }
  return p;
}

Certificate Certify(const EquationSystem& system, Predicate predicate, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "coinduction depth must be at least 1");
  }
  Certificate cert;
  cert.predicate = predicate;
  cert.depth = k;
  Predicate base = BasePredicate(predicate);
  for (const auto& [var, eq] : system.equations) {
    TreePtr tree = Unfold(system, VarRef{var, 0}, k);
    ThreeValued v = Eval3(*tree, base, 0);
    cert.per_variable.emplace(var, v);
    if (v != ThreeValued::kTrue && !cert.failing_var) {
      cert.failing_var = var;
      cert.failing_value = v;
    }
  }
  cert.certified = !cert.failing_var.has_value();
  return cert;
}

std::optional<int> MinimalDepth(const EquationSystem& system,
                                Predicate predicate, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    if (Certify(system, predicate, k).certified) return k;
  }
  return std::nullopt;
}

}  // namespace coalgame
