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

// Predicate coinduction as a checker.
//
// To show that "always phi" holds for every variable x of a system, it is
// enough to find a k >= 1 such that phi holds on the k-step unfolding of
// every x, whatever tree sits at the unexplored frontier. Predicates are
// evaluated three-valuedly on partial trees: True on a tree with Unknown
// parts means true for every completion.

#ifndef COALGAME_COINDUCT_H_
#define COALGAME_COINDUCT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "coalgame/fixpoint.h"
#include "coalgame/schema.h"
#include "coalgame/unfold.h"

namespace coalgame {

enum class ThreeValued { kFalse = 0, kUnknown = 1, kTrue = 2 };

// Strong Kleene connectives.
ThreeValued And(ThreeValued a, ThreeValued b);
ThreeValued Or(ThreeValued a, ThreeValued b);
ThreeValued Not(ThreeValued a);
ThreeValued Implies(ThreeValued a, ThreeValued b);
ThreeValued FromBool(bool b);
const char* ToString(ThreeValued v);

// Evaluates a predicate on a partial tree. Payoff comparisons hold for every
// root index n >= floor. WC follows the chosen path; PE compares the mover's
// payoffs through both children (Unknown when either path leaves the visible
// tree); SC and SPE conjoin WC resp. PE over every visible node, with the
// frontier contributing Unknown.
ThreeValued Eval3(const PartialTree& tree, Predicate predicate,
                  std::int64_t floor = 0);

// Predicate whose "always" closure is the given one: SC is always-WC and SPE
// is always-PE.
Predicate BasePredicate(Predicate p);

struct Certificate {
  Predicate predicate = Predicate::kWC;
  int depth = 0;
  std::map<std::string, ThreeValued> per_variable;
  bool certified = false;
  // First variable (in name order) that did not evaluate to True.
  std::optional<std::string> failing_var;
  ThreeValued failing_value = ThreeValued::kTrue;
};

// Unfolds every variable to depth k (index symbolic, n >= 0) and evaluates
// BasePredicate(predicate) at the root. Certified means "always base" holds
// at every variable. Throws Error(kInvalidArgument) if k < 1.
Certificate Certify(const EquationSystem& system, Predicate predicate, int k);

// Least k <= k_max for which Certify succeeds.
std::optional<int> MinimalDepth(const EquationSystem& system,
                                Predicate predicate, int k_max);

}  // namespace coalgame

#endif  // COALGAME_COINDUCT_H_
