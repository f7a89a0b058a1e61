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

// One-deviations of a strategy profile and the one-deviation principle: a
// strongly convergent profile is a subgame perfect equilibrium iff it is at
// least as good, for the deviating player, as every profile that differs
// from it in exactly one choice.

#ifndef COALGAME_DEVIATION_H_
#define COALGAME_DEVIATION_H_

#include <optional>
#include <string>
#include <vector>

#include "coalgame/schema.h"

namespace coalgame {

struct DeviationPath {
  // Directions from the root to the node whose choice is flipped.
  std::vector<Choice> address;
  Choice original = Choice::kLeft;
  Choice flipped = Choice::kRight;

  friend bool operator==(const DeviationPath&,
                         const DeviationPath&) = default;
};

std::string ToString(const DeviationPath& d);

// One deviation per decision node at address length < depth in the
// unfolding of the root, ordered by address length, then lexicographically
// with l before r.
std::vector<DeviationPath> EnumerateDeviations(const EquationSystem& system,
                                               int depth);

// s dominates its one-deviation d: at the node reached by d.address, the
// mover's payoff through the original choice is >= the payoff through the
// flipped choice, for every index the node's schema variable is reachable
// at. Throws Error(kDivergentComparison) if either child diverges and
// Error(kInvalidArgument) if d does not describe a node of the profile.
bool Dominates(const EquationSystem& system, const DeviationPath& d);

struct PrincipleReport {
  bool spe = false;
  bool all_dominated = false;
  // An undominated deviation, when there is one.
  std::optional<DeviationPath> witness;
  std::optional<std::string> witness_var;
  bool agree = false;
};

// Decides both sides of the principle at the root. Deviations landing on the
// same schema variable induce the same comparison, so one root flip per
// reachable variable covers all of them. Throws
// Error(kNotStronglyConvergent) naming a variable whose play diverges.
PrincipleReport OneDeviationPrinciple(const EquationSystem& system);

}  // namespace coalgame

#endif  // COALGAME_DEVIATION_H_
