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

// Convergence, induced payoffs and equilibrium predicates decided directly on
// a finite profile system.
//
// A state is a VarRef whose offset is the concrete index at which the
// variable is entered. Payoffs are reported as affine forms in that index;
// the PE comparison at a schema variable is required for every index n at
// or above the least index at which the variable is reachable.

#ifndef COALGAME_FIXPOINT_H_
#define COALGAME_FIXPOINT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coalgame/schema.h"

namespace coalgame {

enum class Predicate { kWC, kSC, kPE, kSPE };

// "wc", "sc", "pe", "spe" (any case). Throws Error(kInvalidArgument).
Predicate ParsePredicate(std::string_view name);
const char* PredicateName(Predicate p);

// nullopt means the realized play never reaches a leaf.
using InducedUtility = std::optional<AffineUtility>;

bool WeaklyConvergent(const EquationSystem& system, const VarRef& state);
bool StronglyConvergent(const EquationSystem& system, const VarRef& state);
InducedUtility Induced(const EquationSystem& system, const VarRef& state);

bool Pe(const EquationSystem& system, const VarRef& state);
bool Spe(const EquationSystem& system, const VarRef& state);

// True iff `predicate` holds at every variable reachable from state, each
// taken at its least reachable index.
bool Box(const EquationSystem& system, const VarRef& state,
         Predicate predicate);

// Why SPE fails, naming a variable whose own PE check fails.
struct SpeReport {
  bool holds = true;
  std::string failing_var;
  std::string reason;
  // Set when the failure is a payoff comparison.
  std::optional<Agent> mover;
  std::optional<Affine> chosen_payoff;
  std::optional<Affine> other_payoff;
  std::optional<std::int64_t> counterexample;
};
SpeReport CheckSpe(const EquationSystem& system, const VarRef& state);

}  // namespace coalgame

#endif  // COALGAME_FIXPOINT_H_
