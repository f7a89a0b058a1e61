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

// Core data model: finite, optionally N-indexed systems of corecursive
// equations that present possibly infinite game trees and strategy profiles.
//
// A game equation is either a leaf carrying a payoff vector or a node
// <agent, left, right>; a profile equation additionally records the choice
// (l or r) taken at the node. Children refer to other equations through a
// VarRef, whose offset advances the shared index n by a fixed amount, or
// carry a payoff vector inline.
//
// Every payoff is affine in the index: const + slope * n. Unindexed systems
// have all offsets and slopes equal to zero.

#ifndef COALGAME_SCHEMA_H_
#define COALGAME_SCHEMA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coalgame/rational.h"

namespace coalgame {

enum class ErrorCode {
  kKindMismatch,
  kUnresolved,
  kInvalidArgument,
  kDivergentComparison,
  kNotStronglyConvergent,
  kBoundsExceeded,
  kShape,
  kParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Agent {
  std::string id;
  friend auto operator<=>(const Agent&, const Agent&) = default;
};

enum class Choice { kLeft, kRight };

inline Choice Flip(Choice c) {
  return c == Choice::kLeft ? Choice::kRight : Choice::kLeft;
}
inline const char* ChoiceName(Choice c) {
  return c == Choice::kLeft ? "l" : "r";
}

// const + slope * n.
struct Affine {
  Rational constant;
  Rational slope;

  Rational At(std::int64_t n) const { return constant + slope * n; }
  // The same function of a shifted index: f(n + delta) as a form in n.
  Affine Shifted(std::int64_t delta) const {
    return {constant + slope * delta, slope};
  }
  friend bool operator==(const Affine&, const Affine&) = default;
};

// Decides lhs(n) >= rhs(n) (or > when strict) for every integer n >= floor.
bool HoldsForAll(const Affine& lhs, const Affine& rhs, std::int64_t floor,
                 bool strict = false);

// Least n >= floor at which lhs(n) >= rhs(n) (resp. >) fails, if any.
std::optional<std::int64_t> FirstViolation(const Affine& lhs,
                                           const Affine& rhs,
                                           std::int64_t floor,
                                           bool strict = false);

// Payoff vector, one affine form per agent.
class AffineUtility {
 public:
  AffineUtility() = default;
  explicit AffineUtility(std::map<Agent, Affine> payoffs)
      : payoffs_(std::move(payoffs)) {}

  const std::map<Agent, Affine>& payoffs() const { return payoffs_; }
  const Affine& at(const Agent& agent) const;
  bool Has(const Agent& agent) const { return payoffs_.count(agent) > 0; }
  void Set(const Agent& agent, Affine value) { payoffs_[agent] = value; }

  AffineUtility Shifted(std::int64_t delta) const;

  friend bool operator==(const AffineUtility&, const AffineUtility&) = default;

 private:
  std::map<Agent, Affine> payoffs_;
};

// Reference to the equation for `var` at index n + offset.
struct VarRef {
  std::string var;
  std::int64_t offset = 0;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

// A node child: another equation, or a payoff vector written in place.
using Child = std::variant<VarRef, AffineUtility>;

struct Leaf {
  AffineUtility utility;
};

struct Node {
  Agent agent;
  std::optional<Choice> choice;  // present exactly in profile systems
  Child left;
  Child right;

  const Child& child(Choice c) const {
    return c == Choice::kLeft ? left : right;
  }
};

using Equation = std::variant<Leaf, Node>;

enum class Kind { kGame, kProfile };

struct EquationSystem {
  std::vector<Agent> agents;
  Kind kind = Kind::kGame;
  std::map<std::string, Equation> equations;
  // root.offset is the concrete index at which the root is entered.
  VarRef root;
  bool indexed = false;

  const Equation* Find(const std::string& var) const;
  // Throws Error(kUnresolved) when the variable has no equation.
  const Equation& At(const std::string& var) const;
};

struct ValidationReport {
  std::vector<std::string> defects;
  bool ok() const { return defects.empty(); }
};

ValidationReport Validate(const EquationSystem& system);

// Forgets the choice at every node of a profile system. Throws
// Error(kKindMismatch) for a game system.
EquationSystem Project(const EquationSystem& profile);

// True iff the two roots denote the same (family of) trees: related states
// agree on constructor, agent, choice and payoffs as affine forms, and their
// children are pairwise related. Throws Error(kKindMismatch) when the kinds
// differ.
bool Bisimilar(const EquationSystem& a, const EquationSystem& b);

// Minimal index at which each variable is reachable from `start`
// (start.offset plus the least total offset along any path).
std::map<std::string, std::int64_t> IndexFloors(const EquationSystem& system,
                                                const VarRef& start);

// Consistently renames variables; used to check name independence.
EquationSystem RenameVariables(
    const EquationSystem& system,
    const std::map<std::string, std::string>& renaming);

std::string ToString(const Affine& form);
std::string ToString(const AffineUtility& utility);

}  // namespace coalgame

#endif  // COALGAME_SCHEMA_H_
