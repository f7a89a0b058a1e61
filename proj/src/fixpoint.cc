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

#include "coalgame/fixpoint.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "fixpoint_internal.h"
#include "graph.h"

namespace coalgame {

namespace internal {

Comparison CompareChildren(const Graph& graph, int state, Choice kept,
                           std::int64_t floor) {
  Comparison cmp;
  const State& s = graph.state(state);
  if (s.is_leaf) return cmp;
  cmp.mover = s.agent;
  auto kept_u = InducedThrough(graph, s.child(kept));
  auto other_u = InducedThrough(graph, s.child(Flip(kept)));
  if (!kept_u || !other_u) {
    cmp.holds = false;
    cmp.divergent = true;
    return cmp;
  }
  cmp.kept = kept_u->at(s.agent);
  cmp.alternative = other_u->at(s.agent);
  cmp.counterexample = FirstViolation(cmp.kept, cmp.alternative, floor);
  cmp.holds = !cmp.counterexample.has_value();
  return cmp;
}

}  // namespace internal

namespace {

using internal::Graph;

void RequireProfile(const EquationSystem& system) {
  if (system.kind != Kind::kProfile) {
    throw Error(ErrorCode::kKindMismatch,
                "predicate needs a strategy profile system");
  }
}

// Greatest subset S of the states reachable from `start` such that every
// s in S satisfies local(s) and, if s is a node, both children lie in S.
template <typename LocalFn>
std::vector<bool> GreatestInvariant(const Graph& g,
                                    const std::vector<std::int64_t>& floors,
                                    LocalFn local) {
  std::vector<bool> in(g.size());
  for (int s = 0; s < g.size(); ++s) in[s] = floors[s] >= 0 && local(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < g.size(); ++s) {
      if (!in[s] || g.state(s).is_leaf) continue;
      if (!in[g.state(s).left.target] || !in[g.state(s).right.target]) {
        in[s] = false;
        changed = true;
      }
    }
  }
  return in;
}

}  // namespace

Predicate ParsePredicate(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "wc") return Predicate::kWC;
  if (lower == "sc") return Predicate::kSC;
  if (lower == "pe") return Predicate::kPE;
  if (lower == "spe") return Predicate::kSPE;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown predicate '" + std::string(name) + "'");
}

const char* PredicateName(Predicate p) {
  switch (p) {
    case Predicate::kWC:
      return "wc";
    case Predicate::kSC:
      return "sc";
    case Predicate::kPE:
      return "pe";
    case Predicate::kSPE:
      return "spe";
  }
  return "?";
}

bool WeaklyConvergent(const EquationSystem& system, const VarRef& state) {
  RequireProfile(system);
  Graph g(system);
  return internal::ChosenLeaf(g, g.IndexOf(state.var)).has_value();
}

bool StronglyConvergent(const EquationSystem& system, const VarRef& state) {
  RequireProfile(system);
  Graph g(system);
  int start = g.IndexOf(state.var);
  auto floors = internal::Floors(g, start, state.offset);
  auto in = GreatestInvariant(g, floors, [&](int s) {
    return internal::ChosenLeaf(g, s).has_value();
  });
  return in[start];
}

InducedUtility Induced(const EquationSystem& system, const VarRef& state) {
  RequireProfile(system);
  Graph g(system);
  return internal::InducedThrough(g, internal::Edge{g.IndexOf(state.var), 0});
}

bool Pe(const EquationSystem& system, const VarRef& state) {
  if (!StronglyConvergent(system, state)) return false;
  Graph g(system);
  int s = g.IndexOf(state.var);
  if (g.state(s).is_leaf) return true;
  return internal::CompareChildren(g, s, *g.state(s).choice, state.offset)
      .holds;
}

SpeReport CheckSpe(const EquationSystem& system, const VarRef& state) {
  RequireProfile(system);
  Graph g(system);
  int start = g.IndexOf(state.var);
  auto floors = internal::Floors(g, start, state.offset);

  std::vector<bool> wc(g.size()), cmp_ok(g.size());
  std::vector<internal::Comparison> cmp(g.size());
  for (int s = 0; s < g.size(); ++s) {
    if (floors[s] < 0) continue;
    wc[s] = internal::ChosenLeaf(g, s).has_value();
    if (!g.state(s).is_leaf) {
      cmp[s] = internal::CompareChildren(g, s, *g.state(s).choice, floors[s]);
    }
    cmp_ok[s] = cmp[s].holds;
  }
  auto in = GreatestInvariant(g, floors,
                              [&](int s) { return wc[s] && cmp_ok[s]; });

  SpeReport report;
  report.holds = in[start];
  if (report.holds) return report;
  // Some reachable state fails its own check, else nothing would have been
  // removed. Report the first one in variable order.
  for (int s = 0; s < g.size(); ++s) {
    if (floors[s] < 0 || (wc[s] && cmp_ok[s])) continue;
    report.failing_var = g.state(s).name;
    if (!wc[s]) {
      report.reason = "play from " + g.state(s).name + " never reaches a leaf";
    } else if (cmp[s].divergent) {
      report.reason = "a child of " + g.state(s).name + " diverges";
    } else {
      const auto& c = cmp[s];
      report.mover = c.mover;
      report.chosen_payoff = c.kept;
      report.other_payoff = c.alternative;
      report.counterexample = c.counterexample;
      report.reason = c.mover.id + " prefers to deviate at " +
                      g.state(s).name + ": " + ToString(c.kept) + " < " +
                      ToString(c.alternative) + " at n = " +
                      std::to_string(*c.counterexample);
    }
    break;
  }
  return report;
}

bool Spe(const EquationSystem& system, const VarRef& state) {
  return CheckSpe(system, state).holds;
}

bool Box(const EquationSystem& system, const VarRef& state,
         Predicate predicate) {
  RequireProfile(system);
  for (const auto& [var, floor] : IndexFloors(system, state)) {
    VarRef at{var, floor};
    bool ok = false;
    switch (predicate) {
      case Predicate::kWC:
        ok = WeaklyConvergent(system, at);
        break;
      case Predicate::kSC:
        ok = StronglyConvergent(system, at);
        break;
      case Predicate::kPE:
        ok = Pe(system, at);
        break;
      case Predicate::kSPE:
        ok = Spe(system, at);
        break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace coalgame
