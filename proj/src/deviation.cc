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

#include "coalgame/deviation.h"

#include <algorithm>
#include <deque>
#include <utility>

#include "coalgame/fixpoint.h"
#include "fixpoint_internal.h"
#include "graph.h"

namespace coalgame {

namespace {

using internal::Graph;

void RequireProfile(const EquationSystem& system) {
  if (system.kind != Kind::kProfile) {
    throw Error(ErrorCode::kKindMismatch, "deviations need a profile system");
  }
}

struct Position {
  int state;
  std::vector<Choice> address;
};

}  // namespace

std::string ToString(const DeviationPath& d) {
  std::string out = "[";
  for (size_t i = 0; i < d.address.size(); ++i) {
    if (i > 0) out += ",";
    out += ChoiceName(d.address[i]);
  }
  return out + "] " + ChoiceName(d.original) + "->" + ChoiceName(d.flipped);
}

std::vector<DeviationPath> EnumerateDeviations(const EquationSystem& system,
                                               int depth) {
  RequireProfile(system);
  Graph g(system);
  std::vector<DeviationPath> out;
  // Breadth-first with l before r gives length-then-lexicographic order.
  std::deque<Position> queue{{g.root(), {}}};
  while (!queue.empty()) {
    Position at = std::move(queue.front());
    queue.pop_front();
    const auto& s = g.state(at.state);
    if (s.is_leaf || static_cast<int>(at.address.size()) >= depth) continue;
    out.push_back(DeviationPath{at.address, *s.choice, Flip(*s.choice)});
    for (Choice c : {Choice::kLeft, Choice::kRight}) {
      Position next{s.child(c).target, at.address};
      next.address.push_back(c);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

bool Dominates(const EquationSystem& system, const DeviationPath& d) {
  RequireProfile(system);
  Graph g(system);
  int s = g.root();
  for (Choice c : d.address) {
    if (g.state(s).is_leaf) {
      throw Error(ErrorCode::kInvalidArgument,
                  "deviation address runs past a leaf: " + ToString(d));
    }
    s = g.state(s).child(c).target;
  }
  const auto& node = g.state(s);
  if (node.is_leaf || *node.choice != d.original ||
      d.flipped != Flip(d.original)) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a one-deviation of this profile: " + ToString(d));
  }
  auto floors = internal::Floors(g, g.root(), g.root_offset());
  auto cmp = internal::CompareChildren(g, s, d.original, floors[s]);
  if (cmp.divergent) {
    throw Error(ErrorCode::kDivergentComparison,
                "induced payoff undefined below " + node.name);
  }
  return cmp.holds;
}

PrincipleReport OneDeviationPrinciple(const EquationSystem& system) {
  RequireProfile(system);
  Graph g(system);
  auto floors = internal::Floors(g, g.root(), g.root_offset());
  for (int s = 0; s < g.size(); ++s) {
    if (floors[s] >= 0 && !internal::ChosenLeaf(g, s)) {
      throw Error(ErrorCode::kNotStronglyConvergent,
                  "profile is not strongly convergent: play from " +
                      g.state(s).name + " never reaches a leaf");
    }
  }

  PrincipleReport report;
  report.spe = Spe(system, system.root);
  report.all_dominated = true;

  // Shortest address to every reachable state; one flip per state.
  std::vector<bool> seen(g.size(), false);
  std::deque<Position> queue{{g.root(), {}}};
  seen[g.root()] = true;
  while (!queue.empty()) {
    Position at = std::move(queue.front());
    queue.pop_front();
    const auto& s = g.state(at.state);
    if (s.is_leaf) continue;
    auto cmp = internal::CompareChildren(g, at.state, *s.choice,
                                         floors[at.state]);
    if (!cmp.holds && report.all_dominated) {
      report.all_dominated = false;
      report.witness = DeviationPath{at.address, *s.choice, Flip(*s.choice)};
      report.witness_var = s.name;
    }
    for (Choice c : {Choice::kLeft, Choice::kRight}) {
      int t = s.child(c).target;
      if (seen[t]) continue;
      seen[t] = true;
      Position next{t, at.address};
      next.address.push_back(c);
      queue.push_back(std::move(next));
    }
  }
  report.agree = report.spe == report.all_dominated;
  return report;
}

}  // namespace coalgame
