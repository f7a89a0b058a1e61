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

#include "coalgame/schema.h"

#include <deque>
#include <set>
#include <utility>

#include "graph.h"

namespace coalgame {

namespace {

bool Fails(const Affine& lhs, const Affine& rhs, std::int64_t n, bool strict) {
  Rational diff = lhs.At(n) - rhs.At(n);
  return strict ? diff.Sign() <= 0 : diff.Sign() < 0;
}

}  // namespace

std::optional<std::int64_t> FirstViolation(const Affine& lhs,
                                           const Affine& rhs,
                                           std::int64_t floor, bool strict) {
  if (Fails(lhs, rhs, floor, strict)) return floor;
  Rational slope_gap = lhs.slope - rhs.slope;
  if (slope_gap.Sign() >= 0) return std::nullopt;
  // diff(n) = gap0 + slope_gap * n crosses zero at t = gap0 / -slope_gap.
  Rational t = (lhs.constant - rhs.constant) / -slope_gap;
  std::int64_t n = strict ? t.Ceil() : t.Floor() + 1;
  return std::max(n, floor);
}

bool HoldsForAll(const Affine& lhs, const Affine& rhs, std::int64_t floor,
                 bool strict) {
  // Affine in n: holds on [floor, inf) iff it holds at floor and the gap
  // does not shrink.
  return lhs.slope >= rhs.slope && !Fails(lhs, rhs, floor, strict);
}

const Affine& AffineUtility::at(const Agent& agent) const {
  auto it = payoffs_.find(agent);
  if (it == payoffs_.end()) {
    throw Error(ErrorCode::kUnresolved, "no payoff for agent " + agent.id);
  }
  return it->second;
}

AffineUtility AffineUtility::Shifted(std::int64_t delta) const {
  if (delta == 0) return *this;
  AffineUtility out;
  for (const auto& [agent, form] : payoffs_) {
    out.payoffs_.emplace(agent, form.Shifted(delta));
  }
  return out;
}

const Equation* EquationSystem::Find(const std::string& var) const {
  auto it = equations.find(var);
  return it == equations.end() ? nullptr : &it->second;
}

const Equation& EquationSystem::At(const std::string& var) const {
  const Equation* eq = Find(var);
  if (eq == nullptr) {
    throw Error(ErrorCode::kUnresolved, "unresolved variable " + var);
  }
  return *eq;
}

ValidationReport Validate(const EquationSystem& system) {
  ValidationReport report;
  auto defect = [&](std::string msg) {
    report.defects.push_back(std::move(msg));
  };

  std::set<Agent> agents;
  if (system.agents.empty()) defect("agent set is empty");
  for (const Agent& a : system.agents) {
    if (a.id.empty()) defect("agent with empty identifier");
    if (!agents.insert(a).second) defect("duplicate agent " + a.id);
  }
  if (system.equations.empty()) defect("system has no equations");

  auto check_utility = [&](const std::string& where, const AffineUtility& u) {
    for (const Agent& a : agents) {
      if (!u.Has(a)) defect(where + ": no payoff for agent " + a.id);
    }
    for (const auto& [a, form] : u.payoffs()) {
      if (agents.count(a) == 0) {
        defect(where + ": payoff for unknown agent " + a.id);
      }
      if (!system.indexed && !form.slope.IsZero()) {
        defect(where + ": nonzero slope in unindexed system");
      }
    }
  };
  auto check_ref = [&](const std::string& where, const VarRef& ref) {
    if (system.Find(ref.var) == nullptr) {
      defect("unresolved variable " + ref.var + " (" + where + ")");
    }
    if (ref.offset < 0) defect(where + ": negative offset");
    if (!system.indexed && ref.offset != 0) {
      defect(where + ": nonzero offset in unindexed system");
    }
  };
  auto check_child = [&](const std::string& where, const Child& child) {
    if (const auto* ref = std::get_if<VarRef>(&child)) {
      check_ref(where, *ref);
    } else {
      check_utility(where, std::get<AffineUtility>(child));
    }
  };

  check_ref("root", system.root);
  for (const auto& [name, eq] : system.equations) {
    if (name.empty()) defect("variable with empty name");
    if (const auto* leaf = std::get_if<Leaf>(&eq)) {
      check_utility(name, leaf->utility);
      continue;
    }
    const auto& node = std::get<Node>(eq);
    if (agents.count(node.agent) == 0) {
      defect(name + ": unknown agent " + node.agent.id);
    }
    if (system.kind == Kind::kProfile && !node.choice) {
      defect(name + ": profile node without a choice");
    }
    if (system.kind == Kind::kGame && node.choice) {
      defect(name + ": game node carries a choice");
    }
    check_child(name + ".left", node.left);
    check_child(name + ".right", node.right);
  }
  return report;
}

EquationSystem Project(const EquationSystem& profile) {
  if (profile.kind != Kind::kProfile) {
    throw Error(ErrorCode::kKindMismatch, "project expects a profile system");
  }
  EquationSystem game = profile;
  game.kind = Kind::kGame;
  for (auto& [name, eq] : game.equations) {
    if (auto* node = std::get_if<Node>(&eq)) node->choice.reset();
  }
  return game;
}

namespace {

// Admissible values of d = (index at a's state) - (index at b's state) for
// a pair of states to be bisimilar. Only leaves with a nonzero slope pin d,
// so the admissible set is everything, one value, or nothing.
struct Constraint {
  enum Tag { kAny, kExactly, kNone } tag = kAny;
  Rational value;

  static Constraint None() { return {kNone, {}}; }
  static Constraint Exactly(Rational v) { return {kExactly, v}; }

  Constraint Meet(const Constraint& other) const {
    if (tag == kNone || other.tag == kAny) return *this;
    if (other.tag == kNone || tag == kAny) return other;
    return value == other.value ? *this : None();
  }
  // Constraint on d given the constraint on d + step.
  Constraint Back(std::int64_t step) const {
    if (tag != kExactly) return *this;
    return Exactly(value - step);
  }
  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.tag == b.tag && (a.tag != kExactly || a.value == b.value);
  }
};

Constraint LeafConstraint(const AffineUtility& a, const AffineUtility& b) {
  if (a.payoffs().size() != b.payoffs().size()) return Constraint::None();
  Constraint c;
  for (const auto& [agent, fa] : a.payoffs()) {
    if (!b.Has(agent)) return Constraint::None();
    const Affine& fb = b.at(agent);
    if (fa.slope != fb.slope) return Constraint::None();
    if (fa.slope.IsZero()) {
      if (fa.constant != fb.constant) return Constraint::None();
      continue;
    }
    // ca + s*ia = cb + s*ib  <=>  ia - ib = (cb - ca) / s.
    Rational d = (fb.constant - fa.constant) / fa.slope;
    if (!d.IsInteger()) return Constraint::None();
    c = c.Meet(Constraint::Exactly(d));
  }
  return c;
}

}  // namespace

bool Bisimilar(const EquationSystem& a, const EquationSystem& b) {
  if (a.kind != b.kind) {
    throw Error(ErrorCode::kKindMismatch,
                "bisimilarity needs two systems of the same kind");
  }
  internal::Graph ga(a), gb(b);

  // Reachable part of the product; every pair has two successor pairs.
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  std::deque<int> todo;
  auto intern = [&](int i, int j) {
    auto [it, fresh] = id.emplace(std::make_pair(i, j),
                                  static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(i, j);
      todo.push_back(it->second);
    }
    return it->second;
  };
  intern(ga.root(), gb.root());

  struct PairInfo {
    Constraint local;
    bool is_node = false;
    int succ[2] = {-1, -1};
    std::int64_t step[2] = {0, 0};
  };
  std::vector<PairInfo> info;
  while (!todo.empty()) {
    int p = todo.front();
    todo.pop_front();
    if (static_cast<int>(info.size()) <= p) info.resize(p + 1);
    const auto& sa = ga.state(pairs[p].first);
    const auto& sb = gb.state(pairs[p].second);
    PairInfo pi;
    if (sa.is_leaf && sb.is_leaf) {
      pi.local = LeafConstraint(sa.utility, sb.utility);
    } else if (sa.is_leaf || sb.is_leaf || sa.agent != sb.agent ||
               sa.choice != sb.choice) {
      pi.local = Constraint::None();
    } else {
      pi.is_node = true;
      const internal::Edge* ea[2] = {&sa.left, &sa.right};
      const internal::Edge* eb[2] = {&sb.left, &sb.right};
      for (int c = 0; c < 2; ++c) {
        pi.succ[c] = intern(ea[c]->target, eb[c]->target);
        pi.step[c] = ea[c]->offset - eb[c]->offset;
      }
    }
    info[p] = pi;
  }
  info.resize(pairs.size());

  // Least solution: start from "anything goes" and propagate constraints
  // from successors until stable. The per-pair lattice has height 3.
  std::vector<Constraint> cons(pairs.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < pairs.size(); ++p) {
      Constraint c = info[p].local;
      if (info[p].is_node) {
        for (int k = 0; k < 2; ++k) {
          c = c.Meet(cons[info[p].succ[k]].Back(info[p].step[k]));
        }
      }
      if (!(c == cons[p])) {
        cons[p] = c;
        changed = true;
      }
    }
  }

  const Constraint& root = cons[0];
  switch (root.tag) {
    case Constraint::kAny:
      return true;
    case Constraint::kNone:
      return false;
    case Constraint::kExactly:
      return root.value == Rational(ga.root_offset() - gb.root_offset());
  }
  return false;
}

std::map<std::string, std::int64_t> IndexFloors(const EquationSystem& system,
                                                const VarRef& start) {
  internal::Graph g(system);
  auto floors = internal::Floors(g, g.IndexOf(start.var), start.offset);
  std::map<std::string, std::int64_t> out;
  for (int i = 0; i < g.num_variables(); ++i) {
    if (floors[i] >= 0) out.emplace(g.state(i).name, floors[i]);
  }
  return out;
}

EquationSystem RenameVariables(
    const EquationSystem& system,
    const std::map<std::string, std::string>& renaming) {
  auto rename = [&](const std::string& v) {
    auto it = renaming.find(v);
    return it == renaming.end() ? v : it->second;
  };
  auto rename_child = [&](Child c) {
    if (auto* ref = std::get_if<VarRef>(&c)) ref->var = rename(ref->var);
    return c;
  };
  EquationSystem out = system;
  out.equations.clear();
  for (const auto& [name, eq] : system.equations) {
    Equation copy = eq;
    if (auto* node = std::get_if<Node>(&copy)) {
      node->left = rename_child(node->left);
      node->right = rename_child(node->right);
    }
    out.equations.emplace(rename(name), std::move(copy));
  }
  out.root.var = rename(system.root.var);
  return out;
}

std::string ToString(const Affine& form) {
  if (form.slope.IsZero()) return form.constant.ToString();
  std::string term;
  Rational mag = form.slope.Sign() < 0 ? -form.slope : form.slope;
  if (mag == Rational(1)) {
    term = "n";
  } else if (mag.IsInteger()) {
    term = mag.ToString() + "n";
  } else {
    term = "(" + mag.ToString() + ")n";
  }
  if (form.constant.IsZero()) {
    return form.slope.Sign() < 0 ? "-" + term : term;
  }
  return form.constant.ToString() + (form.slope.Sign() < 0 ? " - " : " + ") +
         term;
}

std::string ToString(const AffineUtility& utility) {
  std::string out;
  for (const auto& [agent, form] : utility.payoffs()) {
    if (!out.empty()) out += ", ";
    out += agent.id + ":" + ToString(form);
  }
  return out;
}

}  // namespace coalgame
