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


#include "support.h"

#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace coalgame::testing {

namespace {

const Agent kA{"A"};
const Agent kB{"B"};

Rational RandomRational(std::mt19937_64& rng, std::int64_t m) {
  std::uniform_int_distribution<std::int64_t> num(-m, m);
  std::uniform_int_distribution<std::int64_t> den(1, m);
  return Rational(num(rng), den(rng));
}

AffineUtility RandomUtility(std::mt19937_64& rng, const GeneratorOptions& o,
                            bool indexed) {
  AffineUtility u;
  for (const Agent& a : {kA, kB}) {
    Affine form{RandomRational(rng, o.max_magnitude), 0};
    if (indexed) {
      // Mostly the small slopes the auction games use, sometimes anything.
      std::uniform_int_distribution<int> pick(0, 3);
      switch (pick(rng)) {
        case 0: form.slope = 0; break;
        case 1: form.slope = -1; break;
        case 2: form.slope = 1; break;
        default: form.slope = RandomRational(rng, o.max_magnitude);
      }
    }
    u.Set(a, form);
  }
  return u;
}

Rational At(const Affine& f, std::int64_t n) {
  return f.constant + f.slope * n;
}

std::map<std::string, Rational> Concrete(const AffineUtility& u,
                                         std::int64_t n) {
  std::map<std::string, Rational> out;
  for (const auto& [agent, form] : u.payoffs()) out[agent.id] = At(form, n);
  return out;
}

}  // namespace

EquationSystem RandomSystem(std::mt19937_64& rng,
                            const GeneratorOptions& o) {
  std::uniform_int_distribution<int> count(1, o.max_variables);
  std::uniform_int_distribution<std::int64_t> offset(0, o.max_offset);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  EquationSystem s;
  s.agents = {kA, kB};
  s.kind = o.kind;
  s.indexed = coin(rng) < 0.5;
  const int n = count(rng);
  std::uniform_int_distribution<int> var(0, n - 1);
  auto name = [](int i) { return "X" + std::to_string(i); };

  auto child = [&]() -> Child {
    if (coin(rng) < 0.3) return RandomUtility(rng, o, s.indexed);
    return VarRef{name(var(rng)), s.indexed ? offset(rng) : 0};
  };
  for (int i = 0; i < n; ++i) {
    if (coin(rng) < 0.2) {
      s.equations.emplace(name(i), Leaf{RandomUtility(rng, o, s.indexed)});
      continue;
    }
    Node node;
    node.agent = coin(rng) < 0.5 ? kA : kB;
    if (o.kind == Kind::kProfile) {
      node.choice = coin(rng) < 0.5 ? Choice::kLeft : Choice::kRight;
    }
    node.left = child();
    node.right = child();
    s.equations.emplace(name(i), std::move(node));
  }
  s.root = VarRef{name(var(rng)), s.indexed ? offset(rng) : 0};
  return s;
}

std::vector<EquationSystem> Corpus(int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EquationSystem> out;
  out.reserve(size);
  for (int i = 0; i < size; ++i) out.push_back(RandomSystem(rng));
  return out;
}

Payoffs ConcreteOracle::Play(const Child& child, std::int64_t n) const {
  if (const auto* u = std::get_if<AffineUtility>(&child)) {
    return Concrete(*u, n);
  }
  const auto& ref = std::get<VarRef>(child);
  return Play(ref.var, n + ref.offset);
}

Payoffs ConcreteOracle::Play(const std::string& var, std::int64_t n) const {
  // The chosen path does not depend on the index, so a play that has not
  // ended after more steps than there are equations never ends.
  std::string at = var;
  const size_t limit = system_.equations.size() + 1;
  for (size_t step = 0; step <= limit; ++step) {
    const Equation& eq = system_.equations.at(at);
    if (const auto* leaf = std::get_if<Leaf>(&eq)) {
      return Concrete(leaf->utility, n);
    }
    const auto& node = std::get<Node>(eq);
    const Child& next = node.child(*node.choice);
    if (const auto* u = std::get_if<AffineUtility>(&next)) {
      return Concrete(*u, n);
    }
    const auto& ref = std::get<VarRef>(next);
    at = ref.var;
    n += ref.offset;
  }
  return std::nullopt;
}

bool ConcreteOracle::Pe(const std::string& var, std::int64_t n) const {
  const Equation& eq = system_.equations.at(var);
  if (std::holds_alternative<Leaf>(eq)) return true;
  const auto& node = std::get<Node>(eq);
  Payoffs chosen = Play(node.child(*node.choice), n);
  Payoffs other = Play(node.child(Flip(*node.choice)), n);
  if (!chosen || !other) return false;
  return chosen->at(node.agent.id) >= other->at(node.agent.id);
}

bool ConcreteOracle::Spe(const std::string& var, std::int64_t n,
                         std::int64_t horizon) const {
  // Least reachable index of every variable (offsets are nonnegative, so
  // Bellman-Ford style relaxation terminates).
  std::map<std::string, std::int64_t> floor{{var, n}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [name, at] : std::map(floor)) {
      const auto* node = std::get_if<Node>(&system_.equations.at(name));
      if (node == nullptr) continue;
      for (const Child* c : {&node->left, &node->right}) {
        const auto* ref = std::get_if<VarRef>(c);
        if (ref == nullptr) continue;
        auto it = floor.find(ref->var);
        if (it == floor.end() || it->second > at + ref->offset) {
          floor[ref->var] = at + ref->offset;
          changed = true;
        }
      }
    }
  }
  for (const auto& [name, least] : floor) {
    if (!Play(name, least)) return false;
    for (std::int64_t m = least; m <= horizon; ++m) {
      if (!Pe(name, m)) return false;
    }
  }
  return true;
}

std::set<ChoicePair> DollarSpeClasses(const Rational& r, size_t q,
                                      size_t p) {
  constexpr size_t kRounds = 48;
  constexpr size_t kChecked = 24;
  // All player strategies, expanded to kRounds rounds.
  std::set<std::vector<Choice>> strategies;
  for (size_t pre = 0; pre <= q; ++pre) {
    for (size_t per = 1; per <= p; ++per) {
      for (unsigned bits = 0; bits < (1u << (pre + per)); ++bits) {
        std::vector<Choice> seq(kRounds);
        for (size_t k = 0; k < kRounds; ++k) {
          size_t pos = k < pre ? k : pre + (k - pre) % per;
          seq[k] = (bits >> pos) & 1 ? Choice::kRight : Choice::kLeft;
        }
        strategies.insert(seq);
      }
    }
  }
  // Payoffs (A, B) when play starts at A's (first) or B's node of round k.
  using Outcome = std::optional<std::pair<Rational, Rational>>;
  auto play = [&](const std::vector<Choice>& a, const std::vector<Choice>& b,
                  size_t k, bool b_moves) -> Outcome {
    for (; k < kRounds; ++k) {
      const Rational n(static_cast<std::int64_t>(k));
      if (!b_moves && a[k] == Choice::kLeft) return std::pair(-n, r - n);
      if (b[k] == Choice::kLeft) return std::pair(r - n, -n);
      b_moves = false;
    }
    return std::nullopt;
  };
  std::set<ChoicePair> out;
  for (const auto& a : strategies) {
    for (const auto& b : strategies) {
      bool ok = true;
      for (size_t k = 0; ok && k < kChecked; ++k) {
        const Rational n(static_cast<std::int64_t>(k));
        Outcome a_go = play(a, b, k, true);
        Outcome b_go = play(a, b, k + 1, false);
        if (!a_go || !b_go) {
          ok = false;
          break;
        }
        Rational a_cont = a_go->first, b_cont = b_go->second;
        Rational a_stop = -n, b_stop = -n;
        ok = a[k] == Choice::kLeft ? a_stop >= a_cont : a_cont >= a_stop;
        ok = ok && (b[k] == Choice::kLeft ? b_stop >= b_cont
                                          : b_cont >= b_stop);
      }
      if (ok) out.emplace(a, b);
    }
  }
  return out;
}

std::set<std::string> WeaklyConvergentVariables(const EquationSystem& s) {
  std::set<std::string> wc;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [name, eq] : s.equations) {
      if (wc.count(name)) continue;
      bool ok = std::holds_alternative<Leaf>(eq);
      if (const auto* node = std::get_if<Node>(&eq)) {
        const Child& next = node->child(*node->choice);
        const auto* ref = std::get_if<VarRef>(&next);
        ok = ref == nullptr || wc.count(ref->var) > 0;
      }
      if (ok) {
        wc.insert(name);
        changed = true;
      }
    }
  }
  return wc;
}

bool PartitionBisimilar(const EquationSystem& a, const EquationSystem& b) {
  struct Item {
    std::string label;
    int left = -1;
    int right = -1;
  };
  std::vector<Item> items;
  auto label_of = [](const AffineUtility& u) { return "leaf " + ToString(u); };

  auto add_system = [&](const EquationSystem& s) {
    std::map<std::string, int> id;
    for (const auto& [name, eq] : s.equations) {
      id[name] = static_cast<int>(items.size());
      items.emplace_back();
    }
    for (const auto& [name, eq] : s.equations) {
      const int self = id[name];
      if (const auto* leaf = std::get_if<Leaf>(&eq)) {
        items[self].label = label_of(leaf->utility);
        continue;
      }
      const auto& node = std::get<Node>(eq);
      std::string label = "node " + node.agent.id;
      if (node.choice) label += std::string(" ") + ChoiceName(*node.choice);
      items[self].label = label;
      int kids[2];
      for (int k = 0; k < 2; ++k) {
        const Child& c = k == 0 ? node.left : node.right;
        if (const auto* ref = std::get_if<VarRef>(&c)) {
          kids[k] = id.at(ref->var);
        } else {
          kids[k] = static_cast<int>(items.size());
          items.push_back({label_of(std::get<AffineUtility>(c)), -1, -1});
        }
      }
      items[self].left = kids[0];
      items[self].right = kids[1];
    }
    return id.at(s.root.var);
  };
  const int ra = add_system(a);
  const int rb = add_system(b);

  std::vector<int> cls(items.size());
  {
    std::map<std::string, int> ids;
    for (size_t i = 0; i < items.size(); ++i) {
      cls[i] = ids.emplace(items[i].label, ids.size()).first->second;
    }
  }
  for (;;) {
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<int> next(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
      auto key = std::make_tuple(
          cls[i], items[i].left < 0 ? -1 : cls[items[i].left],
          items[i].right < 0 ? -1 : cls[items[i].right]);
      next[i] = ids.emplace(key, ids.size()).first->second;
    }
    std::set<int> before(cls.begin(), cls.end());
    std::set<int> after(next.begin(), next.end());
    cls = next;
    if (before.size() == after.size()) break;
  }
  return cls[ra] == cls[rb];
}

AffineUtility Payoff(std::int64_t a, std::int64_t b) {
  AffineUtility u;
  u.Set(kA, Affine{a, 0});
  u.Set(kB, Affine{b, 0});
  return u;
}

EquationSystem ZeroOneAsBc() {
  EquationSystem s;
  s.agents = {kA, kB};
  s.kind = Kind::kProfile;
  s.equations.emplace("AsBc", Node{kA, Choice::kLeft, Payoff(0, 1),
                                   VarRef{"BcAs", 0}});
  s.equations.emplace("BcAs", Node{kB, Choice::kRight, Payoff(1, 0),
                                   VarRef{"AsBc", 0}});
  s.root = VarRef{"AsBc", 0};
  return s;
}

EquationSystem BothContinue() {
  EquationSystem s;
  s.agents = {kA, kB};
  s.kind = Kind::kProfile;
  s.equations.emplace("Ac", Node{kA, Choice::kRight, Payoff(0, 1),
                                 VarRef{"Bc", 0}});
  s.equations.emplace("Bc", Node{kB, Choice::kRight, Payoff(1, 0),
                                 VarRef{"Ac", 0}});
  s.root = VarRef{"Ac", 0};
  return s;
}

EquationSystem SingleLeaf() {
  EquationSystem s;
  s.agents = {kA, kB};
  s.kind = Kind::kProfile;
  s.equations.emplace("S", Leaf{Payoff(0, 1)});
  s.root = VarRef{"S", 0};
  return s;
}

}  // namespace coalgame::testing
