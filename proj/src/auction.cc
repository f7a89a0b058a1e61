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

#include "coalgame/auction.h"

#include <set>
#include <utility>

#include "coalgame/fixpoint.h"

namespace coalgame {

namespace {

const Agent kA{"A"};
const Agent kB{"B"};

AffineUtility Payoff(Affine a, Affine b) {
  return AffineUtility({{kA, a}, {kB, b}});
}

// Profile of an alternating game where A plays `a` and B plays `b` at every
// node. `step` is the offset on the B -> A edge.
EquationSystem StationaryProfile(const std::string& a_var,
                                 const std::string& b_var, Choice a, Choice b,
                                 const AffineUtility& v,
                                 const AffineUtility& w, std::int64_t step,
                                 bool indexed) {
  EquationSystem s;
  s.agents = {kA, kB};
  s.kind = Kind::kProfile;
  s.indexed = indexed;
  s.equations.emplace(a_var, Node{kA, a, v, VarRef{b_var, 0}});
  s.equations.emplace(b_var, Node{kB, b, w, VarRef{a_var, step}});
  s.root = VarRef{a_var, 0};
  return s;
}

GameBundle MakeAlternating(const AffineUtility& v, const AffineUtility& w,
                           std::int64_t step, bool indexed) {
  GameBundle bundle;
  EquationSystem& g = bundle.game;
  g.agents = {kA, kB};
  g.kind = Kind::kGame;
  g.indexed = indexed;
  g.equations.emplace("G", Node{kA, std::nullopt, v, VarRef{"H", 0}});
  g.equations.emplace("H", Node{kB, std::nullopt, w, VarRef{"G", step}});
  g.root = VarRef{"G", 0};

  const Choice s = Choice::kLeft;
  const Choice c = Choice::kRight;
  bundle.profiles.emplace(
      "AsBc", StationaryProfile("AsBc", "BcAs", s, c, v, w, step, indexed));
  bundle.profiles.emplace(
      "AcBs", StationaryProfile("AcBs", "BsAc", c, s, v, w, step, indexed));
  bundle.profiles.emplace(
      "AcBc", StationaryProfile("Ac", "Bc", c, c, v, w, step, indexed));
  bundle.profiles.emplace(
      "AsBs", StationaryProfile("As", "Bs", s, s, v, w, step, indexed));
  return bundle;
}

// The parts of an alternating stop/continue game the pattern machinery
// needs. Stop payoffs are forms in the index of the node that stops.
struct Alternating {
  std::string first_var;
  std::string second_var;
  Agent first;
  Agent second;
  AffineUtility first_stop;
  AffineUtility second_stop;
  std::int64_t first_to_second = 0;
  std::int64_t second_to_first = 0;
  std::int64_t root_index = 0;
};

AffineUtility StopLeaf(const EquationSystem& game, const std::string& var,
                       const Child& child) {
  if (const auto* u = std::get_if<AffineUtility>(&child)) return *u;
  const auto& ref = std::get<VarRef>(child);
  const auto* leaf = std::get_if<Leaf>(&game.At(ref.var));
  if (leaf == nullptr) {
    throw Error(ErrorCode::kShape, "left child of " + var + " is not a leaf");
  }
  return leaf->utility.Shifted(ref.offset);
}

Alternating ReadAlternating(const EquationSystem& game) {
  if (game.kind != Kind::kGame) {
    throw Error(ErrorCode::kShape, "expected a game system");
  }
  if (!Validate(game).ok()) {
    throw Error(ErrorCode::kShape, "game system does not validate");
  }
  auto node_at = [&](const std::string& var) -> const Node& {
    const auto* node = std::get_if<Node>(&game.At(var));
    if (node == nullptr) {
      throw Error(ErrorCode::kShape, var + " is not a decision node");
    }
    return *node;
  };
  Alternating alt;
  alt.first_var = game.root.var;
  alt.root_index = game.root.offset;
  const Node& g = node_at(alt.first_var);
  const auto* to_h = std::get_if<VarRef>(&g.right);
  if (to_h == nullptr || to_h->var == alt.first_var) {
    throw Error(ErrorCode::kShape,
                "right child of " + alt.first_var + " must be the other node");
  }
  alt.second_var = to_h->var;
  alt.first_to_second = to_h->offset;
  const Node& h = node_at(alt.second_var);
  const auto* to_g = std::get_if<VarRef>(&h.right);
  if (to_g == nullptr || to_g->var != alt.first_var) {
    throw Error(ErrorCode::kShape, "right child of " + alt.second_var +
                                       " must return to " + alt.first_var);
  }
  alt.second_to_first = to_g->offset;
  alt.first = g.agent;
  alt.second = h.agent;
  if (alt.first == alt.second) {
    throw Error(ErrorCode::kShape, "the two nodes must belong to two players");
  }
  alt.first_stop = StopLeaf(game, alt.first_var, g.left);
  alt.second_stop = StopLeaf(game, alt.second_var, h.left);
  return alt;
}

void CheckBounds(const PlayerPattern& p, const PatternBounds& bounds) {
  if (p.period.empty()) {
    throw Error(ErrorCode::kBoundsExceeded, "pattern period is empty");
  }
  if (p.preperiod.size() > bounds.max_preperiod ||
      p.period.size() > bounds.max_period) {
    throw Error(ErrorCode::kBoundsExceeded,
                "pattern " + ToString(p) + " exceeds configured bounds");
  }
}

// Positions 0 .. preperiod+period-1 of a pattern; the last wraps back to
// the start of the period.
size_t NextPosition(const PlayerPattern& p, size_t i) {
  size_t len = p.preperiod.size() + p.period.size();
  return i + 1 < len ? i + 1 : p.preperiod.size();
}

Choice ChoiceAtPosition(const PlayerPattern& p, size_t i) {
  return i < p.preperiod.size() ? p.preperiod[i]
                                 : p.period[i - p.preperiod.size()];
}

}  // namespace

GameBundle MakeZeroOne() {
  AffineUtility v = Payoff({0, 0}, {1, 0});
  AffineUtility w = Payoff({1, 0}, {0, 0});
  return MakeAlternating(v, w, 0, false);
}

GameBundle MakeDollar(const Rational& r) {
  AffineUtility v = Payoff({0, -1}, {r, -1});
  AffineUtility w = Payoff({r, -1}, {0, -1});
  return MakeAlternating(v, w, 1, true);
}

Choice PlayerPattern::At(size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  return period[(k - preperiod.size()) % period.size()];
}

std::string ToString(const PlayerPattern& p) {
  auto list = [](const std::vector<Choice>& cs) {
    std::string out = "[";
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i > 0) out += ",";
      out += ChoiceName(cs[i]);
    }
    return out + "]";
  };
  return list(p.preperiod) + list(p.period) + "*";
}

std::string ToString(const StopPattern& p) {
  return "first " + ToString(p.first) + " second " + ToString(p.second);
}

EquationSystem PatternToProfile(const EquationSystem& game,
                                const StopPattern& pattern,
                                const PatternBounds& bounds) {
  CheckBounds(pattern.first, bounds);
  CheckBounds(pattern.second, bounds);
  Alternating alt = ReadAlternating(game);

  auto first_name = [&](size_t i, size_t j) {
    return alt.first_var + "#" + std::to_string(i) + "." + std::to_string(j);
  };
  auto second_name = [&](size_t i, size_t j) {
    return alt.second_var + "#" + std::to_string(i) + "." + std::to_string(j);
  };

  EquationSystem profile;
  profile.agents = game.agents;
  profile.kind = Kind::kProfile;
  profile.indexed = game.indexed;
  profile.root = VarRef{first_name(0, 0), alt.root_index};

  // Round k is the k-th decision of both players; its state is the pair of
  // pattern positions, which is eventually periodic.
  std::set<std::pair<size_t, size_t>> seen;
  size_t i = 0, j = 0;
  while (seen.emplace(i, j).second) {
    size_t ni = NextPosition(pattern.first, i);
    size_t nj = NextPosition(pattern.second, j);
    profile.equations.emplace(
        first_name(i, j),
        Node{alt.first, ChoiceAtPosition(pattern.first, i), alt.first_stop,
             VarRef{second_name(i, j), alt.first_to_second}});
    profile.equations.emplace(
        second_name(i, j),
        Node{alt.second, ChoiceAtPosition(pattern.second, j), alt.second_stop,
             VarRef{first_name(ni, nj), alt.second_to_first}});
    i = ni;
    j = nj;
  }
  return profile;
}

std::vector<PlayerPattern> EnumeratePlayerPatterns(size_t q, size_t p) {
  auto all_words = [](size_t len) {
    std::vector<std::vector<Choice>> words;
    for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
      std::vector<Choice> w(len);
      for (size_t k = 0; k < len; ++k) {
        // Most significant position first so that words come out in
        // lexicographic order with l < r.
        w[k] = (bits >> (len - 1 - k)) & 1 ? Choice::kRight : Choice::kLeft;
      }
      words.push_back(std::move(w));
    }
    return words;
  };
  std::vector<PlayerPattern> out;
  for (size_t pre = 0; pre <= q; ++pre) {
    for (size_t per = 1; per <= p; ++per) {
      for (const auto& a : all_words(pre)) {
        for (const auto& b : all_words(per)) out.push_back({a, b});
      }
    }
  }
  return out;
}

std::vector<StopPattern> CharacterizeGame(const EquationSystem& game,
                                          size_t q, size_t p) {
  if (q < 1 || p < 1 || q > 4 || p > 4) {
    throw Error(ErrorCode::kBoundsExceeded,
                "characterize needs 1 <= q, p <= 4");
  }
  PatternBounds bounds{q, p};
  auto patterns = EnumeratePlayerPatterns(q, p);
  std::vector<StopPattern> classes;
  std::vector<EquationSystem> representatives;
  for (const auto& first : patterns) {
    for (const auto& second : patterns) {
      StopPattern sp{first, second};
      EquationSystem profile = PatternToProfile(game, sp, bounds);
      if (!Spe(profile, profile.root)) continue;
      bool known = false;
      for (const auto& rep : representatives) {
        if (Bisimilar(rep, profile)) {
          known = true;
          break;
        }
      }
      if (!known) {
        classes.push_back(sp);
        representatives.push_back(std::move(profile));
      }
    }
  }
  return classes;
}

std::vector<StopPattern> Characterize(const Rational& r, size_t q, size_t p) {
  return CharacterizeGame(MakeDollar(r).game, q, p);
}

FeatureReport CheckFeatures(const EquationSystem& game, bool strict1) {
  Alternating alt = ReadAlternating(game);
  FeatureReport report;
  report.strict1 = strict1;
  report.feature1 = true;
  report.feature2 = true;

  struct Side {
    const Agent& mover;
    const AffineUtility& own_stop;
    const AffineUtility& other_stop;
    std::int64_t to_other;
    std::int64_t back;
    std::int64_t floor;
  };
  const Side sides[] = {
      {alt.first, alt.first_stop, alt.second_stop, alt.first_to_second,
       alt.second_to_first, alt.root_index},
      {alt.second, alt.second_stop, alt.first_stop, alt.second_to_first,
       alt.first_to_second, alt.root_index + alt.first_to_second},
  };
  for (const Side& s : sides) {
    const Affine& stop_now = s.own_stop.at(s.mover);
    Affine other_next = s.other_stop.Shifted(s.to_other).at(s.mover);
    Affine stop_later = s.own_stop.Shifted(s.to_other + s.back).at(s.mover);
    if (!HoldsForAll(other_next, stop_now, s.floor, strict1)) {
      report.feature1 = false;
    }
    if (!HoldsForAll(stop_now, stop_later, s.floor, true)) {
      report.feature2 = false;
    }
  }
  return report;
}

}  // namespace coalgame
