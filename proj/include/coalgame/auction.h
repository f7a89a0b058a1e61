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

// Built-in two-player stop/continue games and the search over eventually
// periodic strategy profiles.
//
// Both games alternate between a node G owned by A and a node H owned by B.
// The left choice stops the game (a payoff leaf), the right choice hands the
// move to the other player:
//
//   0/1 game:        G = <A, v, H>,     H = <B, w, G>
//                    v = [A:0, B:1],    w = [A:1, B:0]
//   dollar auction:  G_n = <A, v_n, H_n>,  H_n = <B, w_n, G_{n+1}>
//                    v_n = [A:-n, B:r-n],  w_n = [A:r-n, B:-n]

#ifndef COALGAME_AUCTION_H_
#define COALGAME_AUCTION_H_

#include <map>
#include <string>
#include <vector>

#include "coalgame/schema.h"

namespace coalgame {

struct GameBundle {
  EquationSystem game;
  // Profiles of `game`, by name: AsBc, AcBs, AcBc, AsBs.
  std::map<std::string, EquationSystem> profiles;
};

GameBundle MakeZeroOne();
GameBundle MakeDollar(const Rational& r);

// A player's choice at their k-th decision node: preperiod[k] while
// k < preperiod.size(), then period repeated.
struct PlayerPattern {
  std::vector<Choice> preperiod;
  std::vector<Choice> period;

  Choice At(size_t k) const;
  friend bool operator==(const PlayerPattern&,
                         const PlayerPattern&) = default;
};

struct StopPattern {
  PlayerPattern first;   // the player moving at the root
  PlayerPattern second;  // the other player
  friend bool operator==(const StopPattern&, const StopPattern&) = default;
};

std::string ToString(const PlayerPattern& p);
std::string ToString(const StopPattern& p);

struct PatternBounds {
  size_t max_preperiod = 4;
  size_t max_period = 4;
};

// Profile system for `game` that follows `pattern`. `game` must be an
// alternating stop/continue game (Error(kShape) otherwise); the pattern must
// be within bounds with a nonempty period (Error(kBoundsExceeded)).
EquationSystem PatternToProfile(const EquationSystem& game,
                                const StopPattern& pattern,
                                const PatternBounds& bounds = {});

// Every player pattern with preperiod length <= q and period length in
// [1, p], shortest first.
std::vector<PlayerPattern> EnumeratePlayerPatterns(size_t q, size_t p);

// SPE stop patterns of `game` with preperiod <= q and period <= p, one
// representative per bisimilarity class of the induced profiles. q and p
// must lie in [1, 4] (Error(kBoundsExceeded)).
std::vector<StopPattern> CharacterizeGame(const EquationSystem& game,
                                          size_t q, size_t p);

// CharacterizeGame on the dollar auction with prize r.
std::vector<StopPattern> Characterize(const Rational& r, size_t q, size_t p);

struct FeatureReport {
  // At every node the mover does at least as well (strictly, with strict1)
  // when the other player stops at the next node as when stopping now.
  bool feature1 = false;
  // Stopping now is strictly better than stopping at one's next node.
  bool feature2 = false;
  bool strict1 = false;
};

// Both features are decided for every index n >= 0. Throws Error(kShape)
// unless `game` is an alternating two-player stop/continue game.
FeatureReport CheckFeatures(const EquationSystem& game, bool strict1);

}  // namespace coalgame

#endif  // COALGAME_AUCTION_H_
