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


// Shared helpers for the test suites: a seeded generator of random profile
// systems and reference oracles that work on concrete indices.

#ifndef COALGAME_TESTS_SUPPORT_H_
#define COALGAME_TESTS_SUPPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coalgame/schema.h"

namespace coalgame::testing {

struct GeneratorOptions {
  int max_variables = 8;
  std::int64_t max_offset = 2;
  std::int64_t max_magnitude = 10;  // bound on |num| and |den|
  Kind kind = Kind::kProfile;
};

// Random system that passes Validate(). Indexed or not at random.
EquationSystem RandomSystem(std::mt19937_64& rng,
                            const GeneratorOptions& options = {});

// The fixed corpus used by the property and acceptance tests.
std::vector<EquationSystem> Corpus(int size, std::uint64_t seed);

// Payoff vector of a concrete subtree, or nullopt when its play diverges.
using Payoffs = std::optional<std::map<std::string, Rational>>;

// Reference semantics on concrete indices. Independent of the library's
// graph code: walks equations directly.
class ConcreteOracle {
 public:
  explicit ConcreteOracle(const EquationSystem& system) : system_(system) {}

  // Realized payoffs of the subtree for `child` entered at index n.
  Payoffs Play(const Child& child, std::int64_t n) const;
  Payoffs Play(const std::string& var, std::int64_t n) const;

  // PE at the concrete subtree (var, n); false when any play diverges.
  bool Pe(const std::string& var, std::int64_t n) const;

  // SPE at every concrete subtree reachable from (var, n) whose index is
  // at most `horizon`.
  bool Spe(const std::string& var, std::int64_t n,
           std::int64_t horizon) const;

 private:
  const EquationSystem& system_;
};

// Choice sequences of both players over the first rounds of the dollar
// auction, one entry per SPE class of eventually periodic strategies with
// preperiod <= q and period <= p. Computed by direct play on concrete
// rounds, without equation systems.
using ChoicePair = std::pair<std::vector<Choice>, std::vector<Choice>>;
std::set<ChoicePair> DollarSpeClasses(const Rational& r, size_t q, size_t p);

// Least fixpoint of weak convergence, by iteration over variables.
std::set<std::string> WeaklyConvergentVariables(const EquationSystem& system);

// Partition refinement on the disjoint union of two unindexed systems.
bool PartitionBisimilar(const EquationSystem& a, const EquationSystem& b);

// The zero/one game profiles written out by hand.
EquationSystem ZeroOneAsBc();
EquationSystem BothContinue();
EquationSystem SingleLeaf();

AffineUtility Payoff(std::int64_t a, std::int64_t b);

}  // namespace coalgame::testing

#endif  // COALGAME_TESTS_SUPPORT_H_
