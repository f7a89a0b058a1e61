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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coalgame/auction.h"
#include "coalgame/coinduct.h"
#include "coalgame/deviation.h"
#include "coalgame/fixpoint.h"
#include "json.hpp"
#include "support.h"

namespace coalgame {
namespace {

constexpr std::uint64_t kCorpusSeed = 20260101;
constexpr int kCorpusSize = 1000;

const Agent kA{"A"};
const Agent kB{"B"};

// Collects failed checks for one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failures_.empty(); }
  int total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> notes_;
  int total_ = 0;
  std::vector<std::string> failures_;
};

const std::vector<EquationSystem>& TheCorpus() {
  static const auto* corpus =
      new std::vector<EquationSystem>(testing::Corpus(kCorpusSize,
                                                      kCorpusSeed));
  return *corpus;
}

std::string Name(const Rational& r) { return "r=" + r.ToString(); }

const Agent& MoverOf(const EquationSystem& s, const std::string& var) {
  return std::get<Node>(s.equations.at(var)).agent;
}

void ZeroOneGame(Checks& c) {
  GameBundle b = MakeZeroOne();
  const EquationSystem& asbc = b.profiles.at("AsBc");
  const EquationSystem& acbs = b.profiles.at("AcBs");
  c.Expect(Spe(asbc, asbc.root), "spe(AsBc)");
  c.Expect(Spe(acbs, acbs.root), "spe(AcBs)");
  c.Expect(Certify(asbc, Predicate::kSPE, 3).certified, "certify(SPE, 3)");
  c.Expect(MinimalDepth(asbc, Predicate::kSPE, 16) == 3,
           "minimal_depth(SPE) = 3");
  c.Expect(Certify(asbc, Predicate::kSC, 2).certified, "certify(SC, 2)");
  c.Expect(MinimalDepth(asbc, Predicate::kSC, 16) == 2,
           "minimal_depth(SC) = 2");
}

void DollarThreshold(Checks& c) {
  for (const Rational& r : {Rational(1), Rational(2), Rational(10)}) {
    GameBundle b = MakeDollar(r);
    for (const char* p : {"AsBc", "AcBs"}) {
      const EquationSystem& s = b.profiles.at(p);
      c.Expect(Spe(s, s.root), std::string("spe(") + p + "_0) at " + Name(r));
    }
  }
  for (const Rational& r : {Rational(1, 2), Rational(99, 100)}) {
    GameBundle b = MakeDollar(r);
    struct Case {
      const char* profile;
      const Agent& expected_mover;
    } cases[] = {{"AsBc", kB}, {"AcBs", kA}};
    for (const Case& k : cases) {
      const EquationSystem& s = b.profiles.at(k.profile);
      SpeReport report = CheckSpe(s, s.root);
      const std::string what =
          std::string("spe(") + k.profile + "_0) at " + Name(r);
      if (report.holds) {
        c.Expect(false, what + " is true, expected false");
        continue;
      }
      c.Expect(MoverOf(s, report.failing_var) == k.expected_mover,
               what + " fails at " + report.failing_var + ", expected an " +
                   k.expected_mover.id + "-variable");
    }
  }
}

void AlwaysModalities(Checks& c) {
  int mismatches = 0, states = 0;
  for (const EquationSystem& s : TheCorpus()) {
    if (!Validate(s).ok()) {
      c.Expect(false, "corpus system does not validate");
      continue;
    }
    for (const auto& [name, eq] : s.equations) {
      for (std::int64_t n : {std::int64_t{0}, s.root.offset}) {
        VarRef x{name, n};
        ++states;
        if (StronglyConvergent(s, x) != Box(s, x, Predicate::kWC)) {
          ++mismatches;
        }
        if (Spe(s, x) != Box(s, x, Predicate::kPE)) ++mismatches;
      }
    }
  }
  c.Expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.Note(std::to_string(states) + " states, 2 comparisons each");
}

void CoinductionSoundness(Checks& c) {
  int certificates = 0, unsound = 0;
  for (const EquationSystem& s : TheCorpus()) {
    for (Predicate p : {Predicate::kWC, Predicate::kSC, Predicate::kPE,
                        Predicate::kSPE}) {
      for (int k = 1; k <= 16; ++k) {
        if (!Certify(s, p, k).certified) continue;
        ++certificates;
        for (const auto& [name, eq] : s.equations) {
          VarRef x{name, 0};
          const bool holds = BasePredicate(p) == Predicate::kWC
                                 ? StronglyConvergent(s, x)
                                 : Spe(s, x);
          if (!holds) ++unsound;
        }
      }
    }
  }
  c.Expect(certificates > 0, "no certificates issued");
  c.Note(std::to_string(certificates) + " certificates checked");
  c.Expect(unsound == 0, std::to_string(unsound) + " unsound verdicts among " +
                             std::to_string(certificates) + " certificates");
}

void KleeneMonotonicity(Checks& c) {
  int violations = 0;
  for (const EquationSystem& s : TheCorpus()) {
    for (const auto& [name, eq] : s.equations) {
      std::vector<TreePtr> trees;
      for (int k = 1; k <= 10; ++k) trees.push_back(Unfold(s, {name, 0}, k));
      for (Predicate p : {Predicate::kWC, Predicate::kSC, Predicate::kPE,
                          Predicate::kSPE}) {
        ThreeValued settled = ThreeValued::kUnknown;
        for (const TreePtr& t : trees) {
          ThreeValued v = Eval3(*t, p);
          if (settled != ThreeValued::kUnknown && v != settled) ++violations;
          if (v != ThreeValued::kUnknown) settled = v;
        }
      }
    }
  }
  c.Expect(violations == 0, std::to_string(violations) + " violations");
  c.Note("all variables, 4 predicates, k = 1..10");
}

void OneDeviation(Checks& c) {
  int systems = 0, disagreements = 0;
  for (const EquationSystem& s : TheCorpus()) {
    if (!StronglyConvergent(s, s.root)) continue;
    ++systems;
    const bool spe = Spe(s, s.root);
    bool all = true;
    const int depth = 2 * static_cast<int>(s.equations.size());
    for (const DeviationPath& d : EnumerateDeviations(s, depth)) {
      all = all && Dominates(s, d);
    }
    PrincipleReport report = OneDeviationPrinciple(s);
    if (spe != all || all != report.all_dominated || !report.agree) {
      ++disagreements;
    }
  }
  c.Expect(systems > 0, "no strongly convergent systems in the corpus");
  c.Note(std::to_string(systems) + " strongly convergent systems");
  c.Expect(disagreements == 0, std::to_string(disagreements) +
                                   " disagreements over " +
                                   std::to_string(systems) + " systems");
}

void Characterization(Checks& c) {
  GameBundle two = MakeDollar(Rational(2));
  std::vector<StopPattern> found = Characterize(Rational(2), 3, 3);
  c.Expect(found.size() == 2, "r=2: " + std::to_string(found.size()) +
                                  " classes, expected 2");
  for (const char* name : {"AsBc", "AcBs"}) {
    bool present = false;
    for (const StopPattern& p : found) {
      present = present || Bisimilar(PatternToProfile(two.game, p),
                                     two.profiles.at(name));
    }
    c.Expect(present, std::string("r=2: no class bisimilar to ") + name);
  }
  std::vector<StopPattern> half = Characterize(Rational(1, 2), 3, 3);
  std::string listed;
  for (const StopPattern& p : half) listed += " " + ToString(p);
  c.Expect(half.empty(), "r=1/2: " + std::to_string(half.size()) +
                             " classes, expected 0:" + listed);
}

void InducedUtilities(Checks& c) {
  GameBundle b = MakeZeroOne();
  c.Expect(Induced(b.profiles.at("AsBc"), {"AsBc", 0}) ==
               testing::Payoff(0, 1),
           "0/1: induced(AsBc) = v");
  c.Expect(Induced(b.profiles.at("AcBs"), {"AcBs", 0}) ==
               testing::Payoff(1, 0),
           "0/1: induced(AcBs) = w");
  for (const Rational& r : {Rational(1, 2), Rational(1), Rational(2)}) {
    EquationSystem s = MakeDollar(r).profiles.at("AsBc");
    auto at_a = Induced(s, {"AsBc", 0});
    auto at_b = Induced(s, {"BcAs", 0});
    c.Expect(at_a && at_a->at(kA) == Affine{0, -1} &&
                 at_a->at(kB) == Affine{r, -1},
             "dollar " + Name(r) + ": induced(AsBc_n) = (-n, r - n)");
    c.Expect(at_b && at_b->at(kA) == Affine{-1, -1} &&
                 at_b->at(kB) == Affine{r - 1, -1},
             "dollar " + Name(r) +
                 ": induced(BcAs_n) = (-(n+1), r - (n+1))");
  }
}

struct Run {
  int code = -1;
  std::string out;
};

Run RunCli(const std::string& args) {
  const std::string cmd = std::string("cd '") + COALGAME_SOURCE_DIR +
                          "' && '" + COALGAME_CLI + "' " + args +
                          " 2>/dev/null";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, n);
  int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

void CliGolden(Checks& c) {
  using json = nlohmann::json;
  struct Case {
    std::string args;
    int code;
    std::function<bool(const json&)> verdict;
    std::string describe;
  };
  auto is = [](const char* key, json value) {
    return [key, value](const json& j) {
      return j.contains(key) && j[key] == value;
    };
  };
  auto failing_at = [](const char* var) {
    return [var](const json& j) {
      return j["verdict"] == false && j.value("failing_var", "") == var;
    };
  };
  const std::string spe = " --predicate spe --method fixpoint";
  std::vector<Case> cases = {
      {"check data/zero_one_AsBc.json" + spe, 0, is("verdict", true),
       "verdict true"},
      {"check data/zero_one_AcBs.json" + spe, 0, is("verdict", true),
       "verdict true"},
      {"check data/zero_one_AsBc.json --predicate spe --method coinduction "
       "--depth 3",
       0, is("verdict", "Certified"), "Certified"},
      {"check data/zero_one_AsBc.json --predicate spe --method coinduction", 0,
       is("depth_used", 3), "depth_used 3"},
      {"check data/zero_one_AsBc.json --predicate sc --method coinduction "
       "--depth 2",
       0, is("verdict", "Certified"), "Certified"},
      {"check data/zero_one_AsBc.json --predicate sc --method coinduction", 0,
       is("depth_used", 2), "depth_used 2"},
  };
  for (const char* r : {"1", "2", "10"}) {
    for (const char* p : {"AsBc", "AcBs"}) {
      cases.push_back({std::string("check data/dollar_") + p + ".json" + spe +
                           " --param r=" + r,
                       0, is("verdict", true), "verdict true"});
    }
  }
  for (const char* r : {"1/2", "99/100"}) {
    cases.push_back({"check data/dollar_AsBc.json" + spe + " --param r=" + r,
                     1, failing_at("BcAs"), "false at B-variable BcAs"});
    cases.push_back({"check data/dollar_AcBs.json" + spe + " --param r=" + r,
                     1, failing_at("AcBs"), "false at A-variable AcBs"});
  }
  for (const Case& k : cases) {
    Run first = RunCli(k.args);
    Run second = RunCli(k.args);
    c.Expect(first.out == second.out && first.code == second.code,
             k.args + ": output not stable");
    json j = json::parse(first.out, nullptr, false);
    const bool parsed = !j.is_discarded();
    c.Expect(first.code == k.code && parsed && k.verdict(j),
             k.args + ": exit " + std::to_string(first.code) + ", " +
                 (parsed ? "verdict " + j.value("verdict", json()).dump()
                         : std::string("no JSON")) +
                 "; expected exit " + std::to_string(k.code) + ", " +
                 k.describe);
  }
  c.Expect(RunCli("validate data/zero_one_game.json").code == 0,
           "validate 0/1 game");
  c.Expect(RunCli("validate data/dollar_game.json").code == 0,
           "validate dollar game");
  c.Expect(RunCli("check data/zero_one_game.json --predicate spe").code == 2,
           "check on a game document exits 2");
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0 for no limit
  void (*run)(Checks&);
};

}  // namespace
}  // namespace coalgame

int main() {
  using namespace coalgame;
  const Criterion criteria[] = {
      {1, "0/1 game SPE and coinduction depths", 1, ZeroOneGame},
      {2, "dollar auction threshold r >= 1", 1, DollarThreshold},
      {3, "SC = always WC, SPE = always PE on the corpus", 30,
       AlwaysModalities},
      {4, "coinduction soundness on the corpus", 60, CoinductionSoundness},
      {5, "Kleene monotonicity on the corpus", 0, KleeneMonotonicity},
      {6, "one-deviation principle on the corpus", 60, OneDeviation},
      {7, "characterization of SPE stop patterns", 120, Characterization},
      {8, "induced utilities as affine forms", 0, InducedUtilities},
      {9, "CLI reproduces criteria 1-2", 0, CliGolden},
  };
  int failed = 0;
  for (const Criterion& k : criteria) {
    Checks checks;
    auto start = std::chrono::steady_clock::now();
    try {
      k.run(checks);
    } catch (const std::exception& e) {
      checks.Expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (k.limit_seconds > 0 && seconds >= k.limit_seconds) {
      checks.Expect(false, "took " + std::to_string(seconds) + " s");
    }
    std::printf("criterion %d: %s  %s (%d checks, %.2f s)\n", k.number,
                checks.ok() ? "PASS" : "FAIL", k.title, checks.total(),
                seconds);
    for (const std::string& n : checks.notes()) {
      std::printf("    %s\n", n.c_str());
    }
    for (const std::string& f : checks.failures()) {
      std::printf("    failed: %s\n", f.c_str());
    }
    if (!checks.ok()) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
