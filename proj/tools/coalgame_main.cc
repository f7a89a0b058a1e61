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

// Command-line front end.
//
// Exit codes: 0 success / predicate true, 1 analysis negative (predicate
// false, validation defects, not certified), 2 usage, parse or I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalgame/auction.h"
#include "coalgame/coinduct.h"
#include "coalgame/deviation.h"
#include "coalgame/document.h"
#include "coalgame/fixpoint.h"
#include "coalgame/schema.h"
#include "coalgame/unfold.h"
#include "json.hpp"

namespace coalgame {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kDefaultSearchCap = 16;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Parameters ParseParams(const std::vector<std::string>& items) {
  Parameters out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--param expects name=value, got '" + item + "'");
    }
    auto value = Rational::Parse(item.substr(eq + 1));
    if (!value) throw UsageError("malformed rational in --param " + item);
    out[item.substr(0, eq)] = *value;
  }
  return out;
}

EquationSystem LoadValid(const std::string& path,
                         const std::vector<std::string>& params) {
  EquationSystem system = LoadDocument(path, ParseParams(params));
  auto report = Validate(system);
  if (!report.ok()) {
    std::string msg = path + " does not validate:";
    for (const auto& d : report.defects) msg += "\n  " + d;
    throw UsageError(msg);
  }
  return system;
}

std::string AddressText(const std::vector<Choice>& address) {
  std::string out;
  for (Choice c : address) out += ChoiceName(c);
  return out;
}

ordered_json PatternJson(const PlayerPattern& p) {
  ordered_json pre = ordered_json::array();
  ordered_json per = ordered_json::array();
  for (Choice c : p.preperiod) pre.push_back(ChoiceName(c));
  for (Choice c : p.period) per.push_back(ChoiceName(c));
  return {{"preperiod", pre}, {"period", per}};
}

void Print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string file;
  std::vector<std::string> params;
  std::string predicate = "spe";
  std::string method = "fixpoint";
  int depth = -1;
  std::string var;
  std::string dot;
  bool json = false;
  bool strict1 = false;
  std::string r = "2";
  int preperiod = 2;
  int period = 2;
};

int RunValidate(const Options& o) {
  EquationSystem system = LoadDocument(o.file, ParseParams(o.params));
  auto report = Validate(system);
  if (report.ok()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& d : report.defects) std::cout << d << "\n";
  return kNegative;
}

int RunCheck(const Options& o) {
  EquationSystem system = LoadValid(o.file, o.params);
  if (system.kind != Kind::kProfile) {
    throw UsageError("check needs a profile document, got a game");
  }
  Predicate predicate = ParsePredicate(o.predicate);
  ordered_json out;
  out["predicate"] = PredicateName(predicate);
  out["method"] = o.method;

  if (o.method == "fixpoint") {
    if (o.depth >= 0) throw UsageError("--depth applies to coinduction only");
    VarRef state = system.root;
    if (!o.var.empty() && o.var != system.root.var) {
      system.At(o.var);
      auto floors = IndexFloors(system, system.root);
      auto it = floors.find(o.var);
      state = VarRef{o.var, it == floors.end() ? 0 : it->second};
    }
    bool verdict = false;
    std::optional<SpeReport> spe;
    switch (predicate) {
      case Predicate::kWC:
        verdict = WeaklyConvergent(system, state);
        break;
      case Predicate::kSC:
        verdict = StronglyConvergent(system, state);
        break;
      case Predicate::kPE:
        verdict = Pe(system, state);
        break;
      case Predicate::kSPE:
        spe = CheckSpe(system, state);
        verdict = spe->holds;
        break;
    }
    out["var"] = state.var;
    out["index"] = state.offset;
    out["verdict"] = verdict;
    if (spe && !spe->holds) {
      out["failing_var"] = spe->failing_var;
      out["reason"] = spe->reason;
    }
    Print(out);
    return verdict ? kOk : kNegative;
  }

  if (o.method != "coinduction") {
    throw UsageError("--method must be fixpoint or coinduction");
  }
  if (!o.var.empty()) {
    throw UsageError("--var applies to the fixpoint method only");
  }
  Certificate cert;
  if (o.depth >= 0) {
    cert = Certify(system, predicate, o.depth);
  } else {
    auto k = MinimalDepth(system, predicate, kDefaultSearchCap);
    cert = Certify(system, predicate, k.value_or(kDefaultSearchCap));
  }
  out["verdict"] = cert.certified ? "Certified" : "NotCertified";
  out["depth_used"] = cert.depth;
  ordered_json per = ordered_json::object();
  for (const auto& [var, v] : cert.per_variable) per[var] = ToString(v);
  out["per_variable"] = per;
  Print(out);
  return cert.certified ? kOk : kNegative;
}

int RunUnfold(const Options& o) {
  EquationSystem system = LoadValid(o.file, o.params);
  VarRef start = system.root;
  if (!o.var.empty()) start = VarRef{o.var, 0};
  int depth = o.depth < 0 ? 3 : o.depth;
  std::string dot = ToDot(*Unfold(system, start, depth));
  if (o.dot.empty() || o.dot == "-") {
    std::cout << dot;
    return kOk;
  }
  std::ofstream out(o.dot, std::ios::binary);
  out << dot;
  if (!out) throw UsageError("cannot write " + o.dot);
  return kOk;
}

int RunDeviations(const Options& o) {
  EquationSystem system = LoadValid(o.file, o.params);
  if (system.kind != Kind::kProfile) {
    throw UsageError("deviations needs a profile document");
  }
  int depth = o.depth < 0 ? 3 : o.depth;
  ordered_json rows = ordered_json::array();
  bool all = true;
  for (const auto& d : EnumerateDeviations(system, depth)) {
    ordered_json row;
    row["address"] = AddressText(d.address);
    row["original"] = ChoiceName(d.original);
    row["flipped"] = ChoiceName(d.flipped);
    try {
      bool dom = Dominates(system, d);
      row["dominated"] = dom;
      all = all && dom;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDivergentComparison) throw;
      row["dominated"] = nullptr;
      all = false;
    }
    rows.push_back(row);
  }
  if (o.json) {
    Print({{"depth", depth}, {"deviations", rows}, {"all_dominated", all}});
  } else {
    std::cout << "address  flip  dominated\n";
    for (const auto& row : rows) {
      std::string addr = row["address"].get<std::string>();
      std::string dom = row["dominated"].is_null()
                            ? "undefined"
                            : (row["dominated"].get<bool>() ? "yes" : "no");
      std::cout << (addr.empty() ? "-" : addr) << "  "
                << row["original"].get<std::string>() << "->"
                << row["flipped"].get<std::string>() << "  " << dom << "\n";
    }
    std::cout << "all dominated: " << (all ? "yes" : "no") << "\n";
  }
  return all ? kOk : kNegative;
}

int RunPrinciple(const Options& o) {
  EquationSystem system = LoadValid(o.file, o.params);
  if (system.kind != Kind::kProfile) {
    throw UsageError("principle needs a profile document");
  }
  PrincipleReport r;
  try {
    r = OneDeviationPrinciple(system);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotStronglyConvergent) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  ordered_json out;
  out["spe"] = r.spe;
  out["all_dominated"] = r.all_dominated;
  out["agree"] = r.agree;
  if (r.witness) {
    out["witness"] = {{"var", *r.witness_var},
                      {"address", AddressText(r.witness->address)},
                      {"original", ChoiceName(r.witness->original)},
                      {"flipped", ChoiceName(r.witness->flipped)}};
  } else {
    out["witness"] = nullptr;
  }
  Print(out);
  return r.agree ? kOk : kNegative;
}

int RunCharacterize(const Options& o) {
  auto r = Rational::Parse(o.r);
  if (!r) throw UsageError("malformed rational --r " + o.r);
  if (o.preperiod < 1 || o.period < 1 || o.preperiod > 4 || o.period > 4) {
    throw UsageError("--preperiod and --period must lie in [1, 4]");
  }
  auto classes = Characterize(*r, o.preperiod, o.period);
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& c : classes) {
      list.push_back(
          {{"A", PatternJson(c.first)}, {"B", PatternJson(c.second)}});
    }
    Print({{"r", r->ToString()},
           {"preperiod", o.preperiod},
           {"period", o.period},
           {"spe_patterns", list}});
  } else {
    std::cout << classes.size() << " SPE pattern class(es) for r = " << *r
              << "\n";
    for (const auto& c : classes) {
      std::cout << "  A " << ToString(c.first) << "  B " << ToString(c.second)
                << "\n";
    }
  }
  return kOk;
}

int RunFeatures(const Options& o) {
  EquationSystem system = LoadValid(o.file, o.params);
  FeatureReport f = CheckFeatures(system, o.strict1);
  Print({{"feature1", f.feature1},
         {"feature2", f.feature2},
         {"strict1", f.strict1}});
  return f.feature1 && f.feature2 ? kOk : kNegative;
}

int Main(int argc, char** argv) {
  CLI::App app{"Coinductive analysis of infinite extensive-form games"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto file_cmd = [&](const char* name, const char* help,
                      int (*fn)(const Options&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", o.file, "schema document")->required();
    cmd->add_option("--param", o.params, "override a parameter, name=p/q");
    cmd->callback([&run, fn] { run = fn; });
    return cmd;
  };

  file_cmd("validate", "check a schema document", RunValidate);

  auto* check = file_cmd("check", "decide a predicate", RunCheck);
  check->add_option("--predicate", o.predicate, "wc|sc|pe|spe");
  check->add_option("--method", o.method, "fixpoint|coinduction");
  check->add_option("--depth", o.depth, "unfolding depth for coinduction");
  check->add_option("--var", o.var, "variable to evaluate (fixpoint)");

  auto* unfold = file_cmd("unfold", "render a k-step unfolding", RunUnfold);
  unfold->add_option("--depth", o.depth, "unfolding depth (default 3)");
  unfold->add_option("--dot", o.dot, "output file (default stdout)");
  unfold->add_option("--var", o.var, "start variable (default root)");

  auto* dev = file_cmd("deviations", "check one-deviations", RunDeviations);
  dev->add_option("--depth", o.depth, "address length bound (default 3)");
  dev->add_flag("--json", o.json, "JSON output");

  file_cmd("principle", "one-deviation principle at the root", RunPrinciple);

  auto* feat = file_cmd("features", "stop/continue game features",
                        RunFeatures);
  feat->add_flag("--strict1", o.strict1, "strict comparison for feature 1");

  auto* chz = app.add_subcommand("characterize",
                                 "SPE stop patterns of the dollar auction");
  chz->add_option("--r", o.r, "prize, p/q (default 2)");
  chz->add_option("--preperiod", o.preperiod, "max preperiod (default 2)");
  chz->add_option("--period", o.period, "max period (default 2)");
  chz->add_flag("--json", o.json, "JSON output");
  chz->callback([&run] { run = RunCharacterize; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace
}  // namespace coalgame

int main(int argc, char** argv) { return coalgame::Main(argc, argv); }
