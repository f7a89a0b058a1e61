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

#include "coalgame/document.h"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace coalgame {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

void OnlyFields(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) Fail(where, "unknown field '" + key + "'");
  }
}

const json& Required(const json& obj, const std::string& where,
                     const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) Fail(where, std::string("missing field '") + field + "'");
  return *it;
}

std::string String(const json& v, const std::string& where) {
  if (!v.is_string()) Fail(where, "expected a string");
  return v.get<std::string>();
}

std::int64_t Integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) Fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

class Reader {
 public:
  explicit Reader(Parameters params) : params_(std::move(params)) {}

  Rational ReadRational(const json& v, const std::string& where) const {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) Fail(where, "expected a rational");
    const auto text = v.get<std::string>();
    if (auto it = params_.find(text); it != params_.end()) return it->second;
    auto r = Rational::Parse(text);
    if (!r) Fail(where, "malformed rational '" + text + "'");
    return *r;
  }

  AffineUtility ReadUtility(const json& v, const std::string& where) const {
    if (!v.is_object()) Fail(where, "expected a payoff object");
    AffineUtility u;
    for (const auto& [agent, form] : v.items()) {
      std::string at = where + "." + agent;
      OnlyFields(form, at, {"const", "slope"});
      Affine a;
      a.constant = ReadRational(Required(form, at, "const"), at + ".const");
      if (form.contains("slope")) {
        a.slope = ReadRational(form["slope"], at + ".slope");
      }
      u.Set(Agent{agent}, a);
    }
    return u;
  }

  Child ReadChild(const json& v, const std::string& where) const {
    if (v.is_object() && v.contains("leaf")) {
      OnlyFields(v, where, {"leaf"});
      return ReadUtility(v["leaf"], where + ".leaf");
    }
    OnlyFields(v, where, {"var", "offset"});
    VarRef ref;
    ref.var = String(Required(v, where, "var"), where + ".var");
    if (v.contains("offset")) ref.offset = Integer(v["offset"], where + ".offset");
    return ref;
  }

  Equation ReadEquation(const json& v, const std::string& where) const {
    if (v.is_object() && v.contains("leaf")) {
      OnlyFields(v, where, {"leaf"});
      return Leaf{ReadUtility(v["leaf"], where + ".leaf")};
    }
    OnlyFields(v, where, {"agent", "choice", "left", "right"});
    Node node;
    node.agent = Agent{String(Required(v, where, "agent"), where + ".agent")};
    if (v.contains("choice")) {
      std::string c = String(v["choice"], where + ".choice");
      if (c == "l") {
        node.choice = Choice::kLeft;
      } else if (c == "r") {
        node.choice = Choice::kRight;
      } else {
        Fail(where + ".choice", "expected \"l\" or \"r\"");
      }
    }
    node.left = ReadChild(Required(v, where, "left"), where + ".left");
    node.right = ReadChild(Required(v, where, "right"), where + ".right");
    return node;
  }

 private:
  Parameters params_;
};

std::string RationalText(const Rational& r) { return r.ToString(); }

ordered_json WriteUtility(const AffineUtility& u) {
  ordered_json out = ordered_json::object();
  for (const auto& [agent, form] : u.payoffs()) {
    out[agent.id] = {{"const", RationalText(form.constant)},
                     {"slope", RationalText(form.slope)}};
  }
  return out;
}

ordered_json WriteChild(const Child& c) {
  if (const auto* ref = std::get_if<VarRef>(&c)) {
    return {{"var", ref->var}, {"offset", ref->offset}};
  }
  return {{"leaf", WriteUtility(std::get<AffineUtility>(c))}};
}

}  // namespace

EquationSystem ParseDocument(std::string_view text,
                             const Parameters& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  OnlyFields(doc, "document",
             {"agents", "kind", "indexed", "parameters", "root", "variables"});

  Parameters params;
  if (doc.contains("parameters")) {
    const json& ps = doc["parameters"];
    if (!ps.is_object()) Fail("parameters", "expected an object");
    Reader plain({});
    for (const auto& [name, value] : ps.items()) {
      params[name] = plain.ReadRational(value, "parameters." + name);
    }
  }
  for (const auto& [name, value] : overrides) {
    if (params.count(name) == 0) {
      Fail("parameters", "document declares no parameter '" + name + "'");
    }
    params[name] = value;
  }
  Reader reader(params);

  EquationSystem system;
  const json& agents = Required(doc, "document", "agents");
  if (!agents.is_array()) Fail("agents", "expected an array");
  for (const auto& a : agents) system.agents.push_back(Agent{String(a, "agents")});

  std::string kind = String(Required(doc, "document", "kind"), "kind");
  if (kind == "game") {
    system.kind = Kind::kGame;
  } else if (kind == "profile") {
    system.kind = Kind::kProfile;
  } else {
    Fail("kind", "expected \"game\" or \"profile\"");
  }

  const json& indexed = Required(doc, "document", "indexed");
  if (!indexed.is_boolean()) Fail("indexed", "expected a boolean");
  system.indexed = indexed.get<bool>();

  const json& root = Required(doc, "document", "root");
  OnlyFields(root, "root", {"var", "index"});
  system.root.var = String(Required(root, "root", "var"), "root.var");
  if (root.contains("index")) system.root.offset = Integer(root["index"], "root.index");

  const json& vars = Required(doc, "document", "variables");
  if (!vars.is_object()) Fail("variables", "expected an object");
  for (const auto& [name, eq] : vars.items()) {
    system.equations.emplace(name, reader.ReadEquation(eq, name));
  }
  return system;
}

EquationSystem LoadDocument(const std::string& path,
                            const Parameters& overrides) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseDocument(buf.str(), overrides);
}

std::string SerializeDocument(const EquationSystem& system) {
  ordered_json doc;
  ordered_json agents = ordered_json::array();
  for (const Agent& a : system.agents) agents.push_back(a.id);
  doc["agents"] = agents;
  doc["kind"] = system.kind == Kind::kGame ? "game" : "profile";
  doc["indexed"] = system.indexed;
  doc["root"] = {{"var", system.root.var}, {"index", system.root.offset}};
  ordered_json vars = ordered_json::object();
  for (const auto& [name, eq] : system.equations) {
    if (const auto* leaf = std::get_if<Leaf>(&eq)) {
      vars[name] = {{"leaf", WriteUtility(leaf->utility)}};
      continue;
    }
    const auto& node = std::get<Node>(eq);
    ordered_json n;
    n["agent"] = node.agent.id;
    if (node.choice) n["choice"] = ChoiceName(*node.choice);
    n["left"] = WriteChild(node.left);
    n["right"] = WriteChild(node.right);
    vars[name] = n;
  }
  doc["variables"] = vars;
  return doc.dump(2) + "\n";
}

}  // namespace coalgame
