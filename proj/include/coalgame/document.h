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

// JSON schema documents.
//
//   {
//     "agents": ["A", "B"],
//     "kind": "game" | "profile",
//     "indexed": true | false,
//     "parameters": {"r": "1/2"},                  (optional)
//     "root": {"var": "G", "index": 0},
//     "variables": {
//       "V": {"leaf": {"A": {"const": "0", "slope": "-1"}, ...}},
//       "G": {"agent": "A", "choice": "l",         (profiles only)
//             "left":  {"leaf": {...}} | {"var": "V", "offset": 0},
//             "right": {"var": "H", "offset": 1}}
//     }
//   }
//
// Rationals are integers, "p/q" strings, or the name of a parameter. "slope"
// and "offset" default to 0. Unknown fields are rejected.

#ifndef COALGAME_DOCUMENT_H_
#define COALGAME_DOCUMENT_H_

#include <map>
#include <string>
#include <string_view>

#include "coalgame/schema.h"

namespace coalgame {

using Parameters = std::map<std::string, Rational>;

// Throws Error(kParse). Overrides must name declared parameters. The result
// is not validated; call Validate() for reference and invariant checks.
EquationSystem ParseDocument(std::string_view text,
                             const Parameters& overrides = {});
EquationSystem LoadDocument(const std::string& path,
                            const Parameters& overrides = {});

// Parameter-free document, 2-space indented, deterministic.
std::string SerializeDocument(const EquationSystem& system);

}  // namespace coalgame

#endif  // COALGAME_DOCUMENT_H_
