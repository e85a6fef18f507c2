// Copyright 2026 The Level01 Authors.
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

#ifndef LEVEL01_SYNTAX_H_
#define LEVEL01_SYNTAX_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "level01/term.h"

namespace level01 {

// Free (capitalized) names of a clause or goal are represented as loose de
// Bruijn indices: with n free names, name i is index n-1-i at the top
// level, so Instantiate(term, values) maps name i to values[i].
struct SourceClause {
  TermPtr head;
  TermPtr body;
  std::vector<std::string> free_names;
  std::size_t line = 0;
};

struct SourceGoal {
  TermPtr formula;
  std::vector<std::string> free_names;
};

// Throws SyntaxError. Statements beginning with 'kind' or 'type' are
// skipped; 'H.' is read as 'H := true.'.
std::vector<SourceClause> ParseProgram(std::string_view text);

// A single goal; the terminating '.' is optional.
SourceGoal ParseGoal(std::string_view text);

// True for names written with a leading uppercase letter or '_'.
bool IsVariableName(std::string_view name);

struct PrintOptions {
  // Names for loose indices (see SourceClause).
  std::span<const std::string> free_names;
  // Display names for Eigen/Logic variables by id.
  const std::map<VarId, std::string>* var_names = nullptr;
};

// Abstractions print as x1\, x2\, ... numbered by nesting depth.
std::string PrintTerm(const TermPtr& t, const PrintOptions& options = {});
std::string PrintGoal(const SourceGoal& goal);
std::string PrintClause(const SourceClause& clause);

}  // namespace level01

#endif  // LEVEL01_SYNTAX_H_
