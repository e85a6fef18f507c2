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

#include "level01/defs.h"

#include <functional>
#include <utility>

#include "level01/errors.h"
#include "level01/formula.h"

namespace level01 {
namespace {

bool IsBuiltinAtom(const PredicateKey& key) {
  return (key.name == logic::kEq && key.arity == 2) ||
         (key.name == logic::kPrint && key.arity == 1);
}

// Calls |on_atom(key, negative)| for every defined-predicate atom in a body
// and |on_level1(negative)| for every pi or =>; |negative| is true inside an
// implication antecedent.
void Walk(const TermPtr& body, bool negative,
          const std::function<void(const PredicateKey&, bool)>& on_atom,
          const std::function<void(bool)>& on_level1) {
  Formula f = Classify(body);
  switch (f.kind) {
    case FormulaKind::kTop:
    case FormulaKind::kBot:
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      Walk(f.left, negative, on_atom, on_level1);
      Walk(f.right, negative, on_atom, on_level1);
      return;
    case FormulaKind::kImp:
      on_level1(negative);
      Walk(f.left, true, on_atom, on_level1);
      Walk(f.right, negative, on_atom, on_level1);
      return;
    case FormulaKind::kAll:
      on_level1(negative);
      [[fallthrough]];
    case FormulaKind::kEx:
    case FormulaKind::kNabla:
      if (f.binder->is_abs()) Walk(f.binder->body(), negative, on_atom, on_level1);
      return;
    case FormulaKind::kAtom:
      if (auto key = KeyOf(body); key && !IsBuiltinAtom(*key)) {
        on_atom(*key, negative);
      }
      return;
  }
}

}  // namespace

std::optional<PredicateKey> KeyOf(const TermPtr& atom) {
  const TermPtr& head = SpineHead(atom);
  if (head->kind() != TermKind::kConst) return std::nullopt;
  return PredicateKey{head->name(), SpineArgs(atom).size()};
}

void Definition::AddClause(const SourceClause& clause) {
  auto key = KeyOf(clause.head);
  const std::string where = " (line " + std::to_string(clause.line) + ")";
  if (!key) {
    throw DefinitionError(
        "clause head must be an atom with a constant predicate symbol" + where);
  }
  if (IsReservedSymbol(key->name)) {
    throw DefinitionError("cannot define reserved symbol '" + key->name + "'" +
                          where);
  }
  Declare(*key);
  clauses_[*key].push_back(
      Clause{clause.head, clause.body, clause.free_names, clause.line});
  ++size_;
  RecomputeLevels();
}

void Definition::AddProgram(std::string_view text) {
  std::vector<SourceClause> parsed = ParseProgram(text);
  Definition copy = *this;
  for (const auto& c : parsed) copy.AddClause(c);
  *this = std::move(copy);
}

void Definition::Declare(const PredicateKey& key) {
  if (clauses_.emplace(key, std::vector<Clause>{}).second) {
    order_.push_back(key);
    levels_[key] = 0;
  }
}

bool Definition::Defines(const PredicateKey& key) const {
  return clauses_.contains(key);
}

int Definition::LevelOf(const PredicateKey& key) const {
  auto it = levels_.find(key);
  if (it == levels_.end()) throw UndefinedPredicateError(key.ToString());
  return it->second;
}

int Definition::LevelOfName(std::string_view name) const {
  int level = -1;
  for (const auto& [key, l] : levels_) {
    if (key.name == name) level = std::max(level, l);
  }
  if (level < 0) throw UndefinedPredicateError(std::string(name));
  return level;
}

const std::vector<Clause>& Definition::ClausesFor(const PredicateKey& key) const {
  static const std::vector<Clause> kNone;
  auto it = clauses_.find(key);
  return it == clauses_.end() ? kNone : it->second;
}

void Definition::RecomputeLevels() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [key, clauses] : clauses_) {
      int& level = levels_[key];
      if (level == 1) continue;
      for (const auto& c : clauses) {
        bool up = false;
        Walk(
            c.body, false,
            [&](const PredicateKey& callee, bool) {
              auto it = levels_.find(callee);
              if (it != levels_.end() && it->second == 1) up = true;
            },
            [&](bool) { up = true; });
        if (up) {
          level = 1;
          changed = true;
          break;
        }
      }
    }
  }
}

std::vector<std::string> Definition::Warnings() const {
  std::vector<std::string> out;
  for (const auto& key : order_) {
    for (const auto& c : ClausesFor(key)) {
      const std::string where =
          key.ToString() + " (line " + std::to_string(c.line) + "): ";
      Walk(
          c.body, false,
          [&](const PredicateKey& callee, bool negative) {
            auto it = levels_.find(callee);
            if (negative && it != levels_.end() && it->second == 1) {
              out.push_back(where + "level-1 predicate " + callee.ToString() +
                            " in an implication antecedent");
            }
          },
          [&](bool negative) {
            if (negative) {
              out.push_back(where + "pi or => in an implication antecedent");
            }
          });
    }
  }
  return out;
}

ClauseInstance Definition::Instance(const Clause& clause,
                                    const LocalSignature& sigma,
                                    NameSupply& names, int level) {
  std::vector<TermPtr> values;
  values.reserve(clause.free_names.size());
  for (std::size_t i = 0; i < clause.free_names.size(); ++i) {
    values.push_back(names.Fresh(VarKind::kLogic, level, sigma));
  }
  return ClauseInstance{Normalize(Instantiate(clause.head, values)),
                        Normalize(Instantiate(clause.body, values))};
}

std::vector<ClauseInstance> Definition::InstancesFor(const TermPtr& atom,
                                                     const LocalSignature& sigma,
                                                     NameSupply& names,
                                                     int level) const {
  auto key = KeyOf(atom);
  if (!key || !Defines(*key)) {
    throw UndefinedPredicateError(key ? key->ToString() : "<non-atomic goal>");
  }
  std::vector<ClauseInstance> out;
  for (const auto& c : ClausesFor(*key)) {
    out.push_back(Instance(c, sigma, names, level));
  }
  return out;
}

}  // namespace level01
