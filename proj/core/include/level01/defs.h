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

#ifndef LEVEL01_DEFS_H_
#define LEVEL01_DEFS_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "level01/syntax.h"
#include "level01/term.h"

namespace level01 {

struct PredicateKey {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredicateKey&) const = default;
  std::string ToString() const { return name + "/" + std::to_string(arity); }
};

// A stored clause. Its clause variables are the loose indices of head and
// body (see SourceClause).
struct Clause {
  TermPtr head;
  TermPtr body;
  std::vector<std::string> free_names;
  std::size_t line = 0;
};

// A clause with its variables replaced by fresh raised variables.
struct ClauseInstance {
  TermPtr head;
  TermPtr body;
};

// Predicate key of an atom with a constant head, if it has one.
std::optional<PredicateKey> KeyOf(const TermPtr& atom);

// Clauses grouped by predicate, in file order, with an inferred level per
// predicate: 1 iff some body uses pi or => or calls a level-1 predicate.
class Definition {
 public:
  // Throws DefinitionError if the head is not an atom with a constant,
  // non-reserved predicate symbol.
  void AddClause(const SourceClause& clause);
  // Parses and adds every clause of |text|. Throws SyntaxError or
  // DefinitionError; on error nothing is added.
  void AddProgram(std::string_view text);
  // Makes |key| defined with no clauses.
  void Declare(const PredicateKey& key);

  bool Defines(const PredicateKey& key) const;
  // Throws UndefinedPredicateError.
  int LevelOf(const PredicateKey& key) const;
  // Highest level over all arities of |name|.
  int LevelOfName(std::string_view name) const;
  // Empty for undefined predicates.
  const std::vector<Clause>& ClausesFor(const PredicateKey& key) const;
  // Predicates in order of first definition.
  const std::vector<PredicateKey>& predicates() const { return order_; }

  // One instance per clause of the atom's predicate, in clause order, with
  // each clause variable replaced by a fresh variable of |level| applied to
  // |sigma|. Throws UndefinedPredicateError.
  std::vector<ClauseInstance> InstancesFor(const TermPtr& atom,
                                           const LocalSignature& sigma,
                                           NameSupply& names, int level) const;
  static ClauseInstance Instance(const Clause& clause,
                                 const LocalSignature& sigma,
                                 NameSupply& names, int level);

  // Level-1 content found in implication antecedents, which the prover
  // will reject if it is reached.
  std::vector<std::string> Warnings() const;

  // Total number of clauses.
  std::size_t size() const { return size_; }

 private:
  void RecomputeLevels();

  std::map<PredicateKey, std::vector<Clause>> clauses_;
  std::map<PredicateKey, int> levels_;
  std::vector<PredicateKey> order_;
  std::size_t size_ = 0;
};

}  // namespace level01

#endif  // LEVEL01_DEFS_H_
