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

#ifndef LEVEL01_ENGINE_H_
#define LEVEL01_ENGINE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "level01/defs.h"
#include "level01/stream.h"
#include "level01/substitution.h"
#include "level01/syntax.h"
#include "level01/term.h"

namespace level01 {

struct ProofContext {
  LocalSignature sigma;
  Substitution theta;
};

using AnswerStream = LazyStream<Substitution>;

struct EngineOptions {
  // Limit on backchaining attempts plus unifications per query.
  std::optional<std::uint64_t> step_budget;
  // Re-check every unifier against both sides (slow; for testing).
  bool verify_unifiers = false;
};

struct EngineStats {
  std::uint64_t steps = 0;
  std::uint64_t unifications = 0;
  std::uint64_t verified_unifiers = 0;
  std::uint64_t backchains = 0;
};

struct Answer {
  Substitution theta;
  // Printed bindings of the goal's free names, in order of appearance.
  // Names starting with '_' and unbound names are omitted.
  std::vector<std::pair<std::string, std::string>> bindings;
};

class Engine;

// Answers of one goal, produced on demand. A query is invalidated by the
// next Engine::Ask on the same engine.
class Query {
 public:
  // Throws the engine errors raised while searching.
  std::optional<Answer> Next();

  const SourceGoal& goal() const { return goal_; }
  // The logic variables standing for goal.free_names.
  const std::vector<TermPtr>& variables() const { return vars_; }

 private:
  friend class Engine;
  Query(SourceGoal goal, std::vector<TermPtr> vars, AnswerStream answers)
      : goal_(std::move(goal)), vars_(std::move(vars)), next_(std::move(answers)) {}

  SourceGoal goal_;
  std::vector<TermPtr> vars_;
  AnswerStream next_;
};

// Depth-first prover for level-0 and level-1 goals over a fixed definition.
// Streams returned by the engine refer to it and must not outlive it.
class Engine {
 public:
  explicit Engine(const Definition& defs, EngineOptions options = {});

  // Sink for the print builtin; defaults to std::cout.
  void set_output(std::ostream* out) { out_ = out; }
  const Definition& definition() const { return defs_; }
  NameSupply& names() { return names_; }
  const EngineStats& stats() const { return stats_; }
  const EngineOptions& options() const { return options_; }

  // Level-0 search: pi and => are errors when reached.
  AnswerStream Solve0(const TermPtr& goal, const ProofContext& ctx);
  AnswerStream Solve1(const TermPtr& goal, const ProofContext& ctx);
  // Proves g => d: every answer of g (eigenvariables instantiable) must
  // make d provable. Yields ctx.theta once or nothing.
  AnswerStream ProveImplication(const TermPtr& g, const TermPtr& d,
                                const ProofContext& ctx);

  // Starts a fresh query: resets names and statistics, makes each free
  // name a level-1 logic variable and solves at level 1. Throws
  // SyntaxError; search errors surface from Query::Next.
  Query Ask(std::string_view text);
  Query Ask(SourceGoal goal);

 private:
  enum class Mode { kLevel0, kLevel1, kStep1 };

  AnswerStream Solve(TermPtr goal, ProofContext ctx, Mode mode);
  Stream<Substitution> SolveNow(const TermPtr& goal, const ProofContext& ctx,
                                Mode mode);
  Stream<Substitution> SolveAtom(const TermPtr& atom, const ProofContext& ctx,
                                 Mode mode);
  Stream<Substitution> Backchain(PredicateKey key, std::size_t index,
                                 TermPtr atom, ProofContext ctx, Mode mode);
  Stream<Substitution> Implication(const TermPtr& g, const TermPtr& d,
                                   const ProofContext& ctx);
  std::optional<Substitution> UnifyIn(const TermPtr& a, const TermPtr& b,
                                      const Substitution& theta, Mode mode);
  void Step();

  const Definition& defs_;
  EngineOptions options_;
  NameSupply names_;
  EngineStats stats_;
  std::ostream* out_;
};

}  // namespace level01

#endif  // LEVEL01_ENGINE_H_
