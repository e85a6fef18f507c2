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

#include "level01/engine.h"

#include <iostream>
#include <map>
#include <stdexcept>

#include "level01/errors.h"
#include "level01/formula.h"
#include "level01/unify.h"

namespace level01 {
namespace {

using SubstStream = Stream<Substitution>;

// Opens a quantifier's abstraction with |value|.
TermPtr OpenBinder(const TermPtr& binder, const TermPtr& value) {
  return Apply(binder, std::span<const TermPtr>(&value, 1));
}

}  // namespace

Engine::Engine(const Definition& defs, EngineOptions options)
    : defs_(defs), options_(options), out_(&std::cout) {}

AnswerStream Engine::Solve0(const TermPtr& goal, const ProofContext& ctx) {
  return Solve(goal, ctx, Mode::kLevel0);
}

AnswerStream Engine::Solve1(const TermPtr& goal, const ProofContext& ctx) {
  return Solve(goal, ctx, Mode::kLevel1);
}

AnswerStream Engine::ProveImplication(const TermPtr& g, const TermPtr& d,
                                      const ProofContext& ctx) {
  return streams::Delay<Substitution>(
      [this, g, d, ctx] { return Implication(g, d, ctx); });
}

AnswerStream Engine::Solve(TermPtr goal, ProofContext ctx, Mode mode) {
  return streams::Delay<Substitution>(
      [this, goal = std::move(goal), ctx = std::move(ctx), mode] {
        return SolveNow(goal, ctx, mode);
      });
}

void Engine::Step() {
  ++stats_.steps;
  if (options_.step_budget && stats_.steps > *options_.step_budget) {
    throw BudgetExceededError();
  }
}

std::optional<Substitution> Engine::UnifyIn(const TermPtr& a, const TermPtr& b,
                                            const Substitution& theta,
                                            Mode mode) {
  Step();
  ++stats_.unifications;
  UnifyOptions opts;
  opts.promote_eigens = mode == Mode::kStep1;
  UnifyOutcome outcome = Unify(a, b, theta, names_, opts);
  if (outcome.status == UnifyStatus::kNonPattern) {
    throw NonPatternError(PrintTerm(outcome.offending));
  }
  if (!outcome.ok()) return std::nullopt;
  if (options_.verify_unifiers) {
    if (!Convertible(outcome.theta.Apply(a), outcome.theta.Apply(b))) {
      throw std::logic_error("unifier does not equate " + PrintTerm(a) +
                             " and " + PrintTerm(b));
    }
    ++stats_.verified_unifiers;
  }
  return std::move(outcome.theta);
}

SubstStream Engine::SolveNow(const TermPtr& raw, const ProofContext& ctx,
                             Mode mode) {
  const TermPtr goal = ctx.theta.Apply(raw);
  const int level = mode == Mode::kLevel1 ? 1 : 0;
  Formula f = Classify(goal);
  switch (f.kind) {
    case FormulaKind::kTop:
      return streams::Single(ctx.theta);
    case FormulaKind::kBot:
      return SubstStream();
    case FormulaKind::kAnd: {
      const TermPtr right = f.right;
      const LocalSignature sigma = ctx.sigma;
      return streams::FlatMap<Substitution, Substitution>(
                 Solve(f.left, ctx, mode),
                 [this, right, sigma, mode](const Substitution& theta) {
                   return Solve(right, ProofContext{sigma, theta}, mode);
                 })
          .Force();
    }
    case FormulaKind::kOr:
      return streams::ConcatLazy(Solve(f.left, ctx, mode),
                                 Solve(f.right, ctx, mode))
          .Force();
    case FormulaKind::kEx: {
      TermPtr var = names_.Fresh(VarKind::kLogic, level, ctx.sigma);
      return SolveNow(OpenBinder(f.binder, var), ctx, mode);
    }
    case FormulaKind::kNabla: {
      ProofContext inner = ctx;
      TermPtr local = names_.FreshLocal();
      inner.sigma.push_back(local);
      return SolveNow(OpenBinder(f.binder, local), inner, mode);
    }
    case FormulaKind::kAll: {
      if (mode != Mode::kLevel1) throw LevelError("level-1 goal in level-0 context");
      TermPtr eigen = names_.Fresh(VarKind::kEigen, 1, ctx.sigma);
      return SolveNow(OpenBinder(f.binder, eigen), ctx, mode);
    }
    case FormulaKind::kImp:
      if (mode != Mode::kLevel1) throw LevelError("level-1 goal in level-0 context");
      return Implication(f.left, f.right, ctx);
    case FormulaKind::kAtom:
      return SolveAtom(goal, ctx, mode);
  }
  return SubstStream();
}

SubstStream Engine::SolveAtom(const TermPtr& atom, const ProofContext& ctx,
                              Mode mode) {
  const TermPtr& head = SpineHead(atom);
  auto args = SpineArgs(atom);
  if (head->kind() != TermKind::kConst) {
    throw EngineError("goal is not an atom with a predicate symbol: " +
                      PrintTerm(atom));
  }
  if (head->name() == logic::kEq && args.size() == 2) {
    auto theta = UnifyIn(args[0], args[1], ctx.theta, mode);
    return theta ? streams::Single(std::move(*theta)) : SubstStream();
  }
  if (head->name() == logic::kPrint && args.size() == 1) {
    const TermPtr& what = args[0];
    *out_ << (what->kind() == TermKind::kString ? what->name() : PrintTerm(what))
          << '\n';
    out_->flush();
    return streams::Single(ctx.theta);
  }
  PredicateKey key{head->name(), args.size()};
  if (!defs_.Defines(key)) throw UndefinedPredicateError(key.ToString());
  return Backchain(std::move(key), 0, atom, ctx, mode);
}

// Tries clauses index, index+1, ... of |key| in order. The instance of a
// later clause is not created until the earlier ones are exhausted.
SubstStream Engine::Backchain(PredicateKey key, std::size_t index, TermPtr atom,
                              ProofContext ctx, Mode mode) {
  const std::vector<Clause>& clauses = defs_.ClausesFor(key);
  const int level = mode == Mode::kLevel1 ? 1 : 0;
  for (; index < clauses.size(); ++index) {
    Step();
    ++stats_.backchains;
    ClauseInstance inst =
        Definition::Instance(clauses[index], ctx.sigma, names_, level);
    auto theta = UnifyIn(atom, inst.head, ctx.theta, mode);
    if (!theta) continue;
    const std::size_t next = index + 1;
    AnswerStream rest = streams::Delay<Substitution>(
        [this, key, next, atom, ctx, mode] {
          return Backchain(key, next, atom, ctx, mode);
        });
    if (next == clauses.size()) {
      rest = streams::Ready(SubstStream());
    }
    return streams::ConcatLazy(
               Solve(inst.body, ProofContext{ctx.sigma, std::move(*theta)}, mode),
               std::move(rest))
        .Force();
  }
  return SubstStream();
}

SubstStream Engine::Implication(const TermPtr& raw_g, const TermPtr& raw_d,
                                const ProofContext& ctx) {
  const TermPtr g = ctx.theta.Apply(raw_g);
  std::vector<TermPtr> vars;
  CollectVars(g, vars);
  for (const auto& v : vars) {
    if (v->kind() == TermKind::kLogic && v->level() == 1) throw NonPureGoalError();
  }

  // Everything created from here on belongs to this implication.
  const VarId entry = names_.next_id();
  bool all_provable = true;
  streams::ForEach(Solve(g, ctx, Mode::kStep1), [&](const Substitution& theta1) {
    TermPtr d = theta1.Apply(raw_d);
    // Variables the antecedent left open stand for arbitrary terms: make
    // them rigid for the consequent.
    std::vector<TermPtr> open;
    CollectVars(d, open);
    Substitution theta2 = theta1;
    for (const auto& v : open) {
      if (v->kind() == TermKind::kLogic && v->id() >= entry) {
        theta2 = theta2.Bind(v, names_.FreshEigen(v->stamp()));
      }
    }
    SubstStream proofs = Solve(d, ProofContext{ctx.sigma, theta2}, Mode::kLevel1).Force();
    if (proofs.empty()) {
      all_provable = false;
      return false;
    }
    for (const auto& [id, value] : proofs.head().bindings()) {
      if (id < entry && !theta1.Binds(id)) throw NonPureGoalError();
    }
    return true;
  });
  if (!all_provable) return SubstStream();
  return streams::Single(ctx.theta);
}

Query Engine::Ask(std::string_view text) { return Ask(ParseGoal(text)); }

Query Engine::Ask(SourceGoal goal) {
  names_.Reset();
  stats_ = EngineStats{};
  std::vector<TermPtr> vars;
  for (std::size_t i = 0; i < goal.free_names.size(); ++i) {
    vars.push_back(names_.FreshLogic(1));
  }
  TermPtr formula = Normalize(Instantiate(goal.formula, vars));
  AnswerStream answers = Solve1(formula, ProofContext{});
  return Query(std::move(goal), std::move(vars), std::move(answers));
}

std::optional<Answer> Query::Next() {
  SubstStream node = next_.Force();
  if (node.empty()) return std::nullopt;
  next_ = node.tail_cell();

  Answer answer;
  answer.theta = node.head();
  std::map<VarId, std::string> var_names;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    var_names[vars_[i]->id()] = goal_.free_names[i];
  }
  PrintOptions options;
  options.var_names = &var_names;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const std::string& name = goal_.free_names[i];
    if (name.starts_with('_')) continue;
    if (!answer.theta.Binds(vars_[i]->id())) continue;
    answer.bindings.emplace_back(
        name, PrintTerm(answer.theta.Apply(vars_[i]), options));
  }
  return answer;
}

}  // namespace level01
