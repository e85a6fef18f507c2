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

#ifndef LEVEL01_TERM_H_
#define LEVEL01_TERM_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace level01 {

using VarId = std::uint64_t;
using Stamp = std::uint64_t;

enum class TermKind : std::uint8_t {
  kConst,   // global constant symbol
  kString,  // quoted string literal, an atomic constant
  kLocal,   // generic constant introduced by nabla (never instantiated)
  kEigen,   // eigenvariable introduced by pi
  kLogic,   // logic variable introduced by sigma or a clause/goal free name
  kBound,   // de Bruijn index
  kAbs,
  kApp,
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable lambda-tree term. Bound variables are de Bruijn indices, so
// structural equality is alpha-equivalence. Applications are kept in spine
// form: the head of an App is never itself an App and args is nonempty.
//
// Every Local, Eigen and Logic carries a unique id and a timestamp. The
// timestamp orders the variable against rigid names for scope checks; it
// equals the id unless unification lowered it while pruning.
class Term {
  struct Key {};

 public:
  static TermPtr Const(std::string name);
  static TermPtr String(std::string text);
  static TermPtr Local(VarId id, Stamp stamp);
  static TermPtr Eigen(VarId id, Stamp stamp);
  static TermPtr Logic(VarId id, Stamp stamp, int level);
  static TermPtr Bound(std::uint32_t index);
  static TermPtr Abs(std::string hint, TermPtr body);
  // Flattens nested heads; an empty argument list returns head unchanged.
  static TermPtr App(TermPtr head, std::vector<TermPtr> args);

  Term(Key, TermKind kind);

  TermKind kind() const { return kind_; }
  bool is_var() const {
    return kind_ == TermKind::kEigen || kind_ == TermKind::kLogic;
  }
  bool is_app() const { return kind_ == TermKind::kApp; }
  bool is_abs() const { return kind_ == TermKind::kAbs; }

  // Const name, String text, or Abs binder hint.
  const std::string& name() const { return name_; }
  VarId id() const { return id_; }
  Stamp stamp() const { return stamp_; }
  int level() const { return level_; }
  std::uint32_t index() const { return index_; }
  const TermPtr& body() const { return body_; }
  const TermPtr& head() const { return head_; }
  std::span<const TermPtr> args() const { return args_; }

  // True if an Eigen or Logic occurs anywhere inside.
  bool has_vars() const { return has_vars_; }
  // One past the largest loose de Bruijn index; 0 for closed terms.
  std::uint32_t loose() const { return loose_; }
  // True if no beta redex occurs inside.
  bool is_normal() const { return normal_; }

 private:
  TermKind kind_;
  int level_ = 0;
  std::uint32_t index_ = 0;
  std::uint32_t loose_ = 0;
  bool has_vars_ = false;
  bool normal_ = true;
  VarId id_ = 0;
  Stamp stamp_ = 0;
  std::string name_;
  TermPtr body_;
  TermPtr head_;
  std::vector<TermPtr> args_;
};

// Head symbol of an application spine, or the term itself.
inline const TermPtr& SpineHead(const TermPtr& t) {
  return t->is_app() ? t->head() : t;
}
inline std::span<const TermPtr> SpineArgs(const TermPtr& t) {
  return t->is_app() ? t->args() : std::span<const TermPtr>{};
}

// Ordered list of nabla constants in scope, innermost last.
using LocalSignature = std::vector<TermPtr>;

// Adds |amount| to every loose index >= cutoff.
TermPtr Shift(const TermPtr& t, std::uint32_t amount, std::uint32_t cutoff = 0);

// Treats |body| as the body of values.size() nested abstractions and
// substitutes: the outermost binder receives values.front(). Loose indices
// beyond the binders are lowered accordingly. The result is not normalized.
TermPtr Instantiate(const TermPtr& body, std::span<const TermPtr> values);
TermPtr Instantiate(const TermPtr& body, const TermPtr& value);

inline constexpr std::uint64_t kDefaultBetaBudget = 1'000'000;

// Beta-normal form. Throws NormalizationError after |beta_budget| steps.
TermPtr Normalize(const TermPtr& t,
                  std::uint64_t beta_budget = kDefaultBetaBudget);

// Normal form of (fn args...).
TermPtr Apply(const TermPtr& fn, std::span<const TermPtr> args);

// Wraps |body| in |count| abstractions.
TermPtr Abstract(TermPtr body, std::size_t count, const std::string& hint = "x");

bool AlphaEqual(const TermPtr& a, const TermPtr& b);

// Contracts every eta redex (x\ t x, x not free in t) of a beta-normal
// term.
TermPtr EtaContract(const TermPtr& t);

// Beta-eta equality of two terms.
bool Convertible(const TermPtr& a, const TermPtr& b);

bool Occurs(VarId var, const TermPtr& t);

// Appends every distinct Eigen/Logic in |t| to |out| in left-to-right order.
void CollectVars(const TermPtr& t, std::vector<TermPtr>& out);

enum class VarKind { kEigen, kLogic };

// Source of fresh Locals, Eigens and Logic variables. One counter stamps all
// three kinds, so ids never repeat and timestamps follow creation order.
class NameSupply {
 public:
  TermPtr FreshLocal();
  TermPtr FreshEigen(Stamp stamp);
  TermPtr FreshEigen() { return FreshEigen(next_); }
  TermPtr FreshLogic(int level, Stamp stamp);
  TermPtr FreshLogic(int level) { return FreshLogic(level, next_); }
  // A fresh variable raised over |sigma|: (h c1 ... cn), or bare h.
  TermPtr Fresh(VarKind kind, int level, const LocalSignature& sigma);
  // A fresh variable of the same kind and level as |var| with |stamp|.
  TermPtr FreshLike(const TermPtr& var, Stamp stamp);

  // The id the next fresh name will receive.
  VarId next_id() const { return next_; }
  void Reset() { next_ = 1; }

 private:
  VarId next_ = 1;
};

}  // namespace level01

#endif  // LEVEL01_TERM_H_
