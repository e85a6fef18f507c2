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

#include "level01/term.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "level01/errors.h"

namespace level01 {

Term::Term(Key, TermKind kind) : kind_(kind) {}

TermPtr Term::Const(std::string name) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kConst);
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::String(std::string text) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kString);
  t->name_ = std::move(text);
  return t;
}

TermPtr Term::Local(VarId id, Stamp stamp) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kLocal);
  t->id_ = id;
  t->stamp_ = stamp;
  return t;
}

TermPtr Term::Eigen(VarId id, Stamp stamp) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kEigen);
  t->id_ = id;
  t->stamp_ = stamp;
  t->level_ = 1;
  t->has_vars_ = true;
  return t;
}

TermPtr Term::Logic(VarId id, Stamp stamp, int level) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kLogic);
  t->id_ = id;
  t->stamp_ = stamp;
  t->level_ = level;
  t->has_vars_ = true;
  return t;
}

TermPtr Term::Bound(std::uint32_t index) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kBound);
  t->index_ = index;
  t->loose_ = index + 1;
  return t;
}

TermPtr Term::Abs(std::string hint, TermPtr body) {
  auto t = std::make_shared<Term>(Key{}, TermKind::kAbs);
  t->name_ = std::move(hint);
  t->has_vars_ = body->has_vars_;
  t->loose_ = body->loose_ > 0 ? body->loose_ - 1 : 0;
  t->normal_ = body->normal_;
  t->body_ = std::move(body);
  return t;
}

TermPtr Term::App(TermPtr head, std::vector<TermPtr> args) {
  if (args.empty()) return head;
  if (head->is_app()) {
    std::vector<TermPtr> merged(head->args_.begin(), head->args_.end());
    merged.insert(merged.end(), std::make_move_iterator(args.begin()),
                  std::make_move_iterator(args.end()));
    return App(head->head_, std::move(merged));
  }
  auto t = std::make_shared<Term>(Key{}, TermKind::kApp);
  t->has_vars_ = head->has_vars_;
  t->loose_ = head->loose_;
  t->normal_ = head->normal_ && !head->is_abs();
  for (const auto& a : args) {
    t->has_vars_ = t->has_vars_ || a->has_vars_;
    t->loose_ = std::max(t->loose_, a->loose_);
    t->normal_ = t->normal_ && a->normal_;
  }
  t->head_ = std::move(head);
  t->args_ = std::move(args);
  return t;
}

namespace {

TermPtr ShiftAt(const TermPtr& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0 || t->loose() <= cutoff) return t;
  switch (t->kind()) {
    case TermKind::kBound:
      return Term::Bound(t->index() + amount);
    case TermKind::kAbs:
      return Term::Abs(t->name(), ShiftAt(t->body(), amount, cutoff + 1));
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) args.push_back(ShiftAt(a, amount, cutoff));
      return Term::App(ShiftAt(t->head(), amount, cutoff), std::move(args));
    }
    default:
      return t;
  }
}

// Replaces loose indices depth .. depth+n-1 with the values (index depth+j
// maps to values[n-1-j]) and lowers the indices above them by n.
TermPtr SubstAt(const TermPtr& t, std::span<const TermPtr> values,
                std::uint32_t depth) {
  if (t->loose() <= depth) return t;
  const auto n = static_cast<std::uint32_t>(values.size());
  switch (t->kind()) {
    case TermKind::kBound: {
      const std::uint32_t i = t->index();
      if (i < depth) return t;
      if (i - depth < n) return ShiftAt(values[n - 1 - (i - depth)], depth, 0);
      return Term::Bound(i - n);
    }
    case TermKind::kAbs:
      return Term::Abs(t->name(), SubstAt(t->body(), values, depth + 1));
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) args.push_back(SubstAt(a, values, depth));
      return Term::App(SubstAt(t->head(), values, depth), std::move(args));
    }
    default:
      return t;
  }
}

class Normalizer {
 public:
  explicit Normalizer(std::uint64_t budget) : budget_(budget) {}

  TermPtr Run(const TermPtr& t) {
    if (t->is_normal()) return t;
    switch (t->kind()) {
      case TermKind::kAbs:
        return Term::Abs(t->name(), Run(t->body()));
      case TermKind::kApp: {
        TermPtr head = Run(t->head());
        std::vector<TermPtr> args;
        args.reserve(t->args().size());
        for (const auto& a : t->args()) args.push_back(Run(a));
        return Reduce(std::move(head), std::move(args));
      }
      default:
        return t;
    }
  }

  // Both head and args are already normal.
  TermPtr Reduce(TermPtr head, std::vector<TermPtr> args) {
    std::size_t next = 0;
    while (head->is_abs() && next < args.size()) {
      if (steps_++ >= budget_) {
        throw NormalizationError("beta-reduction budget of " +
                                 std::to_string(budget_) + " steps exceeded");
      }
      head = Run(Instantiate(head->body(), args[next]));
      ++next;
    }
    if (next == 0) return Term::App(std::move(head), std::move(args));
    std::vector<TermPtr> rest(std::make_move_iterator(args.begin() + next),
                              std::make_move_iterator(args.end()));
    if (rest.empty()) return head;
    // head may be an App whose own head is not an Abs; flattening keeps
    // the result normal.
    return Term::App(std::move(head), std::move(rest));
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

void CollectVarsImpl(const TermPtr& t, std::vector<TermPtr>& out,
                     std::unordered_set<VarId>& seen) {
  if (!t->has_vars()) return;
  switch (t->kind()) {
    case TermKind::kEigen:
    case TermKind::kLogic:
      if (seen.insert(t->id()).second) out.push_back(t);
      return;
    case TermKind::kAbs:
      CollectVarsImpl(t->body(), out, seen);
      return;
    case TermKind::kApp:
      CollectVarsImpl(t->head(), out, seen);
      for (const auto& a : t->args()) CollectVarsImpl(a, out, seen);
      return;
    default:
      return;
  }
}

}  // namespace

TermPtr Shift(const TermPtr& t, std::uint32_t amount, std::uint32_t cutoff) {
  return ShiftAt(t, amount, cutoff);
}

TermPtr Instantiate(const TermPtr& body, std::span<const TermPtr> values) {
  if (values.empty()) return body;
  return SubstAt(body, values, 0);
}

TermPtr Instantiate(const TermPtr& body, const TermPtr& value) {
  return SubstAt(body, std::span<const TermPtr>(&value, 1), 0);
}

TermPtr Normalize(const TermPtr& t, std::uint64_t beta_budget) {
  return Normalizer(beta_budget).Run(t);
}

TermPtr Apply(const TermPtr& fn, std::span<const TermPtr> args) {
  Normalizer normalizer(kDefaultBetaBudget);
  std::vector<TermPtr> normal_args;
  normal_args.reserve(args.size());
  for (const auto& a : args) normal_args.push_back(normalizer.Run(a));
  return normalizer.Reduce(normalizer.Run(fn), std::move(normal_args));
}

TermPtr Abstract(TermPtr body, std::size_t count, const std::string& hint) {
  for (std::size_t i = 0; i < count; ++i) body = Term::Abs(hint, std::move(body));
  return body;
}

bool AlphaEqual(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::kConst:
    case TermKind::kString:
      return a->name() == b->name();
    case TermKind::kLocal:
    case TermKind::kEigen:
    case TermKind::kLogic:
      return a->id() == b->id();
    case TermKind::kBound:
      return a->index() == b->index();
    case TermKind::kAbs:
      return AlphaEqual(a->body(), b->body());
    case TermKind::kApp: {
      if (a->args().size() != b->args().size()) return false;
      if (!AlphaEqual(a->head(), b->head())) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i) {
        if (!AlphaEqual(a->args()[i], b->args()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

bool MentionsIndex(const TermPtr& t, std::uint32_t index) {
  if (t->loose() <= index) return false;
  switch (t->kind()) {
    case TermKind::kBound:
      return t->index() == index;
    case TermKind::kAbs:
      return MentionsIndex(t->body(), index + 1);
    case TermKind::kApp:
      if (MentionsIndex(t->head(), index)) return true;
      return std::any_of(t->args().begin(), t->args().end(),
                         [index](const TermPtr& a) { return MentionsIndex(a, index); });
    default:
      return false;
  }
}

// Lowers loose indices above 0 by one; index 0 must not occur.
TermPtr Unshift(const TermPtr& t, std::uint32_t cutoff = 0) {
  if (t->loose() <= cutoff) return t;
  switch (t->kind()) {
    case TermKind::kBound:
      return Term::Bound(t->index() - 1);
    case TermKind::kAbs:
      return Term::Abs(t->name(), Unshift(t->body(), cutoff + 1));
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args()) args.push_back(Unshift(a, cutoff));
      return Term::App(Unshift(t->head(), cutoff), std::move(args));
    }
    default:
      return t;
  }
}

}  // namespace

TermPtr EtaContract(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::kAbs: {
      TermPtr body = EtaContract(t->body());
      if (body->is_app()) {
        auto args = body->args();
        const TermPtr& last = args.back();
        if (last->kind() == TermKind::kBound && last->index() == 0) {
          std::vector<TermPtr> rest(args.begin(), args.end() - 1);
          TermPtr fn = Term::App(body->head(), rest);
          if (!MentionsIndex(fn, 0)) return Unshift(fn);
        }
      }
      return Term::Abs(t->name(), std::move(body));
    }
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args()) args.push_back(EtaContract(a));
      return Term::App(EtaContract(t->head()), std::move(args));
    }
    default:
      return t;
  }
}

bool Convertible(const TermPtr& a, const TermPtr& b) {
  return AlphaEqual(EtaContract(Normalize(a)), EtaContract(Normalize(b)));
}

bool Occurs(VarId var, const TermPtr& t) {
  if (!t->has_vars()) return false;
  switch (t->kind()) {
    case TermKind::kEigen:
    case TermKind::kLogic:
      return t->id() == var;
    case TermKind::kAbs:
      return Occurs(var, t->body());
    case TermKind::kApp:
      if (Occurs(var, t->head())) return true;
      return std::any_of(t->args().begin(), t->args().end(),
                         [var](const TermPtr& a) { return Occurs(var, a); });
    default:
      return false;
  }
}

void CollectVars(const TermPtr& t, std::vector<TermPtr>& out) {
  std::unordered_set<VarId> seen;
  for (const auto& v : out) seen.insert(v->id());
  CollectVarsImpl(t, out, seen);
}

TermPtr NameSupply::FreshLocal() {
  const VarId id = next_++;
  return Term::Local(id, id);
}

TermPtr NameSupply::FreshEigen(Stamp stamp) {
  return Term::Eigen(next_++, stamp);
}

TermPtr NameSupply::FreshLogic(int level, Stamp stamp) {
  return Term::Logic(next_++, stamp, level);
}

TermPtr NameSupply::Fresh(VarKind kind, int level, const LocalSignature& sigma) {
  TermPtr var = kind == VarKind::kEigen ? FreshEigen() : FreshLogic(level);
  return Term::App(std::move(var), sigma);
}

TermPtr NameSupply::FreshLike(const TermPtr& var, Stamp stamp) {
  if (var->kind() == TermKind::kEigen) return FreshEigen(stamp);
  return FreshLogic(var->level(), stamp);
}

}  // namespace level01
