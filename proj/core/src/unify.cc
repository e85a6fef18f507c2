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

#include "level01/unify.h"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace level01 {
namespace {

struct Clash {};
struct OutsidePatterns {
  TermPtr term;
};

bool SameName(const TermPtr& a, const TermPtr& b) {
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
    default:
      return false;
  }
}

// Position of |name| among |args|, if present.
std::optional<std::size_t> Position(std::span<const TermPtr> args,
                                    const TermPtr& name) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (SameName(args[i], name)) return i;
  }
  return std::nullopt;
}

class Unifier {
 public:
  Unifier(Substitution theta, NameSupply& names, UnifyOptions options)
      : theta_(std::move(theta)), names_(names), options_(options) {}

  const Substitution& theta() const { return theta_; }

  void Solve(TermPtr a, TermPtr b) {
    a = HeadNorm(std::move(a));
    b = HeadNorm(std::move(b));
    if (a == b) return;

    if (a->is_abs() || b->is_abs()) {
      // Open binders with a fresh generic constant; a non-abstraction side
      // is eta-expanded.
      TermPtr c = names_.FreshLocal();
      TermPtr a_body = a->is_abs() ? Instantiate(a->body(), c)
                                   : Term::App(a, {c});
      TermPtr b_body = b->is_abs() ? Instantiate(b->body(), c)
                                   : Term::App(b, {c});
      Solve(std::move(a_body), std::move(b_body));
      return;
    }

    const TermPtr& ha = SpineHead(a);
    const TermPtr& hb = SpineHead(b);
    const bool flex_a = Flexible(ha);
    const bool flex_b = Flexible(hb);

    if (!flex_a && !flex_b) {
      auto args_a = SpineArgs(a);
      auto args_b = SpineArgs(b);
      if (!SameName(ha, hb) || args_a.size() != args_b.size()) throw Clash{};
      // Copy: solving one pair may not invalidate the spans, but the terms
      // must stay alive while we recurse.
      std::vector<TermPtr> xs(args_a.begin(), args_a.end());
      std::vector<TermPtr> ys(args_b.begin(), args_b.end());
      for (std::size_t i = 0; i < xs.size(); ++i) Solve(xs[i], ys[i]);
      return;
    }
    if (flex_a && flex_b) {
      FlexFlex(a, b);
      return;
    }
    if (flex_a) {
      FlexRigid(a, b);
    } else {
      FlexRigid(b, a);
    }
  }

 private:
  bool Flexible(const TermPtr& head) const {
    return IsFlexible(head, options_) && !theta_.Binds(head->id());
  }

  // Resolves a bound head variable and beta-reduces.
  TermPtr HeadNorm(TermPtr t) const {
    while (true) {
      const TermPtr& head = SpineHead(t);
      if (!head->is_var()) return t;
      const TermPtr* value = theta_.Find(head->id());
      if (value == nullptr) return t;
      t = Apply(*value, SpineArgs(t));
    }
  }

  // Arguments of a flexible occurrence, dereferenced, checked to be
  // distinct rigid names (or abstraction-bound indices below |depth|).
  std::vector<TermPtr> PatternArgs(const TermPtr& flex, std::uint32_t depth) {
    const TermPtr& var = SpineHead(flex);
    std::vector<TermPtr> out;
    for (const auto& raw : SpineArgs(flex)) {
      TermPtr arg = HeadNorm(raw);
      bool ok = false;
      switch (arg->kind()) {
        case TermKind::kLocal:
          ok = true;
          break;
        case TermKind::kEigen:
          ok = !Flexible(arg) && arg->stamp() > var->stamp();
          break;
        case TermKind::kBound:
          ok = arg->index() < depth;
          break;
        default:
          break;
      }
      if (!ok || Position(out, arg)) throw OutsidePatterns{flex};
      out.push_back(std::move(arg));
    }
    return out;
  }

  void BindVar(const TermPtr& var, const TermPtr& value) {
    theta_ = theta_.Bind(var, value);
  }

  // flex is (V x1 ... xn); rigid has a rigid head.
  void FlexRigid(const TermPtr& flex, const TermPtr& rigid) {
    const TermPtr var = SpineHead(flex);
    std::vector<TermPtr> xs = PatternArgs(flex, 0);
    TermPtr body = Invert(rigid, var, xs, 0);
    BindVar(var, Abstract(std::move(body), xs.size()));
  }

  void FlexFlex(const TermPtr& a, const TermPtr& b) {
    const TermPtr va = SpineHead(a);
    const TermPtr vb = SpineHead(b);
    std::vector<TermPtr> xs = PatternArgs(a, 0);
    std::vector<TermPtr> ys = PatternArgs(b, 0);
    if (va->id() == vb->id()) {
      if (xs.size() != ys.size()) throw Clash{};
      const std::size_t n = xs.size();
      std::vector<TermPtr> kept;
      for (std::size_t i = 0; i < n; ++i) {
        if (SameName(xs[i], ys[i])) {
          kept.push_back(Term::Bound(static_cast<std::uint32_t>(n - 1 - i)));
        }
      }
      if (kept.size() == n) return;
      TermPtr fresh = names_.FreshLike(va, va->stamp());
      BindVar(va, Abstract(Term::App(fresh, std::move(kept)), n));
      return;
    }
    // Bind the younger variable; ties (after lowering) go to the larger id.
    const bool a_younger = va->stamp() != vb->stamp()
                               ? va->stamp() > vb->stamp()
                               : va->id() > vb->id();
    if (a_younger) {
      BindVar(va, Abstract(Invert(b, va, xs, 0), xs.size()));
    } else {
      BindVar(vb, Abstract(Invert(a, vb, ys, 0), ys.size()));
    }
  }

  // Builds the body of a binding for |var| (applied to |xs|) that denotes
  // |t|: occurrences of xs become de Bruijn indices above |depth|.
  TermPtr Invert(TermPtr t, const TermPtr& var, std::span<const TermPtr> xs,
                 std::uint32_t depth) {
    t = HeadNorm(std::move(t));
    switch (t->kind()) {
      case TermKind::kConst:
      case TermKind::kString:
      case TermKind::kBound:
        return t;
      case TermKind::kAbs:
        return Term::Abs(t->name(), Invert(t->body(), var, xs, depth + 1));
      default:
        break;
    }
    const TermPtr head = SpineHead(t);
    if (Flexible(head)) return InvertFlex(t, var, xs, depth);
    TermPtr new_head = InvertName(head, var, xs, depth);
    std::vector<TermPtr> args;
    for (const auto& a : SpineArgs(t)) args.push_back(Invert(a, var, xs, depth));
    return Term::App(std::move(new_head), std::move(args));
  }

  TermPtr InvertName(const TermPtr& name, const TermPtr& var,
                     std::span<const TermPtr> xs, std::uint32_t depth) {
    switch (name->kind()) {
      case TermKind::kLocal:
      case TermKind::kEigen: {
        if (auto k = Position(xs, name)) {
          return Term::Bound(
              static_cast<std::uint32_t>(depth + xs.size() - 1 - *k));
        }
        if (name->kind() == TermKind::kEigen && name->stamp() < var->stamp()) {
          return name;
        }
        throw Clash{};
      }
      default:
        return name;
    }
  }

  // A flexible occurrence (W w1 ... wm) inside the term being bound to var.
  // Arguments var cannot express are pruned and W is lowered to var's
  // timestamp when it is younger.
  TermPtr InvertFlex(const TermPtr& flex, const TermPtr& var,
                     std::span<const TermPtr> xs, std::uint32_t depth) {
    const TermPtr w = SpineHead(flex);
    if (w->id() == var->id()) throw Clash{};
    std::vector<TermPtr> ws = PatternArgs(flex, depth);

    std::vector<TermPtr> mapped;
    std::vector<TermPtr> kept_indices;
    const std::size_t m = ws.size();
    for (std::size_t j = 0; j < m; ++j) {
      const TermPtr& arg = ws[j];
      std::optional<TermPtr> image;
      if (arg->kind() == TermKind::kBound) {
        image = arg;
      } else if (auto k = Position(xs, arg)) {
        image = Term::Bound(
            static_cast<std::uint32_t>(depth + xs.size() - 1 - *k));
      } else if (arg->kind() == TermKind::kEigen &&
                 arg->stamp() < var->stamp()) {
        image = arg;
      }
      if (image) {
        mapped.push_back(std::move(*image));
        kept_indices.push_back(Term::Bound(static_cast<std::uint32_t>(m - 1 - j)));
      }
    }

    if (mapped.size() == m && w->stamp() <= var->stamp()) {
      return Term::App(w, std::move(mapped));
    }
    TermPtr fresh = names_.FreshLike(w, std::min(w->stamp(), var->stamp()));
    BindVar(w, Abstract(Term::App(fresh, std::move(kept_indices)), m));
    return Term::App(std::move(fresh), std::move(mapped));
  }

  Substitution theta_;
  NameSupply& names_;
  UnifyOptions options_;
};

bool PatternAt(const TermPtr& t, const UnifyOptions& options,
               std::uint32_t depth) {
  switch (t->kind()) {
    case TermKind::kAbs:
      return PatternAt(t->body(), options, depth + 1);
    case TermKind::kEigen:
    case TermKind::kLogic:
    case TermKind::kApp:
      break;
    default:
      return true;
  }
  const TermPtr& head = SpineHead(t);
  auto args = SpineArgs(t);
  if (!IsFlexible(head, options)) {
    return std::all_of(args.begin(), args.end(), [&](const TermPtr& a) {
      return PatternAt(a, options, depth);
    });
  }
  std::vector<TermPtr> seen;
  for (const auto& arg : args) {
    bool ok = false;
    switch (arg->kind()) {
      case TermKind::kLocal:
        ok = true;
        break;
      case TermKind::kEigen:
        ok = !IsFlexible(arg, options) && arg->stamp() > head->stamp();
        break;
      case TermKind::kBound:
        ok = arg->index() < depth;
        break;
      default:
        break;
    }
    if (!ok || Position(seen, arg)) return false;
    seen.push_back(arg);
  }
  return true;
}

}  // namespace

bool IsFlexible(const TermPtr& var, const UnifyOptions& options) {
  return var->kind() == TermKind::kLogic ||
         (var->kind() == TermKind::kEigen && options.promote_eigens);
}

bool IsPattern(const TermPtr& t, const UnifyOptions& options) {
  return PatternAt(t, options, 0);
}

UnifyOutcome Unify(const TermPtr& s, const TermPtr& t,
                   const Substitution& theta, NameSupply& names,
                   const UnifyOptions& options) {
  Unifier unifier(theta, names, options);
  UnifyOutcome outcome;
  try {
    unifier.Solve(s, t);
    outcome.status = UnifyStatus::kSuccess;
    outcome.theta = unifier.theta();
  } catch (const Clash&) {
    outcome.status = UnifyStatus::kFail;
  } catch (const OutsidePatterns& e) {
    outcome.status = UnifyStatus::kNonPattern;
    outcome.offending = unifier.theta().Apply(e.term);
  }
  return outcome;
}

}  // namespace level01
