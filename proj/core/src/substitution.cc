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

#include "level01/substitution.h"

#include <stdexcept>
#include <utility>
#include <vector>

namespace level01 {
namespace {

template <typename Lookup>
TermPtr ApplyWith(const TermPtr& t, const Lookup& lookup) {
  if (!t->has_vars()) return t;
  switch (t->kind()) {
    case TermKind::kEigen:
    case TermKind::kLogic: {
      const TermPtr* value = lookup(t->id());
      return value ? *value : t;
    }
    case TermKind::kAbs: {
      TermPtr body = ApplyWith(t->body(), lookup);
      return body == t->body() ? t : Term::Abs(t->name(), std::move(body));
    }
    case TermKind::kApp: {
      TermPtr head = ApplyWith(t->head(), lookup);
      bool changed = head != t->head();
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) {
        args.push_back(ApplyWith(a, lookup));
        changed = changed || args.back() != a;
      }
      if (!changed) return t;
      if (head->is_abs()) return Apply(head, args);
      return Term::App(std::move(head), std::move(args));
    }
    default:
      return t;
  }
}

}  // namespace

Substitution::Substitution() : map_(std::make_shared<const Map>()) {}

const TermPtr* Substitution::Find(VarId var) const {
  auto it = map_->find(var);
  return it == map_->end() ? nullptr : &it->second;
}

Substitution Substitution::Bind(const TermPtr& var, const TermPtr& value) const {
  if (!var->is_var()) throw std::logic_error("binding a non-variable");
  if (Binds(var->id())) throw std::logic_error("variable already bound");
  TermPtr resolved = Apply(value);
  if (resolved->loose() != 0) throw std::logic_error("binding an open term");
  if (Occurs(var->id(), resolved)) throw std::logic_error("occurs check");

  const VarId id = var->id();
  auto lookup = [&](VarId v) -> const TermPtr* {
    return v == id ? &resolved : nullptr;
  };
  auto next = std::make_shared<Map>();
  for (const auto& [key, bound] : *map_) {
    next->emplace_hint(next->end(), key,
                       Occurs(id, bound) ? ApplyWith(bound, lookup) : bound);
  }
  next->emplace(id, std::move(resolved));
  Substitution out;
  out.map_ = std::move(next);
  return out;
}

TermPtr Substitution::Apply(const TermPtr& t) const {
  if (map_->empty()) return t->is_normal() ? t : Normalize(t);
  TermPtr out = ApplyWith(t, [this](VarId v) { return Find(v); });
  return out->is_normal() ? out : Normalize(out);
}

}  // namespace level01
