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

#ifndef LEVEL01_UNIFY_H_
#define LEVEL01_UNIFY_H_

#include "level01/substitution.h"
#include "level01/term.h"

namespace level01 {

struct UnifyOptions {
  // Treat unbound eigenvariables as instantiable (Step 1 of an implication).
  bool promote_eigens = false;
};

enum class UnifyStatus { kSuccess, kFail, kNonPattern };

struct UnifyOutcome {
  UnifyStatus status = UnifyStatus::kFail;
  // On success: the input substitution extended with a most general unifier.
  Substitution theta;
  // On kNonPattern: the flexible subterm that left the pattern fragment.
  TermPtr offending;

  bool ok() const { return status == UnifyStatus::kSuccess; }
};

// True if |var| (after dereferencing) is an instantiable variable.
bool IsFlexible(const TermPtr& var, const UnifyOptions& options = {});

// True iff every instantiable variable in |t| is applied to distinct
// arguments, each a nabla constant, a rigid eigenvariable younger than the
// variable, or a variable bound by an enclosing abstraction in |t|.
bool IsPattern(const TermPtr& t, const UnifyOptions& options = {});

// Higher-order pattern unification of |s| and |t| under |theta|.
//
// Locals are rigid and may reach a binding only through the bound
// variable's arguments. An unpromoted eigenvariable is rigid; a variable may
// mention it directly only if the eigenvariable is older. Variables that
// would escape their scope are pruned or have their timestamp lowered by
// binding them to fresh variables drawn from |names|.
UnifyOutcome Unify(const TermPtr& s, const TermPtr& t,
                   const Substitution& theta, NameSupply& names,
                   const UnifyOptions& options = {});

}  // namespace level01

#endif  // LEVEL01_UNIFY_H_
