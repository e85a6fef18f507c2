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

#ifndef LEVEL01_SUBSTITUTION_H_
#define LEVEL01_SUBSTITUTION_H_

#include <cstddef>
#include <map>
#include <memory>

#include "level01/term.h"

namespace level01 {

// Finite map from variable ids (logic variables and promoted eigenvariables)
// to closed, normal terms. The map is kept idempotent: no bound term
// mentions a variable that is itself bound. Copies share storage.
class Substitution {
 public:
  using Map = std::map<VarId, TermPtr>;

  Substitution();

  // Returns nullptr when |var| is unbound.
  const TermPtr* Find(VarId var) const;
  bool Binds(VarId var) const { return Find(var) != nullptr; }
  std::size_t size() const { return map_->size(); }
  bool empty() const { return map_->empty(); }
  const Map& bindings() const { return *map_; }

  // Adds var |-> value. The value is first resolved against this
  // substitution; it must not mention var afterwards (strict occurs check,
  // enforced with std::logic_error). Existing bindings are rewritten so the
  // result stays idempotent.
  Substitution Bind(const TermPtr& var, const TermPtr& value) const;

  // Replaces every bound variable in |t| and returns the normal form.
  TermPtr Apply(const TermPtr& t) const;

 private:
  std::shared_ptr<const Map> map_;
};

}  // namespace level01

#endif  // LEVEL01_SUBSTITUTION_H_
