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

#ifndef LEVEL01_TESTS_SUPPORT_RANDOM_TERMS_H_
#define LEVEL01_TESTS_SUPPORT_RANDOM_TERMS_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "level01/term.h"

namespace level01::testing {

// Random higher-order pattern pairs over a fixed prefix of names. The
// prefix mixes logic variables, eigenvariables and locals so that scope
// pruning and timestamp lowering are exercised.
class PatternGen {
 public:
  explicit PatternGen(std::uint32_t seed) : rng_(seed) {
    // Creation order fixes the timestamps.
    for (int i = 0; i < 9; ++i) {
      switch (Pick(3)) {
        case 0: vars_.push_back(names_.FreshLogic(1)); break;
        case 1: eigens_.push_back(names_.FreshEigen()); break;
        default: locals_.push_back(names_.FreshLocal()); break;
      }
    }
    if (vars_.empty()) vars_.push_back(names_.FreshLogic(1));
    for (const auto& v : vars_) stamps_[v->id()] = v->stamp();
  }

  NameSupply& names() { return names_; }
  // Stamp of each variable of the prefix.
  const std::map<VarId, Stamp>& stamps() const { return stamps_; }

  TermPtr Random(int size) { return Gen(size, 0); }

  // t itself with some subterms replaced by flexible patterns, so that the
  // pair is often unifiable.
  TermPtr Perturb(const TermPtr& t, std::uint32_t depth = 0) {
    if (Pick(4) == 0) return Flex(depth);
    switch (t->kind()) {
      case TermKind::kAbs:
        return Term::Abs(t->name(), Perturb(t->body(), depth + 1));
      case TermKind::kApp: {
        if (t->head()->is_var()) return t;
        std::vector<TermPtr> args;
        for (const auto& a : t->args()) args.push_back(Perturb(a, depth));
        return Term::App(t->head(), std::move(args));
      }
      default:
        return t;
    }
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  TermPtr Gen(int size, std::uint32_t depth) {
    const int choice = size <= 0 ? Pick(4) : Pick(8);
    switch (choice) {
      case 0:
        return Term::Const(Pick(2) ? "a" : "b");
      case 1:
        if (!eigens_.empty()) return eigens_[Pick(eigens_.size())];
        return Term::Const("a");
      case 2:
        if (!locals_.empty()) return locals_[Pick(locals_.size())];
        if (depth > 0) return Term::Bound(Pick(depth));
        return Term::Const("b");
      case 3:
        return Flex(depth);
      case 4:
      case 5:
        return Term::App(Term::Const("f"), {Gen(size - 1, depth)});
      case 6:
        return Term::App(Term::Const("g"),
                         {Gen(size / 2, depth), Gen(size / 2, depth)});
      default:
        return Term::Abs("x", Gen(size - 1, depth + 1));
    }
  }

  // A logic variable applied to a random selection of admissible,
  // distinct arguments.
  TermPtr Flex(std::uint32_t depth) {
    const TermPtr& v = vars_[Pick(vars_.size())];
    std::vector<TermPtr> candidates;
    for (const auto& c : locals_) candidates.push_back(c);
    for (const auto& e : eigens_) {
      if (e->stamp() > v->stamp()) candidates.push_back(e);
    }
    for (std::uint32_t i = 0; i < depth; ++i) candidates.push_back(Term::Bound(i));
    std::shuffle(candidates.begin(), candidates.end(), rng_);
    candidates.resize(Pick(static_cast<int>(candidates.size()) + 1));
    return Term::App(v, std::move(candidates));
  }

  std::mt19937 rng_;
  NameSupply names_;
  std::vector<TermPtr> vars_;
  std::vector<TermPtr> eigens_;
  std::vector<TermPtr> locals_;
  std::map<VarId, Stamp> stamps_;
};

// Closed random terms with beta redexes whose bound variables never occur
// in head position, so normalization always terminates.
class RedexGen {
 public:
  explicit RedexGen(std::uint32_t seed) : rng_(seed) {}

  TermPtr Closed(int size, const std::vector<TermPtr>& vars = {}) {
    return Gen(size, 0, vars);
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  TermPtr Gen(int size, std::uint32_t depth, const std::vector<TermPtr>& vars) {
    if (size <= 0) return Leaf(depth, vars);
    switch (Pick(5)) {
      case 0:
        return Leaf(depth, vars);
      case 1:
        return Term::App(Term::Const("f"), {Gen(size - 1, depth, vars)});
      case 2:
        return Term::App(Term::Const("g"), {Gen(size / 2, depth, vars),
                                            Gen(size / 2, depth, vars)});
      case 3:
        return Term::Abs("x", Gen(size - 1, depth + 1, vars));
      default: {
        TermPtr fn = Term::Abs("y", Gen(size / 2, depth + 1, vars));
        return Term::App(std::move(fn), {Gen(size / 2, depth, vars)});
      }
    }
  }

  TermPtr Leaf(std::uint32_t depth, const std::vector<TermPtr>& vars) {
    const int n = 2 + static_cast<int>(depth) + static_cast<int>(vars.size());
    const int k = Pick(n);
    if (k == 0) return Term::Const("a");
    if (k == 1) return Term::Const("b");
    if (k < 2 + static_cast<int>(depth)) return Term::Bound(k - 2);
    return vars[k - 2 - depth];
  }

  std::mt19937 rng_;
};

}  // namespace level01::testing

#endif  // LEVEL01_TESTS_SUPPORT_RANDOM_TERMS_H_
