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

#ifndef LEVEL01_CORPUS_H_
#define LEVEL01_CORPUS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "level01/defs.h"

namespace level01 {

struct CorpusFile {
  std::string_view name;
  std::string_view text;
};

// The bundled definition files: examples.lp, pi.lp, bisim.lp, modal.lp and
// assert.lp, in load order.
std::span<const CorpusFile> CorpusFiles();

// All bundled files loaded into one definition.
Definition LoadCorpus();

enum class Expectation { kSucceed, kFail, kError };

struct CorpusCase {
  std::string name;
  std::string query;
  Expectation expected = Expectation::kSucceed;
  // For kError: the exact error message.
  std::string message;
};

// Reference queries over the corpus with their known outcomes.
std::vector<CorpusCase> AcceptanceCases();

}  // namespace level01

#endif  // LEVEL01_CORPUS_H_
