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

#include "level01/corpus.h"

#include "level01/errors.h"

namespace level01 {
namespace internal {
extern const CorpusFile kCorpusFiles[];
extern const std::size_t kCorpusFileCount;
}  // namespace internal

std::span<const CorpusFile> CorpusFiles() {
  return {internal::kCorpusFiles, internal::kCorpusFileCount};
}

Definition LoadCorpus() {
  Definition defs;
  for (const auto& file : CorpusFiles()) {
    try {
      defs.AddProgram(file.text);
    } catch (const Error& e) {
      throw DefinitionError(std::string(file.name) + ": " + e.what());
    }
  }
  return defs;
}

std::vector<CorpusCase> AcceptanceCases() {
  return {
      {"stuck_example_0",
       "example 0 P, (pi A\\ pi Q\\ one P A Q => false), "
       "(pi A\\ pi Q\\ onep P A Q => false)",
       Expectation::kSucceed, ""},
      {"bisim_2_6", "example 2 P, example 6 Q, bisim P Q",
       Expectation::kSucceed, ""},
      {"bisim_2_3", "example 2 P, example 3 Q, bisim P Q", Expectation::kFail,
       ""},
      {"modal_assert_2_6", "assert A, example 2 P, example 6 Q, sat P A, sat Q A",
       Expectation::kSucceed, ""},
      {"eigen_equation", "pi x\\ pi y\\ x = a => y = b", Expectation::kFail, ""},
      {"local_identity", "nabla x\\ x = (M x)", Expectation::kSucceed, ""},
      {"vacuous_implication", "pi M\\ nabla x\\ x = M => false",
       Expectation::kSucceed, ""},
      {"non_pure_antecedent", "nabla x\\ x = (M x) => false",
       Expectation::kError, "non-pure term found in implicational goal."},
  };
}

}  // namespace level01
