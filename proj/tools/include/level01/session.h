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

#ifndef LEVEL01_SESSION_H_
#define LEVEL01_SESSION_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "level01/defs.h"
#include "level01/engine.h"

namespace level01 {

struct ReplOptions {
  // Write "?- " before each goal.
  bool prompt = true;
  // Copy each input line to the output, as a terminal would.
  bool echo = false;
  // Print every answer without asking "Find another?".
  bool enumerate_all = false;
};

// Reads goals from |in| until end of input or "quit." / "halt.". A goal may
// span lines and ends with '.'. Output of print goes to |out| as well.
void RunRepl(Engine& engine, std::istream& in, std::ostream& out,
             const ReplOptions& options = {});

struct BatchQuery {
  std::string text;
  // Written with a leading '!': the query passes if it has no answer.
  bool expect_fail = false;
};

BatchQuery ParseBatchQuery(std::string_view line);

// Non-blank lines of |text| not starting with '%'.
std::vector<std::string> ReadQueryLines(std::string_view text);

// Runs each query for its first answer and writes one line per query:
//   <ok|FAIL> TAB <yes|no|error> TAB <query> [TAB <bindings or message>]
// Returns 0 iff every line is ok. print output goes to |print_out|.
int RunBatch(Engine& engine, const std::vector<std::string>& queries,
             std::ostream& out, std::ostream& print_out);

// Adds each file to |defs| in order. Throws level01::Error naming the file
// on I/O, syntax or definition errors, or when a path is given twice.
void LoadDefinitionFiles(Definition& defs, const std::vector<std::string>& paths);

}  // namespace level01

#endif  // LEVEL01_SESSION_H_
