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

// level01: load definition files, then answer goals interactively or in
// batch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "level01/corpus.h"
#include "level01/defs.h"
#include "level01/engine.h"
#include "level01/errors.h"
#include "level01/session.h"

int main(int argc, char** argv) {
  CLI::App app{"Level 0/1 prover"};
  std::vector<std::string> files;
  std::vector<std::string> exec;
  std::string queries_file;
  bool all = false;
  bool quiet = false;
  bool echo = false;
  bool interactive = false;
  bool corpus = false;
  std::uint64_t budget = 0;

  app.add_option("files", files, "Definition files, loaded in order");
  app.add_option("-e,--exec", exec,
                 "Run a goal in batch mode (repeatable; prefix '!' if it "
                 "should fail)");
  app.add_option("--queries", queries_file,
                 "Run the goals in a file, one per line, in batch mode")
      ->check(CLI::ExistingFile);
  app.add_flag("-a,--all", all, "Print every answer without asking");
  app.add_option("--budget", budget, "Step budget per goal (0: unlimited)");
  app.add_flag("-q,--quiet", quiet, "No prompts or load warnings");
  app.add_flag("--echo", echo, "Echo input lines (for transcripts)");
  app.add_flag("-i,--interactive", interactive,
               "Start the prompt after batch goals");
  app.add_flag("--corpus", corpus,
               "Load the bundled pi-calculus and modal-logic definitions");
  CLI11_PARSE(app, argc, argv);

  level01::Definition defs;
  try {
    if (corpus) defs = level01::LoadCorpus();
    level01::LoadDefinitionFiles(defs, files);
  } catch (const level01::Error& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 2;
  }
  if (!quiet) {
    for (const auto& w : defs.Warnings()) std::cerr << "warning: " << w << "\n";
  }

  level01::EngineOptions options;
  if (budget > 0) options.step_budget = budget;
  level01::Engine engine(defs, options);

  std::vector<std::string> queries = exec;
  if (!queries_file.empty()) {
    std::ifstream in(queries_file);
    std::ostringstream text;
    text << in.rdbuf();
    for (auto& q : level01::ReadQueryLines(text.str())) queries.push_back(q);
  }

  int status = 0;
  if (!queries.empty()) {
    status = level01::RunBatch(engine, queries, std::cout, std::cerr);
  }
  if (queries.empty() || interactive) {
    level01::ReplOptions repl;
    repl.prompt = !quiet;
    repl.echo = echo;
    repl.enumerate_all = all;
    level01::RunRepl(engine, std::cin, std::cout, repl);
  }
  return status;
}
