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

#include "level01/session.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "level01/errors.h"

namespace level01 {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void PrintAnswer(const Answer& answer, std::ostream& out) {
  out << "Yes\n";
  for (const auto& [name, value] : answer.bindings) {
    out << name << " = " << value << "\n";
  }
}

std::string JoinBindings(const Answer& answer) {
  std::string out;
  for (const auto& [name, value] : answer.bindings) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value;
  }
  return out;
}

// Reads one goal, possibly over several lines. Returns false at end of
// input with nothing read.
bool ReadGoal(std::istream& in, std::ostream& out, const ReplOptions& options,
              std::string& goal) {
  goal.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (options.echo) out << line << "\n";
    if (!goal.empty()) goal += '\n';
    goal += line;
    std::string_view t = Trim(goal);
    if (t.empty()) {
      goal.clear();
      if (options.prompt) out << "?- ";
      continue;
    }
    if (t.back() == '.') return true;
  }
  return !Trim(goal).empty();
}

// Asks until the user answers y or n; end of input counts as n.
bool AskAnother(std::istream& in, std::ostream& out, const ReplOptions& options) {
  std::string line;
  while (true) {
    out << "Find another? [y/n] ";
    if (!std::getline(in, line)) {
      out << "\n";
      return false;
    }
    if (options.echo) out << line << "\n";
    std::string_view answer = Trim(line);
    if (answer == "y") return true;
    if (answer == "n") return false;
  }
}

}  // namespace

void RunRepl(Engine& engine, std::istream& in, std::ostream& out,
             const ReplOptions& options) {
  engine.set_output(&out);
  std::string goal;
  while (true) {
    if (options.prompt) out << "?- ";
    if (!ReadGoal(in, out, options, goal)) {
      if (options.prompt) out << "\n";
      return;
    }
    std::string_view text = Trim(goal);
    if (text == "quit." || text == "halt.") return;
    try {
      Query query = engine.Ask(text);
      auto answer = query.Next();
      if (!answer) {
        out << "No.\n";
        continue;
      }
      while (true) {
        PrintAnswer(*answer, out);
        if (!options.enumerate_all && !AskAnother(in, out, options)) break;
        answer = query.Next();
        if (!answer) {
          out << "No.\n";
          break;
        }
      }
    } catch (const Error& e) {
      out << "Error: " << e.what() << "\n";
    }
  }
}

BatchQuery ParseBatchQuery(std::string_view line) {
  std::string_view t = Trim(line);
  BatchQuery q;
  if (!t.empty() && t.front() == '!') {
    q.expect_fail = true;
    t = Trim(t.substr(1));
  }
  q.text = std::string(t);
  return q;
}

std::vector<std::string> ReadQueryLines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '%') continue;
    out.emplace_back(t);
  }
  return out;
}

int RunBatch(Engine& engine, const std::vector<std::string>& queries,
             std::ostream& out, std::ostream& print_out) {
  engine.set_output(&print_out);
  bool all_ok = true;
  for (const auto& line : queries) {
    const BatchQuery q = ParseBatchQuery(line);
    std::string outcome;
    std::string detail;
    try {
      Query query = engine.Ask(q.text);
      auto answer = query.Next();
      outcome = answer ? "yes" : "no";
      if (answer) detail = JoinBindings(*answer);
    } catch (const Error& e) {
      outcome = "error";
      detail = e.what();
    }
    const bool ok = outcome == (q.expect_fail ? "no" : "yes");
    all_ok = all_ok && ok;
    out << (ok ? "ok" : "FAIL") << '\t' << outcome << '\t' << line;
    if (!detail.empty()) out << '\t' << detail;
    out << '\n';
  }
  return all_ok ? 0 : 1;
}

void LoadDefinitionFiles(Definition& defs, const std::vector<std::string>& paths) {
  std::set<std::filesystem::path> seen;
  Definition loaded = defs;
  for (const auto& path : paths) {
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    if (ec) canonical = path;
    if (!seen.insert(canonical).second) {
      throw Error(path + ": file loaded twice");
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(path + ": cannot open file");
    std::ostringstream text;
    text << file.rdbuf();
    try {
      loaded.AddProgram(text.str());
    } catch (const Error& e) {
      throw Error(path + ": " + e.what());
    }
  }
  defs = std::move(loaded);
}

}  // namespace level01
